#ifndef MTV_HYP_HPP
#define MTV_HYP_HPP

#include <array>
#include <functional>

#include "mtv/bigreal.hpp"
#include "mtv/rational.hpp"

namespace mtv {

// Parameters of a 3F2(a, b, c; d, e; u).
struct HypParams {
    std::array<Rational, 3> upper;
    std::array<Rational, 2> lower;

    // exact balance check: a + b + c = d + e
    bool zero_balanced() const {
        return upper[0] + upper[1] + upper[2] == lower[0] + lower[1];
    }
    // lower parameters must avoid the poles 0, -1, -2, ...
    void validate() const;
};

Rational pochhammer(const Rational& x, unsigned m);
BigReal pochhammer(const BigReal& x, unsigned m);

// Direct summation for |u| < 1 with a geometric tail bound once the term
// ratio drops below (1+|u|)/2.  Terminating series are summed exactly.
BigReal f32(const HypParams& p, const BigReal& u, double tau, mpfr_prec_t P);
BigReal f32(const std::array<BigReal, 3>& upper, const std::array<BigReal, 2>& lower,
            const BigReal& u, double tau, mpfr_prec_t P);

// Sum of t_1 + t_2 + ... where partial sums have an asymptotic expansion
// S(K) = S + c_1/K + c_2/K^2 + ...; partial sums are taken at K0 * 2^j,
// j = 0..J, and Richardson-extrapolated.  next() yields t_1, t_2, ...
BigReal richardson_sum(const std::function<BigReal()>& next, long K0, int J,
                       mpfr_prec_t W, BigReal* err_estimate = nullptr);

// 3F2(X, 1-X, Z; 1-Y, 1+Y; 1): convergent for Re Z < 1, terms ~ k^(Z-2);
// evaluated by partial sums plus Richardson extrapolation.
BigReal f32_unit(const BigReal& X, const BigReal& Y, const BigReal& Z, mpfr_prec_t P);

// Ramanujan/Evans-Stanton constant of a zero-balanced 3F2 with the third
// upper parameter in the c slot:
//   L = -2 gamma - psi(a) - psi(b) + sum_k (d-c)_k (e-c)_k / ((a)_k (b)_k k).
// As u -> 1-: Gamma-prefactor * 3F2(u) = -log(1-u) + L + O((1-u) log(1-u)).
BigReal evans_stanton_L(const HypParams& p, mpfr_prec_t P);

// (a-b) p F(a,b,c;p,q;u) - b(a-p) F(a,b+1,c;p+1,q;u) + a(b-p) F(a+1,b,c;p+1,q;u);
// identically zero, returned as a numerical residual.
BigReal contiguous_residual(const BigReal& a, const BigReal& b, const BigReal& c,
                            const BigReal& p, const BigReal& q, const BigReal& u,
                            double tau, mpfr_prec_t P);

// d/dZ at Z=0 of 3F2(X, 1-X, Z; 1-Y, 1+Y; 1) in digamma/sine closed form:
//   psi(1+Y) + psi(1-Y) - psi(1-X+Y) - psi(1-X-Y)
//   - sin(pi X)/sin(pi Y) [psi(1-X+Y) - psi(1-X-Y)
//                          - psi(1-(X-Y)/2) + psi(1-(X+Y)/2)].
// Requires Y not an integer and all psi arguments off the poles.
BigReal li_derivative(const BigReal& X, const BigReal& Y, mpfr_prec_t P);

// The same quantity as an accelerated Pochhammer sum,
//   sum_k (X)_k (1-X)_k / (k (1-Y)_k (1+Y)_k),
// the independent route used to cross-check li_derivative.
BigReal li_pochhammer_sum(const BigReal& X, const BigReal& Y, mpfr_prec_t P);

}  // namespace mtv

#endif
