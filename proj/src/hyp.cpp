#include "mtv/hyp.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

#include "mtv/oracle.hpp"
#include "mtv/special.hpp"

namespace mtv {

namespace {
constexpr mpfr_prec_t kGuard = 64;

bool is_nonpositive_integer(const Rational& x) {
    if (x.sgn() > 0) return false;
    mpq_srcptr q = &x.raw()[0];
    return mpz_cmp_ui(mpq_denref(q), 1) == 0;
}
}  // namespace

void HypParams::validate() const {
    for (const auto& l : lower)
        if (is_nonpositive_integer(l))
            throw std::domain_error("HypParams: lower parameter at a pole");
}

Rational pochhammer(const Rational& x, unsigned m) {
    Rational r(1);
    Rational f = x;
    for (unsigned i = 0; i < m; ++i) {
        r *= f;
        f += Rational(1);
    }
    return r;
}

BigReal pochhammer(const BigReal& x, unsigned m) {
    BigReal r(1, x.prec());
    BigReal f = x;
    const BigReal one(1, x.prec());
    for (unsigned i = 0; i < m; ++i) {
        r *= f;
        f += one;
    }
    return r;
}

BigReal f32(const HypParams& p, const BigReal& u, double tau, mpfr_prec_t P) {
    p.validate();
    const mpfr_prec_t W = P + kGuard;
    std::array<BigReal, 3> up{BigReal(p.upper[0], W), BigReal(p.upper[1], W),
                              BigReal(p.upper[2], W)};
    std::array<BigReal, 2> lo{BigReal(p.lower[0], W), BigReal(p.lower[1], W)};
    return f32(up, lo, u, tau, P);
}

BigReal f32(const std::array<BigReal, 3>& upper, const std::array<BigReal, 2>& lower,
            const BigReal& u, double tau, mpfr_prec_t P) {
    const mpfr_prec_t W = P + kGuard;
    const BigReal one(1, W);
    const BigReal uu = u.round_to(W);
    if (!(uu.abs() < one)) throw std::domain_error("f32: |u| < 1 required");

    const BigReal q_cap = (one + uu.abs()) / BigReal(2, W);
    const BigReal tau_b = BigReal::from_double(tau, W);
    BigReal term(1, W);
    BigReal acc(1, W);
    for (long m = 0; m < 100000000; ++m) {
        BigReal mm(m, W);
        BigReal num = (upper[0] + mm) * (upper[1] + mm) * (upper[2] + mm);
        BigReal den = (lower[0] + mm) * (lower[1] + mm) * (one + mm);
        if (den.is_zero()) throw std::domain_error("f32: lower parameter pole hit");
        term *= uu * num / den;
        if (term.is_zero()) return acc.round_to(P);  // terminating series
        acc += term;
        BigReal ratio = (uu * (upper[0] + mm + one) * (upper[1] + mm + one) *
                         (upper[2] + mm + one) /
                         ((lower[0] + mm + one) * (lower[1] + mm + one) * (mm + BigReal(2, W))))
                            .abs();
        if (ratio < q_cap && term.abs() * q_cap / (one - q_cap) < tau_b)
            return acc.round_to(P);
    }
    throw ToleranceError("f32: series did not reach tolerance", tau);
}

BigReal richardson_sum(const std::function<BigReal()>& next, long K0, int J,
                       mpfr_prec_t W, BigReal* err_estimate) {
    std::vector<BigReal> S;
    S.reserve(static_cast<size_t>(J) + 1);
    BigReal acc(0, W);
    long k = 0;
    for (int j = 0; j <= J; ++j) {
        long target = K0 << j;
        while (k < target) {
            acc += next();
            ++k;
        }
        S.push_back(acc);
    }
    // Richardson table: X_i^m = (2^m X_i^{m-1} - X_{i-1}^{m-1}) / (2^m - 1)
    BigReal prev_diag = S[0];
    for (int m = 1; m <= J; ++m) {
        BigReal p2(1l << m, W);
        for (size_t i = S.size() - 1; i >= static_cast<size_t>(m); --i)
            S[i] = (p2 * S[i] - S[i - 1]) / (p2 - BigReal(1, W));
        prev_diag = S[S.size() - 2];
    }
    if (err_estimate) *err_estimate = (S.back() - prev_diag).abs() * BigReal(8, 96);
    return S.back();
}

BigReal f32_unit(const BigReal& X, const BigReal& Y, const BigReal& Z, mpfr_prec_t P) {
    const mpfr_prec_t W = P + kGuard;
    const BigReal one(1, W);
    std::array<BigReal, 3> up{X.round_to(W), one - X.round_to(W), Z.round_to(W)};
    std::array<BigReal, 2> lo{one - Y.round_to(W), one + Y.round_to(W)};
    // terms ~ k^(Z-2); partial sums carry a 1/K expansion
    BigReal term(1, W);
    long m = 0;
    auto next = [&]() {
        BigReal mm(m, W);
        BigReal num = (up[0] + mm) * (up[1] + mm) * (up[2] + mm);
        BigReal den = (lo[0] + mm) * (lo[1] + mm) * (one + mm);
        term *= num / den;
        ++m;
        return term;
    };
    return (one + richardson_sum(next, 256, 12, W)).round_to(P);
}

BigReal evans_stanton_L(const HypParams& p, mpfr_prec_t P) {
    p.validate();
    if (!p.zero_balanced())
        throw std::domain_error("evans_stanton_L: parameters are not zero-balanced");
    const Rational& a = p.upper[0];
    const Rational& b = p.upper[1];
    const Rational& c = p.upper[2];
    if (c.sgn() <= 0) throw std::domain_error("evans_stanton_L: Re(c) > 0 required");
    const Rational dc = p.lower[0] - c;
    const Rational ec = p.lower[1] - c;

    const mpfr_prec_t W = P + kGuard;
    const BigReal one(1, W);
    BigReal av(a, W), bv(b, W), dcv(dc, W), ecv(ec, W);

    // t_k = (d-c)_k (e-c)_k / ((a)_k (b)_k k); ratio carries the k factor
    BigReal pk(1, W);  // running (d-c)_k (e-c)_k / ((a)_k (b)_k)
    long k = 0;
    auto next = [&]() {
        BigReal kk(k, W);
        pk *= (dcv + kk) * (ecv + kk) / ((av + kk) * (bv + kk));
        ++k;
        return pk / BigReal(k, W);
    };
    BigReal series = richardson_sum(next, 256, 12, W);

    BigReal L = -BigReal(2, W) * BigReal::euler_gamma(W) - digamma(av, W) - digamma(bv, W) +
                series;
    return L.round_to(P);
}

BigReal contiguous_residual(const BigReal& a, const BigReal& b, const BigReal& c,
                            const BigReal& p, const BigReal& q, const BigReal& u,
                            double tau, mpfr_prec_t P) {
    const mpfr_prec_t W = P + kGuard;
    const BigReal one(1, W);
    auto F = [&](const BigReal& x1, const BigReal& x2, const BigReal& x3, const BigReal& y1,
                 const BigReal& y2) {
        return f32({x1, x2, x3}, {y1, y2}, u, tau, W);
    };
    BigReal r = (a - b) * p * F(a, b, c, p, q) - b * (a - p) * F(a, b + one, c, p + one, q) +
                a * (b - p) * F(a + one, b, c, p + one, q);
    return r.round_to(P);
}

BigReal li_derivative(const BigReal& X, const BigReal& Y, mpfr_prec_t P) {
    const mpfr_prec_t W = P + kGuard;
    const BigReal one(1, W);
    const BigReal Xv = X.round_to(W), Yv = Y.round_to(W);
    if (Yv.is_integer()) throw std::domain_error("li_derivative: Y must not be an integer");

    const BigReal two(2, W);
    BigReal t1 = digamma(one + Yv, W) + digamma(one - Yv, W) - digamma(one - Xv + Yv, W) -
                 digamma(one - Xv - Yv, W);
    BigReal bracket = digamma(one - Xv + Yv, W) - digamma(one - Xv - Yv, W) -
                      digamma(one - (Xv - Yv) / two, W) + digamma(one - (Xv + Yv) / two, W);
    const BigReal pi = BigReal::pi(W);
    BigReal ratio = (pi * Xv).sin() / (pi * Yv).sin();
    return (t1 - ratio * bracket).round_to(P);
}

BigReal li_pochhammer_sum(const BigReal& X, const BigReal& Y, mpfr_prec_t P) {
    const mpfr_prec_t W = P + kGuard;
    const BigReal one(1, W);
    BigReal a = X.round_to(W), b = one - X.round_to(W);
    BigReal c = one - Y.round_to(W), d = one + Y.round_to(W);
    BigReal pk(1, W);
    long k = 0;
    auto next = [&]() {
        BigReal kk(k, W);
        pk *= (a + kk) * (b + kk) / ((c + kk) * (d + kk));
        ++k;
        return pk / BigReal(k, W);
    };
    return richardson_sum(next, 256, 12, W).round_to(P);
}

}  // namespace mtv
