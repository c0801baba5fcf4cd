#ifndef MTV_SPECIAL_HPP
#define MTV_SPECIAL_HPP

#include "mtv/bigreal.hpp"
#include "mtv/rational.hpp"

namespace mtv {

// All functions take an explicit target precision P and work internally
// with guard bits so the returned value satisfies |result - f| <= 2^(-P+2).

// Digamma psi(x) for real x off the poles {0, -1, -2, ...}.
// Upward recurrence psi(x+1) = psi(x) + 1/x shifts the argument to
// x >= max(10, P/8), then the Bernoulli asymptotic series
// psi(y) = log y - 1/(2y) - sum B_{2i} / (2i y^{2i}) is summed to its
// smallest term (remainder below the first omitted term).
BigReal digamma(const BigReal& x, mpfr_prec_t P);
BigReal digamma(const Rational& x, mpfr_prec_t P);

// zeta(n) for integer n >= 2 by Euler-Maclaurin with an explicit tail.
BigReal zeta_int(int n, mpfr_prec_t P);

// Dirichlet beta(n) for integer n >= 1 by Cohen-Rodriguez Villegas-Zagier
// alternating-series acceleration (error factor (3+sqrt(8))^-N).
BigReal beta_int(int n, mpfr_prec_t P);

// A(z) = psi(1) - (psi(1+z) + psi(1-z))/2  (= sum zeta(2r+1) z^{2r})
BigReal A_num(const BigReal& z, mpfr_prec_t P);

// C(z) = (psi(1/4+z/4) - psi(1/4-z/4) - psi(3/4+z/4) + psi(3/4-z/4))/8
//        (= sum beta(2r) z^{2r-1})
BigReal C_num(const BigReal& z, mpfr_prec_t P);

// cos(pi*t/4) + sin(pi*t/4), the generating series of (-1)^m t({1bar}^m).
BigReal cos_plus_sin_quarter_pi(const BigReal& t, mpfr_prec_t P);

}  // namespace mtv

#endif
