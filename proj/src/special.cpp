#include "mtv/special.hpp"

#include <algorithm>
#include <stdexcept>

namespace mtv {

namespace {
constexpr mpfr_prec_t kGuard = 64;
}

BigReal digamma(const BigReal& x, mpfr_prec_t P) {
    if (x.is_zero() || (x.sgn() < 0 && x.is_integer()))
        throw std::domain_error("digamma: pole at nonpositive integer");
    const mpfr_prec_t W = P + kGuard;
    const long threshold = std::max<long>(10, P / 8);

    BigReal y = x.round_to(W);
    BigReal shift_sum(0, W);
    const BigReal one(1, W);
    while (y < BigReal(threshold, W)) {
        shift_sum += one / y;
        y += one;
    }

    // Asymptotic series at y >= threshold; summed to the smallest term.
    BigReal acc = y.log() - one / (BigReal(2, W) * y);
    const BigReal y2 = y * y;
    BigReal ypow = y2;  // y^{2i}
    BigReal prev_mag(0, W);
    const BigReal eps = BigReal(1, W).mul_2exp(-(W + 8));
    for (unsigned i = 1;; ++i) {
        Rational coef = bernoulli(2 * i) / Rational(2 * static_cast<long>(i));
        BigReal term = BigReal(coef, W) / ypow;
        BigReal mag = term.abs();
        if (i > 1 && mag >= prev_mag) break;  // divergence onset
        acc -= term;
        if (mag < eps) break;
        prev_mag = mag;
        ypow *= y2;
    }
    return (acc - shift_sum).round_to(P);
}

BigReal digamma(const Rational& x, mpfr_prec_t P) {
    return digamma(BigReal(x, P + kGuard), P);
}

BigReal zeta_int(int n, mpfr_prec_t P) {
    if (n < 2) throw std::domain_error("zeta_int: n >= 2 required");
    const mpfr_prec_t W = P + kGuard;
    const int I = 32;
    // With M = (n + 2I) * 2^((W+16)/(2I)) the I-th Euler-Maclaurin term is
    // below 2 * ((n+2I)/(2 pi M))^(2I) <= 2^-(W+16), Pochhammer growth included.
    long mult = 1l << ((W + 16) / (2 * I) + 1);
    long M = (n + 2 * I) * mult;
    const BigReal eps = BigReal(1, W).mul_2exp(-(W + 24));

    BigReal s(0, W);
    long J = 0;
    for (long j = 1; j <= M; ++j) {
        BigReal term = BigReal(1, W) / BigReal(j, W).pow_si(n);
        s += term;
        J = j;
        // Geometric regime for large n: the remaining tail is below
        // j^(1-n)/(n-1) <= j * eps, already negligible at W+24 margin.
        if (term < eps) return s.round_to(P);
    }
    BigReal Mr(J, W);
    s += Mr.pow_si(1 - n) / BigReal(n - 1, W);
    s -= Mr.pow_si(-n) / BigReal(2, W);

    // sum_i B_{2i}/(2i)! (n)_{2i-1} M^{-n-2i+1}
    Rational poch(n);  // (n)_{2i-1}, updated incrementally
    BigReal prev_mag(0, W);
    for (int i = 1; i <= I; ++i) {
        Rational coef = bernoulli(2 * static_cast<unsigned>(i)) /
                        factorial(2 * static_cast<unsigned long>(i)) * poch;
        BigReal term = BigReal(coef, W) * Mr.pow_si(-n - 2 * i + 1);
        BigReal mag = term.abs();
        if (i > 1 && mag >= prev_mag) break;
        s += term;
        prev_mag = mag;
        poch *= Rational(n + 2 * i - 1) * Rational(n + 2 * i);
    }
    return s.round_to(P);
}

BigReal beta_int(int n, mpfr_prec_t P) {
    if (n < 1) throw std::domain_error("beta_int: n >= 1 required");
    const mpfr_prec_t W = P + kGuard;
    // (3+sqrt(8))^-N < 2^-(W+10)
    const long N = static_cast<long>((W + 10) * 0.3933) + 2;

    BigReal q = BigReal(3, W) + BigReal(8, W).sqrt();
    BigReal d(1, W);
    // d = ((3+sqrt8)^N + (3+sqrt8)^-N) / 2 via binary powering
    d = q.pow_si(N);
    d = (d + BigReal(1, W) / d) / BigReal(2, W);

    BigReal b(-1, W);
    BigReal c = -d;
    BigReal s(0, W);
    for (long k = 0; k < N; ++k) {
        c = b - c;
        BigReal a_k = BigReal(1, W) / BigReal(2 * k + 1, W).pow_si(n);
        s += c * a_k;
        // b *= (k+N)(k-N) / ((k+1/2)(k+1))
        b *= BigReal(k + N, W) * BigReal(k - N, W);
        b /= (BigReal(2 * k + 1, W) / BigReal(2, W)) * BigReal(k + 1, W);
    }
    return (s / d).round_to(P);
}

BigReal A_num(const BigReal& z, mpfr_prec_t P) {
    const mpfr_prec_t W = P + kGuard;
    BigReal zz = z.round_to(W);
    BigReal one(1, W);
    BigReal psi1 = digamma(one, W);
    BigReal r = psi1 - (digamma(one + zz, W) + digamma(one - zz, W)) / BigReal(2, W);
    return r.round_to(P);
}

BigReal C_num(const BigReal& z, mpfr_prec_t P) {
    const mpfr_prec_t W = P + kGuard;
    BigReal z4 = z.round_to(W) / BigReal(4, W);
    BigReal q1(Rational(1, 4), W);
    BigReal q3(Rational(3, 4), W);
    BigReal r = digamma(q1 + z4, W) - digamma(q1 - z4, W) -
                digamma(q3 + z4, W) + digamma(q3 - z4, W);
    return (r / BigReal(8, W)).round_to(P);
}

BigReal cos_plus_sin_quarter_pi(const BigReal& t, mpfr_prec_t P) {
    const mpfr_prec_t W = P + kGuard;
    BigReal arg = BigReal::pi(W) * t.round_to(W) / BigReal(4, W);
    return (arg.cos() + arg.sin()).round_to(P);
}

}  // namespace mtv
