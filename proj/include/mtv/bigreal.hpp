#ifndef MTV_BIGREAL_HPP
#define MTV_BIGREAL_HPP

#include <mpfr.h>

#include <iosfwd>
#include <string>

#include "mtv/rational.hpp"

namespace mtv {

// Arbitrary-precision real at an explicit precision in bits, backed by
// MPFR with round-to-nearest.  Values are immutable in normal use; each
// elementary operation is correctly rounded at the result precision, so
// a pipeline of n operations carried out at P + g guard bits delivers a
// final absolute error below 2^(-P) once rounded back to P, for the
// moderate n (< 2^g / scale) that occurs here.
class BigReal {
public:
    static constexpr mpfr_prec_t kDefaultPrec = 256;

    explicit BigReal(mpfr_prec_t prec = kDefaultPrec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    BigReal(long n, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_si(v_, n, MPFR_RNDN); }
    BigReal(const Rational& r, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_q(v_, r.raw(), MPFR_RNDN);
    }
    BigReal(const BigReal& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    BigReal(BigReal&& o) noexcept { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_swap(v_, o.v_); }
    ~BigReal() { mpfr_clear(v_); }

    BigReal& operator=(const BigReal& o);
    BigReal& operator=(BigReal&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }

    static BigReal from_double(double d, mpfr_prec_t prec) {
        BigReal r(prec);
        mpfr_set_d(r.v_, d, MPFR_RNDN);
        return r;
    }
    // Parses a decimal string at the given precision.
    static BigReal parse(const std::string& s, mpfr_prec_t prec);

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    // Same value rounded to a new precision.
    BigReal round_to(mpfr_prec_t prec) const {
        BigReal r(prec);
        mpfr_set(r.v_, v_, MPFR_RNDN);
        return r;
    }

    friend BigReal operator+(const BigReal& a, const BigReal& b);
    friend BigReal operator-(const BigReal& a, const BigReal& b);
    friend BigReal operator*(const BigReal& a, const BigReal& b);
    friend BigReal operator/(const BigReal& a, const BigReal& b);
    BigReal operator-() const;
    BigReal& operator+=(const BigReal& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigReal& operator-=(const BigReal& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigReal& operator*=(const BigReal& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigReal& operator/=(const BigReal& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

    friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
    friend bool operator<(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const BigReal& a, const BigReal& b) { return b < a; }
    friend bool operator<=(const BigReal& a, const BigReal& b) { return !(b < a); }
    friend bool operator>=(const BigReal& a, const BigReal& b) { return !(a < b); }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sgn() const { return mpfr_sgn(v_); }
    BigReal abs() const;
    bool is_integer() const { return mpfr_integer_p(v_) != 0; }

    BigReal sqrt() const;
    BigReal log() const;
    BigReal exp() const;
    BigReal sin() const;
    BigReal cos() const;
    BigReal cot() const;
    BigReal atanh() const;
    BigReal gamma() const;  // MPFR's Gamma; used only as plumbing in checks
    BigReal pow_si(long e) const;
    BigReal mul_2exp(long e) const;  // exact scaling by 2^e

    // pi, log(2), Euler-Mascheroni gamma, Catalan at the given precision.
    static BigReal pi(mpfr_prec_t prec);
    static BigReal log2(mpfr_prec_t prec);
    static BigReal euler_gamma(mpfr_prec_t prec);
    static BigReal catalan(mpfr_prec_t prec);

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
    // Decimal rendering with the given number of significant digits
    // (0 = enough digits to round-trip).
    std::string str(size_t digits = 0) const;

    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw_mut() { return v_; }

private:
    mpfr_t v_;
};

std::ostream& operator<<(std::ostream& os, const BigReal& x);

}  // namespace mtv

#endif
