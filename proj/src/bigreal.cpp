#include "mtv/bigreal.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace mtv {

namespace {
mpfr_prec_t join(const BigReal& a, const BigReal& b) {
    return std::max(a.prec(), b.prec());
}
}  // namespace

BigReal& BigReal::operator=(const BigReal& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

BigReal BigReal::parse(const std::string& s, mpfr_prec_t prec) {
    BigReal r(prec);
    if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
        throw std::invalid_argument("BigReal: cannot parse '" + s + "'");
    return r;
}

BigReal operator+(const BigReal& a, const BigReal& b) {
    BigReal r(join(a, b));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigReal operator-(const BigReal& a, const BigReal& b) {
    BigReal r(join(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigReal operator*(const BigReal& a, const BigReal& b) {
    BigReal r(join(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigReal operator/(const BigReal& a, const BigReal& b) {
    if (b.is_zero()) throw std::domain_error("BigReal: division by zero");
    BigReal r(join(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigReal BigReal::operator-() const {
    BigReal r(prec());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

BigReal BigReal::abs() const {
    BigReal r(prec());
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
}

#define MTV_UNARY(name, fn)              \
    BigReal BigReal::name() const {      \
        BigReal r(prec());               \
        fn(r.v_, v_, MPFR_RNDN);         \
        return r;                        \
    }

MTV_UNARY(sqrt, mpfr_sqrt)
MTV_UNARY(log, mpfr_log)
MTV_UNARY(exp, mpfr_exp)
MTV_UNARY(sin, mpfr_sin)
MTV_UNARY(cos, mpfr_cos)
MTV_UNARY(cot, mpfr_cot)
MTV_UNARY(atanh, mpfr_atanh)
MTV_UNARY(gamma, mpfr_gamma)

#undef MTV_UNARY

BigReal BigReal::pow_si(long e) const {
    BigReal r(prec());
    mpfr_pow_si(r.v_, v_, e, MPFR_RNDN);
    return r;
}

BigReal BigReal::mul_2exp(long e) const {
    BigReal r(prec());
    if (e >= 0)
        mpfr_mul_2ui(r.v_, v_, static_cast<unsigned long>(e), MPFR_RNDN);
    else
        mpfr_div_2ui(r.v_, v_, static_cast<unsigned long>(-e), MPFR_RNDN);
    return r;
}

BigReal BigReal::pi(mpfr_prec_t prec) {
    BigReal r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

BigReal BigReal::log2(mpfr_prec_t prec) {
    BigReal r(prec);
    mpfr_const_log2(r.v_, MPFR_RNDN);
    return r;
}

BigReal BigReal::euler_gamma(mpfr_prec_t prec) {
    BigReal r(prec);
    mpfr_const_euler(r.v_, MPFR_RNDN);
    return r;
}

BigReal BigReal::catalan(mpfr_prec_t prec) {
    BigReal r(prec);
    mpfr_const_catalan(r.v_, MPFR_RNDN);
    return r;
}

std::string BigReal::str(size_t digits) const {
    mpfr_exp_t e;
    char* c = mpfr_get_str(nullptr, &e, 10, digits, v_, MPFR_RNDN);
    std::string mant(c);
    mpfr_free_str(c);
    bool neg = !mant.empty() && mant[0] == '-';
    std::string digits_part = neg ? mant.substr(1) : mant;
    if (digits_part.empty()) digits_part = "0";
    // Scientific rendering m.mmmEe keeps exponents explicit and parseable.
    std::string out = neg ? "-" : "";
    out += digits_part.substr(0, 1);
    if (digits_part.size() > 1) out += "." + digits_part.substr(1);
    out += "e" + std::to_string(static_cast<long>(e) - 1);
    if (mpfr_zero_p(v_)) return "0";
    return out;
}

std::ostream& operator<<(std::ostream& os, const BigReal& x) {
    return os << x.str();
}

}  // namespace mtv
