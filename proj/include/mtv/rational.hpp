#ifndef MTV_RATIONAL_HPP
#define MTV_RATIONAL_HPP

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace mtv {

// Exact rational number backed by GMP's mpq_t.  Always canonical:
// lowest terms, denominator > 0.
class Rational {
public:
    Rational() { mpq_init(q_); }
    Rational(long n) { mpq_init(q_); mpq_set_si(q_, n, 1); }
    Rational(long num, long den);
    Rational(const Rational& o) { mpq_init(q_); mpq_set(q_, o.q_); }
    Rational(Rational&& o) noexcept { mpq_init(q_); mpq_swap(q_, o.q_); }
    ~Rational() { mpq_clear(q_); }

    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        if (this != &o) mpq_swap(q_, o.q_);
        return *this;
    }

    // Parses "n", "-n", or "n/d"; throws std::invalid_argument on junk
    // or zero denominator.
    static Rational parse(const std::string& s);

    static Rational from_mpz(mpz_srcptr z) {
        Rational r;
        mpq_set_z(r.q_, z);
        return r;
    }

    Rational& operator+=(const Rational& o) { mpq_add(q_, q_, o.q_); return *this; }
    Rational& operator-=(const Rational& o) { mpq_sub(q_, q_, o.q_); return *this; }
    Rational& operator*=(const Rational& o) { mpq_mul(q_, q_, o.q_); return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
    Rational operator-() const { Rational r(*this); mpq_neg(r.q_, r.q_); return r; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.q_, b.q_) != 0;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return mpq_cmp(a.q_, b.q_) < 0;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    bool is_zero() const { return mpq_sgn(q_) == 0; }
    int sgn() const { return mpq_sgn(q_); }
    Rational abs() const { Rational r(*this); mpq_abs(r.q_, r.q_); return r; }

    // Integer power; negative exponents require a nonzero base.
    Rational pow(long e) const;

    // "n" or "n/d" in lowest terms.
    std::string str() const;
    double to_double() const { return mpq_get_d(q_); }

    const mpq_t& raw() const { return q_; }

private:
    mpq_t q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// n! as a Rational (exact, n >= 0).
Rational factorial(unsigned long n);

// binom(n, k) with the generating-function convention: 0 for k < 0 or k > n.
Rational binomial(long n, long k);

// Bernoulli number B_n (B_1 = -1/2), cached; thread-safe.
Rational bernoulli(unsigned n);

// Signed Euler number E_n (E_0 = 1, E_2 = -1, E_4 = 5, ...); odd n give 0.
Rational euler_number(unsigned n);

}  // namespace mtv

#endif
