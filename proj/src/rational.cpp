#include "mtv/rational.hpp"

#include <mutex>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace mtv {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    mpq_init(q_);
    mpq_set_si(q_, num, 1);
    mpq_t d;
    mpq_init(d);
    mpq_set_si(d, den, 1);
    mpq_div(q_, q_, d);
    mpq_clear(d);
}

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Rational: empty string");
    Rational r;
    if (mpq_set_str(r.q_, s.c_str(), 10) != 0)
        throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    if (mpz_sgn(mpq_denref(r.q_)) == 0)
        throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
    mpq_canonicalize(r.q_);
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    mpq_div(q_, q_, o.q_);
    return *this;
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
        if (e < 0) throw std::domain_error("Rational: 0 to a negative power");
        return Rational(0);
    }
    Rational base(*this);
    bool invert = e < 0;
    unsigned long n = invert ? static_cast<unsigned long>(-(e + 1)) + 1ul
                             : static_cast<unsigned long>(e);
    Rational r;
    mpz_pow_ui(mpq_numref(r.q_), mpq_numref(base.q_), n);
    mpz_pow_ui(mpq_denref(r.q_), mpq_denref(base.q_), n);
    mpq_canonicalize(r.q_);
    if (invert) {
        Rational one(1);
        r = one / r;
    }
    return r;
}

std::string Rational::str() const {
    char* c = mpq_get_str(nullptr, 10, q_);
    std::string s(c);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(c, s.size() + 1);
    return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

Rational factorial(unsigned long n) {
    mpz_t z;
    mpz_init(z);
    mpz_fac_ui(z, n);
    Rational r = Rational::from_mpz(z);
    mpz_clear(z);
    return r;
}

Rational binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return Rational(0);
    mpz_t z;
    mpz_init(z);
    mpz_bin_uiui(z, static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    Rational r = Rational::from_mpz(z);
    mpz_clear(z);
    return r;
}

namespace {

std::mutex g_bernoulli_mutex;
std::vector<Rational> g_bernoulli;  // B_0, B_1, ...

std::mutex g_euler_mutex;
std::vector<Rational> g_euler;  // E_0, E_2, E_4, ... (even indices only)

}  // namespace

// Recurrence sum_{k=0}^{n} binom(n+1, k) B_k = 0 for n >= 1.
Rational bernoulli(unsigned n) {
    std::lock_guard<std::mutex> lock(g_bernoulli_mutex);
    if (g_bernoulli.empty()) {
        g_bernoulli.push_back(Rational(1));
        g_bernoulli.push_back(Rational(-1, 2));
    }
    while (g_bernoulli.size() <= n) {
        unsigned m = static_cast<unsigned>(g_bernoulli.size());
        if (m % 2 == 1) {
            g_bernoulli.push_back(Rational(0));
            continue;
        }
        Rational acc(0);
        for (unsigned k = 0; k < m; ++k)
            acc += binomial(static_cast<long>(m) + 1, static_cast<long>(k)) * g_bernoulli[k];
        g_bernoulli.push_back(-acc / Rational(static_cast<long>(m) + 1));
    }
    return g_bernoulli[n];
}

// Recurrence sum_{k=0}^{n} binom(2n, 2k) E_{2k} = 0 for n >= 1.
Rational euler_number(unsigned n) {
    if (n % 2 == 1) return Rational(0);
    unsigned idx = n / 2;
    std::lock_guard<std::mutex> lock(g_euler_mutex);
    if (g_euler.empty()) g_euler.push_back(Rational(1));
    while (g_euler.size() <= idx) {
        unsigned m = static_cast<unsigned>(g_euler.size());
        Rational acc(0);
        for (unsigned k = 0; k < m; ++k)
            acc += binomial(2l * m, 2l * k) * g_euler[k];
        g_euler.push_back(-acc);
    }
    return g_euler[idx];
}

}  // namespace mtv
