#ifndef MTV_GAUSSIAN_HPP
#define MTV_GAUSSIAN_HPP

#include <stdexcept>
#include <string>

#include "mtv/rational.hpp"

namespace mtv {

// Element of Q(i), exact.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    // i^p for p mod 4
    static GaussianRational i_pow(int p) {
        switch (((p % 4) + 4) % 4) {
            case 0: return {Rational(1), Rational(0)};
            case 1: return {Rational(0), Rational(1)};
            case 2: return {Rational(-1), Rational(0)};
            default: return {Rational(0), Rational(-1)};
        }
    }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) {
        a += b;
        return a;
    }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) {
        a -= b;
        return a;
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        Rational n = b.re * b.re + b.im * b.im;
        if (n.is_zero()) throw std::domain_error("GaussianRational: division by zero");
        GaussianRational conj{b.re, -b.im};
        GaussianRational p = a * conj;
        return {p.re / n, p.im / n};
    }
    GaussianRational operator-() const { return {-re, -im}; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }

    std::string str() const { return "(" + re.str() + ", " + im.str() + ")"; }
};

}  // namespace mtv

#endif
