#ifndef MTV_SYMBOLIC_HPP
#define MTV_SYMBOLIC_HPP

#include <compare>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "mtv/rational.hpp"

namespace mtv {

// The constant alphabet: V, log(2), pi, gamma, zeta(odd >= 3), beta(even >= 2).
// Even zeta and odd beta never get a symbol; they reduce to rational
// multiples of pi powers at construction (see SymbolicValue::zeta/beta).
enum class SymKind : int { Pi = 0, Log2 = 1, V = 2, EulerGamma = 3, Zeta = 4, Beta = 5 };

struct ConstSymbol {
    SymKind kind;
    int index = 0;  // zeta/beta argument; 0 for the weight-1 symbols

    static ConstSymbol pi() { return {SymKind::Pi, 0}; }
    static ConstSymbol log2() { return {SymKind::Log2, 0}; }
    static ConstSymbol v() { return {SymKind::V, 0}; }
    static ConstSymbol euler_gamma() { return {SymKind::EulerGamma, 0}; }
    static ConstSymbol zeta(int n);  // requires odd n >= 3
    static ConstSymbol beta(int n);  // requires even n >= 2

    int weight() const { return kind == SymKind::Zeta || kind == SymKind::Beta ? index : 1; }
    std::string name() const;
    static ConstSymbol from_name(const std::string& name);

    friend auto operator<=>(const ConstSymbol&, const ConstSymbol&) = default;
};

// A monomial is a multiset of symbols, kept sorted.
using Monomial = std::vector<ConstSymbol>;

int monomial_weight(const Monomial& m);

struct Weight {
    enum Kind { Any, Homogeneous, Inhomogeneous } kind;
    int value = 0;  // valid when Homogeneous
};

// Exact element of the polynomial ring Q[V, log2, pi, gamma, zeta(2r+1), beta(2r)].
// Canonical: no zero coefficients, monomials sorted, so operator== is
// structural equality of values.
class SymbolicValue {
public:
    SymbolicValue() = default;

    static SymbolicValue zero() { return SymbolicValue(); }
    static SymbolicValue constant(Rational c);
    static SymbolicValue symbol(ConstSymbol s, Rational coef = Rational(1));
    static SymbolicValue monomial(Monomial m, Rational coef);

    // zeta(n) for n >= 2: a symbol for odd n, the exact Bernoulli
    // reduction rational * pi^n for even n.
    static SymbolicValue zeta(int n);
    // beta(n) for n >= 1: a symbol for even n, the exact Euler-number
    // reduction rational * pi^n for odd n.
    static SymbolicValue beta(int n);

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    Rational coefficient(const Monomial& m) const;

    SymbolicValue& operator+=(const SymbolicValue& o);
    SymbolicValue& operator-=(const SymbolicValue& o);
    friend SymbolicValue operator+(SymbolicValue a, const SymbolicValue& b) { a += b; return a; }
    friend SymbolicValue operator-(SymbolicValue a, const SymbolicValue& b) { a -= b; return a; }
    friend SymbolicValue operator*(const SymbolicValue& a, const SymbolicValue& b);
    SymbolicValue operator-() const;
    friend SymbolicValue operator*(const Rational& c, const SymbolicValue& v);
    friend SymbolicValue operator*(const SymbolicValue& v, const Rational& c) { return c * v; }
    SymbolicValue& operator*=(const Rational& c);

    friend bool operator==(const SymbolicValue& a, const SymbolicValue& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const SymbolicValue& a, const SymbolicValue& b) { return !(a == b); }

    Weight weight() const;
    bool gamma_free() const;
    bool has_symbol(SymKind kind) const;

    // Substitutes V := lambda * log2 (exactly, in every monomial).
    SymbolicValue subst_v_log2(const Rational& lambda) const;

    std::string str() const;    // e.g. "-1/4*Pi*V + 1/2*Beta(2) + 1/8*Pi*Log2"
    std::string latex() const;  // paper-style rendering

private:
    std::map<Monomial, Rational> terms_;

    void add_term(const Monomial& m, const Rational& c);
};

std::ostream& operator<<(std::ostream& os, const SymbolicValue& v);

}  // namespace mtv

#endif
