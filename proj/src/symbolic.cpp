#include "mtv/symbolic.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace mtv {

ConstSymbol ConstSymbol::zeta(int n) {
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument("ConstSymbol::zeta: index must be odd and >= 3");
    return {SymKind::Zeta, n};
}

ConstSymbol ConstSymbol::beta(int n) {
    if (n < 2 || n % 2 == 1)
        throw std::invalid_argument("ConstSymbol::beta: index must be even and >= 2");
    return {SymKind::Beta, n};
}

std::string ConstSymbol::name() const {
    switch (kind) {
        case SymKind::Pi: return "Pi";
        case SymKind::Log2: return "Log2";
        case SymKind::V: return "V";
        case SymKind::EulerGamma: return "EulerGamma";
        case SymKind::Zeta: return "Zeta(" + std::to_string(index) + ")";
        case SymKind::Beta: return "Beta(" + std::to_string(index) + ")";
    }
    return "?";
}

ConstSymbol ConstSymbol::from_name(const std::string& name) {
    if (name == "Pi") return pi();
    if (name == "Log2") return log2();
    if (name == "V") return v();
    if (name == "EulerGamma") return euler_gamma();
    auto paren = name.find('(');
    if (paren != std::string::npos && name.back() == ')') {
        std::string head = name.substr(0, paren);
        int idx = std::stoi(name.substr(paren + 1, name.size() - paren - 2));
        if (head == "Zeta") return zeta(idx);
        if (head == "Beta") return beta(idx);
    }
    throw std::invalid_argument("ConstSymbol: unknown symbol '" + name + "'");
}

int monomial_weight(const Monomial& m) {
    int w = 0;
    for (const auto& s : m) w += s.weight();
    return w;
}

SymbolicValue SymbolicValue::constant(Rational c) {
    SymbolicValue v;
    v.add_term({}, c);
    return v;
}

SymbolicValue SymbolicValue::symbol(ConstSymbol s, Rational coef) {
    SymbolicValue v;
    v.add_term({s}, coef);
    return v;
}

SymbolicValue SymbolicValue::monomial(Monomial m, Rational coef) {
    std::sort(m.begin(), m.end());
    SymbolicValue v;
    v.add_term(m, coef);
    return v;
}

SymbolicValue SymbolicValue::zeta(int n) {
    if (n < 2) throw std::invalid_argument("SymbolicValue::zeta: n >= 2 required");
    if (n % 2 == 1) return symbol(ConstSymbol::zeta(n));
    // zeta(2m) = (-1)^(m+1) B_{2m} (2pi)^(2m) / (2 (2m)!)
    int m = n / 2;
    Rational coef = bernoulli(static_cast<unsigned>(n)) * Rational(2).pow(n) /
                    (Rational(2) * factorial(static_cast<unsigned long>(n)));
    if (m % 2 == 0) coef = -coef;
    return monomial(Monomial(static_cast<size_t>(n), ConstSymbol::pi()), coef);
}

SymbolicValue SymbolicValue::beta(int n) {
    if (n < 1) throw std::invalid_argument("SymbolicValue::beta: n >= 1 required");
    if (n % 2 == 0) return symbol(ConstSymbol::beta(n));
    // beta(2m+1) = (-1)^m E_{2m} pi^(2m+1) / (4^(m+1) (2m)!)
    int m = (n - 1) / 2;
    Rational coef = euler_number(static_cast<unsigned>(n - 1)) /
                    (Rational(4).pow(m + 1) * factorial(static_cast<unsigned long>(n - 1)));
    if (m % 2 == 1) coef = -coef;
    return monomial(Monomial(static_cast<size_t>(n), ConstSymbol::pi()), coef);
}

Rational SymbolicValue::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void SymbolicValue::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SymbolicValue& SymbolicValue::operator+=(const SymbolicValue& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

SymbolicValue& SymbolicValue::operator-=(const SymbolicValue& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

SymbolicValue operator*(const SymbolicValue& a, const SymbolicValue& b) {
    SymbolicValue r;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m;
            m.reserve(ma.size() + mb.size());
            std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

SymbolicValue SymbolicValue::operator-() const {
    SymbolicValue r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

SymbolicValue operator*(const Rational& c, const SymbolicValue& v) {
    SymbolicValue r(v);
    r *= c;
    return r;
}

SymbolicValue& SymbolicValue::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coef] : terms_) coef *= c;
    return *this;
}

Weight SymbolicValue::weight() const {
    if (terms_.empty()) return {Weight::Any, 0};
    int w = monomial_weight(terms_.begin()->first);
    for (const auto& [m, c] : terms_)
        if (monomial_weight(m) != w) return {Weight::Inhomogeneous, 0};
    return {Weight::Homogeneous, w};
}

bool SymbolicValue::gamma_free() const { return !has_symbol(SymKind::EulerGamma); }

bool SymbolicValue::has_symbol(SymKind kind) const {
    for (const auto& [m, c] : terms_)
        for (const auto& s : m)
            if (s.kind == kind) return true;
    return false;
}

SymbolicValue SymbolicValue::subst_v_log2(const Rational& lambda) const {
    SymbolicValue r;
    for (const auto& [m, c] : terms_) {
        Monomial out;
        out.reserve(m.size());
        int vcount = 0;
        for (const auto& s : m) {
            if (s.kind == SymKind::V) {
                ++vcount;
                out.push_back(ConstSymbol::log2());
            } else {
                out.push_back(s);
            }
        }
        std::sort(out.begin(), out.end());
        r.add_term(out, c * lambda.pow(vcount));
    }
    return r;
}

namespace {

std::string render_monomial(const Monomial& m, bool latex) {
    if (m.empty()) return latex ? "1" : "1";
    std::ostringstream os;
    size_t i = 0;
    bool first = true;
    while (i < m.size()) {
        size_t j = i;
        while (j < m.size() && m[j] == m[i]) ++j;
        size_t mult = j - i;
        if (!first) os << (latex ? " " : "*");
        first = false;
        if (latex) {
            switch (m[i].kind) {
                case SymKind::Pi: os << "\\pi"; break;
                case SymKind::Log2: os << "\\log(2)"; break;
                case SymKind::V: os << "V"; break;
                case SymKind::EulerGamma: os << "\\gamma"; break;
                case SymKind::Zeta: os << "\\zeta(" << m[i].index << ")"; break;
                case SymKind::Beta: os << "\\beta(" << m[i].index << ")"; break;
            }
            if (mult > 1) os << "^{" << mult << "}";
        } else {
            os << m[i].name();
            if (mult > 1) os << "^" << mult;
        }
        i = j;
    }
    return os.str();
}

}  // namespace

std::string SymbolicValue::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << (c.sgn() < 0 ? " - " : " + ");
        else if (c.sgn() < 0) os << "-";
        first = false;
        Rational a = c.abs();
        if (m.empty()) {
            os << a.str();
        } else if (a == Rational(1)) {
            os << render_monomial(m, false);
        } else {
            os << a.str() << "*" << render_monomial(m, false);
        }
    }
    return os.str();
}

std::string SymbolicValue::latex() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << (c.sgn() < 0 ? " - " : " + ");
        else if (c.sgn() < 0) os << "-";
        first = false;
        Rational a = c.abs();
        std::string frac = a.str();
        auto slash = frac.find('/');
        if (slash != std::string::npos)
            frac = "\\frac{" + frac.substr(0, slash) + "}{" + frac.substr(slash + 1) + "}";
        if (m.empty()) {
            os << frac;
        } else if (a == Rational(1)) {
            os << render_monomial(m, true);
        } else {
            os << frac << " " << render_monomial(m, true);
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const SymbolicValue& v) {
    return os << v.str();
}

}  // namespace mtv
