#include "mtv/genfun.hpp"

#include <stdexcept>

namespace mtv {

namespace {

int sign_of_parity(long n) { return (n & 1) ? -1 : 1; }

long floor_div2(long n) { return n >= 0 ? n / 2 : -((-n + 1) / 2); }

// (-1)^floor((q-1)/2), the shared sign of the zeta/beta sums.
int column_sign(long q) { return sign_of_parity(floor_div2(q - 1)); }

// (pi/4)^q / (2 q!) as a SymbolicValue, the shared prefactor.
SymbolicValue pi_quarter_prefactor(long q) {
    Rational coef = Rational(1) / (Rational(2) * factorial(static_cast<unsigned long>(q)) *
                                   Rational(4).pow(q));
    return SymbolicValue::monomial(Monomial(static_cast<size_t>(q), ConstSymbol::pi()), coef);
}

}  // namespace

BiSeries::BiSeries(int order) : order_(order) {
    if (order < 0) throw std::invalid_argument("BiSeries: negative order");
    c_.resize(static_cast<size_t>(order) + 1);
    for (int a = 0; a <= order; ++a)
        c_[static_cast<size_t>(a)].resize(static_cast<size_t>(order - a) + 1);
}

const SymbolicValue& BiSeries::at(int a, int b) const {
    if (a < 0 || b < 0 || a + b > order_)
        throw std::out_of_range("BiSeries: coefficient outside truncation order");
    return c_[static_cast<size_t>(a)][static_cast<size_t>(b)];
}

void BiSeries::set(int a, int b, SymbolicValue v) {
    if (a < 0 || b < 0 || a + b > order_)
        throw std::out_of_range("BiSeries: coefficient outside truncation order");
    c_[static_cast<size_t>(a)][static_cast<size_t>(b)] = std::move(v);
}

BiSeries& BiSeries::operator+=(const BiSeries& o) {
    if (o.order_ != order_) throw std::invalid_argument("BiSeries: order mismatch");
    for (int a = 0; a <= order_; ++a)
        for (int b = 0; a + b <= order_; ++b)
            c_[static_cast<size_t>(a)][static_cast<size_t>(b)] += o.at(a, b);
    return *this;
}

BiSeries operator-(BiSeries a, const BiSeries& b) {
    if (a.order_ != b.order_) throw std::invalid_argument("BiSeries: order mismatch");
    for (int i = 0; i <= a.order_; ++i)
        for (int j = 0; i + j <= a.order_; ++j)
            a.c_[static_cast<size_t>(i)][static_cast<size_t>(j)] -= b.at(i, j);
    return a;
}

BiSeries operator*(const BiSeries& a, const BiSeries& b) {
    if (a.order_ != b.order_) throw std::invalid_argument("BiSeries: order mismatch");
    BiSeries r(a.order_);
    for (int i = 0; i <= a.order_; ++i)
        for (int j = 0; i + j <= a.order_; ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (int k = 0; i + j + k <= a.order_; ++k)
                for (int l = 0; i + j + k + l <= a.order_; ++l) {
                    if (b.at(k, l).is_zero()) continue;
                    auto& slot = r.c_[static_cast<size_t>(i + k)][static_cast<size_t>(j + l)];
                    slot += a.at(i, j) * b.at(k, l);
                }
        }
    return r;
}

BiSeries BiSeries::scaled(const Rational& c) const {
    BiSeries r(order_);
    for (int a = 0; a <= order_; ++a)
        for (int b = 0; a + b <= order_; ++b) r.set(a, b, c * at(a, b));
    return r;
}

BiSeries BiSeries::from_x_series(const std::vector<SymbolicValue>& f, int order) {
    BiSeries r(order);
    for (int m = 0; m <= order && m < static_cast<int>(f.size()); ++m)
        r.set(m, 0, f[static_cast<size_t>(m)]);
    return r;
}

BiSeries BiSeries::from_y_series(const std::vector<SymbolicValue>& f, int order) {
    BiSeries r(order);
    for (int m = 0; m <= order && m < static_cast<int>(f.size()); ++m)
        r.set(0, m, f[static_cast<size_t>(m)]);
    return r;
}

BiSeries BiSeries::from_xy_series(const std::vector<SymbolicValue>& g, int sign_y, int order) {
    if (sign_y != 1 && sign_y != -1)
        throw std::invalid_argument("BiSeries: sign_y must be +-1");
    BiSeries r(order);
    for (int j = 0; j <= order && j < static_cast<int>(g.size()); ++j) {
        const auto& gj = g[static_cast<size_t>(j)];
        if (gj.is_zero()) continue;
        for (int b = 0; b <= j; ++b) {
            Rational c = binomial(j, b);
            if (sign_y < 0 && (b & 1)) c = -c;
            auto& slot = r.c_[static_cast<size_t>(j - b)][static_cast<size_t>(b)];
            slot += c * gj;
        }
    }
    return r;
}

std::vector<SymbolicValue> trig_series(int order) {
    std::vector<SymbolicValue> f;
    f.reserve(static_cast<size_t>(order) + 1);
    for (int m = 0; m <= order; ++m) {
        Rational coef = Rational(1) / (factorial(static_cast<unsigned long>(m)) *
                                       Rational(4).pow(m));
        if ((m / 2) & 1) coef = -coef;
        f.push_back(SymbolicValue::monomial(Monomial(static_cast<size_t>(m), ConstSymbol::pi()),
                                            coef));
    }
    return f;
}

std::vector<SymbolicValue> ac_series(ACKind kind, int denom, int order) {
    if (denom != 2 && denom != 4 && denom != 8)
        throw std::invalid_argument("ac_series: denominator must be 2, 4 or 8");
    std::vector<SymbolicValue> g(static_cast<size_t>(order) + 1);
    for (int n = 1; n <= order; ++n) {
        bool keep = (kind == ACKind::A) ? (n % 2 == 0) : (n % 2 == 1);
        if (!keep || (kind == ACKind::A && n < 2)) continue;
        Rational scale = Rational(1) / Rational(denom).pow(n);
        SymbolicValue val = (kind == ACKind::A) ? SymbolicValue::zeta(n + 1)
                                                : SymbolicValue::beta(n + 1);
        g[static_cast<size_t>(n)] = scale * val;
    }
    return g;
}

BiSeries build_FV(int order) {
    const auto trig = trig_series(order);
    const auto half = Rational(1, 2);
    const auto log2 = SymbolicValue::symbol(ConstSymbol::log2());
    const auto v = SymbolicValue::symbol(ConstSymbol::v());

    BiSeries sx = BiSeries::from_x_series(trig, order);
    BiSeries sy = BiSeries::from_y_series(trig, order);

    // A((x-y)/4) - A((x+y)/4) + 2 A((x+y)/2) - log2 + 2V
    BiSeries bracket1 =
        BiSeries::from_xy_series(ac_series(ACKind::A, 4, order), -1, order) -
        BiSeries::from_xy_series(ac_series(ACKind::A, 4, order), +1, order) +
        BiSeries::from_xy_series(ac_series(ACKind::A, 2, order), +1, order).scaled(Rational(2));
    {
        BiSeries cst(order);
        cst.set(0, 0, Rational(2) * v - log2);
        bracket1 += cst;
    }

    // -A((x-y)/8) + A((x-y)/4) - 2 C((x+y)/2) + log2
    BiSeries bracket2 =
        BiSeries::from_xy_series(ac_series(ACKind::A, 4, order), -1, order) -
        BiSeries::from_xy_series(ac_series(ACKind::A, 8, order), -1, order) -
        BiSeries::from_xy_series(ac_series(ACKind::C, 2, order), +1, order).scaled(Rational(2));
    {
        BiSeries cst(order);
        cst.set(0, 0, log2);
        bracket2 += cst;
    }

    return (sx * bracket1 + sy * bracket2).scaled(half);
}

SymbolicValue closed_form_t(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("closed_form_t: a, b >= 0 required");
    const long n = a + b;
    SymbolicValue acc;

    // zeta sums, r even.  The second sum drops the 2/2^r part: in the
    // generating series that piece comes from 2A((x+y)/2), which sits in
    // the x-block and therefore carries binom(r, b).
    for (long r = 2; r <= n; r += 2) {
        long q = n - r;
        SymbolicValue pre = pi_quarter_prefactor(q);
        if (column_sign(q) < 0) pre *= Rational(-1);
        Rational inv4r = Rational(4).pow(-r);
        Rational inv8r = Rational(8).pow(-r);
        Rational inv2r = Rational(2).pow(-r);

        Rational bracket1 = inv4r - Rational(sign_of_parity(b - r)) * inv4r -
                            Rational(2) * inv2r;
        Rational bracket2 = Rational(sign_of_parity(a - r)) * (inv8r - inv4r);
        Rational cols = binomial(r, b) * bracket1 + binomial(r, a) * bracket2;
        acc += (pre * SymbolicValue::zeta(static_cast<int>(r) + 1)) * cols;
    }

    // beta sum, r odd
    for (long r = 1; r <= n; r += 2) {
        long q = n - r;
        SymbolicValue pre = pi_quarter_prefactor(q);
        if (column_sign(q) < 0) pre *= Rational(-1);
        Rational col = -binomial(r, a) * Rational(2) * Rational(2).pow(-r);
        acc += (pre * SymbolicValue::beta(static_cast<int>(r) + 1)) * col;
    }

    // boundary terms: (2V - log2) on the b = 0 edge, log2 on the a = 0 edge
    if (a == 0 || b == 0) {
        Rational coef = Rational(1) / (Rational(2) * factorial(static_cast<unsigned long>(n)) *
                                       Rational(4).pow(n));
        if (sign_of_parity(floor_div2(-n)) < 0) coef = -coef;
        SymbolicValue pin =
            SymbolicValue::monomial(Monomial(static_cast<size_t>(n), ConstSymbol::pi()), coef);
        const auto log2 = SymbolicValue::symbol(ConstSymbol::log2());
        if (b == 0)
            acc += pin * (Rational(2) * SymbolicValue::symbol(ConstSymbol::v()) - log2);
        if (a == 0) acc += pin * log2;
    }
    return acc;
}

SymbolicValue extract_coeff(const std::function<SymbolicValue(int)>& f,
                            const std::function<SymbolicValue(int)>& g, int a, int b) {
    SymbolicValue acc;
    for (int n = 0; n <= a + b; ++n) {
        Rational c = binomial(n, b);
        if (c.is_zero()) continue;
        acc += (g(n) * f(a + b - n)) * c;
    }
    return acc;
}

SymbolicValue exact_t_value(const TWord& w) {
    if (w.empty()) return SymbolicValue::constant(Rational(1));
    const auto& e = w.entries();

    if (w.depth() == 1) {
        int k = e[0].k;
        if (e[0].sign < 0) return -SymbolicValue::beta(k);  // t(kbar) = -beta(k)
        if (k < 2) throw std::domain_error("exact_t_value: t(1) diverges; regularise first");
        // t(k) = (1 - 2^-k) zeta(k)
        return (Rational(1) - Rational(2).pow(-k)) * SymbolicValue::zeta(k);
    }

    bool all_one = true, all_barred = true;
    int plus_pos = -1, plus_count = 0;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i].k != 1) all_one = false;
        if (e[i].sign > 0) {
            all_barred = false;
            plus_pos = static_cast<int>(i);
            ++plus_count;
        }
    }

    if (all_one && all_barred) {
        // t({1bar}^m) = (-1)^m (-1)^floor(m/2) (pi/4)^m / m!
        int m = static_cast<int>(w.depth());
        Rational coef = Rational(1) / (factorial(static_cast<unsigned long>(m)) *
                                       Rational(4).pow(m));
        if ((m + m / 2) & 1) coef = -coef;
        return SymbolicValue::monomial(Monomial(static_cast<size_t>(m), ConstSymbol::pi()), coef);
    }

    if (all_one && plus_count == 1) {
        int a = plus_pos;
        int b = static_cast<int>(w.depth()) - 1 - plus_pos;
        return closed_form_t(a, b);
    }

    throw std::domain_error("exact_t_value: no closed form for word " + w.str());
}

SymbolicValue exact_eval(const FormalWordSum& s) {
    SymbolicValue acc;
    for (const auto& [w, c] : s.terms()) acc += c * exact_t_value(w);
    return acc;
}

}  // namespace mtv
