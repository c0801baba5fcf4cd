#include "mtv/tword.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace mtv {

TWord::TWord(std::vector<TEntry> entries) : entries_(std::move(entries)) {
    for (const auto& e : entries_) {
        if (e.k < 1 || (e.sign != 1 && e.sign != -1))
            throw std::invalid_argument("TWord: entries need k >= 1 and sign +-1");
    }
}

TWord TWord::parse(const std::string& s) {
    std::vector<TEntry> entries;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        int v;
        try {
            v = std::stoi(item, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("TWord: cannot parse entry '" + item + "'");
        }
        while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
        if (pos != item.size() || v == 0)
            throw std::invalid_argument("TWord: bad entry '" + item + "'");
        entries.push_back(v > 0 ? TEntry{v, 1} : TEntry{-v, -1});
    }
    return TWord(std::move(entries));
}

std::string TWord::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < entries_.size(); ++i) {
        if (i) os << ",";
        os << entries_[i].sign * entries_[i].k;
    }
    return os.str();
}

int TWord::weight() const {
    int w = 0;
    for (const auto& e : entries_) w += e.k;
    return w;
}

size_t TWord::trailing_ones() const {
    size_t n = 0;
    for (auto it = entries_.rbegin(); it != entries_.rend() && *it == TEntry{1, 1}; ++it) ++n;
    return n;
}

TWord TWord::dropped_outermost() const {
    if (entries_.empty()) throw std::logic_error("TWord: empty word has no outermost entry");
    auto e = entries_;
    e.pop_back();
    TWord w;
    w.entries_ = std::move(e);
    return w;
}

TWord TWord::appended(TEntry e) const {
    auto v = entries_;
    v.push_back(e);
    return TWord(std::move(v));
}

std::ostream& operator<<(std::ostream& os, const TWord& w) { return os << w.str(); }

TWord theorem_word(int a, int b) {
    std::vector<TEntry> e;
    e.reserve(static_cast<size_t>(a + b + 1));
    for (int i = 0; i < a; ++i) e.push_back({1, -1});
    e.push_back({1, 1});
    for (int i = 0; i < b; ++i) e.push_back({1, -1});
    return TWord(std::move(e));
}

TWord bar_ones(int m) {
    return TWord(std::vector<TEntry>(static_cast<size_t>(m), TEntry{1, -1}));
}

FormalWordSum FormalWordSum::single(const TWord& w, SymbolicValue coef) {
    FormalWordSum s;
    s.add(w, coef);
    return s;
}

void FormalWordSum::add(const TWord& w, const SymbolicValue& coef) {
    if (coef.is_zero()) return;
    auto [it, inserted] = terms_.emplace(w, coef);
    if (!inserted) {
        it->second += coef;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void FormalWordSum::add(const TWord& w, const Rational& coef) {
    add(w, SymbolicValue::constant(coef));
}

SymbolicValue FormalWordSum::coefficient(const TWord& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? SymbolicValue::zero() : it->second;
}

FormalWordSum& FormalWordSum::operator+=(const FormalWordSum& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

FormalWordSum& FormalWordSum::operator-=(const FormalWordSum& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

FormalWordSum FormalWordSum::scaled(const SymbolicValue& c) const {
    FormalWordSum r;
    for (const auto& [w, coef] : terms_) r.add(w, coef * c);
    return r;
}

FormalWordSum FormalWordSum::scaled(const Rational& c) const {
    return scaled(SymbolicValue::constant(c));
}

SymbolicValue FormalWordSum::coefficient_total() const {
    SymbolicValue s;
    for (const auto& [w, c] : terms_) s += c;
    return s;
}

std::string FormalWordSum::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*[" << w.str() << "]";
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const FormalWordSum& s) { return os << s.str(); }

FormalWordSum stuffle(const TWord& u, const TWord& v) {
    if (u.empty()) return FormalWordSum::single(v);
    if (v.empty()) return FormalWordSum::single(u);
    TEntry a = u.outermost();
    TEntry b = v.outermost();
    TWord uu = u.dropped_outermost();
    TWord vv = v.dropped_outermost();

    FormalWordSum r;
    const FormalWordSum left = stuffle(uu, v);
    const FormalWordSum right = stuffle(u, vv);
    const FormalWordSum diag = stuffle(uu, vv);
    for (const auto& [w, c] : left.terms()) r.add(w.appended(a), c);
    for (const auto& [w, c] : right.terms()) r.add(w.appended(b), c);
    TEntry merged{a.k + b.k, a.sign * b.sign};
    for (const auto& [w, c] : diag.terms()) r.add(w.appended(merged), c);
    return r;
}

FormalWordSum regularise(const TWord& w) {
    if (w.admissible()) return FormalWordSum::single(w);

    TWord u = w.dropped_outermost();
    FormalWordSum prod = stuffle(u, TWord({{1, 1}}));
    Rational mult = prod.coefficient(w).coefficient({});  // = trailing_ones(w)

    // mult * t^*(w) = V t^*(u) - sum over the other stuffle terms
    FormalWordSum acc = regularise(u).scaled(SymbolicValue::symbol(ConstSymbol::v()));
    for (const auto& [wp, c] : prod.terms()) {
        if (wp == w) continue;
        acc -= regularise(wp).scaled(c);
    }
    return acc.scaled(Rational(1) / mult);
}

std::string Mzv4Index::str() const {
    std::ostringstream os;
    os << "zeta(";
    for (size_t i = 0; i < ipows.size(); ++i) {
        if (i) os << ",";
        static const char* names[] = {"1", "i", "-1", "-i"};
        os << names[((ipows[i] % 4) + 4) % 4];
    }
    os << ";";
    for (size_t i = 0; i < ks.size(); ++i) {
        if (i) os << ",";
        os << ks[i];
    }
    os << ")";
    return os.str();
}

std::vector<Level4Term> to_level4(const TWord& w) {
    const auto& entries = w.entries();
    size_t d = entries.size();
    std::vector<Level4Term> out;
    out.reserve(1ull << d);
    Rational scale = Rational(1) / Rational(2).pow(static_cast<long>(d));

    size_t barred = 0;
    for (const auto& e : entries)
        if (e.sign < 0) ++barred;

    for (size_t mask = 0; mask < (1ull << d); ++mask) {
        Mzv4Index idx;
        idx.ipows.reserve(d);
        idx.ks.reserve(d);
        int total_ipow = 0;
        for (size_t j = 0; j < d; ++j) {
            // square roots: eps=+1 -> eta in {i^0, i^2}; eps=-1 -> {i^1, i^3}
            int base = entries[j].sign > 0 ? 0 : 1;
            int p = base + 2 * static_cast<int>((mask >> j) & 1);
            idx.ipows.push_back(p);
            idx.ks.push_back(entries[j].k);
            total_ipow += p;
        }
        GaussianRational coef = GaussianRational::i_pow(total_ipow);
        // eta_1...eta_d is +-1 for an even number of bars, +-i for odd
        bool real_coef = coef.im.is_zero();
        if ((barred % 2 == 0) != real_coef)
            throw std::logic_error("to_level4: coefficient parity violated");
        coef.re *= scale;
        coef.im *= scale;
        out.push_back({coef, std::move(idx)});
    }
    return out;
}

}  // namespace mtv
