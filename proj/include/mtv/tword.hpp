#ifndef MTV_TWORD_HPP
#define MTV_TWORD_HPP

#include <compare>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "mtv/gaussian.hpp"
#include "mtv/symbolic.hpp"

namespace mtv {

// One argument of a multiple t value: exponent k with sign epsilon.
struct TEntry {
    int k;     // >= 1
    int sign;  // +1 or -1

    friend auto operator<=>(const TEntry&, const TEntry&) = default;
};

// Signed index word (k1^e1, ..., kd^ed), stored inner-to-outer: entry 0
// carries the innermost summation index n1, the last entry the outermost
// index nd.  This matches the summation 0 < n1 < ... < nd, so the word
// string "-1,2,-2" denotes t(1bar, 2, 2bar) with 2bar outermost.
class TWord {
public:
    TWord() = default;
    explicit TWord(std::vector<TEntry> entries);

    // Comma-separated nonzero integers; negative values are barred,
    // e.g. "-1,-1,1" is t(1bar, 1bar, 1).
    static TWord parse(const std::string& s);
    std::string str() const;

    size_t depth() const { return entries_.size(); }
    int weight() const;
    bool empty() const { return entries_.empty(); }
    const std::vector<TEntry>& entries() const { return entries_; }
    const TEntry& outermost() const { return entries_.back(); }

    // Convergent iff the outermost entry is not (1, +1); empty is admissible.
    bool admissible() const {
        return entries_.empty() || !(entries_.back() == TEntry{1, 1});
    }
    // Number of outermost (1, +1) entries.
    size_t trailing_ones() const;

    TWord dropped_outermost() const;
    TWord appended(TEntry e) const;

    friend auto operator<=>(const TWord&, const TWord&) = default;

private:
    std::vector<TEntry> entries_;
};

std::ostream& operator<<(std::ostream& os, const TWord& w);

// ({1bar}^a, 1, {1bar}^b)
TWord theorem_word(int a, int b);
// ({1bar}^m)
TWord bar_ones(int m);

// Rational-weighted formal sum of words; coefficients are SymbolicValues
// and may carry V (regularisation outputs do).  Canonical: no zero terms.
class FormalWordSum {
public:
    FormalWordSum() = default;
    static FormalWordSum single(const TWord& w, SymbolicValue coef = SymbolicValue::constant(Rational(1)));

    void add(const TWord& w, const SymbolicValue& coef);
    void add(const TWord& w, const Rational& coef);

    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    const std::map<TWord, SymbolicValue>& terms() const { return terms_; }
    SymbolicValue coefficient(const TWord& w) const;

    FormalWordSum& operator+=(const FormalWordSum& o);
    FormalWordSum& operator-=(const FormalWordSum& o);
    friend FormalWordSum operator+(FormalWordSum a, const FormalWordSum& b) { a += b; return a; }
    friend FormalWordSum operator-(FormalWordSum a, const FormalWordSum& b) { a -= b; return a; }
    FormalWordSum scaled(const SymbolicValue& c) const;
    FormalWordSum scaled(const Rational& c) const;

    friend bool operator==(const FormalWordSum& a, const FormalWordSum& b) {
        return a.terms_ == b.terms_;
    }

    // Sum of all coefficients (term-count weighted by multiplicity).
    SymbolicValue coefficient_total() const;

    std::string str() const;

private:
    std::map<TWord, SymbolicValue> terms_;
};

std::ostream& operator<<(std::ostream& os, const FormalWordSum& s);

// Quasi-shuffle product: interleavings of u and v, where entries merged at
// an equal summation index add exponents and multiply signs.
FormalWordSum stuffle(const TWord& u, const TWord& v);

// Stuffle regularisation t^{*,V}: peels outermost (1,+1) entries via
// t^*(u.1) = (V t^*(u) - other stuffle terms) / multiplicity, so the result
// is a sum of admissible words with coefficients polynomial in V.
// Admissible words return themselves.
FormalWordSum regularise(const TWord& w);

// Level-4 coloured-MZV index: signs eta_j = i^ipows[j], eta_j in {1,i,-1,-i}.
struct Mzv4Index {
    std::vector<int> ipows;  // inner-to-outer, each 0..3
    std::vector<int> ks;

    bool admissible() const {
        return ks.empty() || !(ks.back() == 1 && ipows.back() % 4 == 0);
    }
    std::string str() const;
};

struct Level4Term {
    GaussianRational coef;
    Mzv4Index index;
};

// t(eps; k) = 2^-d sum over square roots eta of eps of eta_1...eta_d zeta(eta; k).
// The overall coefficient is +-1/2^d when the number of barred entries is even
// and +-i/2^d when odd.
std::vector<Level4Term> to_level4(const TWord& w);

}  // namespace mtv

#endif
