#include <random>

#include "doctest.h"
#include "mtv/tword.hpp"

using namespace mtv;

namespace {

SymbolicValue sym(long n) { return SymbolicValue::constant(Rational(n)); }

long delannoy(int p, int q) {
    if (p == 0 || q == 0) return 1;
    return delannoy(p - 1, q) + delannoy(p, q - 1) + delannoy(p - 1, q - 1);
}

TWord random_word(std::mt19937_64& rng, int max_depth, int max_k) {
    std::uniform_int_distribution<int> depth(0, max_depth);
    std::uniform_int_distribution<int> kdist(1, max_k);
    std::uniform_int_distribution<int> sdist(0, 1);
    std::vector<TEntry> e;
    int d = depth(rng);
    for (int i = 0; i < d; ++i) e.push_back({kdist(rng), sdist(rng) ? 1 : -1});
    return TWord(std::move(e));
}

}  // namespace

TEST_CASE("word basics") {
    auto w = TWord::parse("-1,2,-2");
    CHECK(w.depth() == 3);
    CHECK(w.weight() == 5);
    CHECK(w.str() == "-1,2,-2");
    CHECK(w.admissible());
    CHECK(!TWord::parse("1").admissible());
    CHECK(!TWord::parse("-1,1").admissible());
    CHECK(TWord::parse("-1").admissible());
    CHECK(TWord().admissible());
    CHECK(theorem_word(2, 1).str() == "-1,-1,1,-1");
    CHECK(theorem_word(0, 0).str() == "1");
    CHECK(bar_ones(3).str() == "-1,-1,-1");
    CHECK(TWord::parse("1,1,-1,1,1").trailing_ones() == 2);
    CHECK_THROWS(TWord::parse("0"));
    CHECK_THROWS(TWord::parse("1,x"));
    CHECK_THROWS(TWord::parse("1,,2"));
}

TEST_CASE("stuffle of two depth-1 words") {
    auto r = stuffle(TWord::parse("2"), TWord::parse("3"));
    CHECK(r.size() == 3);
    CHECK(r.coefficient(TWord::parse("2,3")) == sym(1));
    CHECK(r.coefficient(TWord::parse("3,2")) == sym(1));
    CHECK(r.coefficient(TWord::parse("5")) == sym(1));
}

TEST_CASE("stuffle merges signs") {
    // t(1bar) t(1bar) = 2 t(1bar,1bar) + t(2)
    auto r = stuffle(TWord::parse("-1"), TWord::parse("-1"));
    CHECK(r.size() == 2);
    CHECK(r.coefficient(TWord::parse("-1,-1")) == sym(2));
    CHECK(r.coefficient(TWord::parse("2")) == sym(1));
}

TEST_CASE("empty word is the stuffle unit") {
    auto w = TWord::parse("-1,2");
    CHECK(stuffle(TWord(), w) == FormalWordSum::single(w));
    CHECK(stuffle(w, TWord()) == FormalWordSum::single(w));
}

TEST_CASE("stuffle total multiplicity is the Delannoy number") {
    // Generic words so distinct interleavings cannot collide as words.
    auto u = TWord::parse("2,-3,5");
    auto v = TWord::parse("7,-11");
    auto r = stuffle(u, v);
    CHECK(r.coefficient_total() == sym(delannoy(3, 2)));
    auto r2 = stuffle(TWord::parse("2,2"), TWord::parse("2,2"));
    CHECK(r2.coefficient_total() == sym(delannoy(2, 2)));
}

TEST_CASE("stuffle is commutative and associative on random words") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        auto u = random_word(rng, 3, 3);
        auto v = random_word(rng, 3, 3);
        CHECK(stuffle(u, v) == stuffle(v, u));
    }
    for (int trial = 0; trial < 10; ++trial) {
        auto u = random_word(rng, 2, 2);
        auto v = random_word(rng, 2, 2);
        auto w = random_word(rng, 2, 2);
        // (u*v)*w = u*(v*w), extended bilinearly
        FormalWordSum lhs, rhs;
        const auto uv = stuffle(u, v);
        const auto vw = stuffle(v, w);
        for (const auto& [x, c] : uv.terms()) lhs += stuffle(x, w).scaled(c);
        for (const auto& [x, c] : vw.terms()) rhs += stuffle(u, x).scaled(c);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("regularise basic cases") {
    // t^*(1) = V
    auto r = regularise(TWord::parse("1"));
    CHECK(r.size() == 1);
    CHECK(r.coefficient(TWord()) == SymbolicValue::symbol(ConstSymbol::v()));
    // admissible words are fixed
    auto w = TWord::parse("-2");
    CHECK(regularise(w) == FormalWordSum::single(w));
    auto deep = TWord::parse("-1,2,-2");
    CHECK(regularise(deep) == FormalWordSum::single(deep));
}

TEST_CASE("regularise matches the trailing-1 peeling formula") {
    // t^*({1bar}^m, 1) = V ({1bar}^m) - sum_i ({1bar}^i,1,{1bar}^(m-i))
    //                    - sum_i ({1bar}^i,2bar,{1bar}^(m-1-i))
    auto V = SymbolicValue::symbol(ConstSymbol::v());
    for (int m = 1; m <= 4; ++m) {
        auto r = regularise(bar_ones(m).appended({1, 1}));
        FormalWordSum expect;
        expect.add(bar_ones(m), V);
        for (int i = 0; i < m; ++i) {
            std::vector<TEntry> e1, e2;
            for (int j = 0; j < i; ++j) e1.push_back({1, -1});
            e1.push_back({1, 1});
            for (int j = 0; j < m - i; ++j) e1.push_back({1, -1});
            expect.add(TWord(e1), Rational(-1));
            for (int j = 0; j < i; ++j) e2.push_back({1, -1});
            e2.push_back({2, -1});
            for (int j = 0; j < m - 1 - i; ++j) e2.push_back({1, -1});
            expect.add(TWord(e2), Rational(-1));
        }
        CHECK(r == expect);
    }
}

TEST_CASE("regularise t*(1,1) = V^2/2 - t(2)/2") {
    auto r = regularise(TWord::parse("1,1"));
    auto V = SymbolicValue::symbol(ConstSymbol::v());
    CHECK(r.size() == 2);
    CHECK(r.coefficient(TWord()) == Rational(1, 2) * (V * V));
    CHECK(r.coefficient(TWord::parse("2")) == SymbolicValue::constant(Rational(-1, 2)));
}

TEST_CASE("regularise output is admissible and V-linear structure holds") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        auto w = random_word(rng, 4, 2);
        auto r = regularise(w);
        for (const auto& [wp, c] : r.terms()) CHECK(wp.admissible());
        if (w.admissible()) CHECK(r == FormalWordSum::single(w));
    }
    // theorem words with b >= 1 are admissible, so regularise is the identity
    for (int a = 0; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b) {
            auto w = theorem_word(a, b);
            CHECK(w.admissible());
            CHECK(regularise(w) == FormalWordSum::single(w));
        }
}

TEST_CASE("to_level4 depth 1") {
    // t(2) -> 1/2 [zeta(1;2) - zeta(-1;2)]
    auto terms = to_level4(TWord::parse("2"));
    REQUIRE(terms.size() == 2);
    for (const auto& t : terms) {
        CHECK(t.coef.im.is_zero());
        int p = t.index.ipows[0] % 4;
        if (p == 0) CHECK(t.coef.re == Rational(1, 2));
        if (p == 2) CHECK(t.coef.re == Rational(-1, 2));
    }
    // t(2bar) -> 1/2 [i zeta(i;2) - i zeta(-i;2)]
    auto barred = to_level4(TWord::parse("-2"));
    REQUIRE(barred.size() == 2);
    for (const auto& t : barred) {
        CHECK(t.coef.re.is_zero());
        int p = t.index.ipows[0] % 4;
        if (p == 1) CHECK(t.coef.im == Rational(1, 2));
        if (p == 3) CHECK(t.coef.im == Rational(-1, 2));
    }
}

TEST_CASE("to_level4 depth 2 all-real coefficients for even bars") {
    auto terms = to_level4(TWord::parse("-1,-1"));
    REQUIRE(terms.size() == 4);
    for (const auto& t : terms) {
        CHECK(t.coef.im.is_zero());
        CHECK(t.coef.re.abs() == Rational(1, 4));
    }
}
