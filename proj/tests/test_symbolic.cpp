#include "doctest.h"
#include "mtv/eval_env.hpp"
#include "mtv/symbolic.hpp"

using namespace mtv;

TEST_CASE("ring operations are canonical") {
    auto v = SymbolicValue::symbol(ConstSymbol::v());
    auto half_v = Rational(1, 2) * v;
    CHECK(half_v + half_v == v);
    auto v2 = v * v;
    CHECK(v2 == SymbolicValue::monomial({ConstSymbol::v(), ConstSymbol::v()}, Rational(1)));
    CHECK((v - v).is_zero());
}

TEST_CASE("half V^2 minus pi^2/16 stores two monomials") {
    auto v = SymbolicValue::symbol(ConstSymbol::v());
    auto val = Rational(1, 2) * (v * v) +
               SymbolicValue::monomial({ConstSymbol::pi(), ConstSymbol::pi()}, Rational(-1, 16));
    CHECK(val.term_count() == 2);
    CHECK(val.coefficient({ConstSymbol::v(), ConstSymbol::v()}) == Rational(1, 2));
    CHECK(val.coefficient({ConstSymbol::pi(), ConstSymbol::pi()}) == Rational(-1, 16));
}

TEST_CASE("even zeta and odd beta reduce to pi powers") {
    // zeta(2) = pi^2/6, zeta(4) = pi^4/90, zeta(6) = pi^6/945
    CHECK(SymbolicValue::zeta(2) ==
          SymbolicValue::monomial(Monomial(2, ConstSymbol::pi()), Rational(1, 6)));
    CHECK(SymbolicValue::zeta(4) ==
          SymbolicValue::monomial(Monomial(4, ConstSymbol::pi()), Rational(1, 90)));
    CHECK(SymbolicValue::zeta(6) ==
          SymbolicValue::monomial(Monomial(6, ConstSymbol::pi()), Rational(1, 945)));
    // beta(1) = pi/4, beta(3) = pi^3/32, beta(5) = 5 pi^5 / 1536
    CHECK(SymbolicValue::beta(1) ==
          SymbolicValue::monomial(Monomial(1, ConstSymbol::pi()), Rational(1, 4)));
    CHECK(SymbolicValue::beta(3) ==
          SymbolicValue::monomial(Monomial(3, ConstSymbol::pi()), Rational(1, 32)));
    CHECK(SymbolicValue::beta(5) ==
          SymbolicValue::monomial(Monomial(5, ConstSymbol::pi()), Rational(5, 1536)));
    // odd zeta and even beta stay symbolic
    CHECK(SymbolicValue::zeta(3) == SymbolicValue::symbol(ConstSymbol::zeta(3)));
    CHECK(SymbolicValue::beta(2) == SymbolicValue::symbol(ConstSymbol::beta(2)));
    CHECK_THROWS(ConstSymbol::zeta(4));
    CHECK_THROWS(ConstSymbol::beta(3));
}

TEST_CASE("weight") {
    auto v = SymbolicValue::symbol(ConstSymbol::v());
    auto pi2 = SymbolicValue::monomial(Monomial(2, ConstSymbol::pi()), Rational(1));
    auto w = (Rational(1, 2) * (v * v) - Rational(1, 16) * pi2).weight();
    CHECK(w.kind == Weight::Homogeneous);
    CHECK(w.value == 2);
    auto mixed = (v + pi2).weight();
    CHECK(mixed.kind == Weight::Inhomogeneous);
    CHECK(SymbolicValue::zero().weight().kind == Weight::Any);
    auto z9 = SymbolicValue::zeta(9).weight();
    CHECK(z9.kind == Weight::Homogeneous);
    CHECK(z9.value == 9);
}

TEST_CASE("V substitution") {
    auto v = SymbolicValue::symbol(ConstSymbol::v());
    auto val = v * v + Rational(3) * v + SymbolicValue::constant(Rational(1));
    auto sub = val.subst_v_log2(Rational(1, 2));
    // (1/2 log2)^2 + 3*(1/2 log2) + 1
    auto expect = SymbolicValue::monomial(Monomial(2, ConstSymbol::log2()), Rational(1, 4)) +
                  SymbolicValue::symbol(ConstSymbol::log2(), Rational(3, 2)) +
                  SymbolicValue::constant(Rational(1));
    CHECK(sub == expect);
    CHECK(!sub.has_symbol(SymKind::V));
}

TEST_CASE("gamma detection") {
    auto g = SymbolicValue::symbol(ConstSymbol::euler_gamma());
    CHECK(!g.gamma_free());
    CHECK(SymbolicValue::zeta(3).gamma_free());
}

TEST_CASE("rendering") {
    auto val = SymbolicValue::symbol(ConstSymbol::beta(2), Rational(1, 2)) +
               SymbolicValue::monomial({ConstSymbol::pi(), ConstSymbol::log2()}, Rational(-1, 8));
    auto s = val.str();
    CHECK(s.find("1/2*Beta(2)") != std::string::npos);
    CHECK(s.find("1/8*Pi*Log2") != std::string::npos);
    CHECK(SymbolicValue::zero().str() == "0");
}

TEST_CASE("sym_eval") {
    EvalEnv env(256);
    // pi^2/8 = 1.2337005501...
    auto pi2_8 = SymbolicValue::monomial(Monomial(2, ConstSymbol::pi()), Rational(1, 8));
    auto x = env.eval(pi2_8);
    CHECK(x.to_double() == doctest::Approx(1.2337005501361697).epsilon(1e-14));

    CHECK(env.eval(SymbolicValue::zero()).is_zero());

    // eval is a ring homomorphism up to rounding
    auto a = SymbolicValue::zeta(3) + SymbolicValue::beta(2);
    auto b = SymbolicValue::monomial({ConstSymbol::pi(), ConstSymbol::log2()}, Rational(2, 3));
    auto lhs = env.eval(a * b);
    auto rhs = env.eval(a) * env.eval(b);
    CHECK((lhs - rhs).abs() < mtv::BigReal(1, 64).mul_2exp(-240));

    // missing symbol: V not assigned
    CHECK_THROWS(env.eval(SymbolicValue::symbol(ConstSymbol::v())));
    EvalEnv env_v(256, mtv::BigReal(2, 256));
    CHECK(env_v.eval(SymbolicValue::symbol(ConstSymbol::v())).to_double() ==
          doctest::Approx(2.0));
}

TEST_CASE("raising precision refines previously reported digits") {
    EvalEnv lo(128), hi(192);
    auto val = Rational(1, 2) * SymbolicValue::beta(2) +
               SymbolicValue::monomial({ConstSymbol::pi(), ConstSymbol::log2()}, Rational(-1, 8));
    auto x = lo.eval(val);
    auto y = hi.eval(val);
    CHECK((x.round_to(192) - y).abs() < mtv::BigReal(1, 64).mul_2exp(-120));
    CHECK(y.to_double() == doctest::Approx(0.18578453582).epsilon(1e-10));
}
