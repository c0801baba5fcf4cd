#include <mpfr.h>

#include <random>

#include "doctest.h"
#include "mtv/special.hpp"

using namespace mtv;

namespace {

BigReal tol(long bits) { return BigReal(1, 64).mul_2exp(-bits); }

// Independent route: MPFR's own digamma.
BigReal mpfr_digamma_ref(const BigReal& x, mpfr_prec_t P) {
    BigReal r(P);
    mpfr_digamma(r.raw_mut(), x.raw(), MPFR_RNDN);
    return r;
}

}  // namespace

TEST_CASE("digamma anchors") {
    const mpfr_prec_t P = 256;
    // psi(1) = -gamma
    auto psi1 = digamma(BigReal(1, P), P);
    CHECK((psi1 + BigReal::euler_gamma(P)).abs() < tol(250));
    // psi(1/2) = -gamma - 2 log 2
    auto psih = digamma(Rational(1, 2), P);
    auto expect = -BigReal::euler_gamma(P) - BigReal(2, P) * BigReal::log2(P);
    CHECK((psih - expect).abs() < tol(250));
    CHECK(psi1.to_double() == doctest::Approx(-0.5772156649015329).epsilon(1e-14));
    CHECK_THROWS(digamma(BigReal(0, P), P));
    CHECK_THROWS(digamma(BigReal(-3, P), P));
}

TEST_CASE("digamma agrees with mpfr's implementation") {
    const mpfr_prec_t P = 256;
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> dist(0.05, 20.0);
    for (int i = 0; i < 25; ++i) {
        BigReal x = BigReal::from_double(dist(rng), P);
        auto mine = digamma(x, P);
        auto ref = mpfr_digamma_ref(x, P);
        CHECK((mine - ref).abs() < tol(248));
    }
    // negative non-integer arguments
    auto m = digamma(BigReal::from_double(-2.3, P), P);
    auto r = mpfr_digamma_ref(BigReal::from_double(-2.3, P), P);
    CHECK((m - r).abs() < tol(245));
}

TEST_CASE("digamma recurrence at z = 7/3") {
    const mpfr_prec_t P = 256;
    BigReal z(Rational(7, 3), P);
    auto lhs = digamma(z + BigReal(1, P), P) - digamma(z, P);
    auto rhs = BigReal(1, P) / z;
    CHECK((lhs - rhs).abs() < tol(248));
}

TEST_CASE("digamma reflection at z = 0.3") {
    const mpfr_prec_t P = 256;
    BigReal z = BigReal::from_double(0.3, P);
    auto pi = BigReal::pi(P + 64);
    auto resid = digamma(-z, P) - digamma(z, P) - BigReal(1, P) / z -
                 pi * (pi * z.round_to(P + 64)).cot();
    CHECK(resid.abs() < tol(240));
}

TEST_CASE("digamma duplication on random arguments") {
    const mpfr_prec_t P = 256;
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> dist(0.02, 5.0);
    for (int i = 0; i < 100; ++i) {
        BigReal z = BigReal::from_double(dist(rng), P);
        auto lhs = digamma(z + z, P);
        auto rhs = (digamma(z + BigReal(Rational(1, 2), P), P) + digamma(z, P)) /
                       BigReal(2, P) +
                   BigReal::log2(P);
        CHECK((lhs - rhs).abs() < tol(240));
    }
}

TEST_CASE("zeta anchors") {
    const mpfr_prec_t P = 256;
    auto z2 = zeta_int(2, P);
    auto pi = BigReal::pi(P);
    CHECK((z2 - pi * pi / BigReal(6, P)).abs() < tol(250));
    CHECK(zeta_int(3, P).to_double() == doctest::Approx(1.2020569031595943).epsilon(1e-14));
    CHECK_THROWS(zeta_int(1, P));
    // odd-part identity: sum over odd n of 1/n^2 = (1 - 2^-2) zeta(2) = pi^2/8
    auto t2 = (BigReal(1, P) - BigReal(Rational(1, 4), P)) * z2;
    CHECK((t2 - pi * pi / BigReal(8, P)).abs() < tol(248));
}

TEST_CASE("zeta agrees with mpfr across a range") {
    const mpfr_prec_t P = 320;
    for (int n : {2, 3, 4, 5, 7, 9, 13, 21, 33}) {
        auto mine = zeta_int(n, P);
        BigReal ref(P);
        mpfr_zeta_ui(ref.raw_mut(), static_cast<unsigned long>(n), MPFR_RNDN);
        CHECK((mine - ref).abs() < tol(314));
    }
}

TEST_CASE("beta anchors") {
    const mpfr_prec_t P = 256;
    auto pi = BigReal::pi(P);
    CHECK((beta_int(1, P) - pi / BigReal(4, P)).abs() < tol(250));
    CHECK((beta_int(2, P) - BigReal::catalan(P)).abs() < tol(250));
    CHECK(beta_int(2, P).to_double() == doctest::Approx(0.9159655941772190).epsilon(1e-14));
    CHECK((beta_int(3, P) - pi.pow_si(3) / BigReal(32, P)).abs() < tol(248));
    CHECK_THROWS(beta_int(0, P));
}

TEST_CASE("A and C vanish at zero and have the right parity") {
    const mpfr_prec_t P = 256;
    CHECK(A_num(BigReal(0, P), P).abs() < tol(250));
    CHECK(C_num(BigReal(0, P), P).abs() < tol(250));
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> dist(-0.75, 0.75);
    for (int i = 0; i < 20; ++i) {
        BigReal z = BigReal::from_double(dist(rng), P);
        CHECK((A_num(-z, P) - A_num(z, P)).abs() < tol(240));
        CHECK((C_num(-z, P) + C_num(z, P)).abs() < tol(240));
    }
}

TEST_CASE("A matches its zeta series on |z| <= 3/4") {
    const mpfr_prec_t P = 256;
    const int R = 220;
    for (double zd : {0.5, 0.75, -0.3}) {
        BigReal z = BigReal::from_double(zd, P);
        BigReal acc(0, P);
        BigReal z2 = z * z;
        BigReal zp = z2;
        for (int r = 1; r <= R; ++r) {
            acc += zeta_int(2 * r + 1, P) * zp;
            zp *= z2;
        }
        // geometric tail bound from the spec'd estimate
        BigReal bound = zeta_int(3, P) * z.abs().pow_si(2 * R + 2) /
                        (BigReal(1, P) - z * z);
        auto diff = (A_num(z, P) - acc).abs();
        CHECK(diff <= bound + tol(240));
    }
}

TEST_CASE("C matches its beta series on |z| <= 3/4") {
    const mpfr_prec_t P = 256;
    const int R = 220;
    for (double zd : {0.5, 0.75}) {
        BigReal z = BigReal::from_double(zd, P);
        BigReal acc(0, P);
        BigReal z2 = z * z;
        BigReal zp = z;
        for (int r = 1; r <= R; ++r) {
            acc += beta_int(2 * r, P) * zp;
            zp *= z2;
        }
        BigReal bound = z.abs().pow_si(2 * R + 1) / (BigReal(1, P) - z * z);
        auto diff = (C_num(z, P) - acc).abs();
        CHECK(diff <= bound + tol(240));
    }
}
