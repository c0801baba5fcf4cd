#ifndef MTV_ORACLE_HPP
#define MTV_ORACLE_HPP

#include <stdexcept>
#include <vector>

#include "mtv/bigreal.hpp"
#include "mtv/tword.hpp"

namespace mtv {

// Truncation and acceleration policy for the brute-force sums.
//
// TailExpansion (the default) truncates every summation index at M and adds
// the exact multi-level tail: the value splits as
//   sum_j (partial sum of the first j letters up to M) * U_{suffix}(M),
// where each suffix tail U(M) is computed from its asymptotic expansion
// sum_chi chi^M * poly(1/M) over the fourth-root characters chi, with exact
// rational coefficients derived recursively (Euler-Maclaurin for chi = 1,
// the rotating first-difference recursion otherwise).  The reported bound
// estimates the first omitted expansion order.
//
// IteratedMean is the plain scheme: partial sums of the outermost index with
// repeated pairwise averaging; cheap but limited to ~1/M^2-ish accuracy at
// depth >= 2 because of the non-oscillating part of inner tails.
//
// None truncates and reports an integral/alternating tail bound.
struct SumPlan {
    enum class Accel { None, IteratedMean, TailExpansion };

    long truncation = 100000;    // M
    double tolerance = 1e-20;    // tau, absolute
    Accel accel = Accel::TailExpansion;
    int tail_order = 40;         // expansion order R for TailExpansion
    bool enforce_tolerance = true;

    static SumPlan fast() { return {20000, 1e-18, Accel::TailExpansion, 36, true}; }
};

struct ToleranceError : std::runtime_error {
    explicit ToleranceError(const std::string& msg, double achieved_)
        : std::runtime_error(msg), achieved(achieved_) {}
    double achieved;
};

struct OracleResult {
    BigReal value;
    BigReal error_bound;  // tail_bound plus rounding slack; checked against tau
    BigReal tail_bound;   // truncation part only; monotone non-increasing in M
    long terms_used = 0;
};

struct ComplexResult {
    BigReal re;
    BigReal im;
    BigReal error_bound;
    BigReal tail_bound;
    long terms_used = 0;
};

// t(w) for an admissible word, |result - t(w)| <= error_bound <= tau.
OracleResult t_num(const TWord& w, const SumPlan& plan, mpfr_prec_t P);

// Multivariable Ti at real arguments |z_i| <= 1 (nested sums with
// z_i^n / (2n-1)^k terms).  The outermost pair must converge: not
// (k_d = 1, z_d = 1).  Plain truncation with geometric/alternating/integral
// tail control; intended for cross-checks at moderate tolerance.
OracleResult ti_num(const std::vector<int>& ks, const std::vector<BigReal>& zs,
                    const SumPlan& plan, mpfr_prec_t P);

enum class GComponent { All, OddR, EvenR };

// G(x,y;z) via the product-sum representation, 0 < z < 1, |x|,|y| < 3.
// GComponent restricts to odd- or even-indexed r (the 3F2 split halves).
OracleResult g_num(const BigReal& x, const BigReal& y, const BigReal& z,
                   const SumPlan& plan, mpfr_prec_t P, GComponent comp = GComponent::All);

// Coloured MZV of level 4 at index (eta; k), eta_j = i^ipows[j]; the complex
// value of sum eta^n / n^k over 0 < n_1 < ... < n_d.
ComplexResult mzv4_num(const Mzv4Index& idx, const SumPlan& plan, mpfr_prec_t P);

}  // namespace mtv

#endif
