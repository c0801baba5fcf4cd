#ifndef MTV_GENFUN_HPP
#define MTV_GENFUN_HPP

#include <functional>
#include <vector>

#include "mtv/symbolic.hpp"
#include "mtv/tword.hpp"

namespace mtv {

// Truncated bivariate power series in x, y with SymbolicValue coefficients.
// All coefficients with a+b <= order are kept; arithmetic is exact and
// closed at that order.
class BiSeries {
public:
    explicit BiSeries(int order);

    int order() const { return order_; }
    const SymbolicValue& at(int a, int b) const;
    void set(int a, int b, SymbolicValue v);

    BiSeries& operator+=(const BiSeries& o);
    friend BiSeries operator+(BiSeries a, const BiSeries& b) { a += b; return a; }
    friend BiSeries operator-(BiSeries a, const BiSeries& b);
    friend BiSeries operator*(const BiSeries& a, const BiSeries& b);
    BiSeries scaled(const Rational& c) const;

    friend bool operator==(const BiSeries& a, const BiSeries& b) {
        return a.order_ == b.order_ && a.c_ == b.c_;
    }

    // sum_m f(m) x^m  (or y^m)
    static BiSeries from_x_series(const std::vector<SymbolicValue>& f, int order);
    static BiSeries from_y_series(const std::vector<SymbolicValue>& f, int order);
    // sum_j g(j) (x + sign_y * y)^j, expanded binomially
    static BiSeries from_xy_series(const std::vector<SymbolicValue>& g, int sign_y, int order);

private:
    int order_;
    std::vector<std::vector<SymbolicValue>> c_;
};

// Taylor coefficients of cos(pi t/4) + sin(pi t/4) up to t^order:
// coefficient of t^m is (-1)^floor(m/2) (pi/4)^m / m!.
std::vector<SymbolicValue> trig_series(int order);

enum class ACKind { A, C };

// Coefficients of A(w/denom) = sum zeta(2r+1) (w/denom)^{2r} or
// C(w/denom) = sum beta(2r) (w/denom)^{2r-1} as univariate series in w.
std::vector<SymbolicValue> ac_series(ACKind kind, int denom, int order);

// The generating series F^V(x, y) of (-1)^(a+b) t^{*,V}({1bar}^a,1,{1bar}^b)
// assembled from its closed form; V stays symbolic.  Every coefficient is
// gamma-free by construction.
BiSeries build_FV(int order);

// Explicit evaluation of t^{*,V}({1bar}^a,1,{1bar}^b) as a closed-form sum
// over zeta/beta columns plus boundary delta terms; independent of the
// BiSeries route (build_FV), which is what the master-identity test checks.
SymbolicValue closed_form_t(int a, int b);

// [x^a y^b] (sum_i f(i) x^i)(sum_j g(j) (x+y)^j)
//   = sum_{n=0}^{a+b} binom(n, b) g(n) f(a+b-n)
SymbolicValue extract_coeff(const std::function<SymbolicValue(int)>& f,
                            const std::function<SymbolicValue(int)>& g, int a, int b);

// Exact symbolic value of the words with known closed forms: the empty word,
// depth-1 words, {1bar}^m, and ({1bar}^a, 1, {1bar}^b) (V symbolic for the
// divergent b = 0 shapes).  Throws std::domain_error for anything else.
SymbolicValue exact_t_value(const TWord& w);

// Linear extension over a formal sum (regularised coefficients may carry V).
SymbolicValue exact_eval(const FormalWordSum& s);

}  // namespace mtv

#endif
