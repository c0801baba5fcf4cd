#include "mtv/eval_env.hpp"

#include <stdexcept>

#include "mtv/special.hpp"

namespace mtv {

EvalEnv::EvalEnv(mpfr_prec_t P, std::optional<BigReal> v_value, int max_index)
    : prec_(P), work_(P + 32) {
    cache_.emplace(ConstSymbol::pi(), BigReal::pi(work_));
    cache_.emplace(ConstSymbol::log2(), BigReal::log2(work_));
    cache_.emplace(ConstSymbol::euler_gamma(), BigReal::euler_gamma(work_));
    for (int n = 3; n <= max_index; n += 2)
        cache_.emplace(ConstSymbol::zeta(n), zeta_int(n, work_));
    for (int n = 2; n <= max_index; n += 2)
        cache_.emplace(ConstSymbol::beta(n), beta_int(n, work_));
    if (v_value) cache_.emplace(ConstSymbol::v(), v_value->round_to(work_));
}

const BigReal& EvalEnv::value_of(const ConstSymbol& s) const {
    auto it = cache_.find(s);
    if (it == cache_.end())
        throw std::out_of_range("EvalEnv: no cached value for symbol " + s.name());
    return it->second;
}

BigReal EvalEnv::eval(const SymbolicValue& v) const {
    BigReal acc(0, work_);
    for (const auto& [mono, coef] : v.terms()) {
        BigReal term(coef, work_);
        for (const auto& sym : mono) term *= value_of(sym);
        acc += term;
    }
    return acc.round_to(prec_);
}

}  // namespace mtv
