#ifndef MTV_EVAL_ENV_HPP
#define MTV_EVAL_ENV_HPP

#include <map>
#include <optional>

#include "mtv/bigreal.hpp"
#include "mtv/symbolic.hpp"

namespace mtv {

// Numeric environment: caches for every constant in the alphabet up to a
// fixed zeta/beta index, plus an optional numeric assignment for V.
// Caches are built once at construction (at P + 32 guard bits) and are
// read-only afterwards, so an EvalEnv may be shared across threads.
class EvalEnv {
public:
    explicit EvalEnv(mpfr_prec_t P, std::optional<BigReal> v_value = std::nullopt,
                     int max_index = 33);

    mpfr_prec_t prec() const { return prec_; }

    // Cached value; throws std::out_of_range for symbols outside the cache
    // (including V when no assignment was given).
    const BigReal& value_of(const ConstSymbol& s) const;

    // sum of coef * prod(symbol values); absolute error is bounded by
    // (term count) * 2^(-P+2).
    BigReal eval(const SymbolicValue& v) const;

private:
    mpfr_prec_t prec_;
    mpfr_prec_t work_;
    std::map<ConstSymbol, BigReal> cache_;
};

}  // namespace mtv

#endif
