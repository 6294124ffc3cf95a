#ifndef TORIC_CHOICE_HPP
#define TORIC_CHOICE_HPP

#include <string>

#include "toric/poly.hpp"

namespace toric {

enum class ChoiceStrategy { macaulay, lexmax };

/// Deterministic selector of an extremal support monomial, refining delta.
/// macaulay prefers, among extremal monomials, the ones of highest partial
/// degree; lexmax goes straight to the tie-break order.
class ChoiceFunction {
public:
    explicit ChoiceFunction(ChoiceStrategy strategy = ChoiceStrategy::macaulay)
        : strategy_(strategy) {}

    static ChoiceFunction parse(const std::string& name);

    ChoiceStrategy strategy() const { return strategy_; }

    /// Strict order; the chosen monomial is the maximum under it.
    bool prefers_less(const Monomial& a, const Monomial& b) const;

    Monomial choose(const LaurentPoly& f) const; // throws ZeroPolynomial

private:
    ChoiceStrategy strategy_;
};

} // namespace toric

#endif
