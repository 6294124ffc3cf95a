#include "toric/choice.hpp"

#include <algorithm>

namespace toric {

ChoiceFunction ChoiceFunction::parse(const std::string& name) {
    if (name == "macaulay") return ChoiceFunction(ChoiceStrategy::macaulay);
    if (name == "lexmax") return ChoiceFunction(ChoiceStrategy::lexmax);
    fail(ErrorCode::ParseError, "unknown choice function '" + name + "'");
}

bool ChoiceFunction::prefers_less(const Monomial& a, const Monomial& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    if (strategy_ == ChoiceStrategy::macaulay) {
        // highest partial degree first, then the most positive mass: this
        // spreads the carved cones across distinct variables before falling
        // back to inverse directions
        int pa = a.max_partial_degree(), pb = b.max_partial_degree();
        if (pa != pb) return pa < pb;
        int posa = 0, posb = 0;
        for (int e : a.exponents()) posa += std::max(e, 0);
        for (int e : b.exponents()) posb += std::max(e, 0);
        if (posa != posb) return posa < posb;
        return mono_less(a, b);
    }
    // lexmax: skip the partial-degree refinement, keep only the tie-break keys
    const auto& ea = a.exponents();
    const auto& eb = b.exponents();
    for (std::size_t i = 0; i < ea.size(); ++i) {
        int ma = std::abs(ea[i]), mb = std::abs(eb[i]);
        if (ma != mb) return ma < mb;
        int sa = ea[i] > 0 ? 1 : 0, sb = eb[i] > 0 ? 1 : 0;
        if (sa != sb) return sa < sb;
    }
    return false;
}

Monomial ChoiceFunction::choose(const LaurentPoly& f) const {
    if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "choice function on the zero polynomial");
    const Monomial* best = nullptr;
    for (const auto& [m, c] : f.terms()) {
        if (!best || prefers_less(*best, m)) best = &m;
    }
    return *best;
}

} // namespace toric
