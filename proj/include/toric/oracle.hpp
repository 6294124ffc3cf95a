#ifndef TORIC_ORACLE_HPP
#define TORIC_ORACLE_HPP

#include <optional>
#include <vector>

#include "toric/poly.hpp"

namespace toric {

// Brute-force reference model used only by tests: each inverse x_i^-1 is
// replaced by a fresh ordinary variable y_i together with the relation
// x_i y_i - 1 = 0, and everything is answered by a textbook Buchberger
// computation over the 2n-variable polynomial ring.  Deliberately shares no
// code with the engine beyond field arithmetic.  D only scales the effort
// budget; answers, when produced, are exact.

/// Standard-monomial count of the doubled system; nullopt when the quotient
/// is infinite or the effort budget runs out.
std::optional<int> oracle_quotient_dim(const std::vector<LaurentPoly>& inputs, int D);

/// Whether p lies in the Laurent ideal, via normal form against the doubled
/// system; nullopt when the effort budget runs out.
std::optional<bool> oracle_membership(const std::vector<LaurentPoly>& inputs,
                                      const LaurentPoly& p, int D);

/// Membership for many polynomials against one shared basis.
std::optional<std::vector<bool>> oracle_membership_batch(
    const std::vector<LaurentPoly>& inputs, const std::vector<LaurentPoly>& polys, int D);

} // namespace toric

#endif
