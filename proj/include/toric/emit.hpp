#ifndef TORIC_EMIT_HPP
#define TORIC_EMIT_HPP

#include <set>
#include <string>
#include <vector>

#include "toric/solver.hpp"

namespace toric {

struct EmitRequest {
    std::set<std::string> sections{"basis"}; // basis quotient matrices syzygies trace
    bool json = false;
};

/// Matrix of the multiplication operator X_i on <B>, column c holding the
/// coordinates of X_i(basis[c]) in the basis order of the result.
/// Requires a BorderBasis outcome (finite B); throws InfiniteQuotient.
std::vector<std::vector<Scalar>> multiplication_matrix(const SolverResult& res, int i);

std::string emit_result(const SolverResult& res, const EmitRequest& req);

} // namespace toric

#endif
