#ifndef TORIC_CRITERIA_HPP
#define TORIC_CRITERIA_HPP

#include <string>
#include <vector>

#include "toric/linalg.hpp"
#include "toric/projection.hpp"

namespace toric {

/// x_i * (head - tail) for every rule and every i in [-n,n]\{0}, kept when
/// the shifted support stays inside B^x (and inside the degree bound).
std::vector<LaurentPoly> prolongation_polys(const Projection& pi,
                                            std::vector<std::string>* provenance = nullptr);

/// x_i f - x_j g over pairs of rules whose shifted heads coincide
/// (x_i head(f) = x_j head(g), i < j).  Heads cancel, so the support
/// automatically lies in B^x.
std::vector<LaurentPoly> commutation_polys(const Projection& pi,
                                           std::vector<std::string>* provenance = nullptr);

struct CriterionReport {
    bool passed = true;
    std::vector<std::string> witnesses;
};

/// Operator form: X_i X_j = X_j X_i and X_i X_{-i} = Id on the basis
/// monomials of delta <= d - 2 (all of B when unbounded and finite).
CriterionReport check_condition1(const Projection& pi);

/// Projection form: every prolongation and commutation polynomial projects
/// to zero.
CriterionReport check_condition3(const Projection& pi);

/// Basis monomials the operator check ranges over.  Throws InfiniteQuotient
/// if an unbounded projection has an infinite region.
std::vector<Monomial> condition_domain(const Projection& pi);

/// Rank of span{ m * f : f in gens, support of m*f inside Ball(d) } with m
/// ranging over Laurent monomials.
int span_rank_up_to(const std::vector<LaurentPoly>& gens, int d);

} // namespace toric

#endif
