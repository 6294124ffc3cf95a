#ifndef TORIC_SOLVER_HPP
#define TORIC_SOLVER_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toric/choice.hpp"
#include "toric/criteria.hpp"
#include "toric/projection.hpp"

namespace toric {

struct SolverConfig {
    std::uint64_t prime = 0; // 0 = rationals
    ChoiceStrategy choice = ChoiceStrategy::macaulay;
    int max_degree = -1; // -1: derive a ceiling from the input supports
    int max_turns = 20000;
};

/// One core-loop turn of the completion, as JSON-lines-able data.
struct TraceEvent {
    int k = 0;
    int c1_count = 0;       // rows of the prolongation matrix
    int rows = 0, cols = 0; // matrix shape
    int rank = 0;
    int added_to_B = 0;
    int removed_cones = 0;
    int c2_count = 0; // commutation/pending residues entering the second stage
    std::string note;

    std::string json() const;
};

enum class Outcome { BorderBasis, UnitIdeal, Aborted };
enum class AbortReason { None, DegreeCeiling, CertificateFailure, InfiniteRegion };

struct SolverResult {
    Outcome outcome = Outcome::Aborted;
    AbortReason reason = AbortReason::None;
    int nvars = 0;
    std::uint64_t prime = 0;

    MonomialRegion region = MonomialRegion::full(0);
    std::vector<Monomial> basis;     // members of B (finite on success)
    std::vector<RewriteRule> rules;  // F: one rule per border monomial
    int final_degree = 0;

    CriterionReport certificate_operators;   // commutation/inversion form
    CriterionReport certificate_projections; // projected-to-zero form

    std::vector<TraceEvent> trace;

    /// Unbounded projection rebuilt from region + rules (BorderBasis only).
    Projection projection() const;
};

SolverResult solve(const std::vector<LaurentPoly>& inputs, const SolverConfig& config);

/// Ceiling used when config.max_degree < 0: four times the product of the
/// per-variable exponent-range widths of the input supports.
int default_degree_ceiling(const std::vector<LaurentPoly>& inputs);

} // namespace toric

#endif
