#ifndef TORIC_REGION_HPP
#define TORIC_REGION_HPP

#include <optional>
#include <set>
#include <vector>

#include "toric/monomial.hpp"

namespace toric {

using MonoSet = std::set<Monomial, MonoLess>;

/// The cone ((apex)): monomial multiples of the apex in its sign quadrant.
struct Cone {
    Monomial apex;
    bool contains(const Monomial& m) const { return apex.cone_contains(m); }
};

/// A possibly infinite monomial set represented as a finite union of cone
/// differences.  Carved cones are attached per positive cone so that union
/// components can be carved independently.
class MonomialRegion {
public:
    struct Piece {
        Cone positive;
        std::vector<Cone> carved;
    };

    /// ((1)): all Laurent monomials.
    static MonomialRegion full(int nvars);

    int nvars() const { return n_; }
    const std::vector<Piece>& pieces() const { return pieces_; }

    bool contains(const Monomial& m) const;
    /// m in B^x, i.e. m or one of its variable translates lies in B.
    bool in_prolongation(const Monomial& m) const;

    /// B \ ((m)).  Throws WouldEmptyRegion for m = 1.
    MonomialRegion remove_cone(const Monomial& m) const;

    /// B with the single monomial m adjoined, stored as a degenerate cone
    /// carved at all its same-quadrant neighbors.
    MonomialRegion add_monomial(const Monomial& m) const;

    /// { m in B : delta(m) <= d }, in the deterministic monomial order.
    std::vector<Monomial> truncate(int d) const;

    /// All members when the region is finite, detected by truncation
    /// stabilization (valid for regions connected to 1, which have no degree
    /// gaps); nullopt once the cap is passed without stabilizing.
    std::optional<std::vector<Monomial>> finite_list(int degree_cap = 64) const;

private:
    explicit MonomialRegion(int nvars) : n_(nvars) {}

    int n_ = 0;
    std::vector<Piece> pieces_;
};

/// Enumerates Ball(k) = { m : delta(m) <= k }, sorted.
std::vector<Monomial> ball(int nvars, int k);
/// Closed-form cross-polytope lattice-point count of |Ball(k)|.
long long ball_count(int nvars, int k);

/// S union all its variable translates.
MonoSet prolong(const MonoSet& s, int nvars);
/// prolong(S) \ S.
MonoSet border(const MonoSet& s, int nvars);

bool is_connected_to_one(const MonoSet& s, int nvars);

/// delta_B over a finite base set: the least k with m in S^[k], computed by
/// iterated prolongation with per-session memoization.
class DeltaB {
public:
    DeltaB(MonoSet base, int nvars, int iteration_bound = 64)
        : nvars_(nvars), bound_(iteration_bound) {
        layers_.push_back(std::move(base));
    }

    /// Throws IterationBoundExceeded if m is not reached within the bound.
    int operator()(const Monomial& m);

private:
    int nvars_;
    int bound_;
    std::vector<MonoSet> layers_;
};

} // namespace toric

#endif
