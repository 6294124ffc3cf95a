#ifndef TORIC_SYZYGY_HPP
#define TORIC_SYZYGY_HPP

#include <string>
#include <vector>

#include "toric/projection.hpp"

namespace toric {

/// Index of a free-module generator Y_slot[base] scaled by a monomial
/// multiplier.  The degree of a term is the multiplier's delta.
struct SyzKey {
    int slot = 0;
    Monomial multiplier;
    Monomial base;

    bool operator<(const SyzKey& o) const {
        if (slot != o.slot) return slot < o.slot;
        if (multiplier != o.multiplier) return mono_less(multiplier, o.multiplier);
        return mono_less(base, o.base);
    }
    bool operator==(const SyzKey& o) const {
        return slot == o.slot && multiplier == o.multiplier && base == o.base;
    }
};

/// Element of the free module with basis Y_i[m], m in B, x_i m not in B.
/// Terms violating that convention are dropped at insertion (Y_i[m] = 0 when
/// x_i m lies in B); bases off B are rejected.
class SyzygyElement {
public:
    explicit SyzygyElement(int nvars) : n_(nvars) {}

    int nvars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<SyzKey, Scalar>& terms() const { return terms_; }

    /// Raw insertion (no convention check); zero coefficients vanish.
    void add_raw(const Scalar& c, const Monomial& multiplier, int slot, const Monomial& base);

    SyzygyElement operator+(const SyzygyElement& o) const;
    SyzygyElement operator-(const SyzygyElement& o) const;
    SyzygyElement operator-() const;
    SyzygyElement scaled(const Scalar& c) const;
    SyzygyElement shifted(const Monomial& m) const;

    bool operator==(const SyzygyElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const SyzygyElement& o) const { return !(*this == o); }

    std::string str() const;

private:
    int n_;
    std::map<SyzKey, Scalar> terms_;
};

/// c * multiplier * Y_slot[base] with the zero-convention applied.
/// Throws NotInB when the base lies off B.
SyzygyElement make_Y(const Projection& pi, const Scalar& c, const Monomial& multiplier,
                     int slot, const Monomial& base);

/// Linear extension over the argument polynomial (support must lie in B).
SyzygyElement make_Y(const Projection& pi, const Scalar& c, const Monomial& multiplier,
                     int slot, const LaurentPoly& arg);

/// psi_i(m) = x_i m - pi(x_i m); zero exactly when x_i m stays in B.
LaurentPoly psi(const Projection& pi, int i, const Monomial& m);

/// The boundary map: Y_i[m] -> psi_i(m), extended S-linearly.
LaurentPoly boundary(const Projection& pi, const SyzygyElement& s);

/// phi_{i,j}(m) = x_i Y_j[m] - x_j Y_i[m] - Y_j[X_i(m)] + Y_i[X_j(m)].
SyzygyElement make_phi(const Projection& pi, int i, int j, const Monomial& m);

/// rho_i(m) = x_i Y_{-i}[m] + Y_i[X_{-i}(m)].
SyzygyElement make_rho(const Projection& pi, int i, const Monomial& m);

/// Psi over an index sequence: sum over positions l of
/// x_{i_1}...x_{i_{l-1}} Y_{i_l}[X_{i_{l+1}}(...(X_{i_k}(1)))].
SyzygyElement make_Psi(const Projection& pi, const std::vector<int>& seq);

/// One consumed syzygy generator: coeff * multiplier * gen(argument), where
/// gen is phi_{i,j} or rho_i extended linearly over the argument.
struct GeneratorUse {
    enum class Kind { phi, rho };
    Kind kind = Kind::phi;
    int i = 0;
    int j = 0; // phi only
    Scalar coeff;
    Monomial multiplier;
    LaurentPoly argument;

    SyzygyElement element(const Projection& pi) const;
    std::string str() const;
};

/// Sorts a factorization sequence (by |index|, positive sign first) and
/// contracts adjacent inverse pairs, recording one generator use per move so
/// that Psi(seq) = Psi(result) + sum of the uses.
std::vector<int> canonicalize_sequence(const Projection& pi, std::vector<int> seq,
                                       std::vector<GeneratorUse>& uses);

/// The distinguished way to write w as multiplier * x_slot * base with base
/// in B and x_slot * base off B: minimal multiplier delta, then smallest
/// (slot, multiplier) lexicographically (slot as an integer, then the
/// monomial order).
SyzKey canonical_decomposition(const MonomialRegion& region, const Monomial& w);

struct ReductionResult {
    SyzygyElement canonical;
    std::vector<GeneratorUse> trail;

    ReductionResult(int nvars) : canonical(nvars) {}
};

/// Rewrites every term to its canonical decomposition modulo the module
/// generated by the phi and rho elements, returning the canonical form and
/// the generator multiples consumed; kernel elements of the boundary map
/// reduce to zero.  Throws ReductionBound past the iteration tripwire.
ReductionResult reduce_to_canonical(const Projection& pi, const SyzygyElement& s);

/// An index sequence for m whose suffix products all stay inside B
/// (exists whenever B is connected to 1); length delta(m).
std::vector<int> factorization_in_B(const MonomialRegion& region, const Monomial& m);

} // namespace toric

#endif
