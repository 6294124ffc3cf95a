#ifndef TORIC_PROJECTION_HPP
#define TORIC_PROJECTION_HPP

#include <map>
#include <optional>
#include <vector>

#include "toric/poly.hpp"
#include "toric/region.hpp"

namespace toric {

/// One rewriting rule: the border monomial `head` is replaced by `tail`,
/// a polynomial supported inside B with delta(tail) <= delta(head).
struct RewriteRule {
    Monomial head;
    LaurentPoly tail;

    /// head - tail, the ideal generator the rule encodes.
    LaurentPoly poly() const { return LaurentPoly::term(head, Scalar::from_int(1)) - tail; }
};

/// The linear projection pi onto <B> determined by a rewriting family: each
/// border monomial covered by a rule is replaced by its tail, monomials of B
/// pass through.  An optional degree bound restricts the domain to
/// <B^x>_{<= d}; without it the family must cover the whole border.
class Projection {
public:
    Projection(MonomialRegion region, std::optional<int> degree_bound)
        : region_(std::move(region)), bound_(degree_bound) {}

    int nvars() const { return region_.nvars(); }
    const MonomialRegion& region() const { return region_; }
    std::optional<int> degree_bound() const { return bound_; }
    const std::map<Monomial, LaurentPoly, MonoLess>& rules() const { return rules_; }

    /// Installs a rule.  Rejects duplicate heads, heads inside B, tails with
    /// support off B, and tails of larger delta than the head.
    void add_rule(const Monomial& head, const LaurentPoly& tail);
    void extend(const Projection& other); // merges other's rules

    bool covers(const Monomial& border_monomial) const {
        return rules_.count(border_monomial) > 0;
    }

    /// pi(p).  Throws DegreeBound past the bound, OutsideDomain on support
    /// off B^x or on an uncovered border monomial.  One substitution pass is
    /// exact because tails are supported inside B.
    LaurentPoly project(const LaurentPoly& p) const;

    /// Like project, but monomials that cannot be handled (uncovered border,
    /// outside B^x, past the bound) are passed through unchanged.
    LaurentPoly project_partial(const LaurentPoly& p) const;

    /// X_i(b) = pi(x_i b) for b supported inside B, i in [-n,n]\{0}.
    LaurentPoly mult_operator(int i, const LaurentPoly& b) const;

private:
    MonomialRegion region_;
    std::optional<int> bound_;
    std::map<Monomial, LaurentPoly, MonoLess> rules_;
};

/// Normal form sigma(p) = p(X)(1): every monomial is evaluated as a chain of
/// multiplication operators along its canonical factorization, smallest
/// variable index applied outermost.  Values are memoized per instance.
class NormalForm {
public:
    explicit NormalForm(const Projection& pi);

    const Projection& projection() const { return pi_; }

    LaurentPoly sigma(const Monomial& m);
    LaurentPoly sigma(const LaurentPoly& p);

    /// Same normal form attempt, but a stall (uncovered border monomial along
    /// the way) yields nullopt instead of an exception.
    std::optional<LaurentPoly> try_sigma(const LaurentPoly& p);

    /// Evaluation along the reversed factorization, for consistency checks;
    /// not memoized.
    LaurentPoly sigma_reversed(const Monomial& m) const;

private:
    const Projection& pi_;
    std::map<Monomial, LaurentPoly, MonoLess> memo_;
};

} // namespace toric

#endif
