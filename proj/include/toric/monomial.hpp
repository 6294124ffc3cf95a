#ifndef TORIC_MONOMIAL_HPP
#define TORIC_MONOMIAL_HPP

#include <cstdlib>
#include <iosfwd>
#include <string>
#include <vector>

#include "toric/errors.hpp"

namespace toric {

/// A Laurent monomial x1^a1 ... xn^an, stored as a dense exponent vector.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(int nvars) : e_(static_cast<std::size_t>(nvars), 0) {}
    explicit Monomial(std::vector<int> exps) : e_(std::move(exps)) {}

    static Monomial one(int nvars) { return Monomial(nvars); }
    /// x_i for i in [-n,n]\{0}; negative i is the inverse variable.
    static Monomial variable(int nvars, int i);

    int nvars() const { return static_cast<int>(e_.size()); }
    int exponent(int var) const { return e_[static_cast<std::size_t>(var)]; }
    const std::vector<int>& exponents() const { return e_; }

    bool is_one() const;

    /// delta: the L1 norm of the exponent vector.
    int degree() const;
    /// max_i |a_i|
    int max_partial_degree() const;

    Monomial operator*(const Monomial& o) const;
    Monomial inverse() const;
    Monomial operator/(const Monomial& o) const { return *this * o.inverse(); }

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return e_ != o.e_; }

    /// Indices (i1,...,ik), |i1| <= ... <= |ik|, whose product is this
    /// monomial with k = degree().
    std::vector<int> canonical_factorization() const;

    /// Membership in the cone ((this)): same-quadrant dominance.
    bool cone_contains(const Monomial& m) const;

    std::string str() const; // "x1^2*x2^-1", "1" for the identity

private:
    std::vector<int> e_;
};

/// Deterministic total order on monomials: graded by delta, then by max
/// partial degree, then per-coordinate (|a_i|, sign) keys, x1 > x1^-1 > x2.
bool mono_less(const Monomial& a, const Monomial& b);

struct MonoLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return mono_less(a, b); }
};

std::ostream& operator<<(std::ostream& os, const Monomial& m);

} // namespace toric

#endif
