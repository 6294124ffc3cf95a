#ifndef TORIC_POLY_HPP
#define TORIC_POLY_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "toric/monomial.hpp"
#include "toric/scalar.hpp"

namespace toric {

/// Finite association exponent-vector -> nonzero scalar.  Terms are kept in
/// the deterministic monomial order; zero coefficients are never stored.
class LaurentPoly {
public:
    using TermMap = std::map<Monomial, Scalar, MonoLess>;

    LaurentPoly() = default;
    explicit LaurentPoly(int nvars) : n_(nvars) {}

    static LaurentPoly zero(int nvars) { return LaurentPoly(nvars); }
    static LaurentPoly term(const Monomial& m, const Scalar& c);
    static LaurentPoly constant(int nvars, const Scalar& c) {
        return term(Monomial::one(nvars), c);
    }

    int nvars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// delta of the polynomial; rejects the zero polynomial.
    int degree() const;

    bool is_constant() const {
        return terms_.size() == 1 && terms_.begin()->first.is_one();
    }

    Scalar coeff(const Monomial& m) const;
    std::vector<Monomial> support() const;

    void add_term(const Monomial& m, const Scalar& c);

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly scaled(const Scalar& c) const;
    LaurentPoly shifted(const Monomial& m) const; // multiplication by a monomial

    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }

    bool operator==(const LaurentPoly& o) const;
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    /// Text form "3*x1^2*x2^-1 - 1/2 + x2^2"; terms in decreasing order.
    std::string str() const;

private:
    int n_ = 0;
    TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

} // namespace toric

#endif
