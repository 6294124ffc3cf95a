#ifndef TORIC_SCALAR_HPP
#define TORIC_SCALAR_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "toric/errors.hpp"

namespace toric {

using Rational = boost::multiprecision::cpp_rational;

/// Exact field element: an arbitrary-precision rational (prime() == 0) or a
/// canonical representative of GF(p) in [0, p).  Rationals embed into GF(p)
/// when the fields mix (denominator reduced mod p, so 1/p-like values throw
/// DivisionByZero); GF(p) never mixes with GF(q).
class Scalar {
public:
    Scalar() = default; // zero, field-agnostic

    static Scalar from_rational(Rational v) {
        Scalar s;
        s.q_ = std::move(v);
        return s;
    }
    static Scalar from_int(long long v) { return from_rational(Rational(v)); }

    static Scalar gf(std::uint64_t p, long long v);
    static Scalar zero(std::uint64_t p) { return gf_or_q(p, 0); }
    static Scalar one(std::uint64_t p) { return gf_or_q(p, 1); }

    /// Field of this element; 0 means the rationals.
    std::uint64_t prime() const { return p_; }

    /// Image of this element in GF(p) (identity when p == 0 or already there).
    Scalar in_field(std::uint64_t p) const;

    bool is_zero() const { return p_ == 0 ? q_.is_zero() : r_ == 0; }
    bool is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1; }

    const Rational& rational() const { return q_; }
    std::uint64_t residue() const { return r_; }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const; // throws DivisionByZero
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// "a" or "a/b" over the rationals, the residue over GF(p).
    std::string str() const;

    /// Parses an integer or "a/b" literal in the given field (p == 0 for Q).
    static Scalar parse(const std::string& text, std::uint64_t p);

private:
    static Scalar gf_or_q(std::uint64_t p, long long v) {
        return p == 0 ? from_int(v) : gf(p, v);
    }
    // Resolves the common field of two operands, promoting exact zeros.
    static std::uint64_t join(const Scalar& a, const Scalar& b);

    Rational q_;
    std::uint64_t r_ = 0;
    std::uint64_t p_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

bool is_prime_u64(std::uint64_t p);

} // namespace toric

#endif
