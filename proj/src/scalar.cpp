#include "toric/scalar.hpp"

#include <ostream>

namespace toric {

namespace {

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
    // extended Euclid on (a, p), p prime
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) fail(ErrorCode::DivisionByZero, "element has no inverse mod " + std::to_string(p));
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

} // namespace

Scalar Scalar::gf(std::uint64_t p, long long v) {
    Scalar s;
    s.p_ = p;
    long long m = v % static_cast<long long>(p);
    if (m < 0) m += static_cast<long long>(p);
    s.r_ = static_cast<std::uint64_t>(m);
    return s;
}

std::uint64_t Scalar::join(const Scalar& a, const Scalar& b) {
    if (a.p_ == b.p_) return a.p_;
    if (a.p_ == 0) return b.p_;
    if (b.p_ == 0) return a.p_;
    fail(ErrorCode::FieldMismatch, "elements of distinct prime fields");
}

Scalar Scalar::in_field(std::uint64_t p) const {
    if (p == 0 || p_ == p) return *this;
    if (p_ != 0) fail(ErrorCode::FieldMismatch, "elements of distinct prime fields");
    boost::multiprecision::cpp_int num = boost::multiprecision::numerator(q_) % p;
    boost::multiprecision::cpp_int den = boost::multiprecision::denominator(q_) % p;
    if (num < 0) num += p;
    if (den < 0) den += p;
    return gf(p, static_cast<long long>(num)) / gf(p, static_cast<long long>(den));
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    if (p_ == 0) {
        s.q_ = -q_;
    } else {
        s.r_ = r_ == 0 ? 0 : p_ - r_;
    }
    return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
    std::uint64_t p = join(*this, o);
    if (p == 0) return from_rational(q_ + o.q_);
    Scalar s;
    s.p_ = p;
    std::uint64_t a = in_field(p).r_, b = o.in_field(p).r_;
    s.r_ = a + b >= p ? a + b - p : a + b;
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    std::uint64_t p = join(*this, o);
    if (p == 0) return from_rational(q_ * o.q_);
    Scalar s;
    s.p_ = p;
    s.r_ = mod_mul(in_field(p).r_, o.in_field(p).r_, p);
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::inverse() const {
    if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero");
    if (p_ == 0) return from_rational(Rational(1) / q_);
    Scalar s;
    s.p_ = p_;
    s.r_ = mod_inv(r_, p_);
    return s;
}

bool Scalar::operator==(const Scalar& o) const {
    if (p_ != 0 && o.p_ != 0 && p_ != o.p_) return false;
    std::uint64_t p = join(*this, o);
    if (p == 0) return q_ == o.q_;
    return in_field(p).r_ == o.in_field(p).r_;
}

std::string Scalar::str() const {
    if (p_ == 0) return q_.str();
    return std::to_string(r_);
}

Scalar Scalar::parse(const std::string& text, std::uint64_t p) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            boost::multiprecision::cpp_int v(text);
            if (p == 0) return from_rational(Rational(v));
            boost::multiprecision::cpp_int m = v % p;
            if (m < 0) m += p;
            return gf(p, static_cast<long long>(m));
        }
        boost::multiprecision::cpp_int num(text.substr(0, slash));
        boost::multiprecision::cpp_int den(text.substr(slash + 1));
        if (den == 0) fail(ErrorCode::DivisionByZero, "zero denominator in '" + text + "'");
        if (p == 0) return from_rational(Rational(num, den));
        boost::multiprecision::cpp_int mn = num % p, md = den % p;
        if (mn < 0) mn += p;
        if (md < 0) md += p;
        return gf(p, static_cast<long long>(mn)) / gf(p, static_cast<long long>(md));
    } catch (const std::exception& e) {
        if (dynamic_cast<const Error*>(&e)) throw;
        fail(ErrorCode::ParseError, "bad scalar literal '" + text + "'");
    }
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

bool is_prime_u64(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull}) {
        if (p == d) return true;
        if (p % d == 0) return false;
    }
    for (std::uint64_t d = 11; d * d <= p; d += 2) {
        if (p % d == 0) return false;
    }
    return true;
}

} // namespace toric
