#include "toric/poly.hpp"

#include <ostream>
#include <sstream>

namespace toric {

LaurentPoly LaurentPoly::term(const Monomial& m, const Scalar& c) {
    LaurentPoly p(m.nvars());
    p.add_term(m, c);
    return p;
}

int LaurentPoly::degree() const {
    if (terms_.empty()) fail(ErrorCode::ZeroPolynomial, "degree of the zero polynomial");
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

Scalar LaurentPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar() : it->second;
}

std::vector<Monomial> LaurentPoly::support() const {
    std::vector<Monomial> s;
    s.reserve(terms_.size());
    for (const auto& [m, c] : terms_) s.push_back(m);
    return s;
}

void LaurentPoly::add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    if (r.n_ == 0) r.n_ = o.n_;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(n_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r(n_ ? n_ : o.n_);
    for (const auto& [m1, c1] : terms_) {
        for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
    }
    return r;
}

LaurentPoly LaurentPoly::scaled(const Scalar& c) const {
    LaurentPoly r(n_);
    if (c.is_zero()) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

LaurentPoly LaurentPoly::shifted(const Monomial& m) const {
    LaurentPoly r(n_);
    for (const auto& [mm, c] : terms_) r.terms_.emplace(mm * m, c);
    return r;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt) {
        if (it->first != jt->first || it->second != jt->second) return false;
    }
    return true;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // decreasing order
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Monomial& m = it->first;
        Scalar c = it->second;
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (first) {
            if (neg) os << '-';
        } else {
            os << (neg ? " - " : " + ");
        }
        if (neg) cs = cs.substr(1);
        if (m.is_one()) {
            os << cs;
        } else if (cs == "1") {
            os << m.str();
        } else {
            os << cs << '*' << m.str();
        }
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.str(); }

} // namespace toric
