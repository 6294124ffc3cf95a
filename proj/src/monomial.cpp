#include "toric/monomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace toric {

Monomial Monomial::variable(int nvars, int i) {
    if (i == 0 || std::abs(i) > nvars) fail(ErrorCode::BadIndices, "variable index out of range");
    Monomial m(nvars);
    m.e_[static_cast<std::size_t>(std::abs(i) - 1)] = i > 0 ? 1 : -1;
    return m;
}

bool Monomial::is_one() const {
    return std::all_of(e_.begin(), e_.end(), [](int a) { return a == 0; });
}

int Monomial::degree() const {
    int d = 0;
    for (int a : e_) d += std::abs(a);
    return d;
}

int Monomial::max_partial_degree() const {
    int d = 0;
    for (int a : e_) d = std::max(d, std::abs(a));
    return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
    if (nvars() != o.nvars()) fail(ErrorCode::BadIndices, "variable count mismatch");
    Monomial m = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] += o.e_[i];
    return m;
}

Monomial Monomial::inverse() const {
    Monomial m = *this;
    for (int& a : m.e_) a = -a;
    return m;
}

std::vector<int> Monomial::canonical_factorization() const {
    std::vector<int> seq;
    seq.reserve(static_cast<std::size_t>(degree()));
    for (int v = 0; v < nvars(); ++v) {
        int a = e_[static_cast<std::size_t>(v)];
        int idx = a > 0 ? v + 1 : -(v + 1);
        for (int r = 0; r < std::abs(a); ++r) seq.push_back(idx);
    }
    return seq;
}

bool Monomial::cone_contains(const Monomial& m) const {
    if (nvars() != m.nvars()) return false;
    for (std::size_t i = 0; i < e_.size(); ++i) {
        int a = e_[i];
        if (a > 0 && m.e_[i] < a) return false;
        if (a < 0 && m.e_[i] > a) return false;
    }
    return true;
}

std::string Monomial::str() const {
    std::ostringstream os;
    bool any = false;
    for (int v = 0; v < nvars(); ++v) {
        int a = e_[static_cast<std::size_t>(v)];
        if (a == 0) continue;
        if (any) os << '*';
        os << 'x' << (v + 1);
        if (a != 1) os << '^' << a;
        any = true;
    }
    if (!any) os << '1';
    return os.str();
}

bool mono_less(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    int pa = a.max_partial_degree(), pb = b.max_partial_degree();
    if (pa != pb) return pa < pb;
    const auto& ea = a.exponents();
    const auto& eb = b.exponents();
    if (ea.size() != eb.size()) return ea.size() < eb.size();
    for (std::size_t i = 0; i < ea.size(); ++i) {
        int ma = std::abs(ea[i]), mb = std::abs(eb[i]);
        if (ma != mb) return ma < mb;
        int sa = ea[i] > 0 ? 1 : 0, sb = eb[i] > 0 ? 1 : 0;
        if (sa != sb) return sa < sb;
    }
    return false;
}

std::ostream& operator<<(std::ostream& os, const Monomial& m) { return os << m.str(); }

} // namespace toric
