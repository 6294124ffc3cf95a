#include "toric/projection.hpp"

#include <algorithm>

namespace toric {

void Projection::add_rule(const Monomial& head, const LaurentPoly& tail) {
    if (region_.contains(head)) {
        fail(ErrorCode::OutsideDomain, "rule head " + head.str() + " lies inside B");
    }
    if (!region_.in_prolongation(head)) {
        fail(ErrorCode::OutsideDomain, "rule head " + head.str() + " lies off the border of B");
    }
    if (!tail.is_zero()) {
        if (tail.degree() > head.degree()) {
            fail(ErrorCode::DegreeBound,
                 "rule tail for " + head.str() + " exceeds the head degree");
        }
        for (const auto& [m, c] : tail.terms()) {
            if (!region_.contains(m)) {
                fail(ErrorCode::OutsideDomain,
                     "rule tail for " + head.str() + " has support off B: " + m.str());
            }
        }
    }
    auto [it, inserted] = rules_.emplace(head, tail);
    if (!inserted) fail(ErrorCode::DuplicateHead, "duplicate rule head " + head.str());
}

void Projection::extend(const Projection& other) {
    for (const auto& [head, tail] : other.rules_) add_rule(head, tail);
}

LaurentPoly Projection::project(const LaurentPoly& p) const {
    LaurentPoly out(nvars() > 0 ? nvars() : p.nvars());
    for (const auto& [m, c] : p.terms()) {
        if (bound_ && m.degree() > *bound_) {
            fail(ErrorCode::DegreeBound, "monomial " + m.str() + " exceeds the degree bound");
        }
        if (region_.contains(m)) {
            out.add_term(m, c);
            continue;
        }
        auto it = rules_.find(m);
        if (it == rules_.end()) {
            if (!region_.in_prolongation(m)) {
                fail(ErrorCode::OutsideDomain, "monomial " + m.str() + " lies outside B^x");
            }
            fail(ErrorCode::OutsideDomain, "uncovered border monomial " + m.str());
        }
        out += it->second.scaled(c);
    }
    return out;
}

LaurentPoly Projection::project_partial(const LaurentPoly& p) const {
    LaurentPoly out(nvars() > 0 ? nvars() : p.nvars());
    for (const auto& [m, c] : p.terms()) {
        if (region_.contains(m)) {
            out.add_term(m, c);
            continue;
        }
        auto it = rules_.find(m);
        if (it == rules_.end()) {
            out.add_term(m, c);
        } else {
            out += it->second.scaled(c);
        }
    }
    return out;
}

LaurentPoly Projection::mult_operator(int i, const LaurentPoly& b) const {
    for (const auto& [m, c] : b.terms()) {
        if (!region_.contains(m)) {
            fail(ErrorCode::OutsideDomain,
                 "multiplication operator applied off <B>: " + m.str());
        }
    }
    return project(b.shifted(Monomial::variable(nvars(), i)));
}

NormalForm::NormalForm(const Projection& pi) : pi_(pi) {
    int n = pi.nvars();
    memo_.emplace(Monomial::one(n), LaurentPoly::constant(n, Scalar::from_int(1)));
}

LaurentPoly NormalForm::sigma(const Monomial& m) {
    auto it = memo_.find(m);
    if (it != memo_.end()) return it->second;
    std::vector<int> factors = m.canonical_factorization();
    // sigma(x_{i1} * rest) = X_{i1}(sigma(rest)); peeling the smallest index
    // leaves exactly the canonical factorization of the rest.
    int i1 = factors.front();
    Monomial rest = m / Monomial::variable(m.nvars(), i1);
    LaurentPoly value = pi_.mult_operator(i1, sigma(rest));
    memo_.emplace(m, value);
    return value;
}

LaurentPoly NormalForm::sigma(const LaurentPoly& p) {
    LaurentPoly out(p.nvars());
    for (const auto& [m, c] : p.terms()) out += sigma(m).scaled(c);
    return out;
}

std::optional<LaurentPoly> NormalForm::try_sigma(const LaurentPoly& p) {
    try {
        return sigma(p);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::OutsideDomain || e.code() == ErrorCode::DegreeBound) {
            return std::nullopt;
        }
        throw;
    }
}

LaurentPoly NormalForm::sigma_reversed(const Monomial& m) const {
    std::vector<int> factors = m.canonical_factorization();
    LaurentPoly value = LaurentPoly::constant(m.nvars(), Scalar::from_int(1));
    for (int i : factors) value = pi_.mult_operator(i, value);
    return value;
}

} // namespace toric
