#include "toric/criteria.hpp"

#include <algorithm>
#include <sstream>

namespace toric {

namespace {

std::vector<int> all_indices(int n) {
    std::vector<int> idx;
    for (int i = 1; i <= n; ++i) {
        idx.push_back(-i);
        idx.push_back(i);
    }
    return idx;
}

bool within_bound(const LaurentPoly& p, std::optional<int> bound) {
    if (!bound || p.is_zero()) return true;
    return p.degree() <= *bound;
}

// the pools are drawn from F_{<= d-1} when the projection is bounded by d
bool head_in_scope(const Monomial& head, std::optional<int> bound) {
    return !bound || head.degree() <= *bound - 1;
}

} // namespace

std::vector<LaurentPoly> prolongation_polys(const Projection& pi,
                                            std::vector<std::string>* provenance) {
    int n = pi.nvars();
    std::vector<LaurentPoly> out;
    for (const auto& [head, tail] : pi.rules()) {
        if (!head_in_scope(head, pi.degree_bound())) continue;
        LaurentPoly f = LaurentPoly::term(head, Scalar::from_int(1)) - tail;
        for (int i : all_indices(n)) {
            LaurentPoly shifted = f.shifted(Monomial::variable(n, i));
            if (!within_bound(shifted, pi.degree_bound())) continue;
            bool in_domain = true;
            for (const auto& [m, c] : shifted.terms()) {
                if (!pi.region().in_prolongation(m)) {
                    in_domain = false;
                    break;
                }
            }
            if (!in_domain) continue;
            out.push_back(std::move(shifted));
            if (provenance) {
                std::ostringstream os;
                os << "x" << i << " * rule(" << head.str() << ")";
                provenance->push_back(os.str());
            }
        }
    }
    return out;
}

std::vector<LaurentPoly> commutation_polys(const Projection& pi,
                                           std::vector<std::string>* provenance) {
    int n = pi.nvars();
    std::vector<LaurentPoly> out;
    const auto& rules = pi.rules();
    for (const auto& [head_f, tail_f] : rules) {
        if (!head_in_scope(head_f, pi.degree_bound())) continue;
        for (int i : all_indices(n)) {
            Monomial shifted_head = head_f * Monomial::variable(n, i);
            for (int j : all_indices(n)) {
                if (j <= i) continue;
                Monomial head_g = shifted_head / Monomial::variable(n, j);
                auto it = rules.find(head_g);
                if (it == rules.end() || !head_in_scope(head_g, pi.degree_bound())) continue;
                LaurentPoly f = LaurentPoly::term(head_f, Scalar::from_int(1)) - tail_f;
                LaurentPoly g = LaurentPoly::term(head_g, Scalar::from_int(1)) - it->second;
                LaurentPoly p = f.shifted(Monomial::variable(n, i)) -
                                g.shifted(Monomial::variable(n, j));
                if (!within_bound(p, pi.degree_bound())) continue;
                out.push_back(std::move(p));
                if (provenance) {
                    std::ostringstream os;
                    os << "x" << i << " * rule(" << head_f.str() << ") - x" << j
                       << " * rule(" << head_g.str() << ")";
                    provenance->push_back(os.str());
                }
            }
        }
    }
    return out;
}

std::vector<Monomial> condition_domain(const Projection& pi) {
    if (pi.degree_bound()) {
        int d = *pi.degree_bound();
        if (d < 2) return {};
        return pi.region().truncate(d - 2);
    }
    auto members = pi.region().finite_list();
    if (!members) {
        fail(ErrorCode::InfiniteQuotient,
             "operator check over an unbounded projection needs a finite region");
    }
    return *members;
}

CriterionReport check_condition1(const Projection& pi) {
    CriterionReport report;
    int n = pi.nvars();
    std::vector<int> idx = all_indices(n);
    for (const Monomial& m : condition_domain(pi)) {
        LaurentPoly pm = LaurentPoly::term(m, Scalar::from_int(1));
        try {
            for (int i = 1; i <= n; ++i) {
                if (pi.mult_operator(i, pi.mult_operator(-i, pm)) != pm ||
                    pi.mult_operator(-i, pi.mult_operator(i, pm)) != pm) {
                    report.passed = false;
                    report.witnesses.push_back("X" + std::to_string(i) + " X" +
                                               std::to_string(-i) + " != Id at " + m.str());
                }
            }
            for (std::size_t a = 0; a < idx.size(); ++a) {
                for (std::size_t b = a + 1; b < idx.size(); ++b) {
                    int i = idx[a], j = idx[b];
                    if (pi.mult_operator(i, pi.mult_operator(j, pm)) !=
                        pi.mult_operator(j, pi.mult_operator(i, pm))) {
                        report.passed = false;
                        report.witnesses.push_back("X" + std::to_string(i) + " X" +
                                                   std::to_string(j) +
                                                   " does not commute at " + m.str());
                    }
                }
            }
        } catch (const Error& e) {
            report.passed = false;
            report.witnesses.push_back(std::string("operator undefined at ") + m.str() +
                                       ": " + e.what());
        }
    }
    return report;
}

CriterionReport check_condition3(const Projection& pi) {
    CriterionReport report;
    std::vector<std::string> prov;
    std::vector<LaurentPoly> polys = prolongation_polys(pi, &prov);
    {
        std::vector<LaurentPoly> comm = commutation_polys(pi, &prov);
        polys.insert(polys.end(), comm.begin(), comm.end());
    }
    for (std::size_t k = 0; k < polys.size(); ++k) {
        try {
            LaurentPoly r = pi.project(polys[k]);
            if (!r.is_zero()) {
                report.passed = false;
                report.witnesses.push_back(prov[k] + " projects to " + r.str());
            }
        } catch (const Error& e) {
            report.passed = false;
            report.witnesses.push_back(prov[k] + " not projectable: " + e.what());
        }
    }
    return report;
}

int span_rank_up_to(const std::vector<LaurentPoly>& gens, int d) {
    if (gens.empty()) return 0;
    int n = gens.front().nvars();
    std::vector<Monomial> columns = ball(n, d);
    // high-degree-first column order, for determinism only; rank is invariant
    std::reverse(columns.begin(), columns.end());
    CoeffMatrix m(columns, n);
    for (const LaurentPoly& f : gens) {
        for (const Monomial& mult : ball(n, d)) {
            LaurentPoly shifted = f.shifted(mult);
            if (shifted.degree() > d) continue;
            m.add_row(shifted);
        }
    }
    return echelon(m).rank;
}

} // namespace toric
