#include "toric/emit.hpp"

#include <sstream>

#include "json.hpp"
#include "toric/syzygy.hpp"

namespace toric {

namespace {

using nlohmann::json;

const char* outcome_name(Outcome o) {
    switch (o) {
        case Outcome::BorderBasis: return "border-basis";
        case Outcome::UnitIdeal: return "unit-ideal";
        default: return "aborted";
    }
}

const char* reason_name(AbortReason r) {
    switch (r) {
        case AbortReason::DegreeCeiling: return "degree-ceiling";
        case AbortReason::CertificateFailure: return "certificate-failure";
        case AbortReason::InfiniteRegion: return "infinite-region";
        default: return "none";
    }
}

std::vector<int> all_indices(int n) {
    std::vector<int> idx;
    for (int i = 1; i <= n; ++i) {
        idx.push_back(-i);
        idx.push_back(i);
    }
    return idx;
}

struct SyzygyRecord {
    std::string kind;
    int i = 0, j = 0;
    Monomial argument;
    SyzygyElement element;
};

std::vector<SyzygyRecord> collect_syzygies(const SolverResult& res, const Projection& pi) {
    std::vector<SyzygyRecord> out;
    int n = res.nvars;
    std::vector<int> idx = all_indices(n);
    for (const Monomial& m : res.basis) {
        for (std::size_t a = 0; a < idx.size(); ++a) {
            for (std::size_t b = a + 1; b < idx.size(); ++b) {
                SyzygyElement e = make_phi(pi, idx[a], idx[b], m);
                if (!e.is_zero()) {
                    out.push_back({"phi", idx[a], idx[b], m, std::move(e)});
                }
            }
        }
        for (int i = 1; i <= n; ++i) {
            SyzygyElement e = make_rho(pi, i, m);
            if (!e.is_zero()) out.push_back({"rho", i, 0, m, std::move(e)});
        }
    }
    return out;
}

json element_json(const SyzygyElement& e) {
    json terms = json::array();
    for (const auto& [key, c] : e.terms()) {
        terms.push_back({{"coeff", c.str()},
                         {"multiplier", key.multiplier.str()},
                         {"slot", key.slot},
                         {"base", key.base.str()}});
    }
    return terms;
}

void require_finite(const SolverResult& res) {
    if (res.outcome != Outcome::BorderBasis) {
        fail(ErrorCode::InfiniteQuotient,
             "multiplication matrices need a finite quotient basis");
    }
}

} // namespace

std::vector<std::vector<Scalar>> multiplication_matrix(const SolverResult& res, int i) {
    require_finite(res);
    Projection pi = res.projection();
    Scalar one = Scalar::one(res.prime);
    std::size_t dim = res.basis.size();
    std::vector<std::vector<Scalar>> m(dim, std::vector<Scalar>(dim, Scalar::zero(res.prime)));
    for (std::size_t c = 0; c < dim; ++c) {
        LaurentPoly img = pi.mult_operator(i, LaurentPoly::term(res.basis[c], one));
        for (std::size_t r = 0; r < dim; ++r) m[r][c] = img.coeff(res.basis[r]);
    }
    return m;
}

std::string emit_result(const SolverResult& res, const EmitRequest& req) {
    bool solved = res.outcome == Outcome::BorderBasis;
    auto want = [&](const char* s) { return req.sections.count(s) != 0; };

    if (req.json) {
        json doc;
        doc["outcome"] = outcome_name(res.outcome);
        doc["reason"] = reason_name(res.reason);
        doc["nvars"] = res.nvars;
        doc["prime"] = res.prime;
        doc["final_degree"] = res.final_degree;
        if (res.outcome == Outcome::UnitIdeal) doc["note"] = "1 generates the ideal";
        if (want("basis") && solved) {
            json rules = json::array();
            for (const RewriteRule& r : res.rules) {
                rules.push_back({{"head", r.head.str()},
                                 {"tail", r.tail.str()},
                                 {"poly", r.poly().str()}});
            }
            doc["basis"] = std::move(rules);
        }
        if (want("quotient") && solved) {
            json q = json::array();
            for (const Monomial& m : res.basis) q.push_back(m.str());
            doc["quotient"] = std::move(q);
        }
        if (want("matrices")) {
            require_finite(res);
            json mats;
            for (int i : all_indices(res.nvars)) {
                json rows = json::array();
                for (const auto& row : multiplication_matrix(res, i)) {
                    json r = json::array();
                    for (const Scalar& c : row) r.push_back(c.str());
                    rows.push_back(std::move(r));
                }
                mats[std::to_string(i)] = std::move(rows);
            }
            doc["matrices"] = std::move(mats);
        }
        if (want("syzygies") && solved) {
            Projection pi = res.projection();
            json gens = json::array();
            for (const SyzygyRecord& s : collect_syzygies(res, pi)) {
                json g = {{"kind", s.kind},
                          {"i", s.i},
                          {"argument", s.argument.str()},
                          {"terms", element_json(s.element)}};
                if (s.kind == "phi") g["j"] = s.j;
                gens.push_back(std::move(g));
            }
            doc["syzygies"] = std::move(gens);
        }
        if (want("trace")) {
            json tr = json::array();
            for (const TraceEvent& ev : res.trace) tr.push_back(json::parse(ev.json()));
            doc["trace"] = std::move(tr);
        }
        return doc.dump(2) + "\n";
    }

    std::ostringstream os;
    os << "outcome: " << outcome_name(res.outcome) << "\n";
    if (res.outcome == Outcome::Aborted) os << "reason: " << reason_name(res.reason) << "\n";
    if (res.outcome == Outcome::UnitIdeal) os << "note: 1 generates the ideal\n";
    os << "field: " << (res.prime == 0 ? "Q" : "GF(" + std::to_string(res.prime) + ")")
       << "\nvariables: " << res.nvars << "\n";
    if (solved) os << "final degree: " << res.final_degree << "\n";
    if (want("basis") && solved) {
        os << "\n[basis] " << res.rules.size() << " rules\n";
        for (const RewriteRule& r : res.rules) os << r.poly().str() << "\n";
    }
    if (want("quotient") && solved) {
        os << "\n[quotient] dimension " << res.basis.size() << "\n";
        for (const Monomial& m : res.basis) os << m.str() << "\n";
    }
    if (want("matrices")) {
        require_finite(res);
        for (int i : all_indices(res.nvars)) {
            os << "\n[matrix X" << i << "]\n";
            for (const auto& row : multiplication_matrix(res, i)) {
                for (std::size_t c = 0; c < row.size(); ++c) {
                    os << (c ? " " : "") << row[c].str();
                }
                os << "\n";
            }
        }
    }
    if (want("syzygies") && solved) {
        Projection pi = res.projection();
        std::vector<SyzygyRecord> gens = collect_syzygies(res, pi);
        os << "\n[syzygies] " << gens.size() << " nonzero generators\n";
        for (const SyzygyRecord& s : gens) {
            os << s.kind << "_" << s.i;
            if (s.kind == "phi") os << "," << s.j;
            os << "(" << s.argument.str() << ") = " << s.element.str() << "\n";
        }
    }
    if (want("trace")) {
        os << "\n[trace]\n";
        for (const TraceEvent& ev : res.trace) os << ev.json() << "\n";
    }
    return os.str();
}

} // namespace toric
