#include "toric/solver.hpp"

#include <algorithm>
#include <sstream>

#include "toric/linalg.hpp"

namespace toric {

std::string TraceEvent::json() const {
    std::ostringstream os;
    os << "{\"k\":" << k << ",\"c1\":" << c1_count << ",\"matrix_shape\":[" << rows << ","
       << cols << "],\"rank\":" << rank << ",\"added_to_B\":" << added_to_B
       << ",\"removed_cones\":" << removed_cones << ",\"c2\":" << c2_count << ",\"note\":\""
       << note << "\"}";
    return os.str();
}

Projection SolverResult::projection() const {
    Projection pi(region, std::nullopt);
    for (const RewriteRule& r : rules) pi.add_rule(r.head, r.tail);
    return pi;
}

int default_degree_ceiling(const std::vector<LaurentPoly>& inputs) {
    if (inputs.empty()) return 4;
    int n = inputs.front().nvars();
    long long product = 1;
    for (int v = 0; v < n; ++v) {
        int lo = 0, hi = 0;
        for (const LaurentPoly& f : inputs) {
            for (const auto& [m, c] : f.terms()) {
                lo = std::min(lo, m.exponent(v));
                hi = std::max(hi, m.exponent(v));
            }
        }
        product *= hi - lo + 1;
        if (product > 1000000) return 4000000; // clamp: ceiling only guards divergence
    }
    return static_cast<int>(std::min<long long>(4 * product, 4000000));
}

namespace {

std::vector<int> all_indices(int n) {
    std::vector<int> idx;
    for (int i = 1; i <= n; ++i) {
        idx.push_back(-i);
        idx.push_back(i);
    }
    return idx;
}

class Engine {
public:
    Engine(const std::vector<LaurentPoly>& inputs, const SolverConfig& cfg)
        : cfg_(cfg), gamma_(cfg.choice), B_(MonomialRegion::full(0)) {
        if (inputs.empty()) fail(ErrorCode::NoInput, "the input system is empty");
        n_ = inputs.front().nvars();
        for (const LaurentPoly& f : inputs) {
            if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "zero polynomial in the input");
            max_input_degree_ = std::max(max_input_degree_, f.degree());
            for (const auto& [m, c] : f.terms()) {
                if (c.prime() != 0) prime_ = c.prime();
            }
        }
        one_ = Scalar::one(prime_);
        B_ = MonomialRegion::full(n_);
        pool_ = inputs;
        ceiling_ = cfg.max_degree >= 0 ? cfg.max_degree : default_degree_ceiling(inputs);
    }

    SolverResult run() {
        initialize();
        int turns = 0;
        while (!unit_ && !aborted_) {
            if (k_ > ceiling_ || ++turns > cfg_.max_turns) {
                aborted_ = true;
                abort_reason_ = AbortReason::DegreeCeiling;
                break;
            }
            if (terminal()) break;
            turn();
        }
        return finalize();
    }

private:
    // --- small helpers -----------------------------------------------------

    std::vector<Monomial> sorted_desc(std::vector<Monomial> ms) const {
        std::sort(ms.begin(), ms.end(), [this](const Monomial& a, const Monomial& b) {
            return gamma_.prefers_less(b, a);
        });
        return ms;
    }

    bool in_prolongation_support(const LaurentPoly& p) const {
        for (const auto& [m, c] : p.terms()) {
            if (!B_.in_prolongation(m)) return false;
        }
        return true;
    }

    bool support_in_B(const LaurentPoly& p) const {
        for (const auto& [m, c] : p.terms()) {
            if (!B_.contains(m)) return false;
        }
        return true;
    }

    // Single simultaneous substitution of covered off-B monomials; active
    // rules keep their tails inside B, so one pass is a full reduction.
    LaurentPoly reduce_with_rules(const LaurentPoly& p) const {
        LaurentPoly out(n_);
        for (const auto& [m, c] : p.terms()) {
            if (!B_.contains(m)) {
                auto it = rules_.find(m);
                if (it != rules_.end()) {
                    out += it->second.scaled(c);
                    continue;
                }
            }
            out.add_term(m, c);
        }
        return out;
    }

    Projection projection(std::optional<int> bound) const {
        Projection pi(B_, bound);
        for (const auto& [h, t] : rules_) pi.add_rule(h, t);
        return pi;
    }

    // Uncovered monomials of B^x \ B of degree <= d, most preferred first.
    std::vector<Monomial> border_candidates(int d) const {
        MonoSet seen;
        std::vector<Monomial> out;
        for (const Monomial& m : B_.truncate(d + 1)) {
            for (int i : all_indices(n_)) {
                Monomial t = m * Monomial::variable(n_, i);
                if (t.degree() > d || B_.contains(t) || rules_.count(t)) continue;
                if (seen.insert(t).second) out.push_back(t);
            }
        }
        return sorted_desc(std::move(out));
    }

    // --- invariant repair after region changes -----------------------------

    // Re-establishes: every rule head lies in B^x \ B and every tail is
    // supported inside B.  Rules that cannot be repaired are demoted to the
    // pending pool (their polynomials stay ideal members).
    void sweep_rules() {
        for (int round = 0; round < 64; ++round) {
            bool progress = false;
            std::vector<Monomial> demote;
            for (auto& [h, t] : rules_) {
                if (B_.contains(h) || !B_.in_prolongation(h)) {
                    demote.push_back(h);
                    continue;
                }
                if (support_in_B(t)) continue;
                LaurentPoly fixed = reduce_with_rules(t);
                bool clean = support_in_B(fixed);
                bool degree_ok = fixed.is_zero() || fixed.degree() <= h.degree();
                if (clean && degree_ok) {
                    if (fixed != t) progress = true;
                    t = std::move(fixed);
                } else if (fixed != t) {
                    t = std::move(fixed);
                    progress = true;
                } else {
                    demote.push_back(h);
                }
            }
            for (const Monomial& h : demote) {
                auto it = rules_.find(h);
                if (it == rules_.end()) continue;
                pool_.push_back(LaurentPoly::term(h, one_) - it->second);
                rules_.erase(it);
                progress = true;
            }
            if (!progress) return;
        }
    }

    // --- absorbing ideal elements supported inside B -----------------------

    // Each row gets a gamma-leading cone carved out of B and becomes a rule.
    // Returns the number of cones removed; failures are pooled.
    int absorb(std::vector<LaurentPoly> rows) {
        std::sort(rows.begin(), rows.end(), [](const LaurentPoly& a, const LaurentPoly& b) {
            return a.degree() < b.degree();
        });
        int removed = 0;
        for (LaurentPoly& row : rows) {
            LaurentPoly p = reduce_with_rules(row);
            if (p.is_zero()) continue;
            if (!support_in_B(p)) {
                pool_.push_back(std::move(p));
                continue;
            }
            if (p.is_constant()) {
                unit_ = true;
                return removed;
            }
            Monomial gm = gamma_.choose(p);
            p = p.scaled(p.coeff(gm).inverse());
            MonomialRegion snapshot = B_;
            try {
                B_ = B_.remove_cone(gm);
            } catch (const Error& e) {
                if (e.code() == ErrorCode::WouldEmptyRegion) {
                    unit_ = true;
                    return removed;
                }
                throw;
            }
            if (!B_.in_prolongation(gm)) {
                B_ = std::move(snapshot);
                pool_.push_back(std::move(p));
                continue;
            }
            rules_[gm] = LaurentPoly::term(gm, one_) - p;
            ++removed;
            sweep_rules();
        }
        return removed;
    }

    // --- phases -------------------------------------------------------------

    void initialize() {
        for (int guard = 0; guard < cfg_.max_turns; ++guard) {
            int kmin = 0;
            bool first = true;
            for (const LaurentPoly& f : pool_) {
                int d = f.degree();
                if (first || d < kmin) kmin = d;
                first = false;
            }
            if (first) return; // empty pool: nothing to do
            k_ = kmin;

            std::vector<LaurentPoly> slice;
            std::vector<LaurentPoly> rest;
            for (LaurentPoly& f : pool_) {
                (f.degree() == k_ ? slice : rest).push_back(std::move(f));
            }
            pool_ = std::move(rest);

            MonoSet support;
            for (const LaurentPoly& f : slice) {
                for (const auto& [m, c] : f.terms()) support.insert(m);
            }
            CoeffMatrix m(sorted_desc({support.begin(), support.end()}), n_);
            for (const LaurentPoly& f : slice) m.add_row(f);
            EchelonResult e = echelon(m);

            TraceEvent ev;
            ev.k = k_;
            ev.c1_count = static_cast<int>(slice.size());
            ev.rows = static_cast<int>(m.row_count());
            ev.cols = static_cast<int>(m.col_count());
            ev.rank = e.rank;
            ev.note = "init";

            bool dropped = false;
            for (const LaurentPoly& row : e.rows) {
                if (row.is_constant()) {
                    unit_ = true;
                    trace_.push_back(ev);
                    return;
                }
                if (row.degree() < k_) dropped = true;
            }
            if (dropped) {
                for (const LaurentPoly& row : e.rows) pool_.push_back(row);
                trace_.push_back(ev);
                continue; // redo at the lower degree
            }
            ev.removed_cones = absorb(e.rows);
            trace_.push_back(ev);
            return;
        }
        aborted_ = true;
        abort_reason_ = AbortReason::DegreeCeiling;
    }

    bool terminal() const {
        if (!pool_.empty() || k_ < max_input_degree_) return false;
        for (const auto& [h, t] : rules_) {
            if (h.degree() >= k_) return false;
        }
        return true;
    }

    void turn() {
        TraceEvent ev;
        ev.k = k_;
        Projection pi = projection(k_ + 1);

        // prolongations of the degree-k rule slice; ones whose shifted head
        // is already covered are overlap relations handled after step 7
        std::vector<LaurentPoly> c1raw, c1rows, overlaps;
        for (const auto& [h, t] : rules_) {
            if (h.degree() != k_) continue;
            LaurentPoly f = LaurentPoly::term(h, one_) - t;
            for (int i : all_indices(n_)) {
                LaurentPoly g = f.shifted(Monomial::variable(n_, i));
                if (!in_prolongation_support(g)) continue;
                if (rules_.count(h * Monomial::variable(n_, i))) {
                    overlaps.push_back(std::move(g));
                    continue;
                }
                c1raw.push_back(g);
                LaurentPoly r = pi.project_partial(g);
                if (!r.is_zero()) c1rows.push_back(std::move(r));
            }
        }

        std::vector<Monomial> candidates = border_candidates(k_ + 1);
        std::vector<Monomial> columns = candidates;
        {
            std::vector<Monomial> bcols = sorted_desc(B_.truncate(k_ + 1));
            columns.insert(columns.end(), bcols.begin(), bcols.end());
        }
        CoeffMatrix m(columns, n_);
        for (const LaurentPoly& r : c1rows) m.add_row(r);
        EchelonResult e = echelon(m);
        ev.c1_count = static_cast<int>(c1rows.size());
        ev.rows = static_cast<int>(m.row_count());
        ev.cols = static_cast<int>(m.col_count());
        ev.rank = e.rank;

        std::vector<LaurentPoly> rule_rows, low_residues, high_residues;
        std::vector<Monomial> pivot_heads;
        MonoSet pivoted;
        for (std::size_t r = 0; r < e.rows.size(); ++r) {
            if (e.pivot_column_indices[r] < static_cast<int>(candidates.size())) {
                rule_rows.push_back(e.rows[r]);
                pivot_heads.push_back(e.pivot_columns[r]);
                pivoted.insert(e.pivot_columns[r]);
            } else if (e.rows[r].degree() <= k_) {
                low_residues.push_back(e.rows[r]);
            } else {
                high_residues.push_back(e.rows[r]);
            }
        }

        // degree drop: absorb in-B span members below k+1 and restart lower
        if (!low_residues.empty()) {
            int kmin = low_residues.front().degree();
            for (const LaurentPoly& p : low_residues) kmin = std::min(kmin, p.degree());
            ev.removed_cones = absorb(std::move(low_residues));
            ev.note = "drop";
            trace_.push_back(ev);
            if (!unit_) k_ = std::min(k_, std::max(1, kmin));
            return;
        }

        // rank-deficiency repair: unpivoted candidates join B
        for (const Monomial& c : candidates) {
            if (!pivoted.count(c)) {
                B_ = B_.add_monomial(c);
                ++ev.added_to_B;
            }
        }

        // new rules from candidate-pivot rows
        for (std::size_t r = 0; r < rule_rows.size(); ++r) {
            const Monomial& head = pivot_heads[r];
            rules_[head] = LaurentPoly::term(head, one_) - rule_rows[r];
        }
        if (ev.added_to_B > 0) sweep_rules();
        pi = projection(k_ + 1);

        // extension consistency: the raw prolongations must now project to 0
        for (const LaurentPoly& g : c1raw) {
            try {
                if (!pi.project(g).is_zero()) pool_.push_back(g);
            } catch (const Error&) {
                pool_.push_back(g);
            }
        }

        // second stage: overlap relations, commutation pairs, pending inputs
        std::vector<LaurentPoly> residues2 = std::move(high_residues);
        for (const LaurentPoly& g : overlaps) {
            try {
                LaurentPoly r = pi.project(g);
                if (!r.is_zero()) residues2.push_back(std::move(r));
            } catch (const Error&) {
                pool_.push_back(g);
            }
        }
        for (const auto& [h1, t1] : rules_) {
            if (h1.degree() > k_) continue;
            for (int i : all_indices(n_)) {
                Monomial shifted = h1 * Monomial::variable(n_, i);
                for (int j : all_indices(n_)) {
                    if (j <= i) continue;
                    Monomial h2 = shifted / Monomial::variable(n_, j);
                    auto it = rules_.find(h2);
                    if (it == rules_.end() || h2.degree() > k_) continue;
                    LaurentPoly f1 = LaurentPoly::term(h1, one_) - t1;
                    LaurentPoly f2 = LaurentPoly::term(h2, one_) - it->second;
                    LaurentPoly p = f1.shifted(Monomial::variable(n_, i)) -
                                    f2.shifted(Monomial::variable(n_, j));
                    if (p.is_zero()) continue;
                    try {
                        LaurentPoly r = pi.project(p);
                        if (!r.is_zero()) residues2.push_back(std::move(r));
                    } catch (const Error&) {
                        pool_.push_back(p);
                    }
                }
            }
        }
        {
            NormalForm nf(pi);
            std::vector<LaurentPoly> keep;
            for (LaurentPoly& p : pool_) {
                if (p.degree() > k_ + 1) {
                    keep.push_back(std::move(p));
                    continue;
                }
                std::optional<LaurentPoly> r = nf.try_sigma(p);
                if (!r) {
                    keep.push_back(std::move(p));
                    continue;
                }
                if (!r->is_zero()) residues2.push_back(std::move(*r));
            }
            pool_ = std::move(keep);
        }
        ev.c2_count = static_cast<int>(residues2.size());

        if (residues2.empty()) {
            k_ += 1;
            trace_.push_back(ev);
            return;
        }

        // inter-reduce the residues and carve their leading cones
        MonoSet support;
        for (const LaurentPoly& p : residues2) {
            for (const auto& [mm, c] : p.terms()) support.insert(mm);
        }
        CoeffMatrix m2(sorted_desc({support.begin(), support.end()}), n_);
        for (const LaurentPoly& p : residues2) m2.add_row(p);
        EchelonResult e2 = echelon(m2);
        int kmin = k_ + 1;
        for (const LaurentPoly& row : e2.rows) kmin = std::min(kmin, row.degree());
        ev.removed_cones = absorb(e2.rows);
        trace_.push_back(ev);
        if (unit_) return;
        if (kmin <= k_) k_ = std::max(1, kmin);
    }

    SolverResult finalize() {
        SolverResult res;
        res.nvars = n_;
        res.prime = prime_;
        res.trace = trace_;
        res.region = B_;
        if (unit_) {
            res.outcome = Outcome::UnitIdeal;
            return res;
        }
        if (aborted_) {
            res.outcome = Outcome::Aborted;
            res.reason = abort_reason_;
            return res;
        }
        auto members = B_.finite_list(std::max(ceiling_ + 2, 8));
        if (!members) {
            res.outcome = Outcome::Aborted;
            res.reason = AbortReason::InfiniteRegion;
            return res;
        }
        res.basis = *members;
        MonoSet bs(res.basis.begin(), res.basis.end());
        MonoSet bd = border(bs, n_);
        bool covered = true;
        for (const Monomial& b : bd) {
            if (!rules_.count(b)) covered = false;
        }
        if (!covered || rules_.size() != bd.size()) {
            res.outcome = Outcome::Aborted;
            res.reason = AbortReason::CertificateFailure;
            return res;
        }
        int dmax = 0;
        for (const auto& [h, t] : rules_) {
            res.rules.push_back(RewriteRule{h, t});
            dmax = std::max(dmax, h.degree());
        }
        res.final_degree = std::max(k_, dmax + 1);
        Projection pi = res.projection();
        res.certificate_operators = check_condition1(pi);
        res.certificate_projections = check_condition3(pi);
        if (!res.certificate_operators.passed || !res.certificate_projections.passed) {
            res.outcome = Outcome::Aborted;
            res.reason = AbortReason::CertificateFailure;
            return res;
        }
        res.outcome = Outcome::BorderBasis;
        return res;
    }

    int n_ = 0;
    std::uint64_t prime_ = 0;
    Scalar one_ = Scalar::from_int(1);
    SolverConfig cfg_;
    ChoiceFunction gamma_;
    MonomialRegion B_;
    std::map<Monomial, LaurentPoly, MonoLess> rules_;
    std::vector<LaurentPoly> pool_;
    int k_ = 1;
    int max_input_degree_ = 0;
    int ceiling_ = 4;
    bool unit_ = false;
    bool aborted_ = false;
    AbortReason abort_reason_ = AbortReason::None;
    std::vector<TraceEvent> trace_;
};

} // namespace

SolverResult solve(const std::vector<LaurentPoly>& inputs, const SolverConfig& config) {
    Engine engine(inputs, config);
    return engine.run();
}

} // namespace toric
