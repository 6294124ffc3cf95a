#include "toric/syzygy.hpp"

#include <algorithm>
#include <sstream>

namespace toric {

void SyzygyElement::add_raw(const Scalar& c, const Monomial& multiplier, int slot,
                            const Monomial& base) {
    if (c.is_zero()) return;
    SyzKey key{slot, multiplier, base};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

SyzygyElement SyzygyElement::operator+(const SyzygyElement& o) const {
    SyzygyElement out = *this;
    for (const auto& [k, c] : o.terms_) out.add_raw(c, k.multiplier, k.slot, k.base);
    return out;
}

SyzygyElement SyzygyElement::operator-(const SyzygyElement& o) const {
    SyzygyElement out = *this;
    for (const auto& [k, c] : o.terms_) out.add_raw(-c, k.multiplier, k.slot, k.base);
    return out;
}

SyzygyElement SyzygyElement::operator-() const {
    SyzygyElement out(n_);
    for (const auto& [k, c] : terms_) out.add_raw(-c, k.multiplier, k.slot, k.base);
    return out;
}

SyzygyElement SyzygyElement::scaled(const Scalar& c) const {
    SyzygyElement out(n_);
    for (const auto& [k, v] : terms_) out.add_raw(v * c, k.multiplier, k.slot, k.base);
    return out;
}

SyzygyElement SyzygyElement::shifted(const Monomial& m) const {
    SyzygyElement out(n_);
    for (const auto& [k, v] : terms_) out.add_raw(v, k.multiplier * m, k.slot, k.base);
    return out;
}

std::string SyzygyElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.str() << "*" << k.multiplier.str() << "*Y" << k.slot << "[" << k.base.str()
           << "]";
    }
    return os.str();
}

SyzygyElement make_Y(const Projection& pi, const Scalar& c, const Monomial& multiplier,
                     int slot, const Monomial& base) {
    int n = pi.nvars();
    SyzygyElement out(n);
    if (!pi.region().contains(base)) {
        fail(ErrorCode::NotInB, "Y base " + base.str() + " lies off B");
    }
    if (pi.region().contains(base * Monomial::variable(n, slot))) return out; // Y_i[m] = 0
    out.add_raw(c, multiplier, slot, base);
    return out;
}

SyzygyElement make_Y(const Projection& pi, const Scalar& c, const Monomial& multiplier,
                     int slot, const LaurentPoly& arg) {
    SyzygyElement out(pi.nvars());
    for (const auto& [m, v] : arg.terms()) {
        out = out + make_Y(pi, c * v, multiplier, slot, m);
    }
    return out;
}

LaurentPoly psi(const Projection& pi, int i, const Monomial& m) {
    if (!pi.region().contains(m)) fail(ErrorCode::NotInB, "psi base " + m.str() + " off B");
    LaurentPoly shifted =
        LaurentPoly::term(m * Monomial::variable(pi.nvars(), i), Scalar::from_int(1));
    return shifted - pi.project(shifted);
}

LaurentPoly boundary(const Projection& pi, const SyzygyElement& s) {
    LaurentPoly out(pi.nvars());
    for (const auto& [k, c] : s.terms()) {
        out += psi(pi, k.slot, k.base).shifted(k.multiplier).scaled(c);
    }
    return out;
}

SyzygyElement make_phi(const Projection& pi, int i, int j, const Monomial& m) {
    if (i == j || i == 0 || j == 0) fail(ErrorCode::BadIndices, "phi needs distinct indices");
    int n = pi.nvars();
    Scalar one = Scalar::from_int(1);
    LaurentPoly pm = LaurentPoly::term(m, one);
    SyzygyElement out = make_Y(pi, one, Monomial::variable(n, i), j, m) -
                        make_Y(pi, one, Monomial::variable(n, j), i, m) -
                        make_Y(pi, one, Monomial::one(n), j, pi.mult_operator(i, pm)) +
                        make_Y(pi, one, Monomial::one(n), i, pi.mult_operator(j, pm));
    return out;
}

SyzygyElement make_rho(const Projection& pi, int i, const Monomial& m) {
    if (i == 0) fail(ErrorCode::BadIndices, "rho needs a nonzero index");
    int n = pi.nvars();
    Scalar one = Scalar::from_int(1);
    LaurentPoly pm = LaurentPoly::term(m, one);
    return make_Y(pi, one, Monomial::variable(n, i), -i, m) +
           make_Y(pi, one, Monomial::one(n), i, pi.mult_operator(-i, pm));
}

namespace {

// X_{seq[from]} ( X_{seq[from+1]} ( ... (1) ) )
LaurentPoly chain_eval(const Projection& pi, const std::vector<int>& seq, std::size_t from) {
    LaurentPoly value = LaurentPoly::constant(pi.nvars(), Scalar::from_int(1));
    for (std::size_t l = seq.size(); l > from; --l) {
        value = pi.mult_operator(seq[l - 1], value);
    }
    return value;
}

Monomial prefix_product(int n, const std::vector<int>& seq, std::size_t upto) {
    Monomial m = Monomial::one(n);
    for (std::size_t l = 0; l < upto; ++l) m = m * Monomial::variable(n, seq[l]);
    return m;
}

// sort key: by |index|, positive before negative
bool index_out_of_order(int a, int b) {
    if (std::abs(a) != std::abs(b)) return std::abs(a) > std::abs(b);
    return a < 0 && b > 0;
}

} // namespace

SyzygyElement make_Psi(const Projection& pi, const std::vector<int>& seq) {
    int n = pi.nvars();
    SyzygyElement out(n);
    for (std::size_t l = 0; l < seq.size(); ++l) {
        out = out + make_Y(pi, Scalar::from_int(1), prefix_product(n, seq, l), seq[l],
                           chain_eval(pi, seq, l + 1));
    }
    return out;
}

SyzygyElement GeneratorUse::element(const Projection& pi) const {
    SyzygyElement out(pi.nvars());
    for (const auto& [m, c] : argument.terms()) {
        SyzygyElement gen = kind == Kind::phi ? make_phi(pi, i, j, m) : make_rho(pi, i, m);
        out = out + gen.scaled(c);
    }
    return out.shifted(multiplier).scaled(coeff);
}

std::string GeneratorUse::str() const {
    std::ostringstream os;
    os << coeff.str() << "*" << multiplier.str() << "*";
    if (kind == Kind::phi) {
        os << "phi_{" << i << "," << j << "}";
    } else {
        os << "rho_" << i;
    }
    os << "(" << argument.str() << ")";
    return os.str();
}

std::vector<int> canonicalize_sequence(const Projection& pi, std::vector<int> seq,
                                       std::vector<GeneratorUse>& uses) {
    int n = pi.nvars();
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t l = 0; l + 1 < seq.size(); ++l) {
            int a = seq[l], b = seq[l + 1];
            if (a == -b) {
                // Psi(..., a, -a, t...) = Psi(..., t...) + prefix * rho_a(sigma_t)
                GeneratorUse u;
                u.kind = GeneratorUse::Kind::rho;
                u.i = a;
                u.coeff = Scalar::from_int(1);
                u.multiplier = prefix_product(n, seq, l);
                u.argument = chain_eval(pi, seq, l + 2);
                uses.push_back(std::move(u));
                seq.erase(seq.begin() + static_cast<std::ptrdiff_t>(l),
                          seq.begin() + static_cast<std::ptrdiff_t>(l) + 2);
                changed = true;
                break;
            }
            if (index_out_of_order(a, b)) {
                // Psi(..., a, b, t...) = Psi(..., b, a, t...) + prefix * phi_{a,b}(sigma_t)
                GeneratorUse u;
                u.kind = GeneratorUse::Kind::phi;
                u.i = a;
                u.j = b;
                u.coeff = Scalar::from_int(1);
                u.multiplier = prefix_product(n, seq, l);
                u.argument = chain_eval(pi, seq, l + 2);
                uses.push_back(std::move(u));
                std::swap(seq[l], seq[l + 1]);
                changed = true;
            }
        }
    }
    return seq;
}

SyzKey canonical_decomposition(const MonomialRegion& region, const Monomial& w) {
    if (region.contains(w)) {
        fail(ErrorCode::NotInB,
             w.str() + " lies in B; its terms rewrite to zero, not to a canonical key");
    }
    int n = region.nvars();
    int cap = w.degree() + 64;
    for (int t = 0; t <= cap; ++t) {
        for (int slot = -n; slot <= n; ++slot) {
            if (slot == 0) continue;
            Monomial xi = Monomial::variable(n, slot);
            for (const Monomial& m1 : ball(n, t)) {
                if (m1.degree() != t) continue;
                Monomial head = w / m1; // x_slot * base
                Monomial base = head / xi;
                if (!region.contains(base)) continue;
                if (region.contains(head)) continue; // zero-convention
                return SyzKey{slot, m1, base};
            }
        }
    }
    fail(ErrorCode::IterationBoundExceeded,
         "no canonical decomposition for " + w.str() + " within the search cap");
}

std::vector<int> factorization_in_B(const MonomialRegion& region, const Monomial& m) {
    if (!region.contains(m)) fail(ErrorCode::NotInB, m.str() + " lies off B");
    int n = m.nvars();
    std::vector<int> seq;
    Monomial cur = m;
    while (!cur.is_one()) {
        bool stepped = false;
        for (int i = -n; i <= n && !stepped; ++i) {
            if (i == 0) continue;
            Monomial prev = cur / Monomial::variable(n, i);
            if (prev.degree() < cur.degree() && region.contains(prev)) {
                seq.push_back(i);
                cur = prev;
                stepped = true;
            }
        }
        if (!stepped) {
            fail(ErrorCode::IterationBoundExceeded,
                 "region not connected to 1 below " + m.str());
        }
    }
    return seq;
}

namespace {

Scalar coeff_of(const SyzygyElement& s, const SyzKey& key) {
    auto it = s.terms().find(key);
    return it == s.terms().end() ? Scalar() : it->second;
}

} // namespace

ReductionResult reduce_to_canonical(const Projection& pi, const SyzygyElement& s) {
    int n = pi.nvars();
    ReductionResult res(n);
    SyzygyElement work = s;

    long long max_mult = 0;
    for (const auto& [k, c] : s.terms()) {
        max_mult = std::max<long long>(max_mult, k.multiplier.degree());
    }
    long long pass_bound =
        std::max<long long>(1, static_cast<long long>(s.term_count())) *
        (max_mult + 1) * (max_mult + 1);

    for (long long pass = 0;; ++pass) {
        std::vector<SyzKey> pending;
        for (const auto& [k, c] : work.terms()) {
            Monomial w = k.multiplier * Monomial::variable(n, k.slot) * k.base;
            if (pi.region().contains(w) ||
                !(canonical_decomposition(pi.region(), w) == k)) {
                pending.push_back(k);
            }
        }
        if (pending.empty()) break;
        if (pass >= pass_bound) {
            fail(ErrorCode::ReductionBound, "canonical reduction exceeded its iteration bound");
        }
        for (const SyzKey& key : pending) {
            Scalar c = coeff_of(work, key);
            if (c.is_zero()) continue; // cancelled by an earlier rewrite this pass
            Monomial w = key.multiplier * Monomial::variable(n, key.slot) * key.base;

            std::vector<int> seq = key.multiplier.canonical_factorization();
            seq.push_back(key.slot);
            {
                std::vector<int> tail = factorization_in_B(pi.region(), key.base);
                seq.insert(seq.end(), tail.begin(), tail.end());
            }

            // Targets: the canonical key of w, or nothing at all when w lies
            // in B (a factorization through B makes every Psi term vanish).
            SyzygyElement cterm(n);
            std::vector<int> cseq;
            if (pi.region().contains(w)) {
                cseq = factorization_in_B(pi.region(), w);
            } else {
                SyzKey ckey = canonical_decomposition(pi.region(), w);
                cseq = ckey.multiplier.canonical_factorization();
                cseq.push_back(ckey.slot);
                std::vector<int> tail = factorization_in_B(pi.region(), ckey.base);
                cseq.insert(cseq.end(), tail.begin(), tail.end());
                cterm.add_raw(Scalar::from_int(1), ckey.multiplier, ckey.slot, ckey.base);
            }

            std::vector<GeneratorUse> uses_s, uses_c;
            canonicalize_sequence(pi, seq, uses_s);
            canonicalize_sequence(pi, cseq, uses_c);

            SyzygyElement term(n);
            term.add_raw(Scalar::from_int(1), key.multiplier, key.slot, key.base);
            SyzygyElement rest_s = make_Psi(pi, seq) - term;
            SyzygyElement rest_c = make_Psi(pi, cseq) - cterm;

            // term = cterm + (rest_c - rest_s) + (Psi(seq) - Psi(cseq)),
            // and the Psi difference is exactly uses_s - uses_c.
            work = work - term.scaled(c) + (cterm + rest_c - rest_s).scaled(c);
            for (GeneratorUse u : uses_s) {
                u.coeff *= c;
                res.trail.push_back(std::move(u));
            }
            for (GeneratorUse u : uses_c) {
                u.coeff *= -c;
                res.trail.push_back(std::move(u));
            }
        }
    }
    res.canonical = work;
    return res;
}

} // namespace toric
