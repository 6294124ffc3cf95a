#include "toric/oracle.hpp"

#include <deque>
#include <map>
#include <utility>

namespace toric {

namespace {

// Ordinary polynomials in 2n variables: exponents [x_1..x_n, y_1..y_n].
using Expo = std::vector<int>;

struct ExpoGreater {
    // graded lex; any global order works here
    bool operator()(const Expo& a, const Expo& b) const {
        int da = 0, db = 0;
        for (int e : a) da += e;
        for (int e : b) db += e;
        if (da != db) return da > db;
        return a > b;
    }
};

using OrdPoly = std::map<Expo, Scalar, ExpoGreater>;

void add_term(OrdPoly& p, const Expo& e, const Scalar& c) {
    auto [it, fresh] = p.emplace(e, c);
    if (!fresh) {
        it->second = it->second + c;
        if (it->second.is_zero()) p.erase(it);
    }
}

OrdPoly shifted(const OrdPoly& p, const Expo& m) {
    OrdPoly out;
    for (const auto& [e, c] : p) {
        Expo f = e;
        for (std::size_t i = 0; i < f.size(); ++i) f[i] += m[i];
        out.emplace(f, c);
    }
    return out;
}

OrdPoly doubled_image(const LaurentPoly& p) {
    int n = p.nvars();
    OrdPoly out;
    for (const auto& [m, c] : p.terms()) {
        Expo e(2 * static_cast<std::size_t>(n), 0);
        for (int v = 0; v < n; ++v) {
            int a = m.exponent(v);
            if (a > 0) e[static_cast<std::size_t>(v)] = a;
            if (a < 0) e[static_cast<std::size_t>(n + v)] = -a;
        }
        add_term(out, e, c);
    }
    return out;
}

std::vector<OrdPoly> doubled_system(const std::vector<LaurentPoly>& inputs) {
    std::vector<OrdPoly> gens;
    for (const LaurentPoly& f : inputs) gens.push_back(doubled_image(f));
    int n = inputs.empty() ? 0 : inputs.front().nvars();
    std::uint64_t prime = 0;
    for (const LaurentPoly& f : inputs) {
        for (const auto& [m, c] : f.terms()) {
            if (c.prime() != 0) prime = c.prime();
        }
    }
    Scalar one = Scalar::one(prime);
    for (int v = 0; v < n; ++v) {
        OrdPoly rel;
        Expo e(2 * static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(v)] = 1;
        e[static_cast<std::size_t>(n + v)] = 1;
        rel.emplace(e, one);
        add_term(rel, Expo(2 * static_cast<std::size_t>(n), 0), -one);
        gens.push_back(std::move(rel));
    }
    return gens;
}

bool divides(const Expo& a, const Expo& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
    }
    return true;
}

Expo expo_sub(const Expo& a, const Expo& b) {
    Expo out = a;
    for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
    return out;
}

Expo expo_lcm(const Expo& a, const Expo& b) {
    Expo out = a;
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
    return out;
}

// full multivariate division; basis rows are monic
OrdPoly normal_form(OrdPoly p, const std::vector<OrdPoly>& basis) {
    OrdPoly rem;
    while (!p.empty()) {
        const Expo lt = p.begin()->first;
        bool reduced = false;
        for (const OrdPoly& g : basis) {
            if (!divides(g.begin()->first, lt)) continue;
            Scalar c = p.begin()->second;
            for (const auto& [e, gc] : shifted(g, expo_sub(lt, g.begin()->first))) {
                add_term(p, e, -(gc * c));
            }
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.insert(*p.begin());
            p.erase(p.begin());
        }
    }
    return rem;
}

void make_monic(OrdPoly& p) {
    Scalar inv = p.begin()->second.inverse();
    for (auto& [e, c] : p) c = c * inv;
}

// Buchberger with the coprime-pair criterion; nullopt once the reduction
// budget runs out (wildly growing bases mean the caller asked too much).
std::optional<std::vector<OrdPoly>> groebner(const std::vector<OrdPoly>& gens,
                                             long long budget) {
    std::vector<OrdPoly> basis;
    std::deque<std::pair<std::size_t, std::size_t>> pairs;
    auto push = [&](OrdPoly g) {
        make_monic(g);
        for (std::size_t i = 0; i < basis.size(); ++i) pairs.emplace_back(i, basis.size());
        basis.push_back(std::move(g));
    };
    for (const OrdPoly& g : gens) {
        OrdPoly r = normal_form(g, basis);
        if (!r.empty()) push(std::move(r));
    }
    while (!pairs.empty()) {
        if (--budget < 0) return std::nullopt;
        auto [i, j] = pairs.front();
        pairs.pop_front();
        const Expo& li = basis[i].begin()->first;
        const Expo& lj = basis[j].begin()->first;
        Expo l = expo_lcm(li, lj);
        bool coprime = true;
        for (std::size_t v = 0; v < li.size(); ++v) {
            if (li[v] > 0 && lj[v] > 0) {
                coprime = false;
                break;
            }
        }
        if (coprime) continue;
        OrdPoly s = shifted(basis[i], expo_sub(l, li));
        for (const auto& [e, c] : shifted(basis[j], expo_sub(l, lj))) add_term(s, e, -c);
        OrdPoly r = normal_form(std::move(s), basis);
        if (!r.empty()) push(std::move(r));
    }
    return basis;
}

// standard monomial count; nullopt when some variable has no pure power
// among the leading terms (infinite quotient)
std::optional<long long> staircase_count(const std::vector<OrdPoly>& gb,
                                         std::size_t vars) {
    for (const OrdPoly& g : gb) {
        int d = 0;
        for (int e : g.begin()->first) d += e;
        if (d == 0) return 0; // unit ideal
    }
    std::vector<int> cap(vars, -1);
    for (const OrdPoly& g : gb) {
        const Expo& lt = g.begin()->first;
        int support = -1;
        bool pure = true;
        for (std::size_t v = 0; v < vars; ++v) {
            if (lt[v] == 0) continue;
            if (support >= 0) {
                pure = false;
                break;
            }
            support = static_cast<int>(v);
        }
        if (!pure || support < 0) continue;
        std::size_t v = static_cast<std::size_t>(support);
        if (cap[v] < 0 || lt[v] < cap[v]) cap[v] = lt[v];
    }
    for (int c : cap) {
        if (c < 0) return std::nullopt;
    }
    long long count = 0;
    Expo e(vars, 0);
    // walk the finite box under the pure-power caps
    for (;;) {
        bool standard = true;
        for (const OrdPoly& g : gb) {
            if (divides(g.begin()->first, e)) {
                standard = false;
                break;
            }
        }
        if (standard) ++count;
        std::size_t v = 0;
        while (v < vars && e[v] + 1 >= cap[v]) {
            e[v] = 0;
            ++v;
        }
        if (v == vars) break;
        ++e[v];
    }
    return count;
}

long long effort_budget(int D) { return 2000LL * (D + 1) * (D + 1); }

} // namespace

std::optional<int> oracle_quotient_dim(const std::vector<LaurentPoly>& inputs, int D) {
    if (inputs.empty() || D < 2) return std::nullopt;
    std::size_t vars = 2 * static_cast<std::size_t>(inputs.front().nvars());
    auto gb = groebner(doubled_system(inputs), effort_budget(D));
    if (!gb) return std::nullopt;
    auto count = staircase_count(*gb, vars);
    if (!count) return std::nullopt;
    return static_cast<int>(*count);
}

std::optional<bool> oracle_membership(const std::vector<LaurentPoly>& inputs,
                                      const LaurentPoly& p, int D) {
    auto batch = oracle_membership_batch(inputs, {p}, D);
    if (!batch) return std::nullopt;
    return batch->front();
}

std::optional<std::vector<bool>> oracle_membership_batch(
    const std::vector<LaurentPoly>& inputs, const std::vector<LaurentPoly>& polys, int D) {
    if (inputs.empty()) return std::nullopt;
    auto gb = groebner(doubled_system(inputs), effort_budget(D));
    if (!gb) return std::nullopt;
    std::vector<bool> out;
    for (const LaurentPoly& p : polys) {
        out.push_back(normal_form(doubled_image(p), *gb).empty());
    }
    return out;
}

} // namespace toric
