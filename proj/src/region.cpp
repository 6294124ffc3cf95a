#include "toric/region.hpp"

#include <algorithm>
#include <deque>

namespace toric {

namespace {

// Variable steps from m that stay in ((apex)) and raise the degree by one.
std::vector<Monomial> cone_steps(const Monomial& apex, const Monomial& m) {
    std::vector<Monomial> out;
    int n = m.nvars();
    for (int v = 0; v < n; ++v) {
        for (int s : {+1, -1}) {
            std::vector<int> e = m.exponents();
            e[static_cast<std::size_t>(v)] += s;
            Monomial cand(std::move(e));
            if (cand.degree() == m.degree() + 1 && apex.cone_contains(cand)) out.push_back(cand);
        }
    }
    return out;
}

} // namespace

MonomialRegion MonomialRegion::full(int nvars) {
    MonomialRegion r(nvars);
    r.pieces_.push_back(Piece{Cone{Monomial::one(nvars)}, {}});
    return r;
}

bool MonomialRegion::contains(const Monomial& m) const {
    for (const Piece& p : pieces_) {
        if (!p.positive.contains(m)) continue;
        bool carved = false;
        for (const Cone& c : p.carved) {
            if (c.contains(m)) {
                carved = true;
                break;
            }
        }
        if (!carved) return true;
    }
    return false;
}

bool MonomialRegion::in_prolongation(const Monomial& m) const {
    if (contains(m)) return true;
    for (int v = 0; v < n_; ++v) {
        for (int s : {+1, -1}) {
            std::vector<int> e = m.exponents();
            e[static_cast<std::size_t>(v)] += s;
            if (contains(Monomial(std::move(e)))) return true;
        }
    }
    return false;
}

MonomialRegion MonomialRegion::remove_cone(const Monomial& m) const {
    if (m.is_one()) fail(ErrorCode::WouldEmptyRegion, "removing ((1)) empties the region");
    MonomialRegion r = *this;
    for (Piece& p : r.pieces_) p.carved.push_back(Cone{m});
    return r;
}

MonomialRegion MonomialRegion::add_monomial(const Monomial& m) const {
    MonomialRegion r = *this;
    Piece piece{Cone{m}, {}};
    for (const Monomial& nb : cone_steps(m, m)) piece.carved.push_back(Cone{nb});
    r.pieces_.push_back(std::move(piece));
    return r;
}

std::vector<Monomial> MonomialRegion::truncate(int d) const {
    MonoSet out;
    for (const Piece& p : pieces_) {
        const Monomial& apex = p.positive.apex;
        if (apex.degree() > d) continue;
        // BFS over the cone up to degree d; carved members are traversed but
        // not collected.
        MonoSet seen;
        std::deque<Monomial> queue;
        seen.insert(apex);
        queue.push_back(apex);
        while (!queue.empty()) {
            Monomial m = queue.front();
            queue.pop_front();
            bool carved = std::any_of(p.carved.begin(), p.carved.end(),
                                      [&](const Cone& c) { return c.contains(m); });
            if (!carved) out.insert(m);
            if (m.degree() == d) continue;
            for (const Monomial& nb : cone_steps(apex, m)) {
                if (seen.insert(nb).second) queue.push_back(nb);
            }
        }
    }
    return std::vector<Monomial>(out.begin(), out.end());
}

std::optional<std::vector<Monomial>> MonomialRegion::finite_list(int degree_cap) const {
    std::vector<Monomial> prev = truncate(0);
    for (int d = 1; d <= degree_cap; ++d) {
        std::vector<Monomial> cur = truncate(d);
        if (cur.size() == prev.size()) return cur;
        prev = std::move(cur);
    }
    return std::nullopt;
}

std::vector<Monomial> ball(int nvars, int k) {
    MonoSet out;
    std::deque<Monomial> queue;
    out.insert(Monomial::one(nvars));
    queue.push_back(Monomial::one(nvars));
    while (!queue.empty()) {
        Monomial m = queue.front();
        queue.pop_front();
        if (m.degree() == k) continue;
        for (int v = 0; v < nvars; ++v) {
            for (int s : {+1, -1}) {
                std::vector<int> e = m.exponents();
                e[static_cast<std::size_t>(v)] += s;
                Monomial cand(std::move(e));
                if (cand.degree() == m.degree() + 1 && out.insert(cand).second) {
                    queue.push_back(cand);
                }
            }
        }
    }
    return std::vector<Monomial>(out.begin(), out.end());
}

long long ball_count(int nvars, int k) {
    auto binom = [](long long a, long long b) {
        if (b < 0 || b > a) return 0LL;
        long long r = 1;
        for (long long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
        return r;
    };
    long long total = 0;
    for (int j = 0; j <= nvars; ++j) {
        total += (1LL << j) * binom(nvars, j) * binom(k, j);
    }
    return total;
}

MonoSet prolong(const MonoSet& s, int nvars) {
    MonoSet out = s;
    for (const Monomial& m : s) {
        for (int v = 0; v < nvars; ++v) {
            for (int sign : {+1, -1}) {
                std::vector<int> e = m.exponents();
                e[static_cast<std::size_t>(v)] += sign;
                out.insert(Monomial(std::move(e)));
            }
        }
    }
    return out;
}

MonoSet border(const MonoSet& s, int nvars) {
    MonoSet out = prolong(s, nvars);
    for (const Monomial& m : s) out.erase(m);
    return out;
}

bool is_connected_to_one(const MonoSet& s, int nvars) {
    Monomial unit = Monomial::one(nvars);
    if (!s.count(unit)) return false;
    for (const Monomial& m : s) {
        if (m.is_one()) continue;
        bool reachable = false;
        for (int v = 0; v < nvars && !reachable; ++v) {
            for (int sign : {+1, -1}) {
                std::vector<int> e = m.exponents();
                e[static_cast<std::size_t>(v)] += sign;
                Monomial prev(std::move(e));
                if (prev.degree() < m.degree() && s.count(prev)) {
                    reachable = true;
                    break;
                }
            }
        }
        if (!reachable) return false;
    }
    return true;
}

int DeltaB::operator()(const Monomial& m) {
    for (std::size_t k = 0; k < layers_.size(); ++k) {
        if (layers_[k].count(m)) return static_cast<int>(k);
    }
    while (static_cast<int>(layers_.size()) <= bound_) {
        layers_.push_back(prolong(layers_.back(), nvars_));
        if (layers_.back().count(m)) return static_cast<int>(layers_.size()) - 1;
    }
    fail(ErrorCode::IterationBoundExceeded, "delta_B: monomial unreachable within bound");
}

} // namespace toric
