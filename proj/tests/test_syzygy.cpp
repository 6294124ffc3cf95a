#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "toric/syzygy.hpp"

using namespace toric;

namespace {

// n=1, B={1}, root x1 = 2
Projection line_point() {
    MonomialRegion b =
        MonomialRegion::full(1).remove_cone(Monomial(std::vector<int>{1})).remove_cone(Monomial(std::vector<int>{-1}));
    Projection pi(b, std::nullopt);
    pi.add_rule(Monomial(std::vector<int>{1}), LaurentPoly::constant(1, Scalar::from_int(2)));
    pi.add_rule(Monomial(std::vector<int>{-1}), LaurentPoly::constant(1, Scalar::parse("1/2", 0)));
    return pi;
}

// n=2, B={1}, root (2, 3)
Projection plane_point() {
    MonomialRegion b = MonomialRegion::full(2);
    for (int i : {1, -1, 2, -2}) b = b.remove_cone(Monomial::variable(2, i));
    Projection pi(b, std::nullopt);
    auto c = [](long long num, long long den) {
        return LaurentPoly::constant(2, Scalar::from_rational(Rational(num, den)));
    };
    pi.add_rule(Monomial({1, 0}), c(2, 1));
    pi.add_rule(Monomial({-1, 0}), c(1, 2));
    pi.add_rule(Monomial({0, 1}), c(3, 1));
    pi.add_rule(Monomial({0, -1}), c(1, 3));
    return pi;
}

SyzygyElement trail_sum(const Projection& pi, const std::vector<GeneratorUse>& trail) {
    SyzygyElement acc(pi.nvars());
    for (const GeneratorUse& u : trail) acc = acc + u.element(pi);
    return acc;
}

} // namespace

TEST_CASE("psi produces the rule polynomials and respects the convention") {
    Projection pi = line_point();
    LaurentPoly f = psi(pi, 1, Monomial::one(1));
    CHECK(f.coeff(Monomial(std::vector<int>{1})).is_one());
    CHECK(f.coeff(Monomial(std::vector<int>{0})) == Scalar::from_int(-2));
    CHECK_THROWS_AS(psi(pi, 1, Monomial(std::vector<int>{1})), Error); // x1 is off B

    // inside-B translate gives zero
    MonomialRegion slab =
        MonomialRegion::full(1).remove_cone(Monomial(std::vector<int>{2})).remove_cone(Monomial(std::vector<int>{-2}));
    Projection pi2(slab, 2);
    CHECK(psi(pi2, 1, Monomial(std::vector<int>{-1})).is_zero()); // x1 * x1^-1 = 1 in B
}

TEST_CASE("the zero convention drops terms at construction") {
    MonomialRegion slab =
        MonomialRegion::full(1).remove_cone(Monomial(std::vector<int>{2})).remove_cone(Monomial(std::vector<int>{-2}));
    Projection pi(slab, std::nullopt);
    SyzygyElement y = make_Y(pi, Scalar::from_int(1), Monomial::one(1), 1, Monomial(std::vector<int>{-1}));
    CHECK(y.is_zero()); // Y_1[x1^-1] = 0 since x1 * x1^-1 in B
    SyzygyElement y2 = make_Y(pi, Scalar::from_int(1), Monomial::one(1), 1, Monomial(std::vector<int>{1}));
    CHECK(y2.term_count() == 1);
    CHECK_THROWS_AS(make_Y(pi, Scalar::from_int(1), Monomial::one(1), 1, Monomial(std::vector<int>{5})),
                    Error); // base off B
}

TEST_CASE("rho_1(1) for the system x1 - 2") {
    Projection pi = line_point();
    SyzygyElement r = make_rho(pi, 1, Monomial::one(1));
    // rho_1(1) = x1 Y_{-1}[1] + (1/2) Y_1[1]
    REQUIRE(r.term_count() == 2);
    Scalar c1 = r.terms().at(SyzKey{-1, Monomial(std::vector<int>{1}), Monomial(std::vector<int>{0})});
    Scalar c2 = r.terms().at(SyzKey{1, Monomial(std::vector<int>{0}), Monomial(std::vector<int>{0})});
    CHECK(c1.is_one());
    CHECK(c2 == Scalar::parse("1/2", 0));
    CHECK(boundary(pi, r).is_zero());
}

TEST_CASE("phi and rho generators lie in the boundary kernel, exhaustively") {
    for (const Projection& pi : {line_point(), plane_point()}) {
        int n = pi.nvars();
        std::vector<int> idx;
        for (int i = 1; i <= n; ++i) {
            idx.push_back(i);
            idx.push_back(-i);
        }
        std::vector<Monomial> members = *pi.region().finite_list();
        for (const Monomial& m : members) {
            for (int i : idx) {
                CHECK(boundary(pi, make_rho(pi, i, m)).is_zero());
                for (int j : idx) {
                    if (i == j) continue;
                    CHECK(boundary(pi, make_phi(pi, i, j, m)).is_zero());
                }
            }
        }
        CHECK_THROWS_AS(make_phi(pi, 1, 1, Monomial::one(n)), Error);
    }
}

TEST_CASE("Psi telescopes: m = sigma(m) + boundary(Psi)") {
    Projection pi = plane_point();
    NormalForm nf(pi);
    std::mt19937_64 rng(31);
    std::vector<Monomial> pool = ball(2, 5);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int trial = 0; trial < 60; ++trial) {
        Monomial m = pool[pick(rng)];
        SyzygyElement psi_el = make_Psi(pi, m.canonical_factorization());
        LaurentPoly lhs = LaurentPoly::term(m, Scalar::from_int(1)) - nf.sigma(m);
        CHECK(boundary(pi, psi_el) == lhs);
    }
}

TEST_CASE("sequence canonicalization records an exact generator trail") {
    Projection pi = plane_point();
    std::mt19937_64 rng(77);
    std::vector<int> alphabet{1, -1, 2, -2};
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    std::uniform_int_distribution<int> len(0, 5);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<int> seq;
        int k = len(rng);
        for (int t = 0; t < k; ++t) seq.push_back(alphabet[pick(rng)]);
        std::vector<GeneratorUse> uses;
        std::vector<int> canon = canonicalize_sequence(pi, seq, uses);
        // sorted by |index| with the positive sign first, no adjacent inverses
        for (std::size_t l = 0; l + 1 < canon.size(); ++l) {
            CHECK(std::abs(canon[l]) <= std::abs(canon[l + 1]));
            CHECK(canon[l] != -canon[l + 1]);
        }
        CHECK(make_Psi(pi, seq) == make_Psi(pi, canon) + trail_sum(pi, uses));
    }
}

TEST_CASE("canonical decomposition minimizes the multiplier degree") {
    Projection pi = plane_point();
    SyzKey k = canonical_decomposition(pi.region(), Monomial({2, 0}));
    CHECK(k.multiplier == Monomial({1, 0}));
    CHECK(k.slot == 1);
    CHECK(k.base == Monomial({0, 0}));
    SyzKey k1 = canonical_decomposition(pi.region(), Monomial({1, 0}));
    CHECK(k1.multiplier == Monomial({0, 0}));
}

TEST_CASE("reduction drives kernel elements to zero with a verified trail") {
    Projection pi = plane_point();
    std::mt19937_64 rng(123);
    std::vector<int> alphabet{1, -1, 2, -2};
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    std::uniform_int_distribution<int> len(1, 4);

    // differences of two Psi for the same monomial are kernel elements
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<int> seq;
        int k = len(rng);
        for (int t = 0; t < k; ++t) seq.push_back(alphabet[pick(rng)]);
        std::vector<int> shuffled = seq;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        SyzygyElement s = make_Psi(pi, seq) - make_Psi(pi, shuffled);
        REQUIRE(boundary(pi, s).is_zero());
        ReductionResult r = reduce_to_canonical(pi, s);
        CHECK(r.canonical.is_zero());
        CHECK(s == r.canonical + trail_sum(pi, r.trail));
    }

    // generator multiples are kernel elements too
    for (int trial = 0; trial < 25; ++trial) {
        Monomial mult = ball(2, 2)[pick(rng)];
        SyzygyElement s =
            make_phi(pi, alphabet[pick(rng) % 2], 2, Monomial::one(2)).shifted(mult) +
            make_rho(pi, 1, Monomial::one(2)).scaled(Scalar::from_int(3));
        REQUIRE(boundary(pi, s).is_zero());
        ReductionResult r = reduce_to_canonical(pi, s);
        CHECK(r.canonical.is_zero());
        CHECK(s == r.canonical + trail_sum(pi, r.trail));
    }

    // an already canonical single term is a fixed point
    SyzKey ck = canonical_decomposition(pi.region(), Monomial({0, 2}));
    SyzygyElement single(2);
    single.add_raw(Scalar::from_int(1), ck.multiplier, ck.slot, ck.base);
    ReductionResult r = reduce_to_canonical(pi, single);
    CHECK(r.canonical == single);
    CHECK(r.trail.empty());
}
