#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "toric/criteria.hpp"

using namespace toric;

namespace {

Projection point_projection() {
    MonomialRegion b =
        MonomialRegion::full(1).remove_cone(Monomial(std::vector<int>{1})).remove_cone(Monomial(std::vector<int>{-1}));
    Projection pi(b, std::nullopt);
    pi.add_rule(Monomial(std::vector<int>{1}), LaurentPoly::constant(1, Scalar::from_int(2)));
    pi.add_rule(Monomial(std::vector<int>{-1}), LaurentPoly::constant(1, Scalar::parse("1/2", 0)));
    return pi;
}

std::vector<Monomial> bounded_border(const MonomialRegion& b, int d) {
    MonoSet seen;
    std::vector<Monomial> out;
    for (const Monomial& m : b.truncate(d + 1)) {
        for (int i = 1; i <= b.nvars(); ++i) {
            for (int s : {i, -i}) {
                Monomial t = m * Monomial::variable(b.nvars(), s);
                if (t.degree() > d || b.contains(t)) continue;
                if (seen.insert(t).second) out.push_back(t);
            }
        }
    }
    return out;
}

// random fully-covered bounded rewriting family, usually NOT a border basis
Projection random_family(std::mt19937_64& rng, int d) {
    const std::uint64_t p = 32003;
    std::uniform_int_distribution<int> ncones(1, 2);
    std::uniform_int_distribution<long long> coef(0, 32002);
    MonomialRegion b = MonomialRegion::full(2);
    std::vector<Monomial> apexes = ball(2, 2);
    std::shuffle(apexes.begin(), apexes.end(), rng);
    int want = ncones(rng);
    for (const Monomial& a : apexes) {
        if (want == 0) break;
        if (a.is_one() || !b.contains(a)) continue;
        b = b.remove_cone(a);
        --want;
    }
    Projection pi(b, d);
    for (const Monomial& head : bounded_border(b, d)) {
        std::vector<Monomial> dom = b.truncate(head.degree());
        LaurentPoly tail(2);
        std::uniform_int_distribution<std::size_t> pick(0, dom.size() - 1);
        for (int t = 0; t < 3; ++t) tail.add_term(dom[pick(rng)], Scalar::gf(p, coef(rng)));
        pi.add_rule(head, tail);
    }
    return pi;
}

} // namespace

TEST_CASE("a true border basis passes both criteria") {
    Projection pi = point_projection();
    CHECK(check_condition1(pi).passed);
    CHECK(check_condition3(pi).passed);
}

TEST_CASE("a perturbed family fails both criteria with witnesses") {
    MonomialRegion b =
        MonomialRegion::full(1).remove_cone(Monomial(std::vector<int>{1})).remove_cone(Monomial(std::vector<int>{-1}));
    Projection pi(b, std::nullopt);
    pi.add_rule(Monomial(std::vector<int>{1}), LaurentPoly::constant(1, Scalar::from_int(2)));
    pi.add_rule(Monomial(std::vector<int>{-1}), LaurentPoly::constant(1, Scalar::from_int(3))); // not 1/2
    CriterionReport r1 = check_condition1(pi);
    CriterionReport r3 = check_condition3(pi);
    CHECK_FALSE(r1.passed);
    CHECK_FALSE(r3.passed);
    CHECK_FALSE(r1.witnesses.empty());
    CHECK_FALSE(r3.witnesses.empty());
}

TEST_CASE("operator and projection criteria agree on random families") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<int> dd(2, 4);
        Projection pi = random_family(rng, dd(rng));
        CriterionReport r1 = check_condition1(pi);
        CriterionReport r3 = check_condition3(pi);
        CHECK(r1.passed == r3.passed);
    }
}

TEST_CASE("prolongation and commutation pools stay inside the bound") {
    std::mt19937_64 rng(9);
    Projection pi = random_family(rng, 3);
    for (const LaurentPoly& p : prolongation_polys(pi, nullptr)) {
        CHECK(p.degree() <= 3);
        for (const auto& [m, c] : p.terms()) CHECK(pi.region().in_prolongation(m));
    }
    for (const LaurentPoly& p : commutation_polys(pi, nullptr)) {
        if (!p.is_zero()) CHECK(p.degree() <= 3);
    }
}

TEST_CASE("span rank complements the basis dimension") {
    LaurentPoly f(1);
    f.add_term(Monomial(std::vector<int>{1}), Scalar::from_int(1));
    f.add_term(Monomial(std::vector<int>{0}), Scalar::from_int(-2));
    // <Ball(2)> = B_{<=2} (+) span{m f}: 5 = 1 + 4
    CHECK(span_rank_up_to({f}, 2) == 4);
    CHECK(span_rank_up_to({}, 3) == 0);
}
