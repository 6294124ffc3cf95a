#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "toric/region.hpp"

using namespace toric;

TEST_CASE("ball enumeration matches the closed-form count") {
    for (int n : {1, 2, 3}) {
        for (int k = 0; k <= 5; ++k) {
            std::vector<Monomial> b = ball(n, k);
            CHECK(static_cast<long long>(b.size()) == ball_count(n, k));
            for (const Monomial& m : b) CHECK(m.degree() <= k);
        }
    }
    CHECK(ball_count(1, 1) == 3);  // 1, x1, x1^-1
    CHECK(ball_count(2, 1) == 5);
    CHECK(ball_count(2, 2) == 13);
}

TEST_CASE("full region and cone removal") {
    MonomialRegion b = MonomialRegion::full(2);
    CHECK(b.contains(Monomial({7, -9})));
    CHECK_FALSE(b.finite_list(8).has_value());

    b = b.remove_cone(Monomial({2, 0}));
    CHECK_FALSE(b.contains(Monomial({2, 0})));
    CHECK_FALSE(b.contains(Monomial({3, -4})));
    CHECK(b.contains(Monomial({1, 5})));
    CHECK(b.contains(Monomial({-2, 0})));

    CHECK_THROWS_AS(b.remove_cone(Monomial::one(2)), Error);

    // the ball of the apex degree meets the removed cone only at the apex
    MonomialRegion full = MonomialRegion::full(2);
    for (const Monomial& apex : ball(2, 3)) {
        if (apex.is_one()) continue;
        MonomialRegion r = full.remove_cone(apex);
        for (const Monomial& m : ball(2, apex.degree())) {
            CHECK(r.contains(m) == (m != apex));
        }
    }
}

TEST_CASE("slab regions are finite exactly when bounded on every axis") {
    MonomialRegion b = MonomialRegion::full(1);
    b = b.remove_cone(Monomial(std::vector<int>{2}));
    CHECK_FALSE(b.finite_list(8).has_value());
    b = b.remove_cone(Monomial(std::vector<int>{-2}));
    auto members = b.finite_list(8);
    REQUIRE(members.has_value());
    CHECK(members->size() == 3); // x1^-1, 1, x1
}

TEST_CASE("add_monomial re-adjoins a single carved point") {
    MonomialRegion b = MonomialRegion::full(2).remove_cone(Monomial({1, 1}));
    CHECK_FALSE(b.contains(Monomial({1, 1})));
    MonomialRegion b2 = b.add_monomial(Monomial({1, 1}));
    CHECK(b2.contains(Monomial({1, 1})));
    CHECK_FALSE(b2.contains(Monomial({2, 1})));
    CHECK_FALSE(b2.contains(Monomial({1, 2})));
    for (const Monomial& m : ball(2, 4)) {
        CHECK(b2.contains(m) == (b.contains(m) || m == Monomial({1, 1})));
    }
}

TEST_CASE("truncate lists exactly the bounded members, sorted") {
    MonomialRegion b = MonomialRegion::full(2).remove_cone(Monomial({1, 0}));
    std::vector<Monomial> t = b.truncate(3);
    for (std::size_t i = 0; i + 1 < t.size(); ++i) CHECK(mono_less(t[i], t[i + 1]));
    MonoSet expect;
    for (const Monomial& m : ball(2, 3)) {
        if (b.contains(m)) expect.insert(m);
    }
    CHECK(t.size() == expect.size());
    for (const Monomial& m : t) CHECK(expect.count(m) == 1);
}

TEST_CASE("prolongation, border, connectivity") {
    MonoSet s{Monomial::one(2), Monomial({1, 0})};
    MonoSet p = prolong(s, 2);
    CHECK(p.count(Monomial({2, 0})) == 1);
    CHECK(p.count(Monomial({0, 1})) == 1);
    MonoSet bd = border(s, 2);
    CHECK(bd.count(Monomial::one(2)) == 0);
    CHECK(bd.count(Monomial({1, 0})) == 0);
    CHECK(bd.count(Monomial({-1, 0})) == 1);
    CHECK(bd.size() == 6);

    CHECK(is_connected_to_one(s, 2));
    MonoSet gap{Monomial::one(2), Monomial({2, 0})};
    CHECK_FALSE(is_connected_to_one(gap, 2));

    MonomialRegion b = MonomialRegion::full(2).remove_cone(Monomial({1, 0}));
    CHECK(b.in_prolongation(Monomial({1, 3})));  // neighbor x1^0 x2^3 is in B
    CHECK_FALSE(b.in_prolongation(Monomial({2, 0})));
}

TEST_CASE("delta_B layers grow by prolongation") {
    MonoSet base{Monomial::one(1), Monomial(std::vector<int>{1}), Monomial(std::vector<int>{-1})};
    DeltaB d(base, 1);
    CHECK(d(Monomial::one(1)) == 0);
    CHECK(d(Monomial(std::vector<int>{1})) == 0);
    CHECK(d(Monomial(std::vector<int>{2})) == 1);
    CHECK(d(Monomial(std::vector<int>{-3})) == 2);
}
