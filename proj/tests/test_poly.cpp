#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "toric/poly.hpp"
#include "toric/region.hpp"

using namespace toric;

namespace {

LaurentPoly random_poly(std::mt19937_64& rng, int n, int deg, std::uint64_t p) {
    std::vector<Monomial> b = ball(n, deg);
    std::uniform_int_distribution<std::size_t> pick(0, b.size() - 1);
    std::uniform_int_distribution<long long> coef(-5, 5);
    LaurentPoly out(n);
    for (int t = 0; t < 4; ++t) {
        out.add_term(b[pick(rng)], p ? Scalar::gf(p, coef(rng)) : Scalar::from_int(coef(rng)));
    }
    return out;
}

} // namespace

TEST_CASE("term bookkeeping and cancellation") {
    LaurentPoly p(2);
    Monomial m({1, -1});
    p.add_term(m, Scalar::from_int(2));
    p.add_term(m, Scalar::from_int(-2));
    CHECK(p.is_zero());
    CHECK_THROWS_AS(p.degree(), Error);
    p.add_term(m, Scalar::from_int(3));
    CHECK(p.degree() == 2);
    CHECK(p.coeff(m) == Scalar::from_int(3));
    CHECK(p.coeff(Monomial::one(2)).is_zero());
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(7);
    for (std::uint64_t p : {std::uint64_t(0), std::uint64_t(32003)}) {
        for (int trial = 0; trial < 40; ++trial) {
            LaurentPoly a = random_poly(rng, 2, 3, p);
            LaurentPoly b = random_poly(rng, 2, 3, p);
            LaurentPoly c = random_poly(rng, 2, 3, p);
            CHECK(a + b == b + a);
            CHECK((a + b) + c == a + (b + c));
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a - a).is_zero());
            if (!a.is_zero() && !b.is_zero()) {
                CHECK((a * b).is_zero() == false); // integral domain
                CHECK((a * b).degree() <= a.degree() + b.degree());
            }
        }
    }
}

TEST_CASE("shift and scale") {
    LaurentPoly p(2);
    p.add_term(Monomial({1, 0}), Scalar::from_int(1));
    p.add_term(Monomial::one(2), Scalar::from_int(-2));
    LaurentPoly q = p.shifted(Monomial({-1, 2}));
    CHECK(q.coeff(Monomial({0, 2})) == Scalar::from_int(1));
    CHECK(q.coeff(Monomial({-1, 2})) == Scalar::from_int(-2));
    CHECK(p.scaled(Scalar::from_int(0)).is_zero());
    CHECK(p.scaled(Scalar::from_int(2)).coeff(Monomial::one(2)) == Scalar::from_int(-4));
}

TEST_CASE("string form matches the input syntax") {
    LaurentPoly p(2);
    p.add_term(Monomial({2, -1}), Scalar::from_int(3));
    p.add_term(Monomial::one(2), Scalar::parse("-1/2", 0));
    CHECK(p.str() == "3*x1^2*x2^-1 - 1/2");
    CHECK(LaurentPoly::zero(2).str() == "0");
}
