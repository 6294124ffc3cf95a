#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "toric/io.hpp"
#include "toric/oracle.hpp"
#include "toric/region.hpp"

using namespace toric;

TEST_CASE("a single toric point has quotient dimension one") {
    std::vector<LaurentPoly> sys = parse_system("x1 - 2\n", 0);
    auto dim = oracle_quotient_dim(sys, 6);
    REQUIRE(dim.has_value());
    CHECK(*dim == 1);
}

TEST_CASE("a unit ideal collapses to dimension zero") {
    std::vector<LaurentPoly> sys = parse_system("x1 - 2\nx1 - 3\n", 0);
    auto dim = oracle_quotient_dim(sys, 8);
    REQUIRE(dim.has_value());
    CHECK(*dim == 0);
}

TEST_CASE("univariate quadric has dimension two") {
    std::vector<LaurentPoly> sys = parse_system("x1^2 - 3*x1 + 2\n", 0);
    auto dim = oracle_quotient_dim(sys, 8);
    REQUIRE(dim.has_value());
    CHECK(*dim == 2);
}

TEST_CASE("membership separates the ideal from its complement") {
    std::vector<LaurentPoly> sys = parse_system("x1^2 - 3*x1 + 2\n", 0);
    auto in = oracle_membership(sys, sys[0], 8);
    REQUIRE(in.has_value());
    CHECK(*in);
    // a multiple, including one with a negative-exponent cofactor
    LaurentPoly m = sys[0].shifted(Monomial(std::vector<int>{-1}));
    auto in2 = oracle_membership(sys, m, 8);
    REQUIRE(in2.has_value());
    CHECK(*in2);
    auto out = oracle_membership(sys, LaurentPoly::constant(1, Scalar::from_int(1)), 8);
    REQUIRE(out.has_value());
    CHECK_FALSE(*out);
    LaurentPoly x(1);
    x.add_term(Monomial(std::vector<int>{1}), Scalar::from_int(1));
    auto out2 = oracle_membership(sys, x, 8);
    REQUIRE(out2.has_value());
    CHECK_FALSE(*out2);
}

TEST_CASE("positive-dimensional systems do not stabilize at dimension zero") {
    std::vector<LaurentPoly> sys = parse_system("x1 - x2\n", 0);
    auto dim = oracle_quotient_dim(sys, 7);
    if (dim.has_value()) CHECK(*dim > 4); // growing quotient, never a small constant
}

TEST_CASE("prime-field systems work the same way") {
    std::vector<LaurentPoly> sys = parse_system("x1^2 - 3*x1 + 2\nx2 - 5\n", 32003);
    auto dim = oracle_quotient_dim(sys, 7);
    REQUIRE(dim.has_value());
    CHECK(*dim == 2);
}
