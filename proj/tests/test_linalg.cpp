#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "toric/linalg.hpp"
#include "toric/region.hpp"

using namespace toric;

namespace {

// independent dense elimination, used only as a rank oracle here
int naive_rank(std::vector<std::vector<Scalar>> a) {
    int rank = 0;
    std::size_t rows = a.size();
    if (rows == 0) return 0;
    std::size_t cols = a[0].size();
    for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < rows; ++c) {
        std::size_t pivot = rows;
        for (std::size_t r = static_cast<std::size_t>(rank); r < rows; ++r) {
            if (!a[r][c].is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot == rows) continue;
        std::swap(a[static_cast<std::size_t>(rank)], a[pivot]);
        Scalar inv = a[static_cast<std::size_t>(rank)][c].inverse();
        for (std::size_t cc = c; cc < cols; ++cc) {
            a[static_cast<std::size_t>(rank)][cc] *= inv;
        }
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == static_cast<std::size_t>(rank) || a[r][c].is_zero()) continue;
            Scalar f = a[r][c];
            for (std::size_t cc = c; cc < cols; ++cc) {
                a[r][cc] -= f * a[static_cast<std::size_t>(rank)][cc];
            }
        }
        ++rank;
    }
    return rank;
}

std::vector<std::vector<Scalar>> dense(const CoeffMatrix& m) {
    std::vector<std::vector<Scalar>> a(m.row_count(),
                                       std::vector<Scalar>(m.col_count(), Scalar()));
    for (std::size_t r = 0; r < m.row_count(); ++r) {
        for (const auto& [c, v] : m.rows()[r]) a[r][static_cast<std::size_t>(c)] = v;
    }
    return a;
}

CoeffMatrix random_matrix(std::mt19937_64& rng, std::uint64_t p, int rows) {
    std::vector<Monomial> cols = ball(2, 2);
    std::reverse(cols.begin(), cols.end());
    CoeffMatrix m(cols, 2);
    std::uniform_int_distribution<long long> coef(-3, 3);
    std::uniform_int_distribution<std::size_t> pick(0, cols.size() - 1);
    for (int r = 0; r < rows; ++r) {
        LaurentPoly poly(2);
        for (int t = 0; t < 5; ++t) {
            poly.add_term(cols[pick(rng)],
                          p ? Scalar::gf(p, coef(rng)) : Scalar::from_int(coef(rng)));
        }
        if (!poly.is_zero()) m.add_row(poly);
    }
    return m;
}

} // namespace

TEST_CASE("echelon rank agrees with an independent elimination") {
    std::mt19937_64 rng(11);
    for (std::uint64_t p : {std::uint64_t(0), std::uint64_t(32003)}) {
        for (int trial = 0; trial < 30; ++trial) {
            CoeffMatrix m = random_matrix(rng, p, 6);
            EchelonResult e = echelon(m);
            CHECK(e.rank == naive_rank(dense(m)));
            CHECK(e.rows.size() == static_cast<std::size_t>(e.rank));
            CHECK(e.pivot_columns.size() == e.rows.size());
        }
    }
}

TEST_CASE("echelon rows are monic, pivot-reduced, and span-preserving") {
    std::mt19937_64 rng(5);
    CoeffMatrix m = random_matrix(rng, 32003, 8);
    EchelonResult e = echelon(m);
    for (std::size_t r = 0; r < e.rows.size(); ++r) {
        CHECK(e.rows[r].coeff(e.pivot_columns[r]).is_one());
        for (std::size_t r2 = 0; r2 < e.rows.size(); ++r2) {
            if (r2 != r) CHECK(e.rows[r2].coeff(e.pivot_columns[r]).is_zero());
        }
        if (r > 0) CHECK(e.pivot_column_indices[r - 1] < e.pivot_column_indices[r]);
    }
    // appending a row already in the span never raises the rank
    CoeffMatrix m2(m.columns(), 2);
    for (std::size_t r = 0; r < m.row_count(); ++r) m2.add_row(m.row_poly(r));
    if (!e.rows.empty()) {
        m2.add_row(e.rows[0] + e.rows.back().scaled(Scalar::gf(32003, 17)));
        CHECK(echelon(m2).rank == e.rank);
    }
}

TEST_CASE("row support must match the column set") {
    CoeffMatrix m(ball(2, 1), 2);
    LaurentPoly p(2);
    p.add_term(Monomial({2, 0}), Scalar::from_int(1));
    CHECK_THROWS_AS(m.add_row(p), Error);
}

TEST_CASE("low-degree members with a degree-graded column order") {
    std::vector<Monomial> cols = ball(2, 2);
    std::reverse(cols.begin(), cols.end()); // high degree first
    CoeffMatrix m(cols, 2);
    LaurentPoly a(2), b(2);
    a.add_term(Monomial({2, 0}), Scalar::from_int(1));
    a.add_term(Monomial({1, 0}), Scalar::from_int(1));
    b.add_term(Monomial({2, 0}), Scalar::from_int(1));
    b.add_term(Monomial({0, 1}), Scalar::from_int(2));
    m.add_row(a);
    m.add_row(b);
    EchelonResult e = echelon(m);
    std::vector<LaurentPoly> low = low_degree_members(e, 1);
    REQUIRE(low.size() == 1); // a - b = x1 - 2 x2 has degree 1
    CHECK(low[0].degree() == 1);
}

TEST_CASE("kernel vectors annihilate the matrix") {
    std::mt19937_64 rng(23);
    CoeffMatrix m = random_matrix(rng, 32003, 4);
    std::vector<std::vector<Scalar>> k = kernel_basis(m);
    EchelonResult e = echelon(m);
    CHECK(k.size() == m.col_count() - static_cast<std::size_t>(e.rank));
    for (const auto& v : k) {
        for (std::size_t r = 0; r < m.row_count(); ++r) {
            Scalar dot;
            for (const auto& [c, coef] : m.rows()[r]) {
                dot += coef * v[static_cast<std::size_t>(c)];
            }
            CHECK(dot.is_zero());
        }
    }
}

TEST_CASE("matrix dump is stable text") {
    CoeffMatrix m(ball(1, 1), 1);
    LaurentPoly p(1);
    p.add_term(Monomial(std::vector<int>{1}), Scalar::from_int(2));
    m.add_row(p, "probe");
    CHECK(m.dump().find("2") != std::string::npos);
    CHECK(m.provenance()[0] == "probe");
}
