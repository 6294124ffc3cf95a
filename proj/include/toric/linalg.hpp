#ifndef TORIC_LINALG_HPP
#define TORIC_LINALG_HPP

#include <map>
#include <string>
#include <vector>

#include "toric/poly.hpp"

namespace toric {

/// Exact coefficient matrix of a polynomial list over a fixed column order.
class CoeffMatrix {
public:
    using SparseRow = std::vector<std::pair<int, Scalar>>; // sorted by column

    CoeffMatrix(std::vector<Monomial> columns, int nvars);

    int nvars() const { return n_; }
    std::size_t row_count() const { return rows_.size(); }
    std::size_t col_count() const { return columns_.size(); }
    const std::vector<Monomial>& columns() const { return columns_; }
    const std::vector<std::string>& provenance() const { return provenance_; }

    /// Throws UnknownMonomial if the polynomial has support off the columns.
    void add_row(const LaurentPoly& p, std::string provenance = {});

    LaurentPoly row_poly(std::size_t r) const;
    const std::vector<SparseRow>& rows() const { return rows_; }

    /// MatrixMarket-style coordinate dump for debugging.
    std::string dump() const;

private:
    int n_;
    std::vector<Monomial> columns_;
    std::map<Monomial, int, MonoLess> col_index_;
    std::vector<SparseRow> rows_;
    std::vector<std::string> provenance_;
};

CoeffMatrix build_matrix(const std::vector<LaurentPoly>& polys,
                         std::vector<Monomial> columns);

struct EchelonResult {
    int rank = 0;
    std::vector<Monomial> pivot_columns;      // one per echelon row, in row order
    std::vector<int> pivot_column_indices;
    std::vector<LaurentPoly> rows;            // reduced rows, pivot coefficient 1
    std::vector<std::string> provenance;      // of the original row each pivot came from
};

/// Reduced row echelon form by exact Gauss-Jordan elimination; pivots are the
/// leftmost nonzero columns, so the pivot set indexes a maximal invertible
/// submatrix.
EchelonResult echelon(const CoeffMatrix& m);

/// Echelon rows whose support lies entirely in Ball(d).  With a degree-graded
/// (high-degree-first) column order the span contains a polynomial of degree
/// <= d iff one of these rows qualifies.
std::vector<LaurentPoly> low_degree_members(const EchelonResult& e, int d);

/// Basis of the right kernel, one coefficient vector per free column.
std::vector<std::vector<Scalar>> kernel_basis(const CoeffMatrix& m);

} // namespace toric

#endif
