#include "toric/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace toric {

CoeffMatrix::CoeffMatrix(std::vector<Monomial> columns, int nvars)
    : n_(nvars), columns_(std::move(columns)) {
    for (std::size_t i = 0; i < columns_.size(); ++i) {
        auto [it, inserted] = col_index_.emplace(columns_[i], static_cast<int>(i));
        if (!inserted) fail(ErrorCode::UnknownMonomial, "duplicate column monomial");
    }
}

void CoeffMatrix::add_row(const LaurentPoly& p, std::string provenance) {
    SparseRow row;
    row.reserve(p.term_count());
    for (const auto& [m, c] : p.terms()) {
        auto it = col_index_.find(m);
        if (it == col_index_.end()) {
            fail(ErrorCode::UnknownMonomial, "support monomial " + m.str() + " has no column");
        }
        row.emplace_back(it->second, c);
    }
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    rows_.push_back(std::move(row));
    provenance_.push_back(std::move(provenance));
}

LaurentPoly CoeffMatrix::row_poly(std::size_t r) const {
    LaurentPoly p(n_);
    for (const auto& [c, v] : rows_[r]) p.add_term(columns_[static_cast<std::size_t>(c)], v);
    return p;
}

std::string CoeffMatrix::dump() const {
    std::ostringstream os;
    std::size_t nnz = 0;
    for (const auto& r : rows_) nnz += r.size();
    os << "%%MatrixMarket matrix coordinate rational general\n";
    os << rows_.size() << ' ' << columns_.size() << ' ' << nnz << '\n';
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        for (const auto& [c, v] : rows_[r]) {
            os << (r + 1) << ' ' << (c + 1) << ' ' << v.str() << '\n';
        }
    }
    return os.str();
}

CoeffMatrix build_matrix(const std::vector<LaurentPoly>& polys,
                         std::vector<Monomial> columns) {
    int n = columns.empty() ? (polys.empty() ? 0 : polys.front().nvars())
                            : columns.front().nvars();
    CoeffMatrix m(std::move(columns), n);
    for (const auto& p : polys) m.add_row(p);
    return m;
}

namespace {

using SparseRow = CoeffMatrix::SparseRow;

const Scalar* row_at(const SparseRow& row, int col) {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const auto& e, int c) { return e.first < c; });
    if (it == row.end() || it->first != col) return nullptr;
    return &it->second;
}

// dst += c * src
SparseRow axpy(const SparseRow& dst, const Scalar& c, const SparseRow& src) {
    SparseRow out;
    out.reserve(dst.size() + src.size());
    std::size_t i = 0, j = 0;
    while (i < dst.size() || j < src.size()) {
        if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
            out.push_back(dst[i++]);
        } else if (i == dst.size() || src[j].first < dst[i].first) {
            Scalar v = c * src[j].second;
            if (!v.is_zero()) out.emplace_back(src[j].first, v);
            ++j;
        } else {
            Scalar v = dst[i].second + c * src[j].second;
            if (!v.is_zero()) out.emplace_back(dst[i].first, v);
            ++i;
            ++j;
        }
    }
    return out;
}

SparseRow scale(const SparseRow& row, const Scalar& c) {
    SparseRow out;
    out.reserve(row.size());
    for (const auto& [col, v] : row) out.emplace_back(col, v * c);
    return out;
}

} // namespace

EchelonResult echelon(const CoeffMatrix& m) {
    // working copy with provenance carried along
    std::vector<SparseRow> rows = m.rows();
    std::vector<std::string> prov = m.provenance();
    std::vector<SparseRow> basis;       // echelon rows, in pivot-column order
    std::vector<int> pivots;
    std::vector<std::string> basis_prov;

    for (std::size_t r = 0; r < rows.size(); ++r) {
        SparseRow row = std::move(rows[r]);
        // eliminate against the current basis
        for (std::size_t b = 0; b < basis.size(); ++b) {
            if (const Scalar* v = row_at(row, pivots[b])) {
                row = axpy(row, -(*v), basis[b]);
            }
        }
        if (row.empty()) continue;
        int piv = row.front().first;
        row = scale(row, row.front().second.inverse());
        // back-substitute into existing basis rows
        for (std::size_t b = 0; b < basis.size(); ++b) {
            if (const Scalar* v = row_at(basis[b], piv)) {
                basis[b] = axpy(basis[b], -(*v), row);
            }
        }
        // insert keeping pivot columns increasing
        std::size_t pos = 0;
        while (pos < basis.size() && pivots[pos] < piv) ++pos;
        basis.insert(basis.begin() + static_cast<std::ptrdiff_t>(pos), std::move(row));
        pivots.insert(pivots.begin() + static_cast<std::ptrdiff_t>(pos), piv);
        basis_prov.insert(basis_prov.begin() + static_cast<std::ptrdiff_t>(pos),
                          r < prov.size() ? prov[r] : std::string());
    }

    EchelonResult res;
    res.rank = static_cast<int>(basis.size());
    const auto& cols = m.columns();
    for (std::size_t b = 0; b < basis.size(); ++b) {
        res.pivot_column_indices.push_back(pivots[b]);
        res.pivot_columns.push_back(cols[static_cast<std::size_t>(pivots[b])]);
        LaurentPoly p(m.nvars());
        for (const auto& [c, v] : basis[b]) p.add_term(cols[static_cast<std::size_t>(c)], v);
        res.rows.push_back(std::move(p));
        res.provenance.push_back(basis_prov[b]);
    }
    return res;
}

std::vector<LaurentPoly> low_degree_members(const EchelonResult& e, int d) {
    std::vector<LaurentPoly> out;
    for (const auto& row : e.rows) {
        bool ok = true;
        for (const auto& [m, c] : row.terms()) {
            if (m.degree() > d) {
                ok = false;
                break;
            }
        }
        if (ok && !row.is_zero()) out.push_back(row);
    }
    return out;
}

std::vector<std::vector<Scalar>> kernel_basis(const CoeffMatrix& m) {
    EchelonResult e;
    {
        // echelon over column indices, remembering the reduced rows sparsely
        e = echelon(m);
    }
    std::size_t ncols = m.col_count();
    std::vector<int> pivot_of_col(ncols, -1);
    for (std::size_t b = 0; b < e.pivot_column_indices.size(); ++b) {
        pivot_of_col[static_cast<std::size_t>(e.pivot_column_indices[b])] = static_cast<int>(b);
    }
    std::vector<std::vector<Scalar>> out;
    for (std::size_t free_col = 0; free_col < ncols; ++free_col) {
        if (pivot_of_col[free_col] >= 0) continue;
        std::vector<Scalar> v(ncols);
        // free variable = 1; pivot variables read off the reduced rows
        Scalar one;
        // take the field from any matrix entry if available
        for (const auto& row : m.rows()) {
            if (!row.empty()) {
                one = Scalar::one(row.front().second.prime());
                break;
            }
        }
        if (one.is_zero()) one = Scalar::from_int(1);
        v[free_col] = one;
        for (std::size_t b = 0; b < e.rows.size(); ++b) {
            Scalar c = e.rows[b].coeff(m.columns()[free_col]);
            if (!c.is_zero()) {
                v[static_cast<std::size_t>(e.pivot_column_indices[b])] = -c;
            }
        }
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace toric
