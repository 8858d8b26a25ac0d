#include "eadual/linalg.hpp"

#include <algorithm>
#include <cassert>

namespace eadual {

namespace {

// Forward elimination with back-substitution; also records the original row
// index combination for each reduced row when tracking is requested.
struct Echelon {
    Matrix rows;
    std::vector<std::size_t> pivot_cols;
    Matrix combos;  // combos[i] = multipliers over the input rows giving rows[i]
};

Echelon reduce(Matrix rows, bool track) {
    Echelon e;
    std::size_t nrows = rows.size();
    Matrix combos;
    if (track) {
        combos.resize(nrows);
        for (std::size_t i = 0; i < nrows; ++i) combos[i] = unit_vec(nrows, i);
    }
    std::size_t ncols = 0;
    for (const Vec& r : rows) ncols = std::max(ncols, r.size());
    for (Vec& r : rows) r.resize(ncols, Rat(0));
    std::size_t lead = 0;
    for (std::size_t col = 0; col < ncols && lead < nrows; ++col) {
        std::size_t piv = lead;
        while (piv < nrows && rows[piv][col] == 0) ++piv;
        if (piv == nrows) continue;
        std::swap(rows[piv], rows[lead]);
        if (track) std::swap(combos[piv], combos[lead]);
        Rat inv = Rat(1) / rows[lead][col];
        rows[lead] = scale(inv, rows[lead]);
        if (track) combos[lead] = scale(inv, combos[lead]);
        for (std::size_t i = 0; i < nrows; ++i) {
            if (i == lead || rows[i][col] == 0) continue;
            Rat f = rows[i][col];
            rows[i] = sub(rows[i], scale(f, rows[lead]));
            if (track) combos[i] = sub(combos[i], scale(f, combos[lead]));
        }
        e.pivot_cols.push_back(col);
        ++lead;
    }
    e.rows = std::move(rows);
    e.combos = std::move(combos);
    return e;
}

}  // namespace

Matrix rref(Matrix rows) {
    Echelon e = reduce(std::move(rows), false);
    e.rows.resize(e.pivot_cols.size());
    return e.rows;
}

std::size_t rank(const Matrix& rows) {
    Echelon e = reduce(rows, false);
    return e.pivot_cols.size();
}

Matrix kernel_basis(const Matrix& rows, std::size_t ncols) {
    Matrix padded = rows;
    for (Vec& r : padded) r.resize(ncols, Rat(0));
    Echelon e = reduce(std::move(padded), false);
    std::vector<bool> is_pivot(ncols, false);
    for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
    Matrix basis;
    for (std::size_t free_col = 0; free_col < ncols; ++free_col) {
        if (is_pivot[free_col]) continue;
        Vec v = zero_vec(ncols);
        v[free_col] = 1;
        for (std::size_t i = 0; i < e.pivot_cols.size(); ++i)
            v[e.pivot_cols[i]] = -e.rows[i][free_col];
        basis.push_back(std::move(v));
    }
    return basis;
}

LinearSolution solve_linear(const Matrix& rows, const Vec& rhs) {
    if (rows.size() != rhs.size()) throw DimensionMismatch("solve_linear: row/rhs count mismatch");
    std::size_t ncols = 0;
    for (const Vec& r : rows) {
        if (!rows.empty() && r.size() != rows[0].size())
            throw DimensionMismatch("solve_linear: ragged matrix");
        ncols = std::max(ncols, r.size());
    }
    Matrix aug = rows;
    for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(rhs[i]);
    Echelon e = reduce(std::move(aug), true);

    LinearSolution out;
    // Inconsistent iff some reduced row has pivot in the rhs column.
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) {
        if (e.pivot_cols[i] == ncols) {
            out.inconsistency = e.combos[i];
            return out;
        }
    }
    Vec x = zero_vec(ncols);
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i)
        x[e.pivot_cols[i]] = e.rows[i][ncols];
    out.particular = std::move(x);
    out.kernel = kernel_basis(rows, ncols);
    return out;
}

Vec mat_apply(const Matrix& rows, const Vec& x) {
    Vec y(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) y[i] = dot(rows[i], x);
    return y;
}

Matrix mat_transpose(const Matrix& rows, std::size_t ncols) {
    Matrix t(ncols, Vec(rows.size(), Rat(0)));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) t[j][i] = rows[i][j];
    return t;
}

Matrix mat_multiply(const Matrix& a, const Matrix& b) {
    std::size_t bcols = b.empty() ? 0 : b[0].size();
    Matrix c(a.size(), Vec(bcols, Rat(0)));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != b.size()) throw DimensionMismatch("mat_multiply: shape mismatch");
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < bcols; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    }
    return c;
}

std::optional<Matrix> mat_inverse(const Matrix& rows) {
    std::size_t n = rows.size();
    Matrix aug = rows;
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) throw DimensionMismatch("mat_inverse: not square");
        Vec e = unit_vec(n, i);
        aug[i].insert(aug[i].end(), e.begin(), e.end());
    }
    Echelon e = reduce(std::move(aug), false);
    if (e.pivot_cols.size() != n) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i)
        if (e.pivot_cols[i] != i) return std::nullopt;
    Matrix inv(n);
    for (std::size_t i = 0; i < n; ++i)
        inv[i] = Vec(e.rows[i].begin() + n, e.rows[i].end());
    return inv;
}

Matrix identity_matrix(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m[i] = unit_vec(n, i);
    return m;
}

}  // namespace eadual
