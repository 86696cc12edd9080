#include "mahler/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace mahler {

namespace {

size_t pivot_of(const Vector& v, PivotSide side) {
    if (side == PivotSide::first) {
        for (size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) return i;
    } else {
        for (size_t i = v.size(); i-- > 0;)
            if (v[i] != 0) return i;
    }
    return v.size();
}

void axpy(Vector& y, const Rational& a, const Vector& x) {
    Rational t;
    for (size_t i = 0; i < y.size(); ++i) {
        if (x[i] == 0) continue;
        mpq_mul(t.get_mpq_t(), a.get_mpq_t(), x[i].get_mpq_t());
        y[i] -= t;
    }
}

}  // namespace

Matrix echelon_basis(Matrix vectors, PivotSide side) {
    Matrix basis;
    std::vector<size_t> piv;
    for (auto& v : vectors) {
        for (size_t i = 0; i < basis.size(); ++i)
            if (v[piv[i]] != 0) axpy(v, Rational(v[piv[i]]), basis[i]);
        size_t p = pivot_of(v, side);
        if (p == v.size()) continue;
        Rational inv = 1 / v[p];
        for (auto& x : v) x *= inv;
        for (size_t i = 0; i < basis.size(); ++i)
            if (basis[i][p] != 0) axpy(basis[i], Rational(basis[i][p]), v);
        basis.push_back(std::move(v));
        piv.push_back(p);
    }
    std::vector<size_t> order(basis.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return piv[a] < piv[b]; });
    Matrix out;
    for (size_t i : order) out.push_back(std::move(basis[i]));
    return out;
}

size_t rank(Matrix rows) {
    return echelon_basis(std::move(rows)).size();
}

bool RowReducer::add(Vector row) {
    if (pivots_.size() == cols_) return false;
    for (size_t i = 0; i < rows_.size(); ++i)
        if (row[pivots_[i]] != 0) axpy(row, Rational(row[pivots_[i]]), rows_[i]);
    size_t p = pivot_of(row, PivotSide::first);
    if (p < row.size()) {
        Rational inv = 1 / row[p];
        for (auto& x : row) x *= inv;
        for (auto& r : rows_)
            if (r[p] != 0) axpy(r, Rational(r[p]), row);
        rows_.push_back(std::move(row));
        pivots_.push_back(p);
    }
    return pivots_.size() < cols_;
}

Matrix RowReducer::kernel() const {
    std::vector<int> pivot_row(cols_, -1);
    for (size_t i = 0; i < pivots_.size(); ++i) pivot_row[pivots_[i]] = static_cast<int>(i);
    Matrix out;
    for (size_t f = 0; f < cols_; ++f) {
        if (pivot_row[f] >= 0) continue;
        Vector v(cols_);
        v[f] = 1;
        for (size_t i = 0; i < pivots_.size(); ++i) v[pivots_[i]] = -rows_[i][f];
        out.push_back(std::move(v));
    }
    return echelon_basis(std::move(out));
}

Matrix kernel(const Matrix& rows, size_t cols) {
    RowReducer red(cols);
    for (const auto& r : rows)
        if (!red.add(r)) break;
    return red.kernel();
}

}  // namespace mahler
