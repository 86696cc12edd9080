#pragma once

#include "mahler/number.hpp"

#include <vector>

namespace mahler {

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;  // row-major

enum class PivotSide { first, last };

// Reduced echelon form of the span of `vectors`: pivots monic, other
// vectors zero at each pivot, zero vectors dropped, sorted by pivot index.
Matrix echelon_basis(Matrix vectors, PivotSide side = PivotSide::first);

// Exact rank by Gaussian elimination.
size_t rank(Matrix rows);

// Basis of {x : A x = 0} for A with `cols` columns, in echelon form.
Matrix kernel(const Matrix& rows, size_t cols);

// Incremental row reduction used when rows arrive one at a time.
class RowReducer {
public:
    explicit RowReducer(size_t cols) : cols_(cols) {}
    // Returns false once the row space is full (kernel is trivial).
    bool add(Vector row);
    Matrix kernel() const;
    size_t rank() const { return pivots_.size(); }

private:
    size_t cols_;
    std::vector<size_t> pivots_;
    Matrix rows_;  // reduced, rows_[i][pivots_[i]] = 1
};

}  // namespace mahler
