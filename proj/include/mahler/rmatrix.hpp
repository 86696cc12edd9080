#pragma once

#include "mahler/linalg.hpp"
#include "mahler/operator.hpp"

#include <utility>
#include <vector>

namespace mahler {

using SparseRow = std::vector<std::pair<int64_t, Rational>>;

struct RowSparseMatrix {
    int64_t width = 0;
    std::vector<int64_t> row_labels;
    std::vector<SparseRow> rows;
};

struct KernelBasis {
    int64_t width = 0;
    Matrix vectors;  // echelon, pivots at the first nonzero index
};

enum class Orientation { lower, upper };

// Rows m_i of R(phi(L)) restricted to columns 0 <= n < w.
RowSparseMatrix build_submatrix(const MahlerOperator& L, const PhiTransform& phi, int64_t w,
                                const std::vector<int64_t>& E);

// R_{m,n} by direct summation over the support of L.
Rational entry_oracle(const MahlerOperator& L, const PhiTransform& phi, int64_t m, int64_t n);

// Basis of {y : deg y < w, phi(L) y = 0 mod x^h}; E selects a triangular
// square submatrix with at most r zeros on its diagonal.
KernelBasis solve_prescribed(const MahlerOperator& L, const PhiTransform& phi, int64_t h, int64_t w,
                             const std::vector<int64_t>& E, Orientation orientation);

// Extends an approximate solution y_0..y_{floor(nu~)} by n coefficients.
std::vector<Rational> prolong(const MahlerOperator& L, const PhiTransform& phi, const std::vector<Rational>& approx,
                              int64_t n);

// Valuations v~_k of phi(L) (max int64 for zero coefficients) and the
// pair (floor nu~, floor mu~).
struct TransformedData {
    std::vector<int64_t> valuations;
    Rational nu;
    Rational mu;
};

TransformedData transformed_data(const MahlerOperator& L, const PhiTransform& phi);

// Terms of phi(L) y with exponent below h, y dense.
SparseRow residual(const MahlerOperator& L, const PhiTransform& phi, const std::vector<Rational>& y, int64_t h);

}  // namespace mahler
