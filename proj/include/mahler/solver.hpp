#pragma once

#include "mahler/operator.hpp"

#include <utility>
#include <vector>

namespace mahler {

// c_0 + c_1 x + ... + c_{T-1} x^{T-1} + O(x^T), T = truncation_order.
struct TruncatedSeries {
    std::vector<Rational> coefficients;
    int64_t truncation_order = 0;
};

// sum c x^e over `terms` + O(x^truncation_order); exponent denominators divide `ramification`.
struct PuiseuxSeries {
    int64_t ramification = 1;
    std::vector<std::pair<Rational, Rational>> terms;
    Rational truncation_order;
};

struct PuiseuxBasis {
    int64_t ramification = 1;
    std::vector<PuiseuxSeries> elements;
};

struct SolveOptions {
    // Replace an operator with l_0 = 0 by its normalization instead of failing.
    bool auto_normalize = true;
};

// The operator the series and polynomial solvers actually work on.
MahlerOperator trailing_ready(const MahlerOperator& L, const SolveOptions& opts = {});

std::vector<TruncatedSeries> approximate_series_basis(const MahlerOperator& L, const SolveOptions& opts = {});
std::vector<TruncatedSeries> series_basis(const MahlerOperator& L, int64_t n, const SolveOptions& opts = {});
std::vector<Poly> polynomial_solutions_bounded(const MahlerOperator& L, int64_t w, const SolveOptions& opts = {});
std::vector<Poly> polynomial_basis(const MahlerOperator& L, const SolveOptions& opts = {});
PuiseuxBasis puiseux_basis(const MahlerOperator& L, int64_t N, int64_t n);
PuiseuxBasis puiseux_basis_all(const MahlerOperator& L, int64_t n);

// Extends a prefix of a power series solution to `length` coefficients,
// checking that the prefix is consistent with some solution.
std::vector<Rational> extend_series(const MahlerOperator& L, const std::vector<Rational>& prefix, int64_t length,
                                    const SolveOptions& opts = {});

PuiseuxSeries to_puiseux(const TruncatedSeries& s);

// Verifies L y = O(x^e) for e = min_k (v_k + b^k T), the order up to which
// the unknown tail of y cannot interfere, and returns e. Throws
// invariant_violation on a nonzero residual term below e.
Rational certified_order(const MahlerOperator& L, const PuiseuxSeries& y);

}  // namespace mahler
