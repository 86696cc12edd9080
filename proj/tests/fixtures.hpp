#pragma once

#include "mahler/operator.hpp"

#include <initializer_list>
#include <random>
#include <utility>

namespace fixtures {

using mahler::MahlerOperator;
using mahler::Poly;
using mahler::Rational;

// Integer-coefficient polynomial from (exponent, coefficient) pairs.
Poly P(std::initializer_list<std::pair<int64_t, long>> terms);
Poly prod(std::initializer_list<Poly> factors);

MahlerOperator running_example();
MahlerOperator running_transformed();
MahlerOperator order11_example();
MahlerOperator order11_transformed();
MahlerOperator rational_example();
MahlerOperator rational_example_cleared();
MahlerOperator reduction_example();
MahlerOperator reduction_result();
MahlerOperator reduction_result_primitive();

// Hand-rolled generators for property tests.
struct Gen {
    std::mt19937_64 rng;
    explicit Gen(uint64_t seed) : rng(seed) {}

    int64_t range(int64_t lo, int64_t hi) { return std::uniform_int_distribution<int64_t>(lo, hi)(rng); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng); }
    Rational small_rational(int64_t mag = 3);
    // Polynomial of degree <= deg with about `density` nonzero terms.
    Poly poly(int64_t deg, double density = 0.6, bool nonzero = true);
    // Operator of the given radix and order with degrees <= deg.
    MahlerOperator op(int64_t radix, int order, int64_t deg, bool trailing_nonzero = true, double density = 0.6);
    // Left multiple A*K of order <= max_order (>= 1) where K is a random
    // order-1 factor with a planted solution: a polynomial, a rational
    // function, or a valuation-0 series (constant terms cancel).
    MahlerOperator planted(int64_t radix, int max_order, int64_t deg);
};

}  // namespace fixtures
