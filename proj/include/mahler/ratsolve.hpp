#pragma once

#include "mahler/operator.hpp"
#include "mahler/solver.hpp"

#include <optional>
#include <vector>

namespace mahler {

// numerator / (x^x_power * denominator) in lowest terms, denominator
// monic with nonzero constant term.
struct RationalFunction {
    Poly numerator;
    int64_t x_power = 0;
    Poly denominator{1};

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.numerator == b.numerator && a.x_power == b.x_power && a.denominator == b.denominator;
    }
};

RationalFunction make_rational_function(Poly p, int64_t x_power, Poly q);
// Exact check that L f = 0.
bool is_rational_solution(const MahlerOperator& L, const RationalFunction& f);
// Coefficients of f as a power series; f must have no pole at 0.
std::vector<Rational> series_expansion(const RationalFunction& f, int64_t length);

struct DenominatorBound {
    std::vector<Poly> u;  // u_1, ..., u_t and the final unit
    Poly u_tilde;
    Poly q_star;
    int64_t v_bar = 0;
};

DenominatorBound denominator_bound(const MahlerOperator& L);
Poly alt_denominator_bound(const MahlerOperator& L);

struct RationalOptions {
    bool auto_normalize = true;
    // Return constants directly when every degree is below b^{r-1}.
    bool early_exit = true;
};

std::vector<RationalFunction> rational_basis(const MahlerOperator& L, const RationalOptions& opts = {});

// Basis of solutions in Q(x^{1/N'}); elements are written in t = x^{1/ramification}.
struct RamifiedRationalBasis {
    int64_t ramification = 1;
    std::vector<RationalFunction> elements;
};

RamifiedRationalBasis ramified_rational_basis(const MahlerOperator& L);

struct TranscendenceVerdict {
    enum class Verdict { rational, transcendental } verdict = Verdict::transcendental;
    enum class Method { rational_basis, bell_coons } method = Method::rational_basis;
    std::optional<RationalFunction> witness;
};

TranscendenceVerdict transcendence_test(const MahlerOperator& L, const std::vector<Rational>& prefix);

struct BellCoonsSizes {
    int64_t kappa = 0;
    int64_t B = 0;
    int64_t needed() const { return kappa + B + 1; }
};

BellCoonsSizes bell_coons_sizes(const MahlerOperator& L);
// True when the Hankel matrix (y_{i+j}) has full rank kappa+1 (transcendental).
bool bell_coons_rank(const MahlerOperator& L, const std::vector<Rational>& series);

}  // namespace mahler
