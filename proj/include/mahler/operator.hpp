#pragma once

#include "mahler/poly.hpp"

#include <string>
#include <vector>

namespace mahler {

// L = sum_k coeffs[k] M^k with M x = x^b M. The zero operator has no
// coefficients; otherwise the last coefficient is nonzero.
class MahlerOperator {
public:
    MahlerOperator() = default;
    MahlerOperator(int64_t radix, std::vector<Poly> coeffs);

    static MahlerOperator identity(int64_t radix) { return {radix, {Poly(1)}}; }
    static MahlerOperator m_power(int64_t radix, int k);
    static MahlerOperator scalar(int64_t radix, const Poly& p) { return {radix, {p}}; }

    int64_t radix() const { return radix_; }
    bool is_zero() const { return coeffs_.empty(); }
    // -1 for the zero operator.
    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Poly>& coeffs() const { return coeffs_; }
    const Poly& coeff(int k) const;
    // Least k with a nonzero coefficient; -1 for the zero operator.
    int mvaluation() const;
    // max_k deg l_k; -1 for the zero operator.
    int64_t degree() const;
    size_t term_count() const;

    MahlerOperator operator-() const;
    friend MahlerOperator operator+(const MahlerOperator& a, const MahlerOperator& b);
    friend MahlerOperator operator-(const MahlerOperator& a, const MahlerOperator& b);
    // Left multiplication by a polynomial.
    friend MahlerOperator operator*(const Poly& p, const MahlerOperator& a);
    friend bool operator==(const MahlerOperator& a, const MahlerOperator& b) {
        return a.radix_ == b.radix_ && a.coeffs_ == b.coeffs_;
    }

    // Removes the right factor M^w (w = M-valuation).
    MahlerOperator strip_mvaluation() const;
    // Right multiplication by M^k.
    MahlerOperator times_m_power(int k) const;

    std::string to_string() const;

private:
    int64_t radix_ = 2;
    std::vector<Poly> coeffs_;
};

struct PhiTransform {
    int64_t alpha = 0;
    int64_t beta = 1;
    int64_t gamma = 0;

    // Exponent of phi(x^j M^k).
    int64_t exponent(int64_t radix, int k, int64_t j) const;
};

void check_phi(const PhiTransform& phi, int64_t radix);

MahlerOperator multiply(const MahlerOperator& a, const MahlerOperator& b);

// Coefficients of L y modulo x^T for y = sum y_n x^n (dense).
std::vector<Rational> apply_truncated(const MahlerOperator& L, const std::vector<Rational>& y, int64_t T);
// Exact L p.
Poly apply(const MahlerOperator& L, const Poly& p);

struct RightDivision {
    Poly multiplier;
    MahlerOperator quotient;
    MahlerOperator remainder;
};

// c A = Q B + R with order(R) < order(B).
RightDivision right_divide(const MahlerOperator& A, const MahlerOperator& B);

MahlerOperator phi_apply(const MahlerOperator& L, const PhiTransform& phi);
MahlerOperator operator_section(const MahlerOperator& L, int64_t i);
MahlerOperator interreduce(const MahlerOperator& L1, const MahlerOperator& L2);

struct ContentSplit {
    Poly content;
    MahlerOperator primitive;
};

// L = content * primitive, primitive with coprime coefficients and monic l_r.
ContentSplit primitive_part(const MahlerOperator& L);

}  // namespace mahler
