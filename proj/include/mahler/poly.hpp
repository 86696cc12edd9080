#pragma once

#include "mahler/number.hpp"

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace mahler {

// Sparse univariate polynomial over Q. Terms are kept sorted by exponent
// with no zero coefficients; the zero polynomial has no terms.
class Poly {
public:
    using Term = std::pair<int64_t, Rational>;

    Poly() = default;
    Poly(const Rational& c);
    Poly(long c) : Poly(Rational(c)) {}

    static Poly monomial(int64_t e, const Rational& c = 1);
    static Poly x() { return monomial(1); }
    // Sorts, merges equal exponents and drops zeros.
    static Poly from_terms(std::vector<Term> terms);
    // Coefficients c[0] + c[1] x + ...
    static Poly from_dense(const std::vector<Rational>& c);

    const std::vector<Term>& terms() const { return terms_; }
    size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }

    // -1 for the zero polynomial.
    int64_t degree() const { return terms_.empty() ? -1 : terms_.back().first; }
    // max int64 for the zero polynomial.
    int64_t valuation() const {
        return terms_.empty() ? std::numeric_limits<int64_t>::max() : terms_.front().first;
    }
    Rational lc() const { return terms_.empty() ? Rational(0) : terms_.back().second; }
    Rational tc() const { return terms_.empty() ? Rational(0) : terms_.front().second; }
    Rational coeff(int64_t e) const;
    Rational eval(const Rational& x) const;
    std::vector<Rational> dense() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

    // Multiplication by x^k (k may be negative if every exponent stays >= 0).
    Poly shift(int64_t k) const;
    // Drops terms of exponent >= n.
    Poly truncate(int64_t n) const;
    // x -> x^m
    Poly compose_power(int64_t m) const;
    Poly derivative() const;
    Poly monic() const;

    std::string to_string(const std::string& var = "x") const;

private:
    std::vector<Term> terms_;
};

struct DivMod {
    Poly quotient;
    Poly remainder;
};

DivMod divmod(const Poly& a, const Poly& b);
// Throws Error(inexact_division) when b does not divide a.
Poly divexact(const Poly& a, const Poly& b);
bool divides(const Poly& d, const Poly& a);
Poly pow(const Poly& p, int64_t e);

// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
// Monic lcm; zero if either argument is zero.
Poly lcm(const Poly& a, const Poly& b);
// Positive rational c such that p / c has coprime integer coefficients
// and a positive leading coefficient is obtained after sign adjustment.
Rational content(const Poly& p);
Poly primitive_part(const Poly& p);

// M^i p = p(x^{b^i}).
Poly mahler_substitute(const Poly& p, int64_t b, int64_t i = 1);
// b-sections (f_0, ..., f_{b-1}) with p = sum x^i f_i(x^b). Radix 1 returns {p}.
std::vector<Poly> poly_sections(const Poly& p, int64_t b);
// Res_y(y^B - x, p(y)) as a B x B determinant over Q[x].
Poly graeffe_radix(const Poly& p, int64_t B);
// G^i p = Res_y(y^{b^i} - x, p(y)), obtained by iterating the radix-b determinant.
Poly graeffe(const Poly& p, int64_t b, int64_t i = 1);
Poly graeffe_monic(const Poly& p, int64_t b, int64_t i = 1);
// lcm(a, Ma, ..., M^{r-1} a), monic.
Poly lcm_orbit(const Poly& a, int64_t b, int64_t r);

}  // namespace mahler
