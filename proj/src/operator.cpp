#include "mahler/operator.hpp"

#include "mahler/errors.hpp"

#include <algorithm>
#include <sstream>

namespace mahler {

namespace {

const Poly kZero;

void trim(std::vector<Poly>& c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

void same_radix(const MahlerOperator& a, const MahlerOperator& b) {
    if (a.radix() != b.radix()) fail(ErrorKind::unsupported_equation, "operators have different radices");
}

}  // namespace

MahlerOperator::MahlerOperator(int64_t radix, std::vector<Poly> coeffs) : radix_(radix), coeffs_(std::move(coeffs)) {
    if (radix < 2) fail(ErrorKind::malformed_input, "radix must be at least 2");
    trim(coeffs_);
}

MahlerOperator MahlerOperator::m_power(int64_t radix, int k) {
    std::vector<Poly> c(static_cast<size_t>(k) + 1);
    c.back() = Poly(1);
    return {radix, std::move(c)};
}

const Poly& MahlerOperator::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<size_t>(k)];
}

int MahlerOperator::mvaluation() const {
    for (size_t k = 0; k < coeffs_.size(); ++k)
        if (!coeffs_[k].is_zero()) return static_cast<int>(k);
    return -1;
}

int64_t MahlerOperator::degree() const {
    int64_t d = -1;
    for (const auto& c : coeffs_) d = std::max(d, c.degree());
    return d;
}

size_t MahlerOperator::term_count() const {
    size_t n = 0;
    for (const auto& c : coeffs_) n += c.size();
    return n;
}

MahlerOperator MahlerOperator::operator-() const {
    MahlerOperator r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

MahlerOperator operator+(const MahlerOperator& a, const MahlerOperator& b) {
    same_radix(a, b);
    std::vector<Poly> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
    return {a.radix_, std::move(c)};
}

MahlerOperator operator-(const MahlerOperator& a, const MahlerOperator& b) {
    same_radix(a, b);
    std::vector<Poly> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(static_cast<int>(k)) - b.coeff(static_cast<int>(k));
    return {a.radix_, std::move(c)};
}

MahlerOperator operator*(const Poly& p, const MahlerOperator& a) {
    std::vector<Poly> c = a.coeffs_;
    for (auto& x : c) x = p * x;
    return {a.radix_, std::move(c)};
}

MahlerOperator MahlerOperator::strip_mvaluation() const {
    int w = mvaluation();
    if (w <= 0) return *this;
    return {radix_, std::vector<Poly>(coeffs_.begin() + w, coeffs_.end())};
}

MahlerOperator MahlerOperator::times_m_power(int k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<Poly> c(static_cast<size_t>(k));
    c.insert(c.end(), coeffs_.begin(), coeffs_.end());
    return {radix_, std::move(c)};
}

std::string MahlerOperator::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = order(); k >= 0; --k) {
        const Poly& c = coeff(k);
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")";
        if (k >= 1) os << "*M";
        if (k >= 2) os << "^" << k;
    }
    return os.str();
}

int64_t PhiTransform::exponent(int64_t radix, int k, int64_t j) const {
    return checked_sub(checked_add(checked_mul(alpha, checked_pow(radix, k)), checked_mul(beta, j)), gamma);
}

void check_phi(const PhiTransform& phi, int64_t radix) {
    if (phi.beta <= 0) fail(ErrorKind::precondition_violation, "phi needs beta > 0");
    if (gcd_i64(phi.beta, radix) != 1) fail(ErrorKind::precondition_violation, "phi needs beta coprime to the radix");
}

MahlerOperator multiply(const MahlerOperator& a, const MahlerOperator& b) {
    same_radix(a, b);
    if (a.is_zero() || b.is_zero()) return MahlerOperator(a.radix(), {});
    std::vector<Poly> c(a.coeffs().size() + b.coeffs().size() - 1);
    for (int k = 0; k <= a.order(); ++k) {
        if (a.coeff(k).is_zero()) continue;
        for (int l = 0; l <= b.order(); ++l) {
            if (b.coeff(l).is_zero()) continue;
            Poly t = k == 0 ? b.coeff(l) : mahler_substitute(b.coeff(l), a.radix(), k);
            c[static_cast<size_t>(k + l)] += a.coeff(k) * t;
        }
    }
    return {a.radix(), std::move(c)};
}

std::vector<Rational> apply_truncated(const MahlerOperator& L, const std::vector<Rational>& y, int64_t T) {
    if (T < 0) fail(ErrorKind::precondition_violation, "negative truncation order");
    std::vector<Rational> out(static_cast<size_t>(T));
    Rational t;
    for (int k = 0; k <= L.order(); ++k) {
        int64_t bk = checked_pow(L.radix(), k);
        for (const auto& [j, c] : L.coeff(k).terms()) {
            if (j >= T) break;
            for (size_t n = 0; n < y.size(); ++n) {
                int64_t m = j + bk * static_cast<int64_t>(n);
                if (m >= T) break;
                if (y[n] == 0) continue;
                mpq_mul(t.get_mpq_t(), c.get_mpq_t(), y[n].get_mpq_t());
                out[static_cast<size_t>(m)] += t;
            }
        }
    }
    return out;
}

Poly apply(const MahlerOperator& L, const Poly& p) {
    Poly out;
    for (int k = 0; k <= L.order(); ++k) {
        if (L.coeff(k).is_zero()) continue;
        out += L.coeff(k) * (k == 0 ? p : mahler_substitute(p, L.radix(), k));
    }
    return out;
}

RightDivision right_divide(const MahlerOperator& A, const MahlerOperator& B) {
    same_radix(A, B);
    if (B.is_zero()) fail(ErrorKind::precondition_violation, "right division by the zero operator");
    const int64_t b = A.radix();
    Poly c(1);
    MahlerOperator Q(b, {});
    MahlerOperator R = A;
    const Poly& lb = B.coeff(B.order());
    while (!R.is_zero() && R.order() >= B.order()) {
        int k = R.order() - B.order();
        Poly lambda = k == 0 ? lb : mahler_substitute(lb, b, k);
        Poly mu = R.coeff(R.order());
        Poly g = gcd(lambda, mu);
        lambda = divexact(lambda, g);
        mu = divexact(mu, g);
        MahlerOperator term = mu * MahlerOperator::m_power(b, k);
        R = lambda * R - multiply(term, B);
        Q = lambda * Q + term;
        c = lambda * c;
    }
    return {c, Q, R};
}

MahlerOperator phi_apply(const MahlerOperator& L, const PhiTransform& phi) {
    check_phi(phi, L.radix());
    std::vector<Poly> c(L.coeffs().size());
    for (int k = 0; k <= L.order(); ++k) {
        std::vector<Poly::Term> terms;
        terms.reserve(L.coeff(k).size());
        for (const auto& [j, v] : L.coeff(k).terms()) {
            int64_t e = phi.exponent(L.radix(), k, j);
            if (e < 0) fail(ErrorKind::precondition_violation, "phi transform produces a negative exponent");
            terms.emplace_back(e, v);
        }
        c[static_cast<size_t>(k)] = Poly::from_terms(std::move(terms));
    }
    return {L.radix(), std::move(c)};
}

MahlerOperator operator_section(const MahlerOperator& L, int64_t i) {
    const int64_t b = L.radix();
    if (i < 0 || i >= b) fail(ErrorKind::precondition_violation, "section index out of range");
    std::vector<Poly> c;
    for (int k = 1; k <= L.order(); ++k) {
        std::vector<Poly::Term> terms;
        for (const auto& [j, v] : L.coeff(k).terms())
            if (j % b == i) terms.emplace_back(j / b, v);
        c.push_back(Poly::from_terms(std::move(terms)));
    }
    return {b, std::move(c)};
}

MahlerOperator interreduce(const MahlerOperator& L1, const MahlerOperator& L2) {
    if (L1.is_zero() || L2.is_zero() || L1.mvaluation() != 0 || L2.mvaluation() != 0)
        fail(ErrorKind::precondition_violation, "interreduce needs nonzero operators of M-valuation 0");
    return L2.coeff(0) * L1 - L1.coeff(0) * L2;
}

ContentSplit primitive_part(const MahlerOperator& L) {
    if (L.is_zero()) fail(ErrorKind::precondition_violation, "primitive part of the zero operator");
    Poly g;
    for (const auto& c : L.coeffs()) g = gcd(g, c);
    std::vector<Poly> prim;
    for (const auto& c : L.coeffs()) prim.push_back(c.is_zero() ? c : divexact(c, g));
    Rational lc = prim.back().lc();
    Rational inv = 1 / lc;
    for (auto& p : prim) p *= inv;
    return {g * lc, MahlerOperator(L.radix(), std::move(prim))};
}

}  // namespace mahler
