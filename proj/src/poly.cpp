#include "mahler/poly.hpp"

#include "mahler/errors.hpp"

#include <algorithm>
#include <sstream>

namespace mahler {

Poly::Poly(const Rational& c) {
    if (c != 0) terms_.emplace_back(0, c);
}

Poly Poly::monomial(int64_t e, const Rational& c) {
    if (e < 0) fail(ErrorKind::precondition_violation, "negative exponent in monomial");
    Poly p;
    if (c != 0) p.terms_.emplace_back(e, c);
    return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
    std::stable_sort(terms.begin(), terms.end(),
                     [](const Term& a, const Term& b) { return a.first < b.first; });
    Poly p;
    for (auto& t : terms) {
        if (t.first < 0) fail(ErrorKind::precondition_violation, "negative exponent in polynomial");
        if (!p.terms_.empty() && p.terms_.back().first == t.first) {
            p.terms_.back().second += t.second;
            if (p.terms_.back().second == 0) p.terms_.pop_back();
        } else if (t.second != 0) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

Poly Poly::from_dense(const std::vector<Rational>& c) {
    Poly p;
    for (size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) p.terms_.emplace_back(static_cast<int64_t>(i), c[i]);
    return p;
}

Rational Poly::coeff(int64_t e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, int64_t v) { return t.first < v; });
    if (it != terms_.end() && it->first == e) return it->second;
    return 0;
}

Rational Poly::eval(const Rational& x) const {
    Rational acc = 0;
    int64_t prev = degree();
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        for (int64_t k = it->first; k < prev; ++k) acc *= x;
        acc += it->second;
        prev = it->first;
    }
    for (int64_t k = 0; k < prev; ++k) acc *= x;
    return acc;
}

std::vector<Rational> Poly::dense() const {
    std::vector<Rational> c(static_cast<size_t>(degree() + 1));
    for (const auto& [e, v] : terms_) c[static_cast<size_t>(e)] = v;
    return c;
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (auto& t : p.terms_) t.second = -t.second;
    return p;
}

namespace {

std::vector<Poly::Term> merge(const std::vector<Poly::Term>& a, const std::vector<Poly::Term>& b, bool subtract) {
    std::vector<Poly::Term> out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, subtract ? Rational(-b[j].second) : b[j].second);
            ++j;
        } else {
            Rational s = subtract ? Rational(a[i].second - b[j].second) : Rational(a[i].second + b[j].second);
            if (s != 0) out.emplace_back(a[i].first, std::move(s));
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

Poly& Poly::operator+=(const Poly& o) {
    terms_ = merge(terms_, o.terms_, false);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    terms_ = merge(terms_, o.terms_, true);
    return *this;
}

Poly& Poly::operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
}

Poly& Poly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.second *= c;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    int64_t lo = checked_add(a.valuation(), b.valuation());
    int64_t hi = checked_add(a.degree(), b.degree());
    double pairs = static_cast<double>(a.size()) * static_cast<double>(b.size());
    Poly out;
    if (static_cast<double>(hi - lo) <= 2.0 * pairs + 64.0) {
        std::vector<Rational> acc(static_cast<size_t>(hi - lo + 1));
        Rational t;
        for (const auto& [ea, ca] : a.terms()) {
            for (const auto& [eb, cb] : b.terms()) {
                mpq_mul(t.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
                acc[static_cast<size_t>(ea + eb - lo)] += t;
            }
        }
        for (size_t i = 0; i < acc.size(); ++i)
            if (acc[i] != 0) out.terms_.emplace_back(lo + static_cast<int64_t>(i), std::move(acc[i]));
        return out;
    }
    std::vector<Poly::Term> raw;
    raw.reserve(a.size() * b.size());
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) raw.emplace_back(ea + eb, ca * cb);
    return Poly::from_terms(std::move(raw));
}

Poly Poly::shift(int64_t k) const {
    Poly p = *this;
    for (auto& t : p.terms_) {
        t.first = checked_add(t.first, k);
        if (t.first < 0) fail(ErrorKind::precondition_violation, "shift produces a negative exponent");
    }
    return p;
}

Poly Poly::truncate(int64_t n) const {
    Poly p;
    for (const auto& t : terms_) {
        if (t.first >= n) break;
        p.terms_.push_back(t);
    }
    return p;
}

Poly Poly::compose_power(int64_t m) const {
    if (m < 1) fail(ErrorKind::precondition_violation, "compose_power needs m >= 1");
    Poly p = *this;
    for (auto& t : p.terms_) t.first = checked_mul(t.first, m);
    return p;
}

Poly Poly::derivative() const {
    Poly p;
    for (const auto& [e, c] : terms_)
        if (e > 0) p.terms_.emplace_back(e - 1, c * Rational(static_cast<long>(e)));
    return p;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    Rational inv = 1 / lc();
    return *this * inv;
}

std::string Poly::to_string(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational a = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool unit = (a == 1);
        if (!unit || e == 0) os << mahler::to_string(a);
        if (e > 0) {
            if (!unit) os << "*";
            os << var;
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

DivMod divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) fail(ErrorKind::precondition_violation, "division by the zero polynomial");
    int64_t db = b.degree();
    if (a.degree() < db) return {Poly(), a};
    Rational inv = 1 / b.lc();
    // dense long division; operands at this scale are small or dense anyway
    if (a.degree() - a.valuation() <= 4 * static_cast<int64_t>(a.size()) + 256) {
        int64_t da = a.degree();
        std::vector<Rational> r = a.dense();
        std::vector<Rational> q(static_cast<size_t>(da - db + 1));
        Rational t;
        for (int64_t i = da - db; i >= 0; --i) {
            Rational& lead = r[static_cast<size_t>(i + db)];
            if (lead == 0) continue;
            Rational f = lead * inv;
            for (const auto& [e, c] : b.terms()) {
                mpq_mul(t.get_mpq_t(), f.get_mpq_t(), c.get_mpq_t());
                r[static_cast<size_t>(i + e)] -= t;
            }
            q[static_cast<size_t>(i)] = f;
        }
        r.resize(static_cast<size_t>(db));
        return {Poly::from_dense(q), Poly::from_dense(r)};
    }
    Poly r = a;
    std::vector<Poly::Term> q;
    while (!r.is_zero() && r.degree() >= db) {
        int64_t e = r.degree() - db;
        Rational f = r.lc() * inv;
        q.emplace_back(e, f);
        r -= (b * f).shift(e);
    }
    return {Poly::from_terms(std::move(q)), r};
}

Poly divexact(const Poly& a, const Poly& b) {
    DivMod qr = divmod(a, b);
    if (!qr.remainder.is_zero()) fail(ErrorKind::inexact_division, "polynomial division is not exact");
    return qr.quotient;
}

bool divides(const Poly& d, const Poly& a) {
    if (d.is_zero()) return a.is_zero();
    return divmod(a, d).remainder.is_zero();
}

Poly pow(const Poly& p, int64_t e) {
    if (e < 0) fail(ErrorKind::precondition_violation, "negative power of a polynomial");
    Poly result(1), base = p;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly u = a.monic(), v = b.monic();
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        Poly r = divmod(u, v).remainder.monic();
        u = std::move(v);
        v = std::move(r);
    }
    return u;
}

Poly lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    return (divexact(a, gcd(a, b)) * b).monic();
}

Rational content(const Poly& p) {
    if (p.is_zero()) return 0;
    Integer g = 0, l = 1;
    for (const auto& [e, c] : p.terms()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    }
    Rational r(g, l);
    r.canonicalize();
    if (p.lc() < 0) r = -r;
    return r;
}

Poly primitive_part(const Poly& p) {
    if (p.is_zero()) return p;
    return p * Rational(1 / content(p));
}

Poly mahler_substitute(const Poly& p, int64_t b, int64_t i) {
    if (b < 2 || i < 1) fail(ErrorKind::precondition_violation, "mahler_substitute needs b >= 2 and i >= 1");
    return p.compose_power(checked_pow(b, i));
}

std::vector<Poly> poly_sections(const Poly& p, int64_t b) {
    if (b < 1) fail(ErrorKind::precondition_violation, "section radix must be positive");
    std::vector<std::vector<Poly::Term>> parts(static_cast<size_t>(b));
    for (const auto& [e, c] : p.terms()) parts[static_cast<size_t>(e % b)].emplace_back(e / b, c);
    std::vector<Poly> out;
    out.reserve(parts.size());
    for (auto& t : parts) out.push_back(Poly::from_terms(std::move(t)));
    return out;
}

namespace {

// Fraction-free (Bareiss) determinant of a square matrix over Q[x].
Poly bareiss_det(std::vector<std::vector<Poly>> a) {
    size_t n = a.size();
    if (n == 0) return Poly(1);
    Poly prev(1);
    bool negate = false;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            size_t piv = k + 1;
            while (piv < n && a[piv][k].is_zero()) ++piv;
            if (piv == n) return Poly();
            std::swap(a[k], a[piv]);
            negate = !negate;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                a[i][j] = divexact(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
            a[i][k] = Poly();
        }
        prev = a[k][k];
    }
    Poly d = a[n - 1][n - 1];
    return negate ? -d : d;
}

}  // namespace

Poly graeffe_radix(const Poly& p, int64_t B) {
    if (B < 1) fail(ErrorKind::precondition_violation, "Graeffe radix must be positive");
    // multiplication by p(y) on Q[x][y]/(y^B - x) with basis 1, y, ..., y^{B-1}
    std::vector<Poly> f = poly_sections(p, B);
    size_t n = static_cast<size_t>(B);
    std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
    for (size_t j = 0; j < n; ++j) {
        for (size_t i = 0; i < n; ++i) {
            if (f[i].is_zero()) continue;
            size_t row = i + j;
            if (row >= n) m[row - n][j] = f[i].shift(1);
            else m[row][j] = f[i];
        }
    }
    return bareiss_det(std::move(m));
}

Poly graeffe(const Poly& p, int64_t b, int64_t i) {
    if (b < 2 || i < 1) fail(ErrorKind::precondition_violation, "graeffe needs b >= 2 and i >= 1");
    Poly g = p;
    for (int64_t k = 0; k < i; ++k) g = graeffe_radix(g, b);
    return g;
}

Poly graeffe_monic(const Poly& p, int64_t b, int64_t i) { return graeffe(p, b, i).monic(); }

Poly lcm_orbit(const Poly& a, int64_t b, int64_t r) {
    if (a.is_zero()) fail(ErrorKind::precondition_violation, "lcm_orbit of the zero polynomial");
    if (r < 1) fail(ErrorKind::precondition_violation, "lcm_orbit needs r >= 1");
    Poly acc = a.monic();
    Poly cur = a;
    for (int64_t i = 1; i < r; ++i) {
        cur = mahler_substitute(cur, b, 1);
        acc = lcm(acc, cur);
    }
    return acc;
}

}  // namespace mahler
