#include "mahler/solver.hpp"

#include "mahler/errors.hpp"
#include "mahler/linalg.hpp"
#include "mahler/newton.hpp"
#include "mahler/normalize.hpp"
#include "mahler/rmatrix.hpp"

#include <algorithm>

namespace mahler {

namespace {

const PhiTransform kIdentity{};

std::vector<int64_t> lower_rows(const std::vector<int64_t>& v, int64_t radix, int64_t w) {
    std::vector<int64_t> E;
    for (int64_t n = 0; n < w; ++n) {
        int64_t best = std::numeric_limits<int64_t>::max();
        for (size_t k = 0; k < v.size(); ++k) {
            if (v[k] == std::numeric_limits<int64_t>::max()) continue;
            best = std::min(best, checked_add(v[k], checked_mul(n, checked_pow(radix, static_cast<int64_t>(k)))));
        }
        E.push_back(best);
    }
    return E;
}

std::vector<int64_t> valuations(const MahlerOperator& L) {
    std::vector<int64_t> v;
    for (const auto& c : L.coeffs()) v.push_back(c.is_zero() ? std::numeric_limits<int64_t>::max() : c.valuation());
    return v;
}

}  // namespace

MahlerOperator trailing_ready(const MahlerOperator& L, const SolveOptions& opts) {
    if (L.is_zero()) fail(ErrorKind::unsupported_equation, "the zero operator has every series as a solution");
    if (!L.coeff(0).is_zero()) return L;
    if (!opts.auto_normalize) fail(ErrorKind::zero_trailing_coefficient, "l_0 = 0 and auto-normalization is off");
    return normalize_l0(L).raw;
}

std::vector<TruncatedSeries> approximate_series_basis(const MahlerOperator& L0, const SolveOptions& opts) {
    MahlerOperator L = trailing_ready(L0, opts);
    std::vector<TruncatedSeries> out;
    if (L.order() == 0) return out;
    MuNu mn = mu_nu(L);
    if (mn.nu < 0) return out;
    const int64_t h = floor_i64(mn.mu) + 1;
    const int64_t w = floor_i64(mn.nu) + 1;
    KernelBasis kb = solve_prescribed(L, kIdentity, h, w, lower_rows(valuations(L), L.radix(), w), Orientation::lower);
    for (auto& v : kb.vectors) out.push_back({std::move(v), w});
    return out;
}

std::vector<TruncatedSeries> series_basis(const MahlerOperator& L0, int64_t n, const SolveOptions& opts) {
    if (n < 0) fail(ErrorKind::precondition_violation, "negative series order");
    MahlerOperator L = trailing_ready(L0, opts);
    std::vector<TruncatedSeries> approx = approximate_series_basis(L, opts);
    if (approx.empty()) return approx;
    const int64_t fn = approx.front().truncation_order - 1;
    std::vector<TruncatedSeries> out;
    if (n >= fn) {
        for (auto& a : approx) out.push_back({prolong(L, kIdentity, a.coefficients, n - fn), n + 1});
        return out;
    }
    Matrix cut;
    for (auto& a : approx) cut.emplace_back(a.coefficients.begin(), a.coefficients.begin() + n + 1);
    for (auto& v : echelon_basis(std::move(cut))) out.push_back({std::move(v), n + 1});
    return out;
}

std::vector<Poly> polynomial_solutions_bounded(const MahlerOperator& L0, int64_t w, const SolveOptions& opts) {
    if (w < 1) fail(ErrorKind::precondition_violation, "degree bound must be at least 1");
    MahlerOperator L = trailing_ready(L0, opts);
    std::vector<Poly> out;
    if (L.order() == 0) return out;
    if (mu_nu(L).nu < 0) return out;
    const int64_t b = L.radix();
    const int64_t d = L.degree();
    const int64_t br = checked_pow(b, L.order());
    const int64_t h = checked_add(checked_add(d, checked_mul(w - 1, br)), 1);
    std::vector<int64_t> E;
    for (int64_t n = 0; n < w; ++n) {
        int64_t best = std::numeric_limits<int64_t>::min();
        for (int k = 0; k <= L.order(); ++k) {
            if (L.coeff(k).is_zero()) continue;
            best = std::max(best, checked_add(L.coeff(k).degree(), checked_mul(n, checked_pow(b, k))));
        }
        E.push_back(best);
    }
    KernelBasis kb = solve_prescribed(L, kIdentity, h, w, E, Orientation::upper);
    for (auto& v : echelon_basis(std::move(kb.vectors), PivotSide::last)) out.push_back(Poly::from_dense(v));
    return out;
}

std::vector<Poly> polynomial_basis(const MahlerOperator& L0, const SolveOptions& opts) {
    MahlerOperator L = trailing_ready(L0, opts);
    if (L.order() == 0) return {};
    const int64_t b = L.radix();
    const int64_t denom = checked_mul(checked_pow(b, L.order() - 1), b - 1);
    return polynomial_solutions_bounded(L, L.degree() / denom + 1, opts);
}

PuiseuxBasis puiseux_basis(const MahlerOperator& L, int64_t N, int64_t n) {
    if (L.is_zero()) fail(ErrorKind::unsupported_equation, "the zero operator has every series as a solution");
    if (N < 1) fail(ErrorKind::precondition_violation, "ramification index must be positive");
    const int64_t b = L.radix();
    if (gcd_i64(N, b) != 1) fail(ErrorKind::precondition_violation, "ramification index must be coprime to the radix");
    const int w = L.mvaluation();
    const int64_t bw = checked_pow(b, w);
    const int64_t n1 = checked_mul(n, bw);
    const MahlerOperator L1 = L.strip_mvaluation();
    PuiseuxBasis out;
    out.ramification = checked_mul(N, bw);
    if (L1.order() == 0) return out;

    EdgeChoice edge;
    try {
        edge = select_edge_for_ramification(L1, N);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::no_such_edge) return out;
        throw;
    }
    const int64_t Ns = to_i64(Integer(edge.slope.get_num() * N / edge.slope.get_den()));
    const Rational nc = edge.intercept * Rational(static_cast<long>(N));
    if (nc.get_den() != 1) fail(ErrorKind::invariant_violation, "edge intercept is not in (1/N)Z");
    const PhiTransform phi{-Ns, N, to_i64(nc.get_num())};

    TransformedData td = transformed_data(L1, phi);
    if (td.nu < 0) return out;
    const int64_t fn = floor_i64(td.nu);
    const int64_t h = floor_i64(td.mu) + 1;
    const int64_t wt = fn + 1;
    KernelBasis kb = solve_prescribed(L1, phi, h, wt, lower_rows(td.valuations, b, wt), Orientation::lower);

    const int64_t target_len = checked_add(checked_add(Ns, checked_mul(N, n1)), 1);
    const int64_t extra = std::max<int64_t>(0, target_len - 1 - fn);
    const Rational trunc(Integer(static_cast<long>(checked_add(checked_mul(N, n1), 1))),
                         Integer(static_cast<long>(out.ramification)));
    for (const auto& v : kb.vectors) {
        std::vector<Rational> z = extra > 0 ? prolong(L1, phi, v, extra) : v;
        if (static_cast<int64_t>(z.size()) > std::max<int64_t>(target_len, 0))
            z.resize(static_cast<size_t>(std::max<int64_t>(target_len, 0)));
        PuiseuxSeries ps;
        ps.ramification = out.ramification;
        ps.truncation_order = trunc;
        ps.truncation_order.canonicalize();
        for (size_t i = 0; i < z.size(); ++i) {
            if (z[i] == 0) continue;
            Rational e(Integer(static_cast<long>(static_cast<int64_t>(i) - Ns)), Integer(static_cast<long>(out.ramification)));
            e.canonicalize();
            ps.terms.emplace_back(e, z[i]);
        }
        out.elements.push_back(std::move(ps));
    }
    return out;
}

PuiseuxBasis puiseux_basis_all(const MahlerOperator& L, int64_t n) {
    if (L.is_zero()) fail(ErrorKind::unsupported_equation, "the zero operator has every series as a solution");
    const MahlerOperator L1 = L.strip_mvaluation();
    if (L1.order() == 0) {
        PuiseuxBasis out;
        out.ramification = checked_pow(L.radix(), L.mvaluation());
        return out;
    }
    return puiseux_basis(L, ramification_data(L1).N, n);
}

std::vector<Rational> extend_series(const MahlerOperator& L0, const std::vector<Rational>& prefix, int64_t length,
                                    const SolveOptions& opts) {
    MahlerOperator L = trailing_ready(L0, opts);
    std::vector<TruncatedSeries> approx = approximate_series_basis(L, opts);
    int64_t fn = -1;
    if (L.order() >= 1) {
        Rational nu = mu_nu(L).nu;
        if (nu >= 0) fn = floor_i64(nu);
    }
    if (static_cast<int64_t>(prefix.size()) < fn + 1)
        fail(ErrorKind::insufficient_prefix, "prefix shorter than floor(nu)+1 coefficients");
    std::vector<Rational> y;
    if (fn >= 0) {
        std::vector<Rational> comb(static_cast<size_t>(fn + 1));
        for (const auto& a : approx) {
            size_t piv = 0;
            while (a.coefficients[piv] == 0) ++piv;
            Rational lambda = prefix[piv];
            for (size_t i = 0; i < comb.size(); ++i) comb[i] += lambda * a.coefficients[i];
        }
        for (size_t i = 0; i < comb.size(); ++i)
            if (comb[i] != prefix[i]) fail(ErrorKind::inconsistent_prefix, "prefix matches no series solution");
        int64_t want = std::max<int64_t>(length, static_cast<int64_t>(prefix.size()));
        y = prolong(L, kIdentity, comb, std::max<int64_t>(0, want - fn - 1));
    } else {
        y.assign(static_cast<size_t>(std::max<int64_t>(length, static_cast<int64_t>(prefix.size()))), Rational(0));
    }
    for (size_t i = 0; i < prefix.size(); ++i)
        if (y[i] != prefix[i]) fail(ErrorKind::inconsistent_prefix, "prefix matches no series solution");
    y.resize(static_cast<size_t>(length));
    return y;
}

PuiseuxSeries to_puiseux(const TruncatedSeries& s) {
    PuiseuxSeries ps;
    for (size_t i = 0; i < s.coefficients.size(); ++i)
        if (s.coefficients[i] != 0) ps.terms.emplace_back(Rational(static_cast<long>(i)), s.coefficients[i]);
    ps.truncation_order = Rational(static_cast<long>(s.truncation_order));
    return ps;
}

Rational certified_order(const MahlerOperator& L, const PuiseuxSeries& y) {
    if (L.is_zero()) fail(ErrorKind::precondition_violation, "certificate for the zero operator");
    const int64_t b = L.radix();
    const int64_t Np = y.ramification;
    bool have = false;
    Rational e;
    for (int k = 0; k <= L.order(); ++k) {
        if (L.coeff(k).is_zero()) continue;
        Rational c = Rational(static_cast<long>(L.coeff(k).valuation())) +
                     Rational(static_cast<long>(checked_pow(b, k))) * y.truncation_order;
        if (!have || c < e) e = c;
        have = true;
    }
    // exponents are kept as integers in units of 1/Np
    std::vector<std::pair<int64_t, Rational>> raw;
    for (int k = 0; k <= L.order(); ++k) {
        const int64_t bk = checked_pow(b, k);
        for (const auto& [ex, cy] : y.terms) {
            Rational scaled = ex * Rational(static_cast<long>(Np));
            if (scaled.get_den() != 1) fail(ErrorKind::invariant_violation, "exponent denominator does not divide N'");
            const int64_t a = checked_mul(to_i64(scaled.get_num()), bk);
            for (const auto& [j, c] : L.coeff(k).terms()) raw.emplace_back(checked_add(a, checked_mul(j, Np)), c * cy);
        }
    }
    std::sort(raw.begin(), raw.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
    const Rational limit = e * Rational(static_cast<long>(Np));
    size_t i = 0;
    while (i < raw.size()) {
        if (Rational(static_cast<long>(raw[i].first)) >= limit) break;
        Rational sum = 0;
        size_t j = i;
        for (; j < raw.size() && raw[j].first == raw[i].first; ++j) sum += raw[j].second;
        if (sum != 0) fail(ErrorKind::invariant_violation, "residual certificate failed");
        i = j;
    }
    return e;
}

}  // namespace mahler
