#include "mahler/rmatrix.hpp"

#include "mahler/errors.hpp"

#include <algorithm>
#include <map>

namespace mahler {

namespace {

// Row extraction following the index arithmetic of the recurrence matrix:
// for row m and order k, B = m + gamma - alpha b^k, and the contributing
// exponents j' are congruent to beta^{-1} B modulo b^k.
class RowBuilder {
public:
    RowBuilder(const MahlerOperator& L, const PhiTransform& phi) : L_(L), phi_(phi) {
        check_phi(phi, L.radix());
        for (int k = 0; k <= L.order(); ++k) {
            int64_t bk = checked_pow(L.radix(), k);
            bk_.push_back(bk);
            inv_.push_back(inverse_mod(phi.beta, bk));
            ab_.push_back(checked_mul(phi.alpha, bk));
        }
    }

    void row(int64_t m, int64_t w, SparseRow& out) const {
        out.clear();
        for (int k = 0; k <= L_.order(); ++k) {
            const auto& terms = L_.coeff(k).terms();
            if (terms.empty()) continue;
            const int64_t bk = bk_[static_cast<size_t>(k)];
            const int64_t B = checked_sub(checked_add(m, phi_.gamma), ab_[static_cast<size_t>(k)]);
            const int64_t hi = floor_div(B, phi_.beta);
            if (hi < 0) continue;
            const int64_t lo = std::max<int64_t>(0, floor_div(checked_sub(B, checked_mul(bk, w)), phi_.beta) + 1);
            if (lo > hi) continue;
            const int64_t j0 = static_cast<int64_t>(
                (static_cast<__int128>(inv_[static_cast<size_t>(k)]) * pos_mod(B, bk)) % bk);
            auto first = std::lower_bound(terms.begin(), terms.end(), lo,
                                          [](const Poly::Term& t, int64_t v) { return t.first < v; });
            auto last = std::upper_bound(first, terms.end(), hi,
                                         [](int64_t v, const Poly::Term& t) { return v < t.first; });
            if (first == last) continue;
            int64_t start = lo + pos_mod(j0 - lo, bk);
            if (start > hi) continue;
            int64_t steps = (hi - start) / bk + 1;
            auto emit = [&](int64_t j, const Rational& c) {
                int64_t n = (B - phi_.beta * j) / bk;
                out.emplace_back(n, c);
            };
            if (steps < last - first) {
                for (int64_t j = start; j <= hi; j += bk) {
                    auto it = std::lower_bound(first, last, j,
                                               [](const Poly::Term& t, int64_t v) { return t.first < v; });
                    if (it != last && it->first == j) emit(j, it->second);
                    first = it;
                }
            } else {
                for (auto it = first; it != last; ++it)
                    if (pos_mod(it->first - j0, bk) == 0) emit(it->first, it->second);
            }
        }
        if (out.size() > 1) {
            std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            size_t o = 0;
            for (size_t i = 0; i < out.size(); ++i) {
                if (o > 0 && out[o - 1].first == out[i].first) out[o - 1].second += out[i].second;
                else out[o++] = std::move(out[i]);
            }
            out.resize(o);
            out.erase(std::remove_if(out.begin(), out.end(), [](const auto& e) { return e.second == 0; }),
                      out.end());
        }
    }

private:
    const MahlerOperator& L_;
    PhiTransform phi_;
    std::vector<int64_t> bk_, inv_, ab_;
};

}  // namespace

RowSparseMatrix build_submatrix(const MahlerOperator& L, const PhiTransform& phi, int64_t w,
                                const std::vector<int64_t>& E) {
    if (!std::is_sorted(E.begin(), E.end())) fail(ErrorKind::precondition_violation, "row indices must be sorted");
    RowBuilder builder(L, phi);
    RowSparseMatrix S;
    S.width = w;
    S.row_labels = E;
    S.rows.resize(E.size());
    for (size_t i = 0; i < E.size(); ++i) builder.row(E[i], w, S.rows[i]);
    return S;
}

Rational entry_oracle(const MahlerOperator& L, const PhiTransform& phi, int64_t m, int64_t n) {
    Rational sum = 0;
    for (int k = 0; k <= L.order(); ++k) {
        int64_t bk = checked_pow(L.radix(), k);
        for (const auto& [j, c] : L.coeff(k).terms())
            if (phi.exponent(L.radix(), k, j) + bk * n == m) sum += c;
    }
    return sum;
}

TransformedData transformed_data(const MahlerOperator& L, const PhiTransform& phi) {
    if (L.is_zero() || L.coeff(0).is_zero())
        fail(ErrorKind::zero_trailing_coefficient, "transformed operator needs a nonzero l_0");
    if (L.order() < 1) fail(ErrorKind::precondition_violation, "operator of order 0");
    TransformedData td;
    for (int k = 0; k <= L.order(); ++k) {
        const Poly& c = L.coeff(k);
        td.valuations.push_back(c.is_zero() ? std::numeric_limits<int64_t>::max()
                                            : phi.exponent(L.radix(), k, c.valuation()));
    }
    bool have = false;
    for (int k = 1; k <= L.order(); ++k) {
        if (L.coeff(k).is_zero()) continue;
        Rational q(Integer(static_cast<long>(td.valuations[0] - td.valuations[static_cast<size_t>(k)])),
                   Integer(static_cast<long>(checked_pow(L.radix(), k) - 1)));
        q.canonicalize();
        if (!have || q > td.nu) td.nu = q;
        have = true;
    }
    td.mu = td.nu + Rational(static_cast<long>(td.valuations[0]));
    return td;
}

SparseRow residual(const MahlerOperator& L, const PhiTransform& phi, const std::vector<Rational>& y, int64_t h) {
    SparseRow raw;
    for (int k = 0; k <= L.order(); ++k) {
        int64_t bk = checked_pow(L.radix(), k);
        for (const auto& [j, c] : L.coeff(k).terms()) {
            int64_t e = phi.exponent(L.radix(), k, j);
            if (e >= h) continue;
            for (size_t n = 0; n < y.size(); ++n) {
                int64_t m = e + bk * static_cast<int64_t>(n);
                if (m >= h) break;
                if (y[n] != 0) raw.emplace_back(m, c * y[n]);
            }
        }
    }
    std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseRow out;
    for (auto& e : raw) {
        if (!out.empty() && out.back().first == e.first) out.back().second += e.second;
        else out.push_back(std::move(e));
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](const auto& e) { return e.second == 0; }), out.end());
    return out;
}

KernelBasis solve_prescribed(const MahlerOperator& L, const PhiTransform& phi, int64_t h, int64_t w,
                             const std::vector<int64_t>& E, Orientation orientation) {
    if (static_cast<int64_t>(E.size()) != w) fail(ErrorKind::precondition_violation, "|E| must equal w");
    for (int64_t m : E)
        if (m >= h) fail(ErrorKind::precondition_violation, "row index outside the truncation");
    KernelBasis result;
    result.width = w;
    if (w == 0) return result;
    RowSparseMatrix S = build_submatrix(L, phi, w, E);
    const bool lower = orientation == Orientation::lower;
    const size_t W = static_cast<size_t>(w);

    std::vector<Rational> diag(W);
    std::vector<size_t> free_pos;
    for (size_t i = 0; i < W; ++i) {
        for (const auto& [n, c] : S.rows[i]) {
            if (static_cast<size_t>(n) == i) diag[i] = c;
            else if ((lower && static_cast<size_t>(n) > i) || (!lower && static_cast<size_t>(n) < i))
                fail(ErrorKind::precondition_violation, "selected submatrix is not triangular");
        }
    }
    for (size_t s = 0; s < W; ++s) {
        size_t i = lower ? s : W - 1 - s;
        if (diag[i] == 0) free_pos.push_back(i);
    }
    if (static_cast<int64_t>(free_pos.size()) > std::max(L.order(), 0))
        fail(ErrorKind::precondition_violation, "more zero diagonal entries than the order");
    const size_t rho = free_pos.size();
    if (rho == 0) return result;

    Matrix G(rho, Vector(W));
    size_t seen = 0;
    Rational t;
    for (size_t s = 0; s < W; ++s) {
        size_t i = lower ? s : W - 1 - s;
        if (diag[i] == 0) {
            G[seen++][i] = 1;
            continue;
        }
        for (size_t j = 0; j < seen; ++j) {
            Rational acc = 0;
            for (const auto& [n, c] : S.rows[i]) {
                if (static_cast<size_t>(n) == i || G[j][static_cast<size_t>(n)] == 0) continue;
                mpq_mul(t.get_mpq_t(), c.get_mpq_t(), G[j][static_cast<size_t>(n)].get_mpq_t());
                acc += t;
            }
            G[j][i] = -acc / diag[i];
        }
    }

    std::map<int64_t, Vector> sp;
    for (size_t j = 0; j < rho; ++j) {
        for (auto& [m, c] : residual(L, phi, G[j], h)) {
            auto& row = sp[m];
            if (row.empty()) row.resize(rho);
            row[j] = std::move(c);
        }
    }
    RowReducer red(rho);
    for (auto& [m, row] : sp)
        if (!red.add(std::move(row))) break;
    Matrix K = red.kernel();

    Matrix F;
    for (const auto& kv : K) {
        Vector f(W);
        for (size_t j = 0; j < rho; ++j) {
            if (kv[j] == 0) continue;
            for (size_t i = 0; i < W; ++i)
                if (G[j][i] != 0) f[i] += kv[j] * G[j][i];
        }
        F.push_back(std::move(f));
    }
    result.vectors = echelon_basis(std::move(F), PivotSide::first);
    return result;
}

std::vector<Rational> prolong(const MahlerOperator& L, const PhiTransform& phi, const std::vector<Rational>& approx,
                              int64_t n) {
    if (n < 0) fail(ErrorKind::precondition_violation, "negative prolongation length");
    TransformedData td = transformed_data(L, phi);
    const int64_t fn = floor_i64(td.nu);
    const int64_t fm = floor_i64(td.mu);
    if (fn < 0) fail(ErrorKind::precondition_violation, "no power series solutions (nu < 0)");
    if (static_cast<int64_t>(approx.size()) != fn + 1)
        fail(ErrorKind::precondition_violation, "approximate solution must have floor(nu)+1 coefficients");
    if (!residual(L, phi, approx, fm + 1).empty())
        fail(ErrorKind::inconsistent_prefix, "input is not an approximate series solution");
    std::vector<Rational> y = approx;
    y.resize(static_cast<size_t>(checked_add(fn + 1, n)));
    RowBuilder builder(L, phi);
    SparseRow row;
    Rational acc, t;
    for (int64_t s = 1; s <= n; ++s) {
        const int64_t target = fn + s;
        builder.row(fm + s, target + 1, row);
        acc = 0;
        Rational diag = 0;
        for (const auto& [col, c] : row) {
            if (col == target) {
                diag = c;
                continue;
            }
            const Rational& yc = y[static_cast<size_t>(col)];
            if (yc == 0) continue;
            mpq_mul(t.get_mpq_t(), c.get_mpq_t(), yc.get_mpq_t());
            acc += t;
        }
        if (diag == 0) fail(ErrorKind::invariant_violation, "zero diagonal entry below the corner");
        if (acc != 0) y[static_cast<size_t>(target)] = -acc / diag;
    }
    return y;
}

}  // namespace mahler
