#include "doctest.h"
#include "fixtures.hpp"
#include "mahler/errors.hpp"
#include "mahler/newton.hpp"
#include "mahler/rmatrix.hpp"
#include "oracle.hpp"

using namespace mahler;
using fixtures::P;

namespace {

std::vector<Rational> ints(std::initializer_list<long> v) {
    std::vector<Rational> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

std::vector<Rational> dense_of(const Poly& p, int64_t len) {
    std::vector<Rational> y(static_cast<size_t>(len));
    for (const auto& [e, c] : p.terms()) y[static_cast<size_t>(e)] = c;
    return y;
}

// Random transform keeping every exponent of phi(L) nonnegative.
PhiTransform random_phi(fixtures::Gen& gen, int64_t b) {
    for (;;) {
        int64_t beta = gen.range(1, 5);
        if (gcd_i64(beta, b) != 1) continue;
        return {gen.range(0, 3), beta, -gen.range(0, 4)};
    }
}

}  // namespace

TEST_CASE("golden rows of the running example") {
    auto L = fixtures::running_example();
    auto R = build_submatrix(L, {}, 15, {20});
    REQUIRE(R.rows.size() == 1);
    CHECK(R.rows[0] == SparseRow{{13, 1}, {14, 1}});
    auto R42 = build_submatrix(L, {}, 37, {42});
    CHECK(R42.rows[0] ==
          SparseRow{{4, -1}, {5, -1}, {6, -1}, {14, -2}, {15, -1}, {35, 1}, {36, 1}});
    CHECK(entry_oracle(L, {}, 20, 14) == 1);
    CHECK(entry_oracle(L, {}, 5, 9) == 0);
    CHECK(build_submatrix(L, {}, 10, {}).rows.empty());
}

TEST_CASE("property: engine agrees with both oracles") {
    fixtures::Gen gen(201);
    int positions = 0;
    for (int t = 0; t < 50; ++t) {
        int64_t b = gen.range(2, 3);
        auto L = gen.op(b, static_cast<int>(gen.range(1, 3)), 8);
        PhiTransform phi = gen.coin(0.3) ? PhiTransform{} : random_phi(gen, b);
        auto Lphi = phi_apply(L, phi);
        int64_t w = gen.range(1, 40);
        std::vector<int64_t> E;
        for (int i = 0; i < 20; ++i) E.push_back(gen.range(0, 200));
        std::sort(E.begin(), E.end());
        auto S = build_submatrix(L, phi, w, E);
        REQUIRE(S.rows.size() == E.size());
        for (size_t i = 0; i < E.size(); ++i) {
            for (size_t q = 1; q < S.rows[i].size(); ++q) CHECK(S.rows[i][q - 1].first < S.rows[i][q].first);
            std::vector<Rational> row(static_cast<size_t>(w));
            for (const auto& [n, c] : S.rows[i]) {
                CHECK(c != 0);
                row[static_cast<size_t>(n)] = c;
            }
            for (int64_t n = 0; n < w; ++n) {
                if (gen.coin(0.5) && row[static_cast<size_t>(n)] == 0) continue;
                CHECK(row[static_cast<size_t>(n)] == entry_oracle(L, phi, E[i], n));
                CHECK(row[static_cast<size_t>(n)] == oracle::entry(Lphi, E[i], n));
                ++positions;
            }
        }
    }
    CHECK(positions >= 1000);
}

TEST_CASE("solve_prescribed golden cases") {
    auto L = fixtures::running_example();
    auto K = solve_prescribed(L, {}, 10, 4, {0, 3, 6, 9}, Orientation::lower);
    CHECK(K.vectors == Matrix{ints({0, 0, 0, 1})});

    auto Lt = fixtures::rational_example_cleared();
    int64_t w = 6, d = Lt.degree(), r = Lt.order();
    std::vector<int64_t> E;
    for (int64_t n = 0; n < w; ++n) {
        int64_t best = -1;
        for (int k = 0; k <= r; ++k)
            if (!Lt.coeff(k).is_zero()) best = std::max(best, Lt.coeff(k).degree() + n * checked_pow(3, k));
        E.push_back(best);
    }
    int64_t h = d + (w - 1) * checked_pow(3, r) + 1;
    auto Kr = solve_prescribed(Lt, {}, h, w, E, Orientation::upper);
    Poly a = fixtures::prod({P({{0, -1}, {1, 2}}), P({{0, -1}, {1, 8}}), P({{0, -1}, {1, -4}, {2, 1}})});
    Poly c = fixtures::prod({P({{0, -1}, {1, -1}, {2, 1}}), P({{0, -1}, {1, 8}}), P({{0, -1}, {1, -4}, {2, 1}})});
    CHECK(Kr.vectors == oracle::span({dense_of(a, 6), dense_of(c, 6)}));

    MahlerOperator m1(2, {P({{0, -1}}), P({{0, 1}})});
    CHECK(solve_prescribed(m1, {}, 1, 1, {0}, Orientation::lower).vectors == Matrix{ints({1})});
}

TEST_CASE("prolong golden cases") {
    auto L = fixtures::running_example();
    auto y = prolong(L, {}, ints({0, 0, 0, 1}), 9);
    CHECK(y == ints({0, 0, 0, 1, -1, 1, -2, 2, -2, 3, -3, 3, -5}));
    CHECK(prolong(L, {}, ints({0, 0, 0, 1}), 0) == ints({0, 0, 0, 1}));

    auto td = transformed_data(L, {-1, 2, -3});
    CHECK(td.nu == 7);
    auto yt = prolong(L, {-1, 2, -3}, ints({1, 0, -1, 0, 1, 0, -1, 0}), 5);
    CHECK(yt == ints({1, 0, -1, 0, 1, 0, -1, 0, 1, 0, -1, 0, 1}));

    try {
        prolong(L, {}, ints({0, 0, 1, 0}), 3);
        FAIL("expected inconsistent prefix");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::inconsistent_prefix);
    }
}

TEST_CASE("property: kernel contract, prolongation residual and strip structure") {
    fixtures::Gen gen(211);
    for (int t = 0; t < 100; ++t) {
        int64_t b = gen.range(2, 3);
        int r = static_cast<int>(gen.range(1, 3));
        auto L = gen.op(b, r, 8);
        auto mn = mu_nu(L);
        if (mn.nu < 0) continue;
        int64_t fn = floor_i64(mn.nu), fm = floor_i64(mn.mu);
        int64_t w = fn + 1;
        std::vector<int64_t> E;
        for (int64_t n = 0; n < w; ++n) {
            int64_t best = INT64_MAX;
            for (int k = 0; k <= r; ++k)
                if (!L.coeff(k).is_zero()) best = std::min(best, L.coeff(k).valuation() + n * checked_pow(b, k));
            E.push_back(best);
        }
        auto K = solve_prescribed(L, {}, fm + 1, w, E, Orientation::lower);
        CHECK(K.vectors.size() <= static_cast<size_t>(r));
        CHECK(oracle::span(K.vectors).size() == K.vectors.size());
        for (const auto& f : K.vectors) {
            CHECK(residual(L, {}, f, fm + 1).empty());
            auto p = prolong(L, {}, f, 7);
            CHECK(p.size() == static_cast<size_t>(w + 7));
            auto res = apply_truncated(L, p, fm + 8);
            for (const auto& c : res) CHECK(c == 0);
        }
        // strip structure
        int64_t m = gen.range(0, 60);
        auto S = build_submatrix(L, {}, 70, {m});
        for (const auto& [n, c] : S.rows[0]) {
            bool inside = false;
            for (int k = 0; k <= r; ++k) {
                const Poly& lk = L.coeff(k);
                int64_t j = m - checked_pow(b, k) * n;
                if (!lk.is_zero() && lk.valuation() <= j && j <= lk.degree()) inside = true;
            }
            CHECK(inside);
        }
        CHECK(S.rows[0].size() <= static_cast<size_t>(r + 1 + 2 * L.degree()));
    }
}

TEST_CASE("too many zero diagonal entries is a precondition violation") {
    MahlerOperator L(2, {P({{0, 1}}), P({{0, -1}})});  // 1 - M, diagonal 0 at row 0
    auto K = solve_prescribed(L, {}, 1, 1, {0}, Orientation::lower);
    CHECK(K.vectors.size() == 1);
    try {
        // rows 5,6 see no diagonal for columns 0,1 beyond the single allowed zero
        solve_prescribed(L, {}, 10, 2, {5, 6}, Orientation::lower);
        FAIL("expected precondition violation");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::precondition_violation);
    }
}
