#include "mahler/newton.hpp"

#include "mahler/errors.hpp"

#include <algorithm>
#include <set>

namespace mahler {

namespace {

void require_nonzero(const MahlerOperator& L) {
    if (L.is_zero()) fail(ErrorKind::precondition_violation, "Newton polygon of the zero operator");
}

// One extreme point per column: valuation (lower) or degree (upper).
std::vector<DiagramPoint> extreme_points(const MahlerOperator& L, bool lower) {
    std::vector<DiagramPoint> pts;
    for (int k = 0; k <= L.order(); ++k) {
        const Poly& c = L.coeff(k);
        if (c.is_zero()) continue;
        const auto& t = lower ? c.terms().front() : c.terms().back();
        pts.push_back({k, checked_pow(L.radix(), k), t.first, t.second});
    }
    return pts;
}

__int128 cross(const DiagramPoint& o, const DiagramPoint& a, const DiagramPoint& b) {
    return static_cast<__int128>(a.u - o.u) * (b.v - o.v) - static_cast<__int128>(a.v - o.v) * (b.u - o.u);
}

std::vector<PolygonEdge> polygon(const MahlerOperator& L, bool lower) {
    require_nonzero(L);
    std::vector<DiagramPoint> pts = extreme_points(L, lower);
    std::vector<DiagramPoint> hull;
    for (const auto& p : pts) {
        while (hull.size() >= 2) {
            __int128 c = cross(hull[hull.size() - 2], hull.back(), p);
            if ((lower && c <= 0) || (!lower && c >= 0)) hull.pop_back();
            else break;
        }
        hull.push_back(p);
    }
    std::vector<PolygonEdge> edges;
    for (size_t i = 0; i + 1 < hull.size(); ++i) {
        PolygonEdge e;
        e.left = hull[i];
        e.right = hull[i + 1];
        e.slope = Rational(Integer(static_cast<long>(e.right.v - e.left.v)),
                           Integer(static_cast<long>(e.right.u - e.left.u)));
        e.slope.canonicalize();
        e.intercept = Rational(static_cast<long>(e.left.v)) - e.slope * Rational(static_cast<long>(e.left.u));
        Rational sum = 0;
        for (const auto& p : pts) {
            if (p.k < e.left.k || p.k > e.right.k) continue;
            if (cross(e.left, e.right, p) != 0) continue;
            e.edge_points.push_back(p);
            sum += p.coeff;
        }
        e.admissible = (sum == 0);
        edges.push_back(std::move(e));
    }
    return edges;
}

std::vector<Rational> opposite_admissible_slopes(const std::vector<PolygonEdge>& edges) {
    std::vector<Rational> out;
    for (const auto& e : edges)
        if (e.admissible) out.push_back(-e.slope);
    std::sort(out.begin(), out.end());
    return out;
}

void require_trailing(const MahlerOperator& L) {
    if (L.is_zero() || L.coeff(0).is_zero())
        fail(ErrorKind::zero_trailing_coefficient, "operation needs a nonzero coefficient l_0");
}

}  // namespace

std::vector<DiagramPoint> newton_diagram(const MahlerOperator& L) {
    std::vector<DiagramPoint> pts;
    for (int k = 0; k <= L.order(); ++k) {
        int64_t u = checked_pow(L.radix(), k);
        for (const auto& [j, c] : L.coeff(k).terms()) pts.push_back({k, u, j, c});
    }
    return pts;
}

std::vector<PolygonEdge> lower_polygon(const MahlerOperator& L) { return polygon(L, true); }

std::vector<PolygonEdge> upper_polygon(const MahlerOperator& L) { return polygon(L, false); }

std::vector<Rational> candidate_valuations(const MahlerOperator& L) {
    return opposite_admissible_slopes(lower_polygon(L));
}

std::vector<Rational> candidate_degrees(const MahlerOperator& L) {
    return opposite_admissible_slopes(upper_polygon(L));
}

MuNu mu_nu(const MahlerOperator& L) {
    require_trailing(L);
    if (L.order() < 1) fail(ErrorKind::precondition_violation, "mu_nu needs an operator of positive order");
    const int64_t v0 = L.coeff(0).valuation();
    bool have = false;
    Rational nu;
    for (int k = 1; k <= L.order(); ++k) {
        const Poly& c = L.coeff(k);
        if (c.is_zero()) continue;
        Rational q(Integer(static_cast<long>(v0 - c.valuation())),
                   Integer(static_cast<long>(checked_pow(L.radix(), k) - 1)));
        q.canonicalize();
        if (!have || q > nu) nu = q;
        have = true;
    }
    return {nu, nu + Rational(static_cast<long>(v0))};
}

RamificationData ramification_data(const MahlerOperator& L) {
    require_trailing(L);
    std::set<int64_t> q;
    for (const auto& e : lower_polygon(L)) {
        if (!e.admissible) continue;
        int64_t den = to_i64(e.slope.get_den());
        if (gcd_i64(den, L.radix()) == 1) q.insert(den);
    }
    RamificationData out;
    out.Q.assign(q.begin(), q.end());
    for (int64_t d : out.Q) out.N = lcm_i64(out.N, d);
    return out;
}

EdgeChoice select_edge_for_ramification(const MahlerOperator& L, int64_t N) {
    if (N < 1) fail(ErrorKind::precondition_violation, "ramification index must be positive");
    auto edges = lower_polygon(L);
    for (auto it = edges.rbegin(); it != edges.rend(); ++it) {
        if (!it->admissible) continue;
        Rational ns = it->slope * Rational(static_cast<long>(N));
        if (ns.get_den() == 1) return {it->slope, it->intercept};
    }
    fail(ErrorKind::no_such_edge, "no admissible edge with slope in (1/N)Z");
}

}  // namespace mahler
