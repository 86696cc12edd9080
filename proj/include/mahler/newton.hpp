#pragma once

#include "mahler/operator.hpp"

#include <vector>

namespace mahler {

// Point (b^k, j) of the Newton diagram for the monomial coeff * x^j M^k.
struct DiagramPoint {
    int k = 0;
    int64_t u = 0;
    int64_t v = 0;
    Rational coeff;
};

struct PolygonEdge {
    DiagramPoint left;
    DiagramPoint right;
    Rational slope;
    Rational intercept;  // V-intercept of the supporting line
    bool admissible = false;
    std::vector<DiagramPoint> edge_points;
};

std::vector<DiagramPoint> newton_diagram(const MahlerOperator& L);

// Edges ordered left to right; collinear points never split an edge.
std::vector<PolygonEdge> lower_polygon(const MahlerOperator& L);
std::vector<PolygonEdge> upper_polygon(const MahlerOperator& L);

// Opposite slopes of the admissible lower (resp. upper) edges, ascending.
std::vector<Rational> candidate_valuations(const MahlerOperator& L);
std::vector<Rational> candidate_degrees(const MahlerOperator& L);

struct MuNu {
    Rational nu;
    Rational mu;
};

MuNu mu_nu(const MahlerOperator& L);

struct RamificationData {
    std::vector<int64_t> Q;  // ascending
    int64_t N = 1;
};

RamificationData ramification_data(const MahlerOperator& L);

struct EdgeChoice {
    Rational slope;
    Rational intercept;
};

// Rightmost admissible lower edge whose slope lies in (1/N) Z.
EdgeChoice select_edge_for_ramification(const MahlerOperator& L, int64_t N);

}  // namespace mahler
