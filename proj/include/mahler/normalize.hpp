#pragma once

#include "mahler/operator.hpp"

#include <string>
#include <vector>

namespace mahler {

// Members of M-valuation 0 with the same Laurent series solutions as L.
std::vector<MahlerOperator> split(const MahlerOperator& L);

struct NormalizeResult {
    MahlerOperator raw;
    Poly content;
    MahlerOperator primitive;
    size_t reductions = 0;
};

NormalizeResult normalize_l0(const MahlerOperator& L);
NormalizeResult gcrd(const std::vector<MahlerOperator>& family);

// Deterministic order used to pick the operator to reduce: order
// descending, then degree ascending, then serialization.
bool reduction_order(const MahlerOperator& a, const MahlerOperator& b);

// Canonical single-line serialization used for tie-breaking.
std::string serialize(const MahlerOperator& L);

}  // namespace mahler
