#pragma once

#include "mahler/operator.hpp"
#include "mahler/ratsolve.hpp"
#include "mahler/solver.hpp"

#include <json.hpp>

#include <string>

namespace mahler {

using json = nlohmann::json;

// [[e, "c"], ...] with ascending exponents and nonzero coefficients.
Poly poly_from_json(const json& j);
json poly_to_json(const Poly& p);

// {"radix": b, "coefficients": [{"order": k, "terms": [...]}, ...]}
MahlerOperator operator_from_json(const json& j);
json operator_to_json(const MahlerOperator& L);

MahlerOperator parse_operator(const std::string& text);

json series_to_json(const PuiseuxSeries& s);
json rational_function_to_json(const RationalFunction& f);

}  // namespace mahler
