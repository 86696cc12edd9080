#include "mahler/io.hpp"

#include "mahler/errors.hpp"

#include <set>

namespace mahler {

namespace {

[[noreturn]] void malformed(const std::string& what) { fail(ErrorKind::malformed_input, what); }

int64_t as_index(const json& j, const char* what) {
    if (!j.is_number_integer()) malformed(std::string(what) + " must be an integer");
    if (j.is_number_unsigned() && j.get<uint64_t>() > static_cast<uint64_t>(std::numeric_limits<int64_t>::max()))
        fail(ErrorKind::exponent_overflow, std::string(what) + " exceeds the machine index range");
    return j.get<int64_t>();
}

}  // namespace

Poly poly_from_json(const json& j) {
    if (!j.is_array()) malformed("polynomial must be a list of [exponent, coefficient] pairs");
    std::vector<Poly::Term> terms;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 2 || !t[1].is_string()) malformed("term must be [exponent, \"coefficient\"]");
        int64_t e = as_index(t[0], "exponent");
        if (e < 0) malformed("negative exponent");
        if (!terms.empty() && terms.back().first >= e) malformed("exponents must be strictly increasing");
        Rational c = parse_rational(t[1].get<std::string>());
        if (c == 0) malformed("zero coefficient in term list");
        terms.emplace_back(e, std::move(c));
    }
    return Poly::from_terms(std::move(terms));
}

json poly_to_json(const Poly& p) {
    json out = json::array();
    for (const auto& [e, c] : p.terms()) out.push_back(json::array({e, to_string(c)}));
    return out;
}

MahlerOperator operator_from_json(const json& j) {
    if (!j.is_object()) malformed("operator document must be an object");
    if (!j.contains("radix") || !j.contains("coefficients")) malformed("operator needs \"radix\" and \"coefficients\"");
    int64_t b = as_index(j.at("radix"), "radix");
    if (b < 2) malformed("radix must be at least 2");
    const json& cs = j.at("coefficients");
    if (!cs.is_array()) malformed("\"coefficients\" must be a list");
    std::vector<Poly> coeffs;
    std::set<int64_t> seen;
    int64_t declared = -1;
    for (const auto& c : cs) {
        if (!c.is_object() || !c.contains("order") || !c.contains("terms")) malformed("coefficient needs \"order\" and \"terms\"");
        int64_t k = as_index(c.at("order"), "order");
        if (k < 0 || k > 4096) malformed("order out of range");
        if (!seen.insert(k).second) malformed("duplicate order " + std::to_string(k));
        if (static_cast<int64_t>(coeffs.size()) <= k) coeffs.resize(static_cast<size_t>(k) + 1);
        coeffs[static_cast<size_t>(k)] = poly_from_json(c.at("terms"));
        declared = std::max(declared, k);
    }
    if (declared >= 0 && coeffs[static_cast<size_t>(declared)].is_zero())
        fail(ErrorKind::unsupported_equation, "leading coefficient l_r is zero");
    return MahlerOperator(b, std::move(coeffs));
}

json operator_to_json(const MahlerOperator& L) {
    json cs = json::array();
    for (int k = 0; k <= L.order(); ++k) {
        if (L.coeff(k).is_zero()) continue;
        cs.push_back({{"order", k}, {"terms", poly_to_json(L.coeff(k))}});
    }
    return {{"radix", L.radix()}, {"coefficients", cs}};
}

MahlerOperator parse_operator(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        malformed(std::string("invalid JSON: ") + e.what());
    }
    return operator_from_json(j);
}

json series_to_json(const PuiseuxSeries& s) {
    json terms = json::array();
    for (const auto& [e, c] : s.terms) terms.push_back(json::array({to_string(e), to_string(c)}));
    return {{"terms", terms}, {"truncation_order", to_string(s.truncation_order)}};
}

json rational_function_to_json(const RationalFunction& f) {
    return {{"numerator", poly_to_json(f.numerator)},
            {"x_power", f.x_power},
            {"denominator", poly_to_json(f.denominator)}};
}

}  // namespace mahler
