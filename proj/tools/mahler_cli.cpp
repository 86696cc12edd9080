#include "mahler/errors.hpp"
#include "mahler/io.hpp"
#include "mahler/newton.hpp"
#include "mahler/normalize.hpp"
#include "mahler/ratsolve.hpp"
#include "mahler/solver.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace mahler;

namespace {

struct Options {
    std::string format = "json";
    bool certify = false;
    bool auto_normalize = true;
    int64_t order = -1;
    int64_t ramification = 0;
    int64_t degree_bound = 0;
    bool ramified = false;
    std::string initial;
    std::string oracle = "rational-basis";
    std::vector<std::string> inputs;
};

std::string read_input(const std::string& path) {
    std::ostringstream os;
    if (path == "-") {
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) fail(ErrorKind::malformed_input, "cannot read '" + path + "'");
    os << in.rdbuf();
    return os.str();
}

MahlerOperator load(const std::string& path) { return parse_operator(read_input(path)); }

std::string exponent_text(const Rational& e) {
    if (e.get_den() == 1) return e == 1 ? "x" : "x^" + to_string(e);
    return "x^(" + to_string(e) + ")";
}

std::string series_text(const PuiseuxSeries& s, bool with_order) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : s.terms) {
        Rational a = abs(c);
        os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
        first = false;
        if (e == 0) {
            os << to_string(a);
            continue;
        }
        if (a != 1) os << to_string(a) << "*";
        os << exponent_text(e);
    }
    if (with_order) os << (first ? "" : " + ") << "O(" << exponent_text(s.truncation_order) << ")";
    if (first && !with_order) os << "0";
    return os.str();
}

std::string rational_text(const RationalFunction& f, const std::string& var) {
    std::string den = f.denominator.to_string(var);
    if (f.x_power > 0) {
        std::string xp = f.x_power == 1 ? var : var + "^" + std::to_string(f.x_power);
        den = f.denominator == Poly(1) ? xp : xp + "*(" + den + ")";
    }
    std::string out = "(" + f.numerator.to_string(var) + ")";
    if (den != "1") out += "/(" + den + ")";
    return out;
}

PuiseuxSeries poly_as_series(const Poly& p) {
    PuiseuxSeries s;
    for (const auto& [e, c] : p.terms()) s.terms.emplace_back(Rational(static_cast<long>(e)), c);
    return s;
}

json edge_json(const PolygonEdge& e) {
    json pts = json::array();
    for (const auto& p : e.edge_points) pts.push_back(json::array({p.u, p.v}));
    return {{"from", json::array({e.left.u, e.left.v})},
            {"to", json::array({e.right.u, e.right.v})},
            {"slope", to_string(e.slope)},
            {"intercept", to_string(e.intercept)},
            {"admissible", e.admissible},
            {"points", pts}};
}

json rationals_json(const std::vector<Rational>& v) {
    json out = json::array();
    for (const auto& q : v) out.push_back(to_string(q));
    return out;
}

void emit(const Options& o, const json& doc, const std::string& text) {
    if (o.format == "json") std::cout << doc.dump(2) << "\n";
    else std::cout << text;
}

void require_certified(bool ok, const std::string& what) {
    if (!ok) fail(ErrorKind::invariant_violation, "certification failed: " + what);
}

int cmd_newton(const Options& o) {
    MahlerOperator L = load(o.inputs.at(0));
    json doc{{"kind", "newton"}, {"radix", L.radix()}, {"order", L.order()}};
    std::ostringstream text;
    json lower = json::array(), upper = json::array();
    for (const auto& e : lower_polygon(L)) {
        lower.push_back(edge_json(e));
        text << "lower (" << e.left.u << "," << e.left.v << ")-(" << e.right.u << "," << e.right.v << ") slope "
             << to_string(e.slope) << (e.admissible ? " admissible" : "") << "\n";
    }
    for (const auto& e : upper_polygon(L)) {
        upper.push_back(edge_json(e));
        text << "upper (" << e.left.u << "," << e.left.v << ")-(" << e.right.u << "," << e.right.v << ") slope "
             << to_string(e.slope) << (e.admissible ? " admissible" : "") << "\n";
    }
    doc["lower"] = lower;
    doc["upper"] = upper;
    doc["candidate_valuations"] = rationals_json(candidate_valuations(L));
    doc["candidate_degrees"] = rationals_json(candidate_degrees(L));
    if (L.order() >= 1 && !L.coeff(0).is_zero()) {
        MuNu mn = mu_nu(L);
        RamificationData rd = ramification_data(L);
        doc["nu"] = to_string(mn.nu);
        doc["mu"] = to_string(mn.mu);
        doc["Q"] = rd.Q;
        doc["N"] = rd.N;
        text << "nu = " << to_string(mn.nu) << ", mu = " << to_string(mn.mu) << ", N = " << rd.N << "\n";
    } else {
        doc["nu"] = nullptr;
        doc["mu"] = nullptr;
        doc["Q"] = nullptr;
        doc["N"] = nullptr;
    }
    emit(o, doc, text.str());
    return 0;
}

int emit_series_basis(const Options& o, const MahlerOperator& L, const std::string& kind, int64_t ramification,
                      const std::vector<PuiseuxSeries>& elements, bool normalized) {
    json els = json::array();
    std::ostringstream text;
    for (const auto& s : elements) {
        json e = series_to_json(s);
        if (o.certify) e["certificate"] = {{"residual_order", to_string(certified_order(L, s))}};
        els.push_back(e);
        text << series_text(s, true) << "\n";
    }
    json doc{{"kind", kind}, {"ramification", ramification}, {"elements", els}};
    if (kind == "series") doc["normalized"] = normalized;
    if (elements.empty()) text << "no nonzero solutions\n";
    emit(o, doc, text.str());
    return 0;
}

int cmd_series(const Options& o) {
    MahlerOperator L = load(o.inputs.at(0));
    std::vector<PuiseuxSeries> els;
    for (const auto& s : series_basis(L, o.order, SolveOptions{o.auto_normalize})) els.push_back(to_puiseux(s));
    return emit_series_basis(o, L, "series", 1, els, L.coeff(0).is_zero());
}

int cmd_puiseux(const Options& o) {
    MahlerOperator L = load(o.inputs.at(0));
    PuiseuxBasis pb = o.ramification > 0 ? puiseux_basis(L, o.ramification, o.order) : puiseux_basis_all(L, o.order);
    return emit_series_basis(o, L, "puiseux", pb.ramification, pb.elements, false);
}

int cmd_poly(const Options& o) {
    MahlerOperator L = load(o.inputs.at(0));
    SolveOptions so{o.auto_normalize};
    std::vector<Poly> basis = o.degree_bound > 0 ? polynomial_solutions_bounded(L, o.degree_bound, so)
                                                 : polynomial_basis(L, so);
    json els = json::array();
    std::ostringstream text;
    for (const auto& p : basis) {
        json e = series_to_json(poly_as_series(p));
        e.erase("truncation_order");
        if (o.certify) {
            require_certified(apply(L, p).is_zero(), "polynomial solution");
            e["certificate"] = {{"exact", true}};
        }
        els.push_back(e);
        text << p.to_string() << "\n";
    }
    if (basis.empty()) text << "no nonzero polynomial solutions\n";
    emit(o, json{{"kind", "polynomial"}, {"ramification", 1}, {"elements", els}}, text.str());
    return 0;
}

int cmd_rational(const Options& o) {
    MahlerOperator L = load(o.inputs.at(0));
    json els = json::array();
    std::ostringstream text;
    if (o.ramified) {
        RamifiedRationalBasis rb = ramified_rational_basis(L);
        std::vector<Poly> sub;
        for (const auto& c : L.coeffs()) sub.push_back(c.compose_power(rb.ramification));
        MahlerOperator Lt(L.radix(), sub);
        for (const auto& f : rb.elements) {
            json e = rational_function_to_json(f);
            if (o.certify) {
                require_certified(is_rational_solution(Lt, f), "ramified rational solution");
                e["certificate"] = {{"exact", true}};
            }
            els.push_back(e);
            text << rational_text(f, "t") << "\n";
        }
        text << "t = x^(1/" << rb.ramification << ")\n";
        emit(o,
             json{{"kind", "ramified_rational_basis"}, {"ramification", rb.ramification}, {"elements", els}},
             text.str());
        return 0;
    }
    for (const auto& f : rational_basis(L, RationalOptions{o.auto_normalize, true})) {
        json e = rational_function_to_json(f);
        if (o.certify) {
            require_certified(is_rational_solution(L, f), "rational solution");
            e["certificate"] = {{"exact", true}};
        }
        els.push_back(e);
        text << rational_text(f, "x") << "\n";
    }
    if (els.empty()) text << "no nonzero rational solutions\n";
    emit(o, json{{"kind", "rational_basis"}, {"elements", els}}, text.str());
    return 0;
}

int emit_operator(const Options& o, const NormalizeResult& r, const std::vector<MahlerOperator>& inputs,
                  bool is_gcrd) {
    if (o.certify) {
        require_certified(multiply(MahlerOperator::scalar(r.raw.radix(), r.content), r.primitive) == r.raw,
                          "content split");
        if (is_gcrd)
            for (const auto& A : inputs)
                require_certified(right_divide(A, r.primitive).remainder.is_zero(), "gcrd does not right-divide");
    }
    json doc = operator_to_json(r.primitive);
    doc["content"] = poly_to_json(r.content);
    doc["raw"] = operator_to_json(r.raw);
    if (o.certify) doc["certificate"] = {{"exact", true}};
    std::ostringstream text;
    text << r.primitive.to_string() << "\ncontent: " << r.content.to_string() << "\n";
    emit(o, doc, text.str());
    return 0;
}

int cmd_normalize(const Options& o) {
    MahlerOperator L = load(o.inputs.at(0));
    return emit_operator(o, normalize_l0(L), {L}, false);
}

int cmd_gcrd(const Options& o) {
    std::vector<MahlerOperator> family;
    for (const auto& p : o.inputs) family.push_back(load(p));
    return emit_operator(o, gcrd(family), family, true);
}

std::vector<Rational> parse_initial(const std::string& s) {
    std::vector<Rational> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t a = item.find_first_not_of(" \t"), b = item.find_last_not_of(" \t");
        if (a == std::string::npos) fail(ErrorKind::malformed_input, "empty entry in --initial");
        out.push_back(parse_rational(item.substr(a, b - a + 1)));
    }
    if (out.empty()) fail(ErrorKind::malformed_input, "--initial needs at least one coefficient");
    return out;
}

int cmd_transcendence(const Options& o) {
    MahlerOperator L = load(o.inputs.at(0));
    std::vector<Rational> prefix = parse_initial(o.initial);
    json doc{{"kind", "transcendence"}};
    std::string verdict;
    if (o.oracle == "bell-coons") {
        MahlerOperator Lr = trailing_ready(L, SolveOptions{o.auto_normalize});
        BellCoonsSizes s = bell_coons_sizes(Lr);
        std::vector<Rational> y = extend_series(Lr, prefix, std::max<int64_t>(s.needed(), prefix.size()));
        verdict = bell_coons_rank(Lr, y) ? "transcendental" : "rational";
        doc["method"] = "bell-coons";
        doc["kappa"] = s.kappa;
        doc["B"] = s.B;
        doc["witness"] = nullptr;
    } else {
        TranscendenceVerdict v = transcendence_test(L, prefix);
        verdict = v.verdict == TranscendenceVerdict::Verdict::rational ? "rational" : "transcendental";
        doc["method"] = "rational-basis";
        doc["witness"] = v.witness ? rational_function_to_json(*v.witness) : json(nullptr);
        if (o.certify && v.witness) require_certified(is_rational_solution(L, *v.witness), "witness");
    }
    doc["verdict"] = verdict;
    emit(o, doc, verdict + "\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact solver for linear Mahler equations over Q"};
    app.require_subcommand(1);
    Options o;
    auto common = [&](CLI::App* sub, bool many) {
        if (many) sub->add_option("inputs", o.inputs, "operator files (- for stdin)")->required();
        else sub->add_option("input", o.inputs, "operator file (- for stdin)")->required()->expected(1);
        sub->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
        sub->add_flag("--certify", o.certify, "re-verify every result before printing");
    };
    auto normalize_flag = [&](CLI::App* sub) {
        sub->add_flag("--auto-normalize,!--no-auto-normalize", o.auto_normalize,
                      "normalize operators with l_0 = 0 (default on)");
    };

    auto* newton = app.add_subcommand("newton", "Newton polygons, nu, mu and ramification");
    common(newton, false);
    auto* series = app.add_subcommand("series", "power series solutions");
    common(series, false);
    normalize_flag(series);
    series->add_option("--order", o.order, "last coefficient index")->required()->check(CLI::NonNegativeNumber);
    auto* poly = app.add_subcommand("poly", "polynomial solutions");
    common(poly, false);
    normalize_flag(poly);
    poly->add_option("--degree-bound", o.degree_bound, "only degrees below this bound")->check(CLI::PositiveNumber);
    auto* rational = app.add_subcommand("rational", "rational function solutions");
    common(rational, false);
    normalize_flag(rational);
    rational->add_flag("--ramified", o.ramified, "solve in Q(x^(1/N))");
    auto* puiseux = app.add_subcommand("puiseux", "Puiseux series solutions");
    common(puiseux, false);
    puiseux->add_option("--order", o.order, "truncation order n")->required();
    puiseux->add_option("--ramification", o.ramification, "ramification index N (default: lcm of Q)")
        ->check(CLI::PositiveNumber);
    auto* normalize = app.add_subcommand("normalize", "equivalent operator with nonzero l_0");
    common(normalize, false);
    auto* gcrd_cmd = app.add_subcommand("gcrd", "greatest common right divisor");
    common(gcrd_cmd, true);
    auto* trans = app.add_subcommand("transcendence", "rational or transcendental series solution");
    common(trans, false);
    normalize_flag(trans);
    trans->add_option("--initial", o.initial, "initial coefficients c0,c1,...")->required();
    trans->add_option("--oracle", o.oracle, "rational-basis or bell-coons")
        ->check(CLI::IsMember({"rational-basis", "bell-coons"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*newton) return cmd_newton(o);
        if (*series) return cmd_series(o);
        if (*poly) return cmd_poly(o);
        if (*rational) return cmd_rational(o);
        if (*puiseux) return cmd_puiseux(o);
        if (*normalize) return cmd_normalize(o);
        if (*gcrd_cmd) return cmd_gcrd(o);
        if (*trans) return cmd_transcendence(o);
    } catch (const Error& e) {
        if (o.format == "json")
            std::cerr << json{{"error", error_name(e.kind())}, {"message", e.what()}}.dump() << "\n";
        else
            std::cerr << "error: " << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        if (o.format == "json")
            std::cerr << json{{"error", "internal"}, {"message", e.what()}}.dump() << "\n";
        else
            std::cerr << "error: " << e.what() << "\n";
        return 5;
    }
    return 5;
}
