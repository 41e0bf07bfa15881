// Command-line front end: curve classification, automorphism groups, the
// finite-field census, the classification verifier, and Chow presentation
// queries. Output is JSON (or CSV for the census) on stdout; all numbers are
// serialized as strings so rationals survive round-trips losslessly.
//
// Exit codes: 0 success, 1 failed verification, 2 parse error, 3 bad
// characteristic, 4 curve/point validation, 5 unsupported marking count,
// 6 unknown stack label.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ellmod/abelian.hpp"
#include "ellmod/census.hpp"
#include "ellmod/version.hpp"
#include "json.hpp"

using json = nlohmann::json;
using namespace ellmod;

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitCharacteristic = 3;
constexpr int kExitCurveData = 4;
constexpr int kExitUnsupportedN = 5;
constexpr int kExitUnknownStack = 6;

struct CliError {
    int code;
    std::string message;
};

Field parse_field(const std::string& spec) {
    if (spec == "Q") return Field::rationals();
    if (!std::regex_match(spec, std::regex("[0-9]+"))) {
        throw CliError{kExitParse, "field must be a prime or the literal Q: " + spec};
    }
    errno = 0;
    long long p = std::strtoll(spec.c_str(), nullptr, 10);
    if (errno != 0) throw CliError{kExitParse, "field characteristic out of range: " + spec};
    return Field::prime(p);
}

FieldElement parse_element(const Field& f, const std::string& text) {
    static const std::regex grammar("[+-]?[0-9]+(/[0-9]+)?");
    if (!std::regex_match(text, grammar)) {
        throw CliError{kExitParse, "malformed field element: " + text};
    }
    if (text.find('/') != std::string::npos && f.is_finite()) {
        throw CliError{kExitParse, "fractions are only accepted over Q: " + text};
    }
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw CliError{kExitParse, "malformed field element: " + text};
    if (q.get_den() == 0) throw CliError{kExitParse, "zero denominator: " + text};
    q.canonicalize();
    return f.from_rational(q);
}

CurvePoint parse_point(const Field& f, const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos) {
        throw CliError{kExitParse, "points are written x,y: " + text};
    }
    return CurvePoint::affine(parse_element(f, text.substr(0, comma)),
                              parse_element(f, text.substr(comma + 1)));
}

std::string point_str(const CurvePoint& p) { return p.x().str() + "," + p.y().str(); }

json witness_json(const MarkedCurve& m) {
    json points = json::array();
    for (int i = 2; i <= m.n(); ++i) {
        points.push_back(json::array({m.point(i).x().str(), m.point(i).y().str()}));
    }
    return json{{"a", m.curve().a().str()}, {"b", m.curve().b().str()}, {"points", points}};
}

std::string witness_points_str(const MarkedCurve& m) {
    std::string out;
    for (int i = 2; i <= m.n(); ++i) {
        if (!out.empty()) out += " ";
        out += point_str(m.point(i));
    }
    return out;
}

void emit(const std::string& command, json inputs, json result) {
    json record{{"command", command},
                {"inputs", std::move(inputs)},
                {"result", std::move(result)},
                {"version", kVersion}};
    std::cout << record.dump(2) << "\n";
}

int run_classify(const std::string& field_spec, const std::string& a_text, const std::string& b_text) {
    Field f = parse_field(field_spec);
    FieldElement a = parse_element(f, a_text), b = parse_element(f, b_text);
    Curve c(a, b);
    emit("classify", {{"field", field_spec}, {"a", a.str()}, {"b", b.str()}},
         {{"class", curve_class_name(c.classification())}, {"disc", c.disc().str()}});
    return 0;
}

int run_aut(const std::string& field_spec, const std::string& a_text, const std::string& b_text,
            const std::vector<std::string>& point_texts) {
    Field f = parse_field(field_spec);
    FieldElement a = parse_element(f, a_text), b = parse_element(f, b_text);
    std::vector<CurvePoint> marks;
    json echoed = json::array();
    for (const std::string& text : point_texts) {
        if (text.empty()) continue;  // a bare --points means one marked point
        marks.push_back(parse_point(f, text));
        echoed.push_back(text);
    }
    MarkedCurve m = make_marked(a, b, marks);
    CyclicAut aut = automorphisms(m);
    emit("aut", {{"field", field_spec}, {"a", a.str()}, {"b", b.str()}, {"points", echoed}},
         {{"order", std::to_string(aut.order)}, {"generator", aut.generator.str()}});
    return 0;
}

CensusStrategy parse_strategy(const std::string& name) {
    if (name == "auto") return CensusStrategy::Auto;
    if (name == "full") return CensusStrategy::Full;
    if (name == "restricted") return CensusStrategy::Restricted;
    throw CliError{kExitParse, "unknown strategy: " + name};
}

int run_census(long long p, int n, const std::string& format, const std::string& strategy_name,
               bool force) {
    if (p != 5 && p != 7 && p != 11 && p != 13 && !force) {
        throw CliError{kExitParse, "p outside {5,7,11,13} needs --force"};
    }
    if (format != "json" && format != "csv") throw CliError{kExitParse, "format is json or csv"};
    Field f = Field::prime(p);
    CensusReport report = automorphism_census(f, n, parse_strategy(strategy_name));

    if (format == "csv") {
        std::cout << "aut_order,count,witness_a,witness_b,witness_points\n";
        for (const auto& [order, count] : report.strata) {
            const MarkedCurve& w = report.witnesses.at(order);
            std::cout << order << "," << count << "," << w.curve().a().str() << ","
                      << w.curve().b().str() << "," << witness_points_str(w) << "\n";
        }
        return 0;
    }

    json strata = json::array();
    for (const auto& [order, count] : report.strata) {
        strata.push_back(json{{"aut_order", std::to_string(order)},
                              {"count", std::to_string(count)},
                              {"witness", witness_json(report.witnesses.at(order))}});
    }
    emit("census",
         {{"p", std::to_string(p)},
          {"n", std::to_string(n)},
          {"format", format},
          {"strategy", strategy_name}},
         {{"p", std::to_string(report.p)},
          {"n", std::to_string(report.n)},
          {"exhaustive", report.exhaustive},
          {"total_tuples", std::to_string(report.total_tuples)},
          {"iso_classes", std::to_string(report.iso_classes)},
          {"strata", std::move(strata)}});
    return 0;
}

int run_chow(const std::string& stack, int degree) {
    auto table = chow_presentation_table();
    auto it = table.find(stack);
    if (it == table.end()) throw CliError{kExitUnknownStack, "unknown stack label: " + stack};
    FinAbGroup component = chow_component(it->second, degree);
    emit("chow", {{"stack", stack}, {"degree", std::to_string(degree)}},
         {{"presentation", it->second.str()}, {"component", component.str()}});
    return 0;
}

int run_verify(long long p) {
    Field f = Field::prime(p);
    ClassificationVerdict v = verify_classification(f);

    json per_n = json::array();
    for (const auto& [n, per] : v.per_n) {
        json expected = json::array(), realized = json::array();
        for (int o : per.expected) expected.push_back(std::to_string(o));
        for (int o : per.realized) realized.push_back(std::to_string(o));
        per_n.push_back(json{{"n", std::to_string(n)},
                             {"expected_orders", expected},
                             {"realized_orders", realized},
                             {"pass", per.pass}});
    }
    emit("verify", {{"p", std::to_string(p)}},
         {{"p", std::to_string(v.p)},
          {"per_n", std::move(per_n)},
          {"collinearity_pass", v.collinearity_pass},
          {"max_n_with_nontrivial", std::to_string(v.max_n_with_nontrivial)},
          {"max_n_pass", v.max_n_pass},
          {"mu4_rational_classes", std::to_string(v.mu4_rational_classes)},
          {"mu4_twist_classes", std::to_string(v.mu4_twist_classes)},
          {"mu4_pass", v.mu4_pass},
          {"order6_pass", v.order6_pass},
          {"all_pass", v.all_pass}});

    if (!v.all_pass) {
        for (const auto& [n, per] : v.per_n) {
            if (!per.pass) std::cerr << "failed: realized orders at n = " << n << "\n";
        }
        if (!v.collinearity_pass) std::cerr << "failed: collinearity of the 4-pointed order-2 stratum\n";
        if (!v.max_n_pass) std::cerr << "failed: largest n with nontrivial automorphisms\n";
        if (!v.mu4_pass) std::cerr << "failed: uniqueness of the order-4 two-pointed class\n";
        if (!v.order6_pass) std::cerr << "failed: order-6 groups must not occur for n >= 2\n";
        return kExitVerifyFailed;
    }
    return 0;
}

int dispatch(int argc, char** argv) {
    CLI::App app{"Marked elliptic curves over exact fields: classification, automorphisms, census"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    auto* classify_cmd = app.add_subcommand("classify", "Classify a Weierstrass curve");
    std::string field_spec, a_text, b_text;
    classify_cmd->add_option("--field", field_spec, "prime p >= 5 or Q")->required();
    classify_cmd->add_option("--a", a_text)->required();
    classify_cmd->add_option("--b", b_text)->required();

    auto* aut_cmd = app.add_subcommand("aut", "Automorphism group of a marked curve");
    std::string aut_field, aut_a, aut_b;
    std::vector<std::string> aut_points;
    aut_cmd->add_option("--field", aut_field, "prime p >= 5 or Q")->required();
    aut_cmd->add_option("--a", aut_a)->required();
    aut_cmd->add_option("--b", aut_b)->required();
    aut_cmd->add_option("--points", aut_points, "affine marks x,y; the base point is implicit")
        ->expected(0, -1);

    auto* census_cmd = app.add_subcommand("census", "Bucket n-pointed curves by automorphism order");
    long long census_p = 0;
    int census_n = 0;
    std::string census_format = "json", census_strategy = "auto";
    bool census_force = false;
    census_cmd->add_option("--p", census_p, "prime in {5,7,11,13} (--force for others)")->required();
    census_cmd->add_option("--n", census_n, "marking count, 1..5")->required();
    census_cmd->add_option("--format", census_format, "json or csv");
    census_cmd->add_option("--strategy", census_strategy, "auto, full or restricted");
    census_cmd->add_flag("--force", census_force, "allow primes outside the default list");

    auto* chow_cmd = app.add_subcommand("chow", "Degree component of a Chow presentation");
    std::string chow_stack;
    int chow_degree = 0;
    chow_cmd->add_option("--stack", chow_stack, "M1,1 .. M1,10")->required();
    chow_cmd->add_option("--degree", chow_degree)->required()->check(CLI::NonNegativeNumber);

    auto* verify_cmd = app.add_subcommand("verify", "Verify the automorphism classification over F_p");
    long long verify_p = 0;
    verify_cmd->add_option("--p", verify_p, "prime characteristic")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitParse;
    }

    if (classify_cmd->parsed()) return run_classify(field_spec, a_text, b_text);
    if (aut_cmd->parsed()) return run_aut(aut_field, aut_a, aut_b, aut_points);
    if (census_cmd->parsed()) {
        return run_census(census_p, census_n, census_format, census_strategy, census_force);
    }
    if (chow_cmd->parsed()) return run_chow(chow_stack, chow_degree);
    if (verify_cmd->parsed()) return run_verify(verify_p);
    return kExitParse;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const NotPrime& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const BadCharacteristic& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCharacteristic;
    } catch (const UnsupportedN& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnsupportedN;
    } catch (const CurveNotSmooth& e) {
        std::cerr << "error: " << e.name() << ": " << e.what() << "\n";
        return kExitCurveData;
    } catch (const PointNotOnCurve& e) {
        std::cerr << "error: " << e.name() << ": " << e.what() << "\n";
        return kExitCurveData;
    } catch (const DuplicatePoints& e) {
        std::cerr << "error: " << e.name() << ": " << e.what() << "\n";
        return kExitCurveData;
    } catch (const Error& e) {
        std::cerr << "error: " << e.name() << ": " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
}
