// Command-line front end: solve / table / verify / sweep with plain, CSV,
// and JSON rendering.  All numeric output carries 12 significant digits;
// identical invocations produce byte-identical output.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bohr/errors.hpp"
#include "bohr/problems.hpp"
#include "bohr/solver.hpp"
#include "bohr/verify.hpp"

namespace {

using nlohmann::ordered_json;

enum ExitStatus : int {
    kExitOk = 0,
    kExitVerifyFailure = 1,
    kExitUsage = 2,
    kExitNumeric = 3,
};

std::string fmt12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::string(buf);
}

// Doubles are rounded through their 12-digit decimal form before entering
// a JSON tree, so parse + re-render reproduces the document byte for byte.
double round12(double v) { return std::strtod(fmt12(v).c_str(), nullptr); }

std::string bool_str(bool v) { return v ? "true" : "false"; }

std::map<std::string, std::string> parse_kv(const std::vector<std::string>& items) {
    std::map<std::string, std::string> out;
    for (const std::string& item : items) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 > item.size())
            throw std::invalid_argument("expected key=value, got '" + item + "'");
        const std::string key = item.substr(0, eq);
        const std::string value = item.substr(eq + 1);
        if (value.empty()) throw std::invalid_argument("empty value in '" + item + "'");
        if (out.count(key)) throw std::invalid_argument("duplicate parameter '" + key + "'");
        out[key] = value;
    }
    return out;
}

void emit(const ordered_json& doc) { std::cout << doc.dump(2) << "\n"; }

// ---------------------------------------------------------------------types
struct GlobalOptions {
    double tol = 1e-12;
    int max_iter = 200;
    std::uint64_t seed = 0;
    std::string format;  // empty = per-command default
};

std::string effective_format(const GlobalOptions& g, const std::string& fallback) {
    return g.format.empty() ? fallback : g.format;
}

// ---------------------------------------------------------------------solve
int cmd_solve(const GlobalOptions& g, const std::string& problem,
              const std::vector<std::string>& params) {
    const bohr::ProblemSpec spec = bohr::make_problem(problem, parse_kv(params));
    bohr::SolveOptions options;
    options.tol = g.tol;
    options.max_iterations = g.max_iter;
    const bohr::RootResult rr = bohr::solve(spec, options);

    const std::string format = effective_format(g, "plain");
    if (format == "json") {
        ordered_json doc;
        doc["problem"] = bohr::problem_label(spec);
        doc["radius"] = round12(rr.radius);
        doc["residual"] = round12(rr.residual);
        doc["bracket_lo"] = round12(rr.final_bracket.lo);
        doc["bracket_hi"] = round12(rr.final_bracket.hi);
        doc["iterations"] = rr.iterations;
        doc["monotone_certified"] = rr.monotone_certified;
        emit(doc);
    } else if (format == "csv") {
        std::cout << "problem,radius,residual,bracket_lo,bracket_hi,iterations,monotone_certified\n"
                  << bohr::problem_label(spec) << "," << fmt12(rr.radius) << ","
                  << fmt12(rr.residual) << "," << fmt12(rr.final_bracket.lo) << ","
                  << fmt12(rr.final_bracket.hi) << "," << rr.iterations << ","
                  << bool_str(rr.monotone_certified) << "\n";
    } else {
        std::cout << "problem             " << bohr::problem_label(spec) << "\n"
                  << "radius              " << fmt12(rr.radius) << "\n"
                  << "residual            " << fmt12(rr.residual) << "\n"
                  << "bracket             [" << fmt12(rr.final_bracket.lo) << ", "
                  << fmt12(rr.final_bracket.hi) << "]\n"
                  << "iterations          " << rr.iterations << "\n"
                  << "monotone_certified  " << bool_str(rr.monotone_certified) << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------------table
std::string joined_params(const bohr::ProblemSpec& spec, const char* sep) {
    std::string out;
    for (const auto& [k, v] : bohr::parameter_list(spec)) {
        if (!out.empty()) out += sep;
        out += k + "=" + v;
    }
    return out;
}

int cmd_table(const GlobalOptions& g, const std::string& id) {
    std::vector<std::pair<std::string, bohr::verify::TableRow>> rows;  // (table id, row)
    if (id == "all") {
        for (const char* tid : {"3.1", "3.2", "3.3", "3.4"})
            for (auto& row : bohr::verify::reproduce_table(tid)) rows.emplace_back(tid, row);
    } else {
        for (auto& row : bohr::verify::reproduce_table(id)) rows.emplace_back(id, row);
    }

    bool all_pass = true;
    for (const auto& [tid, row] : rows) all_pass = all_pass && row.pass;

    const std::string format = effective_format(g, "plain");
    if (format == "json") {
        ordered_json doc;
        doc["table"] = id;
        ordered_json out_rows = ordered_json::array();
        for (const auto& [tid, row] : rows) {
            ordered_json r;
            r["table"] = tid;
            ordered_json params = ordered_json::object();
            for (const auto& [k, v] : bohr::parameter_list(row.problem)) params[k] = v;
            r["params"] = params;
            r["expected"] = round12(row.expected_radius);
            r["computed"] = round12(row.computed_radius);
            r["delta"] = round12(row.abs_delta);
            r["residual"] = round12(row.residual);
            r["pass"] = row.pass;
            out_rows.push_back(r);
        }
        doc["rows"] = out_rows;
        doc["all_pass"] = all_pass;
        emit(doc);
    } else if (format == "csv") {
        if (id == "all") {
            std::cout << "table,params,expected,computed,delta,residual,pass\n";
            for (const auto& [tid, row] : rows) {
                std::cout << tid << "," << joined_params(row.problem, ";") << ","
                          << fmt12(row.expected_radius) << "," << fmt12(row.computed_radius)
                          << "," << fmt12(row.abs_delta) << "," << fmt12(row.residual) << ","
                          << bool_str(row.pass) << "\n";
            }
        } else {
            const bool four = id == "3.3" || id == "3.4";
            std::cout << (four ? "s,m,p,q" : "m,p") << ",expected,computed,delta,residual,pass\n";
            for (const auto& [tid, row] : rows) {
                std::string cells;
                for (const auto& [k, v] : bohr::parameter_list(row.problem)) {
                    if (!cells.empty()) cells += ",";
                    cells += v;
                }
                std::cout << cells << "," << fmt12(row.expected_radius) << ","
                          << fmt12(row.computed_radius) << "," << fmt12(row.abs_delta) << ","
                          << fmt12(row.residual) << "," << bool_str(row.pass) << "\n";
            }
        }
    } else {
        int passed = 0;
        for (const auto& [tid, row] : rows) {
            if (row.pass) ++passed;
            std::cout << tid << "  " << row.label << "  expected " << fmt12(row.expected_radius)
                      << "  computed " << fmt12(row.computed_radius) << "  delta "
                      << fmt12(row.abs_delta) << "  residual " << fmt12(row.residual) << "  "
                      << (row.pass ? "pass" : "FAIL") << "\n";
        }
        std::cout << "rows passing: " << passed << "/" << rows.size() << "\n";
    }
    return all_pass ? kExitOk : kExitVerifyFailure;
}

// --------------------------------------------------------------------verify
ordered_json identity_json(const bohr::verify::IdentityReport& report) {
    ordered_json suite;
    ordered_json cases = ordered_json::array();
    for (const auto& c : report.cases) {
        ordered_json e;
        e["alpha"] = c.weight_exponent;
        e["N"] = c.start_index;
        e["x"] = round12(c.x);
        e["K"] = c.truncation;
        e["tail_bound"] = round12(c.bound);
        e["tail_direct"] = round12(c.tail_direct);
        e["closed_minus_partial"] = round12(c.closed_minus_partial);
        e["pass"] = c.pass;
        cases.push_back(e);
    }
    suite["cases"] = cases;
    suite["failures"] = report.failures;
    suite["pass"] = report.failures == 0;
    return suite;
}

ordered_json sharpness_json(const std::vector<bohr::verify::SharpnessReport>& reports) {
    ordered_json arr = ordered_json::array();
    for (const auto& s : reports) {
        ordered_json e;
        e["problem"] = s.label;
        e["radius"] = round12(s.radius);
        e["epsilon"] = round12(s.epsilon);
        e["target"] = round12(s.target_value);
        e["value_below"] = round12(s.value_below);
        e["value_above"] = round12(s.value_above);
        e["bound_below"] = round12(s.bound_below);
        e["bound_above"] = round12(s.bound_above);
        e["holds_below"] = s.holds_below;
        e["fails_above"] = s.fails_above;
        e["advisory"] = s.advisory;
        e["pass"] = s.pass;
        arr.push_back(e);
    }
    return arr;
}

ordered_json sampling_json(const std::vector<bohr::verify::SamplingReport>& reports) {
    ordered_json arr = ordered_json::array();
    for (const auto& s : reports) {
        ordered_json e;
        e["problem"] = s.label;
        e["seed"] = s.seed;
        e["trials"] = s.trials;
        e["radius"] = round12(s.radius);
        e["target"] = round12(s.target_value);
        e["violations"] = s.violations;
        e["max_lhs"] = round12(s.max_lhs);
        e["max_margin"] = round12(s.max_margin);
        e["pass"] = s.pass;
        arr.push_back(e);
    }
    return arr;
}

ordered_json area_json(const std::vector<bohr::verify::AreaCheckCase>& cases) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : cases) {
        ordered_json e;
        e["r"] = round12(c.r);
        e["series"] = round12(c.series_value);
        e["quadrature"] = round12(c.quadrature_value);
        e["abs_diff"] = round12(c.abs_diff);
        e["accuracy_warning"] = c.accuracy_warning;
        e["pass"] = c.pass;
        arr.push_back(e);
    }
    return arr;
}

ordered_json special_case_json(const bohr::verify::QuadraticCaseReport& t) {
    ordered_json e;
    e["radius"] = round12(t.radius);
    e["in_unit_interval"] = t.in_unit_interval;
    e["monotone_certified"] = t.monotone_certified;
    e["comparison_root"] = round12(t.comparison_root);
    e["below_comparison_root"] = t.below_comparison_root;
    e["probe_r"] = round12(t.probe_r);
    e["probe_lhs"] = round12(t.probe_lhs);
    e["slack"] = round12(t.slack);
    e["pass"] = t.pass;
    return e;
}

int cmd_verify(const GlobalOptions& g, const std::string& suite) {
    const bool run_identities = suite == "identities" || suite == "all";
    const bool run_sharpness = suite == "sharpness" || suite == "all";
    const bool run_sampling = suite == "sampling" || suite == "all";
    const bool run_area = suite == "area" || suite == "all";
    if (!(run_identities || run_sharpness || run_sampling || run_area))
        throw std::invalid_argument("unknown suite '" + suite +
                                    "' (expected identities, sharpness, sampling, area, or all)");

    const std::vector<double> grid = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
    const std::vector<double> area_grid = {0.1, 0.25, 0.4, 0.5, 0.6};
    constexpr int kTrials = 10000;

    ordered_json doc;
    ordered_json suites;
    bool ok = true;
    // Human-readable counterpart assembled alongside.
    std::string plain;
    std::vector<std::array<std::string, 4>> csv_rows;

    if (run_identities) {
        const auto report = bohr::verify::identity_suite(grid);
        suites["identities"] = identity_json(report);
        ok = ok && report.failures == 0;
        plain += "identities: " + std::to_string(report.cases.size() - report.failures) + "/" +
                 std::to_string(report.cases.size()) + " cases pass\n";
        for (const auto& c : report.cases) {
            csv_rows.push_back({"identities",
                                "alpha=" + std::to_string(c.weight_exponent) +
                                    ";N=" + std::to_string(c.start_index) + ";x=" + fmt12(c.x),
                                bool_str(c.pass),
                                "tail_bound=" + fmt12(c.bound)});
        }
    }
    if (run_sharpness) {
        ordered_json both;
        for (double eps : {1e-2, 1e-3}) {
            const auto reports = bohr::verify::sharpness_suite(eps);
            both[fmt12(eps)] = sharpness_json(reports);
            int pass = 0;
            for (const auto& s : reports) {
                ok = ok && s.pass;
                if (s.pass) ++pass;
                csv_rows.push_back({"sharpness", s.label + ";eps=" + fmt12(eps),
                                    bool_str(s.pass),
                                    std::string("advisory=") + bool_str(s.advisory)});
            }
            plain += "sharpness eps=" + fmt12(eps) + ": " + std::to_string(pass) + "/" +
                     std::to_string(reports.size()) + " reports pass\n";
        }
        suites["sharpness"] = both;
    }
    if (run_sampling) {
        const auto reports = bohr::verify::sampling_suite(kTrials, g.seed);
        suites["sampling"] = sampling_json(reports);
        int pass = 0;
        for (const auto& s : reports) {
            ok = ok && s.pass;
            if (s.pass) ++pass;
            csv_rows.push_back({"sampling", s.label, bool_str(s.pass),
                                "violations=" + std::to_string(s.violations)});
        }
        plain += "sampling: " + std::to_string(pass) + "/" + std::to_string(reports.size()) +
                 " problems clean (" + std::to_string(kTrials) + " trials, seed " +
                 std::to_string(g.seed) + ")\n";
    }
    if (run_area) {
        const auto cases = bohr::verify::area_crosscheck(area_grid);
        suites["area"] = area_json(cases);
        int pass = 0;
        for (const auto& c : cases) {
            ok = ok && c.pass;
            if (c.pass) ++pass;
            csv_rows.push_back({"area", "r=" + fmt12(c.r), bool_str(c.pass),
                                "abs_diff=" + fmt12(c.abs_diff)});
        }
        plain += "area: " + std::to_string(pass) + "/" + std::to_string(cases.size()) +
                 " radii agree\n";
    }
    if (suite == "all") {
        const auto t51 = bohr::verify::quadratic_case(0.05);
        suites["special_case"] = special_case_json(t51);
        ok = ok && t51.pass;
        plain += std::string("special_case: ") + (t51.pass ? "pass" : "FAIL") + "\n";
        csv_rows.push_back({"special_case", "quadratic", bool_str(t51.pass),
                            "radius=" + fmt12(t51.radius)});
    }

    doc["suites"] = suites;
    doc["pass"] = ok;

    const std::string format = effective_format(g, "json");
    if (format == "json") {
        emit(doc);
    } else if (format == "csv") {
        std::cout << "suite,case,pass,detail\n";
        for (const auto& row : csv_rows)
            std::cout << row[0] << "," << row[1] << "," << row[2] << "," << row[3] << "\n";
    } else {
        std::cout << plain << (ok ? "verify: pass" : "verify: FAIL") << "\n";
    }
    return ok ? kExitOk : kExitVerifyFailure;
}

// ---------------------------------------------------------------------sweep
struct SweepRange {
    double lo = 0.0, hi = 0.0, step = 0.0;
};

SweepRange parse_range(const std::string& text) {
    SweepRange r;
    const auto c1 = text.find(':');
    const auto c2 = text.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw std::invalid_argument("range must be lo:hi:step, got '" + text + "'");
    try {
        std::size_t used = 0;
        r.lo = std::stod(text.substr(0, c1), &used);
        r.hi = std::stod(text.substr(c1 + 1, c2 - c1 - 1), &used);
        r.step = std::stod(text.substr(c2 + 1), &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("range must be lo:hi:step, got '" + text + "'");
    }
    if (!(r.step > 0.0)) throw std::invalid_argument("sweep step must be positive");
    if (!(r.lo <= r.hi)) throw std::invalid_argument("sweep range must have lo <= hi");
    return r;
}

int cmd_sweep(const GlobalOptions& g, const std::string& problem, const std::string& param,
              const std::string& range_text, const std::vector<std::string>& fixed) {
    const SweepRange range = parse_range(range_text);
    auto params = parse_kv(fixed);
    if (params.count(param))
        throw std::invalid_argument("swept parameter '" + param + "' also given as fixed");

    // Seed the variant with the first sweep value, then replace per point.
    params[param] = fmt12(range.lo);
    const bohr::ProblemSpec base = bohr::make_problem(problem, params);

    bohr::SolveOptions options;
    options.tol = g.tol;
    options.max_iterations = g.max_iter;

    std::vector<std::pair<double, double>> points;  // (value, radius)
    const long n_steps = std::lround(std::floor((range.hi - range.lo) / range.step + 1e-9));
    for (long i = 0; i <= n_steps; ++i) {
        const double value = range.lo + static_cast<double>(i) * range.step;
        const bohr::ProblemSpec spec = bohr::with_parameter(base, param, value);
        points.emplace_back(value, bohr::solve(spec, options).radius);
    }

    const std::string format = effective_format(g, "plain");
    if (format == "json") {
        ordered_json doc;
        doc["problem"] = problem;
        doc["param"] = param;
        ordered_json rows = ordered_json::array();
        for (const auto& [value, radius] : points) {
            ordered_json e;
            e["value"] = round12(value);
            e["radius"] = round12(radius);
            rows.push_back(e);
        }
        doc["rows"] = rows;
        emit(doc);
    } else if (format == "csv") {
        std::cout << param << ",radius\n";
        for (const auto& [value, radius] : points)
            std::cout << fmt12(value) << "," << fmt12(radius) << "\n";
    } else {
        for (const auto& [value, radius] : points)
            std::cout << param << "=" << fmt12(value) << "  radius=" << fmt12(radius) << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bohr radii of stable harmonic mappings under the differential operators D "
                 "and the script variant: certified roots, reference tables, verification "
                 "suites, and parameter sweeps"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    GlobalOptions global;
    app.add_option("--tol", global.tol, "bracket width tolerance for solve/sweep")
        ->capture_default_str();
    app.add_option("--max-iter", global.max_iter, "bisection iteration cap")
        ->capture_default_str();
    app.add_option("--seed", global.seed, "seed for the sampling suite")->capture_default_str();
    app.add_option("--format", global.format, "output format: json, csv, or plain")
        ->check(CLI::IsMember({"json", "csv", "plain"}));

    std::string problem, param, range_text, table_id, suite = "all";
    std::vector<std::string> params, fixed;

    CLI::App* solve = app.add_subcommand("solve", "solve one radius problem");
    solve->add_option("problem", problem, "problem id (T31..T44, T51)")->required();
    solve->add_option("params", params, "parameters as key=value");

    CLI::App* table = app.add_subcommand("table", "reproduce a reference table");
    table->add_option("id", table_id, "3.1, 3.2, 3.3, 3.4, or all")->required();

    CLI::App* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("suite", suite, "identities, sharpness, sampling, area, or all");

    CLI::App* sweep = app.add_subcommand("sweep", "radius as a function of one parameter");
    sweep->add_option("problem", problem, "problem id")->required();
    sweep->add_option("param", param, "parameter to sweep")->required();
    sweep->add_option("range", range_text, "lo:hi:step")->required();
    sweep->add_option("fixed", fixed, "remaining parameters as key=value");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (solve->parsed()) return cmd_solve(global, problem, params);
        if (table->parsed()) return cmd_table(global, table_id);
        if (verify->parsed()) return cmd_verify(global, suite);
        if (sweep->parsed()) return cmd_sweep(global, problem, param, range_text, fixed);
    } catch (const bohr::NoRootError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const bohr::NumericError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const bohr::BoundUnavailableError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
