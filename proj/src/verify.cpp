#include "bohr/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "bohr/errors.hpp"
#include "bohr/series.hpp"

namespace bohr::verify {

namespace {

constexpr double kTableDeltaTol = 1e-4;
constexpr double kResidualTol = 1e-10;
constexpr double kSamplingSlack = 1e-12;
constexpr double kAreaTol = 1e-6;

ProblemSpec spec_of(ProblemVariant v) { return ProblemSpec{std::move(v)}; }

}  // namespace

const std::vector<TableEntry>& table_catalog() {
    static const std::vector<TableEntry> catalog = [] {
        std::vector<TableEntry> rows;
        auto add = [&rows](const char* id, ProblemVariant v, double published) {
            rows.push_back(TableEntry{id, spec_of(std::move(v)), published});
        };
        add("3.1", T31{1, 1}, 0.093200);
        add("3.1", T31{2, 1}, 0.157800);
        add("3.1", T31{2, 2}, 0.305300);
        add("3.1", T31{1, 2}, 0.133100);

        add("3.2", T32{1, 1}, 0.183500);
        add("3.2", T32{2, 1}, 0.386900);
        add("3.2", T32{2, 2}, 0.428400);
        add("3.2", T32{1, 2}, 0.246800);

        add("3.3", T33{2, 1, 1, 1}, 0.250500);
        add("3.3", T33{2, 2, 3, 1}, 0.378000);
        add("3.3", T33{3, 2, 5, 5}, 0.533600);
        add("3.3", T33{2, 1, 7, 2}, 0.284800);

        add("3.4", T34{2, 1, 1, 1}, 0.326200);
        add("3.4", T34{2, 2, 3, 1}, 0.485200);
        add("3.4", T34{3, 2, 5, 5}, 0.618300);
        add("3.4", T34{2, 1, 7, 2}, 0.382000);
        return rows;
    }();
    return catalog;
}

std::vector<TableRow> reproduce_table(std::string_view table_id) {
    bool known = table_id == "3.1" || table_id == "3.2" || table_id == "3.3" || table_id == "3.4";
    if (!known) {
        throw std::invalid_argument("unknown table id '" + std::string(table_id) +
                                    "' (expected 3.1, 3.2, 3.3, or 3.4)");
    }
    std::vector<TableRow> rows;
    for (const TableEntry& entry : table_catalog()) {
        if (entry.table_id != table_id) continue;
        const RootResult rr = solve(entry.problem);
        TableRow row;
        row.problem = entry.problem;
        row.label = problem_label(entry.problem);
        row.expected_radius = entry.published_radius;
        row.computed_radius = rr.radius;
        row.abs_delta = std::abs(rr.radius - entry.published_radius);
        row.residual = rr.residual;
        row.monotone_certified = rr.monotone_certified;
        row.pass = row.abs_delta <= kTableDeltaTol && row.residual <= kResidualTol;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<TableRow> reproduce_all_tables() {
    std::vector<TableRow> rows;
    for (const char* id : {"3.1", "3.2", "3.3", "3.4"}) {
        auto part = reproduce_table(id);
        rows.insert(rows.end(), part.begin(), part.end());
    }
    return rows;
}

SharpnessReport sharpness_scan(const ProblemSpec& spec, double epsilon) {
    if (!(epsilon > 0.0 && epsilon <= 0.01))
        throw std::invalid_argument("sharpness epsilon must lie in (0, 0.01]");

    const RootResult rr = solve(spec);
    if (!(rr.radius + epsilon < 1.0))
        throw std::invalid_argument("radius + epsilon reaches 1; shrink epsilon");

    SharpnessReport report;
    report.label = problem_label(spec);
    report.radius = rr.radius;
    report.epsilon = epsilon;
    report.target_value = target(spec);

    const double below = std::max(rr.radius - epsilon, 0.0);
    const double above = rr.radius + epsilon;
    const ExtremalComparison lo = lhs_extremal_pair(spec, below);
    const ExtremalComparison hi = lhs_extremal_pair(spec, above);
    report.value_below = lo.extremal_map;
    report.value_above = hi.extremal_map;
    report.bound_below = lo.class_bound;
    report.bound_above = hi.class_bound;
    report.holds_below = report.value_below <= report.target_value;
    report.fails_above = report.value_above > report.target_value;
    report.advisory = std::holds_alternative<T41>(spec.problem);
    report.pass = report.advisory || (report.holds_below && report.fails_above);
    return report;
}

namespace {

std::vector<ProblemSpec> sharpness_problems() {
    std::vector<ProblemSpec> specs;
    for (const TableEntry& entry : table_catalog()) specs.push_back(entry.problem);
    specs.push_back(spec_of(T42{1, 0.5}));
    specs.push_back(spec_of(T43{1, 1, 2}));
    specs.push_back(spec_of(T44{1, 1, 2}));
    specs.push_back(spec_of(T51{1, NonnegPolynomial({1.0})}));
    specs.push_back(spec_of(T41{1, 0.5}));  // advisory
    return specs;
}

}  // namespace

std::vector<SharpnessReport> sharpness_suite(double epsilon) {
    std::vector<SharpnessReport> reports;
    for (const ProblemSpec& spec : sharpness_problems())
        reports.push_back(sharpness_scan(spec, epsilon));
    return reports;
}

namespace {

// sum_{n > K} n^alpha x^n accumulated term by term.  Every term is at the
// tail's own scale, so the result carries full float64 accuracy even when
// the series value itself is large.
double direct_tail(const WeightedGeometricSeries& s, long truncation) {
    const double x = s.argument;
    if (x == 0.0) return 0.0;
    double sum = 0.0;
    double xn = ipow(x, truncation + 1);
    for (long n = truncation + 1;; ++n) {
        const double term = ipow(static_cast<double>(n), s.weight_exponent) * xn;
        sum += term;
        if (term < 1e-34) break;
        xn *= x;
    }
    return sum;
}

}  // namespace

IdentityReport identity_suite(std::span<const double> grid) {
    for (double x : grid) {
        if (!(x >= 0.0 && x <= 0.9))
            throw std::invalid_argument("identity grid points must lie in [0, 0.9]");
    }

    // Supported (alpha, N) pairs; generic-N weights get an extra N = 3 case.
    const std::vector<std::pair<int, int>> combos = {
        {0, 1}, {0, 2}, {0, 3}, {1, 1}, {1, 2}, {1, 3},
        {2, 1}, {2, 2}, {3, 1}, {3, 2}, {5, 1}, {5, 2},
    };

    IdentityReport report;
    for (const auto& [alpha, start] : combos) {
        for (double x : grid) {
            const WeightedGeometricSeries s{alpha, start, x};
            IdentityCase c;
            c.weight_exponent = alpha;
            c.start_index = start;
            c.x = x;

            if (x == 0.0) {
                c.truncation = start;
                c.bound = 0.0;
                c.tail_direct = 0.0;
                c.closed_minus_partial = closed_sum(s) - partial_sum(s, start);
                c.fp_allowance = 0.0;
                c.pass = c.closed_minus_partial == 0.0;
            } else {
                const long K = adaptive_truncation(s, 1e-12);
                const double closed = closed_sum(s);
                const double partial = partial_sum(s, K);
                c.truncation = K;
                c.bound = tail_bound(s, K);
                c.tail_direct = direct_tail(s, K);
                c.closed_minus_partial = closed - partial;
                // closed = partial + tail up to accumulated rounding.
                c.fp_allowance = (static_cast<double>(K) + 64.0) *
                                 std::numeric_limits<double>::epsilon() *
                                 std::max(1.0, std::abs(closed));
                const bool chain = c.tail_direct <= c.bound && c.bound <= 1e-12;
                const bool closed_form_ok =
                    std::abs(closed - (partial + c.tail_direct)) <= c.fp_allowance;
                c.pass = chain && closed_form_ok;
            }
            if (!c.pass) ++report.failures;
            report.cases.push_back(c);
        }
    }
    return report;
}

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Uniform double in [0, 1) from the engine's raw 64 bits; avoids the
// implementation-defined std::uniform_real_distribution.
double uniform01(std::mt19937_64& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

constexpr int kSampleOrder = 40;  // coefficients drawn for n <= 40, zero beyond

HarmonicCoefficientMap draw_admissible_map(const MappingClassProfile& profile,
                                           std::uint64_t seed, int trial) {
    std::mt19937_64 eng(splitmix64(splitmix64(seed) ^
                                   (static_cast<std::uint64_t>(trial) * 0x9E3779B97F4A7C15ULL)));
    std::vector<double> a(kSampleOrder - 1, 0.0);
    std::vector<double> b(kSampleOrder - 1, 0.0);
    for (int n = 2; n <= kSampleOrder; ++n) {
        const double total = uniform01(eng) * profile.coeff_bound(n);
        const double split = uniform01(eng);
        a[static_cast<std::size_t>(n - 2)] = total * split;
        b[static_cast<std::size_t>(n - 2)] = total * (1.0 - split);
    }
    return HarmonicCoefficientMap::with_coefficients(std::move(a), std::move(b), "sampled");
}

SamplingReport sampling_impl(const ProblemSpec& spec, int trials, std::uint64_t seed,
                             bool parallel) {
    if (trials < 1) throw std::invalid_argument("trial count must be >= 1");
    validate(spec);

    const RootResult rr = solve(spec);
    const double tgt = target(spec);
    const MappingClassProfile profile = class_profile(mapping_kind(spec));

    std::vector<double> lhs(static_cast<std::size_t>(trials), 0.0);

#pragma omp parallel for schedule(static) if (parallel)
    for (int t = 0; t < trials; ++t) {
        const HarmonicCoefficientMap map = draw_admissible_map(profile, seed, t);
        lhs[static_cast<std::size_t>(t)] = lhs_for_map(spec, map, rr.radius, kSampleOrder);
    }

    SamplingReport report;
    report.label = problem_label(spec);
    report.seed = seed;
    report.trials = trials;
    report.radius = rr.radius;
    report.target_value = tgt;
    report.max_lhs = -std::numeric_limits<double>::infinity();
    for (int t = 0; t < trials; ++t) {
        const double v = lhs[static_cast<std::size_t>(t)];
        if (v > report.max_lhs) {
            report.max_lhs = v;
            report.worst_trial = t;
        }
        if (v - tgt > kSamplingSlack) ++report.violations;
    }
    report.max_margin = report.max_lhs - tgt;
    report.pass = report.violations == 0;
    return report;
}

}  // namespace

SamplingReport sample_class_inequality(const ProblemSpec& spec, int trials,
                                       std::uint64_t seed) {
    return sampling_impl(spec, trials, seed, true);
}

SamplingReport sample_class_inequality_serial(const ProblemSpec& spec, int trials,
                                              std::uint64_t seed) {
    return sampling_impl(spec, trials, seed, false);
}

std::vector<SamplingReport> sampling_suite(int trials, std::uint64_t seed) {
    std::vector<SamplingReport> reports;
    for (const TableEntry& entry : table_catalog())
        reports.push_back(sample_class_inequality(entry.problem, trials, seed));
    return reports;
}

QuadraticCaseReport quadratic_case(double r_probe) {
    const ProblemSpec spec = spec_of(T51{1, NonnegPolynomial({16.0 / 9.0, 18.6095})});
    const RootResult rr = solve(spec);

    QuadraticCaseReport report;
    report.radius = rr.radius;
    report.in_unit_interval = rr.radius > 0.0 && rr.radius < 1.0;
    report.monotone_certified = rr.monotone_certified;
    // Dropping the polynomial leaves r/(1-r)^2 = 1/4, whose root is 3 - 2*sqrt(2);
    // the extra nonnegative terms can only shrink the radius.
    report.comparison_root = 3.0 - 2.0 * std::sqrt(2.0);
    report.below_comparison_root = rr.radius <= report.comparison_root;
    report.probe_r = r_probe;
    report.probe_lhs = lhs_class_bound(spec, std::min(r_probe, rr.radius));
    report.slack = target(spec) - report.probe_lhs;
    report.probe_holds = report.probe_lhs <= target(spec) + kSamplingSlack;
    report.pass = report.in_unit_interval && report.monotone_certified &&
                  report.below_comparison_root && report.probe_holds;
    return report;
}

std::vector<AreaCheckCase> area_crosscheck(std::span<const double> r_values) {
    for (double r : r_values) {
        if (!(r >= 0.0 && r <= 0.6))
            throw std::invalid_argument("area cross-check radii must lie in [0, 0.6]");
    }
    const HarmonicCoefficientMap koebe = HarmonicCoefficientMap::koebe();
    constexpr int kOrder = 60;
    constexpr int kGrid = 512;

    std::vector<AreaCheckCase> cases;
    for (double r : r_values) {
        AreaCheckCase c;
        c.r = r;
        c.series_value = area_ratio_series(koebe, r, kOrder);
        const AreaQuadrature q = area_ratio_quadrature(koebe, r, kOrder, kGrid);
        c.quadrature_value = q.value;
        c.abs_diff = std::abs(c.series_value - c.quadrature_value);
        c.accuracy_warning = q.accuracy_warning;
        c.pass = c.abs_diff <= kAreaTol;
        cases.push_back(c);
    }
    return cases;
}

}  // namespace bohr::verify
