#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "bohr/verify.hpp"

using namespace bohr;
using namespace bohr::verify;

TEST_CASE("table 3.1 reproduces all published radii") {
    const auto rows = reproduce_table("3.1");
    REQUIRE(rows.size() == 4);
    const std::vector<double> expected = {0.093200, 0.157800, 0.305300, 0.133100};
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].expected_radius == expected[i]);
        CHECK(rows[i].pass);
        CHECK(rows[i].residual <= 1e-10);
        CHECK(rows[i].monotone_certified);
    }
}

TEST_CASE("table 3.2: one published entry contradicts its own equation") {
    const auto rows = reproduce_table("3.2");
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].pass);
    CHECK(rows[2].pass);
    CHECK(rows[3].pass);

    // Row (m=2, p=1) prints 0.386900, but the equation's root is 0.286876
    // (the printed value misses its own equation by +0.338).
    CHECK_FALSE(rows[1].pass);
    CHECK(rows[1].expected_radius == 0.386900);
    CHECK(rows[1].computed_radius == doctest::Approx(0.286875639213).epsilon(1e-9));
    CHECK(rows[1].residual <= 1e-10);  // the computed radius does solve the equation
    CHECK(std::abs(evaluate_G(rows[1].problem, 0.386900)) > 0.3);
}

TEST_CASE("table 3.3 reproduces all published radii") {
    const auto rows = reproduce_table("3.3");
    REQUIRE(rows.size() == 4);
    for (const auto& row : rows) {
        CHECK(row.pass);
        CHECK(row.residual <= 1e-10);
    }
    CHECK(rows[2].computed_radius == doctest::Approx(0.533642907085).epsilon(1e-9));
}

TEST_CASE("table 3.4: one published entry contradicts its own equation") {
    const auto rows = reproduce_table("3.4");
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].pass);
    CHECK(rows[1].pass);
    CHECK(rows[3].pass);

    // Row (3,2,5,5) prints 0.618300; the root is 0.618034, just below the
    // golden-ratio conjugate where the first term reaches 1 exactly.
    CHECK_FALSE(rows[2].pass);
    CHECK(rows[2].computed_radius == doctest::Approx(0.618033548319).epsilon(1e-9));
    CHECK(rows[2].abs_delta > 1e-4);
    CHECK(rows[2].abs_delta < 3e-4);
    CHECK(rows[2].residual <= 1e-10);
}

TEST_CASE("table ids are validated and 14 of 16 rows pass") {
    CHECK_THROWS_AS((void)reproduce_table("9"), std::invalid_argument);
    const auto rows = reproduce_all_tables();
    REQUIRE(rows.size() == 16);
    int passing = 0;
    for (const auto& row : rows)
        if (row.pass) ++passing;
    CHECK(passing == 14);
}

TEST_CASE("sharpness scans flip around the computed radius") {
    const auto r31 = sharpness_scan(ProblemSpec{T31{1, 1}}, 1e-3);
    CHECK(r31.holds_below);
    CHECK(r31.fails_above);
    CHECK_FALSE(r31.advisory);
    CHECK(r31.pass);

    // Classical reduction: above 1/3 the half-plane value exceeds 1/2.
    const auto r42 = sharpness_scan(ProblemSpec{T42{1, 0.0}}, 1e-3);
    CHECK(r42.radius == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
    CHECK(r42.value_above > 0.5);
    CHECK(r42.pass);

    CHECK_THROWS_AS((void)sharpness_scan(ProblemSpec{T31{1, 1}}, 0.5), std::invalid_argument);
}

TEST_CASE("T41 sharpness is advisory and records the growth-bound tension") {
    const auto r41 = sharpness_scan(ProblemSpec{T41{1, 0.5}}, 1e-3);
    CHECK(r41.advisory);
    CHECK(r41.pass);  // advisory entries never fail the suite
    // The Koebe value sits above the printed bound on both sides.
    CHECK(r41.value_below > r41.bound_below);
    CHECK(r41.value_above > r41.bound_above);
    // With the half-plane growth replaced by the Koebe growth, the
    // inequality already fails below the printed radius.
    CHECK_FALSE(r41.holds_below);
}

TEST_CASE("sharpness suite passes at both default epsilons") {
    for (double eps : {1e-2, 1e-3}) {
        const auto reports = sharpness_suite(eps);
        CHECK(reports.size() == 21);
        int advisory = 0;
        for (const auto& s : reports) {
            CHECK(s.pass);
            if (s.advisory) ++advisory;
        }
        CHECK(advisory == 1);
    }
}

TEST_CASE("identity suite has zero failures on the default grid") {
    const std::vector<double> grid = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
    const auto report = identity_suite(grid);
    CHECK(report.failures == 0);
    CHECK(report.cases.size() == 12 * grid.size());
    for (const auto& c : report.cases) {
        CHECK(c.pass);
        if (c.x > 0.0) {
            CHECK(c.bound <= 1e-12);
            CHECK(c.tail_direct <= c.bound);
        }
    }
    CHECK_THROWS_AS((void)identity_suite(std::vector<double>{0.95}), std::invalid_argument);
}

TEST_CASE("class sampling finds no violations and is reproducible") {
    const auto a = sample_class_inequality(ProblemSpec{T31{1, 1}}, 10000, 0);
    CHECK(a.violations == 0);
    CHECK(a.pass);
    CHECK(a.max_lhs <= a.target_value + 1e-12);

    const auto b = sample_class_inequality(ProblemSpec{T31{1, 1}}, 10000, 0);
    CHECK(a.max_lhs == b.max_lhs);
    CHECK(a.worst_trial == b.worst_trial);

    const auto serial = sample_class_inequality_serial(ProblemSpec{T31{1, 1}}, 10000, 0);
    CHECK(a.max_lhs == serial.max_lhs);
    CHECK(a.worst_trial == serial.worst_trial);

    const auto c = sample_class_inequality(ProblemSpec{T34{2, 1, 1, 1}}, 10000, 7);
    CHECK(c.violations == 0);
}

TEST_CASE("the zero-coefficient map sits strictly inside the inequality") {
    const auto identity_map = HarmonicCoefficientMap::with_coefficients({}, {}, "identity");
    const ProblemSpec spec{T31{1, 1}};
    const double radius = solve(spec).radius;
    CHECK(lhs_for_map(spec, identity_map, radius, 40) < target(spec));
}

TEST_CASE("quadratic special case") {
    const auto report = quadratic_case(0.05);
    CHECK(report.in_unit_interval);
    CHECK(report.monotone_certified);
    CHECK(report.radius == doctest::Approx(0.134507653636489).epsilon(1e-9));
    CHECK(report.comparison_root == doctest::Approx(3.0 - 2.0 * std::sqrt(2.0)).epsilon(1e-15));
    CHECK(report.below_comparison_root);
    CHECK(report.probe_holds);
    CHECK(report.pass);

    // Probe at 0: the left side vanishes, slack is exactly the target.
    const auto at_zero = quadratic_case(0.0);
    CHECK(at_zero.probe_lhs == 0.0);
    CHECK(at_zero.slack == 0.25);
}

TEST_CASE("linear special case reduces to the plain equation") {
    const ProblemSpec spec{T51{1, NonnegPolynomial({1.0})}};
    CHECK(solve(spec).radius == doctest::Approx(0.150233453877270).epsilon(1e-9));
}

TEST_CASE("area cross-check agrees at every default radius") {
    const std::vector<double> rs = {0.1, 0.25, 0.4, 0.5, 0.6};
    const auto cases = area_crosscheck(rs);
    REQUIRE(cases.size() == rs.size());
    for (const auto& c : cases) {
        CAPTURE(c.r);
        CHECK(c.pass);
        CHECK(c.abs_diff <= 1e-6);
    }
    // r = 0 degenerates to zero on both routes.
    const auto zero = area_crosscheck(std::vector<double>{0.0});
    CHECK(zero[0].series_value == 0.0);
    CHECK(zero[0].quadrature_value == 0.0);

    CHECK_THROWS_AS((void)area_crosscheck(std::vector<double>{0.7}), std::invalid_argument);
}
