#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bohr/maps.hpp"
#include "bohr/series.hpp"

using bohr::area_ratio_quadrature;
using bohr::area_ratio_quadrature_serial;
using bohr::area_ratio_series;
using bohr::HarmonicCoefficientMap;
using bohr::OperatorKind;
using bohr::operator_majorant;

TEST_CASE("extremal map values") {
    CHECK(bohr::koebe_value(0.0) == 0.0);
    CHECK(bohr::koebe_value(0.5) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(bohr::koebe_value(0.3) ==
          doctest::Approx(bohr::partial_sum(1, 1, 0.3, 200)).epsilon(1e-13));

    CHECK(bohr::halfplane_value(0.0) == 0.0);
    CHECK(bohr::halfplane_value(0.5) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(bohr::halfplane_value(0.9) ==
          doctest::Approx(bohr::partial_sum(0, 1, 0.9, 600)).epsilon(1e-9));

    CHECK_THROWS_AS((void)bohr::koebe_value(1.0), std::domain_error);
}

TEST_CASE("coefficient rules") {
    const auto koebe = HarmonicCoefficientMap::koebe();
    CHECK(koebe.a(1) == 1.0);
    CHECK(koebe.a(7) == 7.0);
    CHECK(koebe.b(5) == 0.0);

    const auto half = HarmonicCoefficientMap::half_plane();
    CHECK(half.a(1) == 1.0);
    CHECK(half.a(9) == 1.0);

    const auto sampled = HarmonicCoefficientMap::with_coefficients({0.5, 0.25}, {0.1}, "demo");
    CHECK(sampled.a(1) == 1.0);
    CHECK(sampled.b(1) == 0.0);
    CHECK(sampled.a(2) == 0.5);
    CHECK(sampled.a(3) == 0.25);
    CHECK(sampled.a(4) == 0.0);
    CHECK(sampled.b(2) == 0.1);
    CHECK(sampled.b(3) == 0.0);

    CHECK_THROWS_AS(HarmonicCoefficientMap::with_coefficients({-1.0}, {}, "bad"),
                    std::invalid_argument);
}

TEST_CASE("operator majorants against series oracles") {
    const auto koebe = HarmonicCoefficientMap::koebe();
    const auto half = HarmonicCoefficientMap::half_plane();

    // Koebe under D: weights n * n give sum n^2 r^n = 6 at r = 1/2.
    CHECK(operator_majorant(koebe, OperatorKind::D, 0.5, 200) ==
          doctest::Approx(6.0).epsilon(1e-12));
    // Half-plane under D2: sum n^2 r^n.
    CHECK(operator_majorant(half, OperatorKind::D2, 0.3, 300) ==
          doctest::Approx(bohr::closed_sum(2, 1, 0.3)).epsilon(1e-10));
    CHECK(operator_majorant(koebe, OperatorKind::Identity, 0.0, 50) == 0.0);

    // D and the script flavor weigh coefficients identically.
    for (double r : {0.1, 0.3, 0.5, 0.7}) {
        CHECK(operator_majorant(koebe, OperatorKind::D, r, 100) ==
              operator_majorant(koebe, OperatorKind::Dscript, r, 100));
        CHECK(operator_majorant(half, OperatorKind::D2, r, 100) ==
              operator_majorant(half, OperatorKind::Dscript2, r, 100));
    }
}

TEST_CASE("Flambda majorant is the convex mixture of Identity and D") {
    const auto koebe = HarmonicCoefficientMap::koebe();
    for (double lambda : {0.0, 0.3, 1.0}) {
        for (double r : {0.2, 0.5}) {
            const double mix = operator_majorant(koebe, OperatorKind::Flambda, r, 120, lambda);
            const double ref = (1 - lambda) * operator_majorant(koebe, OperatorKind::Identity, r, 120) +
                               lambda * operator_majorant(koebe, OperatorKind::D, r, 120);
            CHECK(mix == doctest::Approx(ref).epsilon(1e-13));
        }
    }
    CHECK_THROWS_AS(
        (void)operator_majorant(koebe, OperatorKind::Flambda, 0.5, 100, 1.5),
        std::invalid_argument);
}

TEST_CASE("operator majorant is nondecreasing in radius and truncation") {
    const auto koebe = HarmonicCoefficientMap::koebe();
    double prev = 0.0;
    for (double r : {0.0, 0.1, 0.2, 0.4, 0.6}) {
        const double cur = operator_majorant(koebe, OperatorKind::D, r, 100);
        CHECK(cur >= prev);
        prev = cur;
    }
    prev = 0.0;
    for (int K : {2, 4, 16, 64, 256}) {
        const double cur = operator_majorant(koebe, OperatorKind::D, 0.5, K);
        CHECK(cur >= prev);
        prev = cur;
    }
}

TEST_CASE("area ratio series") {
    const auto koebe = HarmonicCoefficientMap::koebe();
    CHECK(area_ratio_series(koebe, 0.5, 60) ==
          doctest::Approx(bohr::closed_sum(5, 1, 0.25)).epsilon(1e-13));
    CHECK(area_ratio_series(koebe, 0.0, 60) == 0.0);

    // a_n = b_n for n >= 2 cancels everything but the n = 1 term.
    const auto cancel = HarmonicCoefficientMap::with_coefficients({0.4, 0.3}, {0.4, 0.3}, "cancel");
    for (double r : {0.1, 0.5}) CHECK(area_ratio_series(cancel, r, 40) == r * r);

    // Approaches the closed form as the truncation grows, within the tail
    // bound plus a few ulps of the limit value.
    const double fp_floor = 16.9054 * 1e-15;
    for (int K : {10, 20, 40}) {
        const double err = std::abs(area_ratio_series(koebe, 0.5, K) - bohr::closed_sum(5, 1, 0.25));
        CHECK(err <= bohr::tail_bound({5, 1, 0.25}, K) + fp_floor);
    }

    // With b = 0 the admissible ceiling coincides with the series.
    CHECK(bohr::area_ratio_bound(koebe, 0.5, 60) ==
          doctest::Approx(area_ratio_series(koebe, 0.5, 60)).epsilon(1e-15));
}

TEST_CASE("area quadrature agrees with the series") {
    const auto koebe = HarmonicCoefficientMap::koebe();
    const auto q = area_ratio_quadrature(koebe, 0.5, 60, 512);
    CHECK(std::abs(q.value - area_ratio_series(koebe, 0.5, 60)) <= 1e-6);
    CHECK_FALSE(q.accuracy_warning);

    const auto q0 = area_ratio_quadrature(koebe, 0.0, 60, 512);
    CHECK(q0.value == 0.0);

    // Identity map: the integrand is 1, so the answer is exactly r^2.
    const auto identity = HarmonicCoefficientMap::with_coefficients({}, {}, "identity");
    for (double r : {0.25, 0.5}) {
        const auto qi = area_ratio_quadrature(identity, r, 10, 64);
        CHECK(qi.value == doctest::Approx(r * r).epsilon(1e-12));
    }

    CHECK_THROWS_AS((void)area_ratio_quadrature(koebe, 0.5, 60, 32), std::invalid_argument);
}

TEST_CASE("raw midpoint levels converge at second order") {
    const auto koebe = HarmonicCoefficientMap::koebe();
    const double exact = area_ratio_series(koebe, 0.4, 60);
    const auto q = area_ratio_quadrature(koebe, 0.4, 60, 512);
    const double e_fine = q.midpoint_fine - exact;
    const double e_half = q.midpoint_half - exact;
    const double e_quarter = q.midpoint_quarter - exact;
    CHECK(e_fine / e_half == doctest::Approx(0.25).epsilon(0.02));
    CHECK(e_half / e_quarter == doctest::Approx(0.25).epsilon(0.02));
}

TEST_CASE("parallel and serial quadrature are bit-identical") {
    const auto koebe = HarmonicCoefficientMap::koebe();
    const auto sampled =
        HarmonicCoefficientMap::with_coefficients({1.5, 0.7, 0.2}, {0.2, 0.1}, "sampled");
    for (const auto* map : {&koebe, &sampled}) {
        const auto qp = area_ratio_quadrature(*map, 0.45, 40, 128);
        const auto qs = area_ratio_quadrature_serial(*map, 0.45, 40, 128);
        CHECK(qp.value == qs.value);
        CHECK(qp.midpoint_fine == qs.midpoint_fine);
        CHECK(qp.midpoint_half == qs.midpoint_half);
        CHECK(qp.midpoint_quarter == qs.midpoint_quarter);
    }
}
