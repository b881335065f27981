#include "bohr/maps.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "bohr/series.hpp"

namespace bohr {

namespace {

void check_radius(double r) {
    if (!(r >= 0.0) || r > kMaxArgument) {
        throw std::domain_error("radius must lie in [0, 1 - 1e-6], got " + std::to_string(r));
    }
}

}  // namespace

HarmonicCoefficientMap HarmonicCoefficientMap::koebe() {
    return HarmonicCoefficientMap(Rule::Koebe, "koebe");
}

HarmonicCoefficientMap HarmonicCoefficientMap::half_plane() {
    return HarmonicCoefficientMap(Rule::HalfPlane, "half-plane");
}

HarmonicCoefficientMap HarmonicCoefficientMap::with_coefficients(std::vector<double> a_from_2,
                                                                 std::vector<double> b_from_2,
                                                                 std::string label) {
    for (double v : a_from_2) {
        if (!(v >= 0.0) || !std::isfinite(v))
            throw std::invalid_argument("coefficient moduli must be finite and nonnegative");
    }
    for (double v : b_from_2) {
        if (!(v >= 0.0) || !std::isfinite(v))
            throw std::invalid_argument("coefficient moduli must be finite and nonnegative");
    }
    HarmonicCoefficientMap map(Rule::Explicit, std::move(label));
    map.a_ = std::move(a_from_2);
    map.b_ = std::move(b_from_2);
    return map;
}

double HarmonicCoefficientMap::a(int n) const {
    if (n < 1) throw std::invalid_argument("coefficient index must be >= 1");
    if (n == 1) return 1.0;  // normalization
    switch (rule_) {
        case Rule::Koebe: return static_cast<double>(n);
        case Rule::HalfPlane: return 1.0;
        case Rule::Explicit: {
            const std::size_t i = static_cast<std::size_t>(n - 2);
            return i < a_.size() ? a_[i] : 0.0;
        }
    }
    return 0.0;
}

double HarmonicCoefficientMap::b(int n) const {
    if (n < 1) throw std::invalid_argument("coefficient index must be >= 1");
    if (n == 1) return 0.0;  // normalization
    if (rule_ != Rule::Explicit) return 0.0;
    const std::size_t i = static_cast<std::size_t>(n - 2);
    return i < b_.size() ? b_[i] : 0.0;
}

double operator_weight(OperatorKind op, int n, double lambda) {
    switch (op) {
        case OperatorKind::Identity: return 1.0;
        case OperatorKind::D:
        case OperatorKind::Dscript: return static_cast<double>(n);
        case OperatorKind::D2:
        case OperatorKind::Dscript2: return static_cast<double>(n) * static_cast<double>(n);
        case OperatorKind::Flambda:
            if (!(lambda >= 0.0 && lambda <= 1.0))
                throw std::invalid_argument("Flambda mixing weight must lie in [0,1]");
            return (1.0 - lambda) + lambda * static_cast<double>(n);
    }
    return 1.0;
}

double koebe_value(double r) {
    check_radius(r);
    const double u = 1.0 - r;
    return r / (u * u);
}

double halfplane_value(double r) {
    check_radius(r);
    return r / (1.0 - r);
}

double operator_majorant(const HarmonicCoefficientMap& map, OperatorKind op,
                         double r, int upto, double lambda) {
    check_radius(r);
    if (upto < 2) throw std::invalid_argument("majorant truncation must be >= 2");
    if (op == OperatorKind::Flambda && !(lambda >= 0.0 && lambda <= 1.0))
        throw std::invalid_argument("Flambda mixing weight must lie in [0,1]");

    double sum = r;  // n = 1 term: weight and |a_1| + |b_1| are both 1
    double rn = r * r;
    for (int n = 2; n <= upto; ++n) {
        sum += operator_weight(op, n, lambda) * (map.a(n) + map.b(n)) * rn;
        rn *= r;
    }
    return sum;
}

double coefficient_tail_sum(const HarmonicCoefficientMap& map, double r,
                            int start_index, int upto) {
    check_radius(r);
    if (start_index < 1) throw std::invalid_argument("start index must be >= 1");
    if (upto < start_index) throw std::invalid_argument("truncation below start index");

    double sum = 0.0;
    double rn = ipow(r, start_index);
    for (int n = start_index; n <= upto; ++n) {
        sum += (map.a(n) + map.b(n)) * rn;
        rn *= r;
    }
    return sum;
}

double area_ratio_series(const HarmonicCoefficientMap& map, double r, int upto) {
    check_radius(r);
    if (upto < 1) throw std::invalid_argument("truncation must be >= 1");
    const double r2 = r * r;
    double sum = 0.0;
    double r2n = r2;
    for (int n = 1; n <= upto; ++n) {
        const double an = map.a(n);
        const double bn = map.b(n);
        const double n3 = static_cast<double>(n) * n * n;
        sum += n3 * (an * an - bn * bn) * r2n;
        r2n *= r2;
    }
    return sum;
}

double area_ratio_bound(const HarmonicCoefficientMap& map, double r, int upto) {
    check_radius(r);
    if (upto < 1) throw std::invalid_argument("truncation must be >= 1");
    const double r2 = r * r;
    double sum = 0.0;
    double r2n = r2;
    for (int n = 1; n <= upto; ++n) {
        const double an = map.a(n);
        const double bn = map.b(n);
        const double n3 = static_cast<double>(n) * n * n;
        sum += n3 * std::abs(an - bn) * (an + bn) * r2n;
        r2n *= r2;
    }
    return sum;
}

namespace {

// One composite midpoint level: `radial` bands x 4*radial angles over
// |z| < r.  Bands accumulate in angle order and are reduced serially in
// band order, so the value does not depend on the partitioning.
double quadrature_level(const std::vector<double>& hcoef, const std::vector<double>& gcoef,
                        double r, int radial, bool parallel) {
    if (r == 0.0) return 0.0;
    const int angular = 4 * radial;
    const double dr = r / radial;
    const double dth = 2.0 * std::numbers::pi / angular;

    std::vector<double> band(static_cast<std::size_t>(radial), 0.0);
    const bool has_g = !gcoef.empty();

#pragma omp parallel for schedule(static) if (parallel)
    for (int i = 0; i < radial; ++i) {
        const double rho = (i + 0.5) * dr;
        double acc = 0.0;
        for (int j = 0; j < angular; ++j) {
            const double th = (j + 0.5) * dth;
            const std::complex<double> z(rho * std::cos(th), rho * std::sin(th));
            std::complex<double> hp(0.0, 0.0);
            for (std::size_t k = hcoef.size(); k-- > 0;) hp = hp * z + hcoef[k];
            double f = std::norm(hp);
            if (has_g) {
                std::complex<double> gp(0.0, 0.0);
                for (std::size_t k = gcoef.size(); k-- > 0;) gp = gp * z + gcoef[k];
                f -= std::norm(gp);
            }
            acc += f;
        }
        band[static_cast<std::size_t>(i)] = acc * rho;
    }

    double total = 0.0;
    for (double v : band) total += v;
    return total * dr * dth / std::numbers::pi;
}

AreaQuadrature quadrature_impl(const HarmonicCoefficientMap& map, double r, int upto,
                               int grid, bool parallel) {
    check_radius(r);
    if (upto < 1) throw std::invalid_argument("truncation must be >= 1");
    if (grid < 64) throw std::invalid_argument("quadrature grid must be >= 64");

    // Derivative coefficients of the dilated pair H = sum n a_n z^n,
    // G = sum n b_n z^n:  H'(z) = sum_{k>=0} (k+1)^2 a_{k+1} z^k.
    std::vector<double> hcoef(static_cast<std::size_t>(upto));
    std::vector<double> gcoef;
    bool any_b = false;
    for (int n = 1; n <= upto; ++n) {
        const double w = static_cast<double>(n) * n;
        hcoef[static_cast<std::size_t>(n - 1)] = w * map.a(n);
        if (map.b(n) != 0.0) any_b = true;
    }
    if (any_b) {
        gcoef.resize(static_cast<std::size_t>(upto));
        for (int n = 1; n <= upto; ++n)
            gcoef[static_cast<std::size_t>(n - 1)] = static_cast<double>(n) * n * map.b(n);
    }

    AreaQuadrature out;
    out.midpoint_quarter = quadrature_level(hcoef, gcoef, r, grid / 4, parallel);
    out.midpoint_half = quadrature_level(hcoef, gcoef, r, grid / 2, parallel);
    out.midpoint_fine = quadrature_level(hcoef, gcoef, r, grid, parallel);

    // The midpoint error is O(h^2); combining two levels cancels the
    // leading term.  The coarser combination only feeds the warning check.
    const double refined = (4.0 * out.midpoint_fine - out.midpoint_half) / 3.0;
    const double refined_half = (4.0 * out.midpoint_half - out.midpoint_quarter) / 3.0;
    out.value = refined;
    out.accuracy_warning = std::abs(refined - refined_half) > 1e-4;
    return out;
}

}  // namespace

AreaQuadrature area_ratio_quadrature(const HarmonicCoefficientMap& map, double r,
                                     int upto, int grid) {
    return quadrature_impl(map, r, upto, grid, true);
}

AreaQuadrature area_ratio_quadrature_serial(const HarmonicCoefficientMap& map, double r,
                                            int upto, int grid) {
    return quadrature_impl(map, r, upto, grid, false);
}

}  // namespace bohr
