#pragma once

// Extremal harmonic maps (Koebe and half-plane), the first- and
// second-order differential-operator majorants on coefficient sequences,
// and the area functional of the dilated map, evaluated both as a
// Parseval-type series and by polar quadrature.

#include <string>
#include <vector>

namespace bohr {

/// A normalized harmonic map f = h + conj(g) represented by the moduli of
/// its Taylor coefficients: a_n (n >= 1, a_1 = 1) and b_n (n >= 2, b_1 = 0).
/// Extremal maps carry generator rules; sampled maps carry explicit lists.
class HarmonicCoefficientMap {
public:
    static HarmonicCoefficientMap koebe();       // a_n = n, b_n = 0
    static HarmonicCoefficientMap half_plane();  // a_n = 1, b_n = 0

    /// Explicit coefficient moduli for n >= 2 (zero beyond the lists);
    /// a_1 = 1 and b_1 = 0 are fixed by the normalization.
    static HarmonicCoefficientMap with_coefficients(std::vector<double> a_from_2,
                                                    std::vector<double> b_from_2,
                                                    std::string label);

    double a(int n) const;
    double b(int n) const;
    const std::string& description() const { return label_; }

private:
    enum class Rule { Koebe, HalfPlane, Explicit };
    HarmonicCoefficientMap(Rule rule, std::string label)
        : rule_(rule), label_(std::move(label)) {}

    Rule rule_;
    std::vector<double> a_, b_;
    std::string label_;
};

/// Weight applied to |a_n| + |b_n| in the majorant series of each operator.
enum class OperatorKind { Identity, D, Dscript, D2, Dscript2, Flambda };

double operator_weight(OperatorKind op, int n, double lambda = 0.0);

/// k(r) = r / (1-r)^2, the Koebe value on [0, kMaxArgument].
double koebe_value(double r);

/// l(r) = r / (1-r), the half-plane value.
double halfplane_value(double r);

/// r + sum_{n=2}^{K} w(n) (|a_n| + |b_n|) r^n with w per operator_weight.
/// `lambda` is the Flambda mixing weight and must lie in [0,1] there.
double operator_majorant(const HarmonicCoefficientMap& map, OperatorKind op,
                         double r, int upto, double lambda = 0.0);

/// sum_{n=N}^{K} (|a_n| + |b_n|) r^n — the weight-1 series started at N.
double coefficient_tail_sum(const HarmonicCoefficientMap& map, double r,
                            int start_index, int upto);

/// sum_{n=1}^{K} n^3 (|a_n|^2 - |b_n|^2) r^{2n}: the normalized image area
/// of |z| < r under the dilated pair (z h', z g'), by Parseval.
double area_ratio_series(const HarmonicCoefficientMap& map, double r, int upto);

/// sum_{n=1}^{K} n^3 ||a_n|-|b_n|| (|a_n|+|b_n|) r^{2n} — the admissible
/// ceiling of the area ratio used by the sampled-class inequality checks.
double area_ratio_bound(const HarmonicCoefficientMap& map, double r, int upto);

struct AreaQuadrature {
    double value = 0.0;             // Richardson combination of the two finest levels
    double midpoint_fine = 0.0;     // raw midpoint rule at `grid`
    double midpoint_half = 0.0;     // raw midpoint rule at grid/2
    double midpoint_quarter = 0.0;  // raw midpoint rule at grid/4
    bool accuracy_warning = false;  // successive refined estimates differ by > 1e-4
};

/// (1/pi) * integral over |z| < r of |H'|^2 - |G'|^2 with
/// H = sum n a_n z^n, G = sum n b_n z^n truncated at K, by tensor-product
/// polar midpoint quadrature (g radial bands x 4g angles, g = grid, grid/2,
/// grid/4).  The returned value combines the two finest midpoint levels;
/// the raw level values are kept in the result.  Radial bands accumulate
/// in fixed order and reduce serially, so the result is independent of the
/// thread count.
AreaQuadrature area_ratio_quadrature(const HarmonicCoefficientMap& map,
                                     double r, int upto, int grid);

/// Same computation on a single thread (reference path; bit-identical).
AreaQuadrature area_ratio_quadrature_serial(const HarmonicCoefficientMap& map,
                                            double r, int upto, int grid);

}  // namespace bohr
