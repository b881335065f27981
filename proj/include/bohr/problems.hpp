#pragma once

// The nine Bohr-radius problems, each encoded as a monotone gap function
// G(r) = lhs_class_bound(r) - target.  G is negative at 0, strictly
// increasing, and diverges as r -> 1, so its unique zero in (0,1) is the
// radius being certified.

#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bohr/maps.hpp"

namespace bohr {

enum class MappingKind { StableUnivalent, StableConvex };

/// Per-class data: admissible coefficient ceiling c_n, the distance floor
/// d(f(0), boundary) >= d0, and the map attaining both.
struct MappingClassProfile {
    MappingKind kind;

    double coeff_bound(int n) const;  // SHU: n, SHC: 1
    double distance_floor() const;    // SHU: 1/4, SHC: 1/2
    HarmonicCoefficientMap extremal_map() const;
};

MappingClassProfile class_profile(MappingKind kind);

/// P(t) = a_1 t + ... + a_k t^k with a_i >= 0, at least one positive.
class NonnegPolynomial {
public:
    explicit NonnegPolynomial(std::vector<double> coefficients);
    double evaluate(double t) const;
    int degree() const { return static_cast<int>(coef_.size()); }
    const std::vector<double>& coefficients() const { return coef_; }

private:
    std::vector<double> coef_;  // coef_[i] multiplies t^(i+1)
};

// Parameter blocks of the nine problems.  Order parameters are integers
// >= 1, N >= 2, lambda in [0,1].
struct T31 { int m = 1; int p = 1; };
struct T32 { int m = 1; int p = 1; };
struct T33 { int s = 1; int m = 1; int p = 1; int q = 1; };
struct T34 { int s = 1; int m = 1; int p = 1; int q = 1; };
struct T41 { int m = 1; double lambda = 0.0; };
struct T42 { int m = 1; double lambda = 0.0; };
struct T43 { int m = 1; int p = 1; int N = 2; };
struct T44 { int m = 1; int p = 1; int N = 2; };
struct T51 { int m = 1; NonnegPolynomial poly; };

using ProblemVariant = std::variant<T31, T32, T33, T34, T41, T42, T43, T44, T51>;

/// The two operator flavors share identical majorant bounds; the flavor is
/// carried so reports can label results for both, but it never changes the
/// numbers.
enum class OperatorFlavor { D, Dscript };

struct ProblemSpec {
    ProblemVariant problem;
    OperatorFlavor flavor = OperatorFlavor::D;
};

std::string problem_id(const ProblemSpec& spec);     // "T31" ... "T51"
std::string problem_label(const ProblemSpec& spec);  // "T31{m=1,p=1}"
std::vector<std::pair<std::string, std::string>> parameter_list(const ProblemSpec& spec);

/// Throws std::invalid_argument when a parameter violates its range.
void validate(const ProblemSpec& spec);

/// Right-hand side of the problem's inequality: 1/4, 1/2, or 1.
double target(const ProblemSpec& spec);

MappingKind mapping_kind(const ProblemSpec& spec);

/// G(r): the left side of the defining equation, composed from the series
/// closed forms exactly as the equation is written.  G(0) = -target.
double evaluate_G(const ProblemSpec& spec, double r);

/// Worst-case left-hand side of the inequality over the mapping class with
/// |omega_j(z)| = |z|^j; equals evaluate_G + target.
double lhs_class_bound(const ProblemSpec& spec, double r);

/// Left-hand side evaluated on the class's extremal map with
/// omega_j(z) = z^j.  Coincides with lhs_class_bound for every problem
/// except T41, where the printed bound uses the half-plane growth while the
/// extremal map is the Koebe function; use lhs_extremal_pair to see both.
double lhs_extremal(const ProblemSpec& spec, double r);

struct ExtremalComparison {
    double class_bound;   // lhs_class_bound(spec, r)
    double extremal_map;  // the extremal map's actual left-hand side
};
ExtremalComparison lhs_extremal_pair(const ProblemSpec& spec, double r);

/// Left-hand side for an arbitrary coefficient map (truncated at `upto`),
/// the quantity the sampled-class checks compare against the target.
double lhs_for_map(const ProblemSpec& spec, const HarmonicCoefficientMap& map,
                   double r, int upto);

/// Build a problem from its CLI identifier and key=value parameters.
/// Missing N defaults to 2; lambda is required for T41/T42; every other
/// parameter of the variant is required.  Throws std::invalid_argument.
ProblemSpec make_problem(std::string_view id,
                         const std::map<std::string, std::string>& params);

/// Names of the tunable parameters of a problem id (for sweeps).
std::vector<std::string> parameter_names(std::string_view id);

/// Copy of `spec` with one named parameter replaced.  Integer parameters
/// reject non-integral values.  Throws std::invalid_argument.
ProblemSpec with_parameter(const ProblemSpec& spec, std::string_view name, double value);

}  // namespace bohr
