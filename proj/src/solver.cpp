#include "bohr/solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "bohr/errors.hpp"
#include "bohr/series.hpp"

namespace bohr {

Bracket find_upper_bracket(const ProblemSpec& spec) {
    const double g0 = evaluate_G(spec, 0.0);
    if (!(g0 < 0.0)) throw NoRootError("gap function is not negative at r = 0");

    for (int j = 1; j <= 40; ++j) {
        const double hi = 1.0 - std::ldexp(1.0, -j);
        if (hi > kMaxArgument) break;  // evaluation domain ends before 1
        const double g = evaluate_G(spec, hi);
        if (!std::isfinite(g)) throw NumericError("nonfinite gap value while bracketing", hi);
        if (g > 0.0) return Bracket{0.0, hi};
    }
    throw NoRootError("no sign change found while bracketing (malformed problem)");
}

RootResult solve(const ProblemSpec& spec, const SolveOptions& options) {
    if (!(options.tol >= 1e-15 && options.tol <= 1e-3))
        throw std::invalid_argument("tolerance must lie in [1e-15, 1e-3]");
    if (options.max_iterations < 1)
        throw std::invalid_argument("iteration cap must be >= 1");

    const Bracket start = find_upper_bracket(spec);
    double lo = start.lo;
    double hi = start.hi;
    int iterations = 0;

    while (hi - lo > options.tol) {
        if (iterations >= options.max_iterations)
            throw NumericError("bisection exceeded the iteration cap", 0.5 * (lo + hi));
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // hit double resolution
        const double g = evaluate_G(spec, mid);
        if (!std::isfinite(g)) throw NumericError("nonfinite gap value", mid);
        ++iterations;
        if (g > 0.0) hi = mid;
        else lo = mid;
    }

    // Newton polish with a central finite-difference slope; candidates are
    // clamped into the final bracket so the certificate survives.
    double x = 0.5 * (lo + hi);
    constexpr double kStep = 1e-7;
    for (int k = 0; k < 5; ++k) {
        const double gx = evaluate_G(spec, x);
        if (!std::isfinite(gx)) throw NumericError("nonfinite gap value while polishing", x);
        const double xl = std::max(x - kStep, 0.0);
        const double xr = std::min(x + kStep, kMaxArgument);
        const double slope = (evaluate_G(spec, xr) - evaluate_G(spec, xl)) / (xr - xl);
        if (!std::isfinite(slope) || slope <= 0.0) break;
        double next = x - gx / slope;
        next = std::clamp(next, lo, hi);
        ++iterations;
        if (next == x) break;
        x = next;
    }
    if (x <= lo) x = 0.5 * (lo + hi);

    const double g_final = evaluate_G(spec, x);
    if (!std::isfinite(g_final)) throw NumericError("nonfinite residual", x);

    RootResult result;
    result.radius = x;
    result.final_bracket = Bracket{lo, hi};
    result.residual = std::abs(g_final);
    result.iterations = iterations;
    result.monotone_certified = certify_monotone(spec, options.monotone_samples);
    return result;
}

RootResult solve(const ProblemSpec& spec, double tol) {
    SolveOptions options;
    options.tol = tol;
    return solve(spec, options);
}

bool certify_monotone(const ProblemSpec& spec, int samples) {
    if (samples < 2) throw std::invalid_argument("monotonicity grid needs >= 2 samples");
    validate(spec);

    std::vector<double> values(static_cast<std::size_t>(samples));
    const double span = kMaxArgument;
    const int last = samples - 1;

#pragma omp parallel for schedule(static)
    for (int i = 0; i <= last; ++i) {
        values[static_cast<std::size_t>(i)] =
            evaluate_G(spec, span * static_cast<double>(i) / static_cast<double>(last));
    }

    // Ties are tolerated only at double resolution (flat stretches of a
    // strictly increasing G round to equal values); any decrease fails.
    for (int i = 0; i < last; ++i) {
        const double cur = values[static_cast<std::size_t>(i)];
        const double nxt = values[static_cast<std::size_t>(i + 1)];
        if (!std::isfinite(nxt) || nxt < cur) return false;
    }
    return values.back() > values.front();
}

}  // namespace bohr
