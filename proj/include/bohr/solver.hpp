#pragma once

// Certified isolation and refinement of the unique zero of a gap function
// on (0,1): sign-change bracketing, bisection to the requested width, and
// a short Newton polish with a finite-difference derivative that never
// leaves the final bracket.

#include "bohr/problems.hpp"

namespace bohr {

struct Bracket {
    double lo = 0.0;  // G(lo) < 0
    double hi = 0.0;  // G(hi) > 0
};

struct RootResult {
    double radius = 0.0;
    Bracket final_bracket;
    double residual = 0.0;  // |G(radius)|, recomputed at the returned radius
    int iterations = 0;     // bisection + polish steps
    bool monotone_certified = false;
};

struct SolveOptions {
    double tol = 1e-12;          // final bracket width, in [1e-15, 1e-3]
    int max_iterations = 200;    // bisection cap
    int monotone_samples = 1000; // grid used for the monotonicity certificate
};

/// Bracket [0, 1 - 2^-j] for the smallest j <= 40 whose upper endpoint has
/// G > 0.  Throws NoRootError when no sign change appears (malformed spec).
Bracket find_upper_bracket(const ProblemSpec& spec);

/// Deterministic bisection + Newton polish; the residual is recomputed at
/// the returned radius and the monotonicity certificate is stored.
RootResult solve(const ProblemSpec& spec, const SolveOptions& options);
RootResult solve(const ProblemSpec& spec, double tol = 1e-12);

/// True iff G never decreases across `samples` equispaced points of
/// [0, kMaxArgument] and strictly increases overall.  Adjacent values may
/// tie only at double resolution (flat stretches round to the same value);
/// any decrease fails the certificate.
bool certify_monotone(const ProblemSpec& spec, int samples);

}  // namespace bohr
