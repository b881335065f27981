#pragma once

// Closed-form evaluation of the weighted geometric series
//
//     S(alpha, N, x) = sum_{n >= N} n^alpha x^n,   alpha in {0,1,2,3,5},
//
// together with a brute-force partial-sum oracle and a rigorous tail bound.
// These sums are the building blocks of every radius equation in this
// library.

namespace bohr {

// Arguments are accepted up to this cap; the rational closed forms lose
// relative accuracy through (1-x)^-k beyond it.
inline constexpr double kMaxArgument = 1.0 - 1e-6;

struct WeightedGeometricSeries {
    int weight_exponent = 0;  // alpha, one of {0, 1, 2, 3, 5}
    int start_index = 1;      // N >= 1
    double argument = 0.0;    // x in [0, kMaxArgument]
};

/// Exact rational closed form of S(alpha, N, x).
///
/// Supported (alpha, N): (0, any N), (1, any N), and N in {1, 2} for
/// alpha in {2, 3, 5}.  The N = 2 variants are the N = 1 value minus the
/// n = 1 term (which is x), keeping one rational form per weight.
double closed_sum(const WeightedGeometricSeries& s);
double closed_sum(int weight_exponent, int start_index, double x);

/// Direct accumulation of sum_{n=N}^{K} n^alpha x^n (the oracle path).
double partial_sum(const WeightedGeometricSeries& s, long upto);
double partial_sum(int weight_exponent, int start_index, double x, long upto);

/// Upper bound on the tail sum_{n > K} n^alpha x^n:
///
///     (K+1)^alpha x^{K+1} / (1 - x (1 + 1/(K+1))^alpha),
///
/// valid because successive term ratios are dominated by
/// x (1 + 1/(K+1))^alpha beyond K.  Throws BoundUnavailableError when that
/// ratio is not below 1 (increase K).
double tail_bound(const WeightedGeometricSeries& s, long truncation);

/// Smallest power-of-two-ish truncation K with tail_bound(s, K) <= eps.
long adaptive_truncation(const WeightedGeometricSeries& s, double eps);

/// x^n by binary exponentiation (n >= 0); deterministic op sequence.
double ipow(double x, long n);

}  // namespace bohr
