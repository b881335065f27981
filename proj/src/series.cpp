#include "bohr/series.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "bohr/errors.hpp"

namespace bohr {

namespace {

bool supported_weight(int alpha) {
    return alpha == 0 || alpha == 1 || alpha == 2 || alpha == 3 || alpha == 5;
}

void check_parameters(const WeightedGeometricSeries& s) {
    if (!supported_weight(s.weight_exponent)) {
        throw std::invalid_argument("weight exponent must be one of {0,1,2,3,5}, got " +
                                    std::to_string(s.weight_exponent));
    }
    if (s.start_index < 1) {
        throw std::invalid_argument("start index must be >= 1, got " +
                                    std::to_string(s.start_index));
    }
    const double x = s.argument;
    if (!(x >= 0.0) || x > kMaxArgument) {  // also rejects NaN
        throw std::domain_error("series argument must lie in [0, 1 - 1e-6], got " +
                                std::to_string(x));
    }
}

// sum_{n >= 1} n^alpha x^n for the five supported weights.
double full_sum_from_one(int alpha, double x) {
    const double u = 1.0 - x;
    switch (alpha) {
        case 0: return x / u;
        case 1: return x / (u * u);
        case 2: return x * (1.0 + x) / (u * u * u);
        case 3: return x * (1.0 + x * (4.0 + x)) / (u * u * u * u);
        case 5: {
            const double num = 1.0 + x * (26.0 + x * (66.0 + x * (26.0 + x)));
            const double u3 = u * u * u;
            return x * num / (u3 * u3);
        }
        default: break;
    }
    throw std::invalid_argument("unsupported weight exponent");
}

}  // namespace

double ipow(double x, long n) {
    double result = 1.0;
    while (n > 0) {
        if (n & 1) result *= x;
        x *= x;
        n >>= 1;
    }
    return result;
}

double closed_sum(const WeightedGeometricSeries& s) {
    check_parameters(s);
    const int alpha = s.weight_exponent;
    const int N = s.start_index;
    const double x = s.argument;
    const double u = 1.0 - x;

    if (alpha == 0) return ipow(x, N) / u;
    if (alpha == 1) return ipow(x, N) * (N + x - N * x) / (u * u);

    // alpha in {2, 3, 5}: only N in {1, 2}; N = 2 drops the n = 1 term x.
    if (N > 2) {
        throw std::invalid_argument("start index " + std::to_string(N) +
                                    " unsupported for weight exponent " +
                                    std::to_string(alpha));
    }
    const double full = full_sum_from_one(alpha, x);
    return N == 2 ? full - x : full;
}

double closed_sum(int weight_exponent, int start_index, double x) {
    return closed_sum(WeightedGeometricSeries{weight_exponent, start_index, x});
}

double partial_sum(const WeightedGeometricSeries& s, long upto) {
    check_parameters(s);
    if (upto < s.start_index) {
        throw std::invalid_argument("partial-sum end " + std::to_string(upto) +
                                    " below start index " + std::to_string(s.start_index));
    }
    const double x = s.argument;
    if (x == 0.0) return 0.0;

    double xn = ipow(x, s.start_index);
    double sum = 0.0;
    for (long n = s.start_index; n <= upto; ++n) {
        sum += ipow(static_cast<double>(n), s.weight_exponent) * xn;
        xn *= x;
    }
    return sum;
}

double partial_sum(int weight_exponent, int start_index, double x, long upto) {
    return partial_sum(WeightedGeometricSeries{weight_exponent, start_index, x}, upto);
}

double tail_bound(const WeightedGeometricSeries& s, long truncation) {
    check_parameters(s);
    const long K = truncation;
    if (K < s.start_index) {
        throw BoundUnavailableError("truncation below start index; increase K");
    }
    const double x = s.argument;
    const double ratio = x * ipow(1.0 + 1.0 / static_cast<double>(K + 1), s.weight_exponent);
    if (!(ratio < 1.0)) {
        throw BoundUnavailableError("term ratio not below 1 at K = " + std::to_string(K) +
                                    "; increase K");
    }
    const double first = ipow(static_cast<double>(K + 1), s.weight_exponent) * ipow(x, K + 1);
    return first / (1.0 - ratio);
}

long adaptive_truncation(const WeightedGeometricSeries& s, double eps) {
    check_parameters(s);
    if (!(eps > 0.0)) throw std::invalid_argument("tolerance must be positive");
    constexpr long kCap = 1L << 22;

    long K = s.start_index > 8 ? s.start_index : 8;
    for (; K <= kCap; K *= 2) {
        const double ratio =
            s.argument * ipow(1.0 + 1.0 / static_cast<double>(K + 1), s.weight_exponent);
        if (!(ratio < 1.0)) continue;
        if (tail_bound(s, K) <= eps) return K;
    }
    throw BoundUnavailableError("no truncation achieves the requested tail bound");
}

}  // namespace bohr
