// Wall-clock comparison of the OpenMP kernels against their serial
// reference paths, plus a bit-identity check between the two.

#include <chrono>
#include <cstdio>
#include <cstring>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "bohr/maps.hpp"
#include "bohr/problems.hpp"
#include "bohr/verify.hpp"

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <typename F>
double timed(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return seconds_since(t0);
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (compiled without OpenMP)\n");
#endif
    std::printf("%-34s %10s %10s %8s %s\n", "kernel", "serial[s]", "parallel[s]", "speedup",
                "bit-identical");

    const auto koebe = bohr::HarmonicCoefficientMap::koebe();
    for (int grid : {256, 512}) {
        bohr::AreaQuadrature qs{}, qp{};
        const double ts = timed([&] { qs = bohr::area_ratio_quadrature_serial(koebe, 0.5, 60, grid); });
        const double tp = timed([&] { qp = bohr::area_ratio_quadrature(koebe, 0.5, 60, grid); });
        char name[64];
        std::snprintf(name, sizeof name, "area quadrature r=0.5 grid=%d", grid);
        std::printf("%-34s %10.4f %10.4f %8.2f %s\n", name, ts, tp, ts / tp,
                    qs.value == qp.value && qs.midpoint_fine == qp.midpoint_fine ? "yes" : "NO");
    }

    const bohr::ProblemSpec t31{bohr::T31{1, 1}};
    const bohr::ProblemSpec t34{bohr::T34{2, 1, 1, 1}};
    for (const auto* spec : {&t31, &t34}) {
        for (int trials : {20000, 100000}) {
            bohr::verify::SamplingReport rs{}, rp{};
            const double ts =
                timed([&] { rs = bohr::verify::sample_class_inequality_serial(*spec, trials, 0); });
            const double tp =
                timed([&] { rp = bohr::verify::sample_class_inequality(*spec, trials, 0); });
            char name[64];
            std::snprintf(name, sizeof name, "class sampling %s trials=%d",
                          bohr::problem_id(*spec).c_str(), trials);
            const bool same = rs.violations == rp.violations && rs.max_lhs == rp.max_lhs &&
                              rs.worst_trial == rp.worst_trial;
            std::printf("%-34s %10.4f %10.4f %8.2f %s\n", name, ts, tp, ts / tp,
                        same ? "yes" : "NO");
        }
    }
    return 0;
}
