// Timing comparison of the serial reference kernels against the OpenMP
// variants, plus one end-to-end fit at the largest benchmark shape
// (96 channels, 100 frames, 80 delays -> 7776 x 20 embedded matrix).

#include "dmdd/dmd.hpp"
#include "dmdd/kernels.hpp"
#include "dmdd/synth.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>

namespace {

using dmdd::ComplexMatrix;
using dmdd::ComplexVector;
using dmdd::Index;
using dmdd::RealMatrix;

double time_best_of(int repeats, const std::function<void()>& fn) {
    fn();  // warmup
    double best = 1e300;
    for (int i = 0; i < repeats; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        const double s =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        best = std::min(best, s);
    }
    return best;
}

void report_row(const char* name, double serial_s, double parallel_s) {
    std::printf("%-28s %10.3f ms %10.3f ms %8.2fx\n", name, serial_s * 1e3, parallel_s * 1e3,
                serial_s / parallel_s);
}

}  // namespace

int main() {
    std::mt19937_64 rng(42);
    std::normal_distribution<double> dist(0.0, 1.0);

    // spectral series: 2000-dim state, 40 modes, 512 frames
    const Index dim = 2000, r = 40, frames = 512;
    ComplexMatrix weighted(dim, r);
    for (Index j = 0; j < r; ++j) {
        for (Index i = 0; i < dim; ++i) {
            weighted(i, j) = dmdd::Complex(dist(rng), dist(rng));
        }
    }
    ComplexVector eigs(r);
    for (Index i = 0; i < r; ++i) {
        eigs[i] = std::polar(0.99, 0.05 * static_cast<double>(i + 1));
    }

    std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "openmp", "speedup");
    report_row("spectral_series",
               time_best_of(5, [&] { dmdd::kernels::serial::spectral_series(weighted, eigs, 2, frames); }),
               time_best_of(5, [&] { dmdd::kernels::parallel::spectral_series(weighted, eigs, 2, frames); }));

    // hankel embedding: 96 channels, 20000 frames, 80 delays
    RealMatrix wide(96, 20000);
    for (Index j = 0; j < wide.cols(); ++j) {
        for (Index i = 0; i < wide.rows(); ++i) {
            wide(i, j) = dist(rng);
        }
    }
    report_row("hankel_embed",
               time_best_of(5, [&] { dmdd::kernels::serial::hankel_embed(wide, 80); }),
               time_best_of(5, [&] { dmdd::kernels::parallel::hankel_embed(wide, 80); }));

    // squared-difference reduction on 4000 x 4000
    RealMatrix a(4000, 4000), b(4000, 4000);
    for (Index j = 0; j < a.cols(); ++j) {
        for (Index i = 0; i < a.rows(); ++i) {
            a(i, j) = dist(rng);
            b(i, j) = dist(rng);
        }
    }
    report_row("sum_squared_diff",
               time_best_of(5, [&] { dmdd::kernels::serial::sum_squared_diff(a, b); }),
               time_best_of(5, [&] { dmdd::kernels::parallel::sum_squared_diff(a, b); }));

    // end-to-end fit at the largest grid shape
    RealMatrix mocap(96, 100);
    for (Index j = 0; j < mocap.cols(); ++j) {
        for (Index i = 0; i < mocap.rows(); ++i) {
            mocap(i, j) = dist(rng);
        }
    }
    const dmdd::Trajectory traj{mocap, 50.0};
    const double fit_s = time_best_of(3, [&] { dmdd::fit_delayed(traj, 80); });
    std::printf("%-28s %10.3f ms  (7776 x 20 embedded matrix)\n", "fit_delayed m=96 n=100 d=80",
                fit_s * 1e3);
    return 0;
}
