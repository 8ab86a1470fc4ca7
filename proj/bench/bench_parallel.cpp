// Timing comparison of the OpenMP kernels against their serial references:
// truncated series products and the exhaustive Koszul window sweep.

#include <chrono>
#include <cstdio>
#include <random>

#include "conifold/series2.hpp"
#include "conifold/windows.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace conifold;

namespace {

double seconds(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Series2 random_series(int n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> coeff(-9, 9);
    Series2 s(n, n);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) s.add_term(i, j, coeff(rng));
    return s;
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("openmp: %d threads\n", omp_get_max_threads());
#else
    std::printf("openmp: not enabled\n");
#endif

    {
        const int n = 72;
        const Series2 a = random_series(n, 1);
        const Series2 b = random_series(n, 2);

        auto t0 = std::chrono::steady_clock::now();
        const Series2 serial = a.mul_serial(b);
        const double ts = seconds(t0);

        t0 = std::chrono::steady_clock::now();
        const Series2 parallel = a * b;
        const double tp = seconds(t0);

        std::printf("series product (%d x %d terms): serial %.3fs, parallel %.3fs, %s\n",
                    static_cast<int>(a.terms().size()), static_cast<int>(b.terms().size()),
                    ts, tp, serial == parallel ? "results match" : "RESULTS DIFFER");
    }

    {
        const WallWindowSetup setup = make_wall_window_setup({12, 9}, 3, 3);

        auto t0 = std::chrono::steady_clock::now();
        const KoszulSweep serial = sweep_koszul_block(setup, false);
        const double ts = seconds(t0);

        t0 = std::chrono::steady_clock::now();
        const KoszulSweep parallel = sweep_koszul_block(setup, true);
        const double tp = seconds(t0);

        const bool same = serial.pass == parallel.pass && serial.checks == parallel.checks;
        std::printf("koszul sweep (%lld checks): serial %.3fs, parallel %.3fs, %s\n",
                    serial.checks, ts, tp, same ? "results match" : "RESULTS DIFFER");
    }

    {
        const int M = 40;
        auto t0 = std::chrono::steady_clock::now();
        Series2 s = Series2::one(M, M);
        for (int m = 1; m <= M; ++m) s = s.mul_serial(wall_factor(m, {M, M}));
        const double ts = seconds(t0);

        t0 = std::chrono::steady_clock::now();
        const Series2 p = dt_series(M, {M, M});
        const double tp = seconds(t0);

        std::printf("dt series to M=%d: serial %.3fs, parallel %.3fs, %s\n", M, ts, tp,
                    s == p ? "results match" : "RESULTS DIFFER");
    }
    return 0;
}
