// Timing comparison of the parallel kernels against their serial references,
// and of the two exact exp strategies. Results are checked for equality, so
// this doubles as a large-input consistency test.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <random>

#include "curvechi/genfun.hpp"

using namespace curvechi;
using clk = std::chrono::steady_clock;

namespace {

double seconds(clk::time_point a, clk::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

USeries<WRat> random_series(std::mt19937& rng, int u_cap, int w_cap) {
    USeries<WRat> s(u_cap, WRat(w_cap, Rat(0)));
    std::uniform_int_distribution<long> num(-999, 999);
    for (int i = 0; i <= u_cap; ++i)
        for (int j = 0; j <= w_cap; ++j) {
            Rat q(num(rng), 1 + (i + j) % 7);
            q.canonicalize();
            s.c[i].c[j] = q;
        }
    return s;
}

bool equal(const USeries<WRat>& a, const USeries<WRat>& b) {
    for (int i = 0; i <= a.u_cap; ++i)
        for (int j = 0; j <= a.c[i].cap; ++j)
            if (a.c[i].c[j] != b.c[i].c[j]) return false;
    return true;
}

} // namespace

int main() {
    std::printf("threads available: %d\n\n", omp_get_max_threads());
    std::mt19937 rng(123);

    {
        int u_cap = 180, w_cap = 10;
        auto a = random_series(rng, u_cap, w_cap);
        auto b = random_series(rng, u_cap, w_cap);
        auto t0 = clk::now();
        auto serial = us_mul_serial(a, b);
        auto t1 = clk::now();
        auto parallel = us_mul(a, b);
        auto t2 = clk::now();
        std::printf("series product (u_cap=%d, w_cap=%d)\n", u_cap, w_cap);
        std::printf("  serial   %8.3fs\n", seconds(t0, t1));
        std::printf("  parallel %8.3fs   results %s\n\n", seconds(t1, t2),
                    equal(serial, parallel) ? "identical" : "DIFFER");
    }

    {
        int g_max = 80;
        GenfunOptions powering, recurrence;
        recurrence.exp_by_recurrence = true;
        auto t0 = clk::now();
        auto z1 = weight11_scalar_z(g_max, powering);
        auto t1 = clk::now();
        auto z2 = weight11_scalar_z(g_max, recurrence);
        auto t2 = clk::now();
        bool same = true;
        for (int g = 0; g <= g_max; ++g)
            if (z1.c[g] != z2.c[g]) same = false;
        std::printf("scalar series to genus %d\n", g_max);
        std::printf("  exp by powering   %8.3fs\n", seconds(t0, t1));
        std::printf("  exp by recurrence %8.3fs   results %s\n\n", seconds(t1, t2),
                    same ? "identical" : "DIFFER");
    }

    {
        int sum_max = 11, n_max = 6;
        int saved = omp_get_max_threads();
        auto t0 = clk::now();
        auto s1 = weight13_equivariant_series(sum_max, n_max);
        auto t1 = clk::now();
        omp_set_num_threads(1);
        auto s2 = weight13_equivariant_series(sum_max, n_max);
        auto t2 = clk::now();
        omp_set_num_threads(saved);
        bool same = true;
        for (int i = 0; i <= s1.u_cap; ++i)
            if (!(s1.c[i] == s2.c[i])) same = false;
        std::printf("weight-13 pipeline (g+n <= %d, n <= %d)\n", sum_max, n_max);
        std::printf("  %d threads %8.3fs\n", saved, seconds(t0, t1));
        std::printf("  1 thread  %8.3fs   results %s\n", seconds(t1, t2),
                    same ? "identical" : "DIFFER");
    }
    return 0;
}
