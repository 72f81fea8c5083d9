// Timing comparison of the serial reference grid kernels against the
// OpenMP-parallel ones, with an output-equality spot check.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "nilfold/grid.hpp"

using namespace nilfold;

namespace {

template <class F>
double time_ms(F&& f, int reps = 3) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        auto t0 = std::chrono::steady_clock::now();
        f();
        auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    int steps = argc > 1 ? std::atoi(argv[1]) : 160;
    CubicCoeffs c{1.0, 0.5, 0.5};
    grid::Range r{-0.25, 0.25, steps};
    grid::Range rq{-0.25, 0.25, 40};

#ifdef _OPENMP
    int threads = omp_get_max_threads();
#else
    int threads = 1;
#endif
    std::printf("grid kernels, %d x %d (x %d) points, %d threads\n", steps + 1, steps + 1,
                rq.size(), threads);

    std::vector<grid::SurfaceRow> s1, s2;
    double t_ser = time_ms([&] { s1 = grid::surface_sample_serial(c, r, r, rq, 1e-9); });
    double t_par = time_ms([&] { s2 = grid::surface_sample(c, r, r, rq, 1e-9, 0); });
    bool same = s1.size() == s2.size();
    for (std::size_t i = 0; same && i < s1.size(); ++i)
        same = s1[i].mu == s2[i].mu && s1[i].nu == s2[i].nu && s1[i].q0 == s2[i].q0 &&
               s1[i].kappa == s2[i].kappa && s1[i].Q == s2[i].Q && s1[i].P == s2[i].P &&
               s1[i].config == s2[i].config && s1[i].on_fold == s2[i].on_fold &&
               s1[i].on_hopf == s2[i].on_hopf;
    std::printf("surface_sample  serial %8.2f ms   parallel %8.2f ms   speedup %.2fx   equal %s\n",
                t_ser, t_par, t_ser / t_par, same ? "yes" : "NO");

    std::vector<grid::EigenGridRow> e1, e2;
    grid::Range re{-0.25, 0.25, steps * 4};
    t_ser = time_ms([&] { e1 = grid::eigengrid_serial(re, re, 1e-9); });
    t_par = time_ms([&] { e2 = grid::eigengrid(re, re, 1e-9, 0); });
    same = e1.size() == e2.size();
    for (std::size_t i = 0; same && i < e1.size(); ++i)
        same = e1[i].mu0 == e2[i].mu0 && e1[i].nu0 == e2[i].nu0 && e1[i].config == e2[i].config;
    std::printf("eigengrid       serial %8.2f ms   parallel %8.2f ms   speedup %.2fx   equal %s\n",
                t_ser, t_par, t_ser / t_par, same ? "yes" : "NO");

    std::vector<grid::ReducedGridRow> g1, g2;
    t_ser = time_ms([&] { g1 = grid::reduced_grid_serial(re, re, 0.1); });
    t_par = time_ms([&] { g2 = grid::reduced_grid(re, re, 0.1, 0); });
    same = g1.size() == g2.size();
    for (std::size_t i = 0; same && i < g1.size(); ++i)
        same = g1[i].beta == g2[i].beta && g1[i].q0 == g2[i].q0 && g1[i].r == g2[i].r &&
               g1[i].config == g2[i].config;
    std::printf("reduced_grid    serial %8.2f ms   parallel %8.2f ms   speedup %.2fx   equal %s\n",
                t_ser, t_par, t_ser / t_par, same ? "yes" : "NO");
    return 0;
}
