#pragma once

#include <string>
#include <vector>

#include "nilfold/linsymp.hpp"
#include "nilfold/reduced.hpp"
#include "nilfold/unfolding.hpp"

namespace nilfold {
namespace grid {

// Inclusive range with `steps` intervals (steps + 1 sample points;
// steps = 0 means the single point min).
struct Range {
    double min = 0.0, max = 0.0;
    int steps = 0;
    int size() const { return steps + 1; }
    double at(int i) const {
        return steps == 0 ? min : min + (max - min) * static_cast<double>(i) / steps;
    }
};

Range parse_range(const std::string& spec);  // "min:max:steps"

// Grid kernels exist in an OpenMP-parallel flavor (threads = 0 picks the
// OpenMP default) and a plain serial reference used to pin down the parallel
// output in tests and the benchmark. Row order equals grid order (outer to
// inner axis) no matter how many threads run.

struct SurfaceRow {
    double mu, nu, q0, kappa, Q, P;
    ConfigTag config;
    bool on_fold, on_hopf;
};

std::vector<SurfaceRow> surface_sample(const CubicCoeffs& c, const Range& mu, const Range& nu,
                                       const Range& q0, double tol, int threads);
std::vector<SurfaceRow> surface_sample_serial(const CubicCoeffs& c, const Range& mu,
                                              const Range& nu, const Range& q0, double tol);

struct EigenGridRow {
    double mu0, nu0;
    ConfigTag config;
};

std::vector<EigenGridRow> eigengrid(const Range& mu0, const Range& nu0, double tol, int threads);
std::vector<EigenGridRow> eigengrid_serial(const Range& mu0, const Range& nu0, double tol);

struct ReducedGridRow {
    double beta, q0, r;
    ConfigTag config;
};

std::vector<ReducedGridRow> reduced_grid(const Range& beta, const Range& q0, double r,
                                         int threads);
std::vector<ReducedGridRow> reduced_grid_serial(const Range& beta, const Range& q0, double r);

struct ReducedCurveRow {
    double beta, alpha_fold, alpha_hopf, r;
};

std::vector<ReducedCurveRow> reduced_curves(const Range& beta, double r);

}  // namespace grid
}  // namespace nilfold
