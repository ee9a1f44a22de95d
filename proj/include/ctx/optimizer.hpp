#ifndef CTX_OPTIMIZER_HPP
#define CTX_OPTIMIZER_HPP

#include <cstdint>
#include <vector>

#include "ctx/spectral.hpp"

namespace ctx {

struct OptimizerConfig {
    int theta_grid_size = 4096;    // coarse scan of the mixing angle
    int refine_iterations = 60;    // golden-section steps after the scan
    int restarts = 32;             // seeded restarts in full-space mode
    std::uint64_t seed = 20240917; // master seed for restart draws
};

// One sample of the optimal trade-off curve: the least P_WW(a,a)
// achievable at a fixed error sum P_S, with the minimizing state.
struct FrontierPoint {
    double p_s = 0.0;
    double p_ww_min = 0.0;
    NuCoefficients argmin{};
    double theta_opt = 0.0;
    bool converged = true;
};

// Minimum over the real-coefficient family (c1 = 0, amplitudes set by a
// single mixing angle).  Deterministic; no randomness involved.
FrontierPoint frontier_theta_family(double p_s, const OptimizerConfig& cfg = {});

// Minimum over the full state space: free magnitudes including |c1| and
// free relative phases, searched by seeded Nelder-Mead restarts on a
// parametrization that satisfies normalization and the P_S constraint by
// construction.  Deterministic for a fixed seed.
FrontierPoint frontier_full_space(double p_s, const OptimizerConfig& cfg = {});

// theta-family frontier evaluated on a grid of P_S values.
std::vector<FrontierPoint> frontier_sweep(const std::vector<double>& p_s_grid,
                                          const OptimizerConfig& cfg = {});

// Least P_S at which the frontier reaches zero (bisection against a
// 1e-10 zero threshold, interval tolerance 1e-6).
double frontier_zero(const OptimizerConfig& cfg = {});

// Fixed point frontier(P_S) = P_S of the numeric frontier.
double critical_error_sum_numeric(const OptimizerConfig& cfg = {});

}  // namespace ctx

#endif  // CTX_OPTIMIZER_HPP
