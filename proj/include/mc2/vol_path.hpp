#pragma once

#include "mc2/model.hpp"
#include "mc2/rng.hpp"
#include "mc2/time_grid.hpp"

namespace mc2 {

/// One simulated volatility-factor trajectory on a TimeGrid. `values` holds
/// sigma for SABR / Schobel-Zhu and the (truncated, non-negative) variance
/// for Heston. The driving gaussians are retained so MC1 can reuse the same
/// volatility randomness.
struct VolPath {
    std::vector<double> values;  // size n+1
    std::vector<double> gauss;   // size n
};

/// Exact lognormal transition sigma_{k+1} = sigma_k * exp(nu g sqrt(dt) - nu^2 dt / 2)
/// with the segment-local nu; no discretization error in the volatility factor.
VolPath simulate_sabr_vol_path(const SabrParams& params, const TimeGrid& grid, RngStream& stream);

/// Full-truncation Euler for the CIR variance; stored values are max(w, 0).
VolPath simulate_cir_variance_path(const HestonParams& params, const TimeGrid& grid,
                                   RngStream& stream);

/// Exact Ornstein-Uhlenbeck transition (kappa -> 0 limit handled analytically).
VolPath simulate_ou_vol_path(const SchobelZhuParams& params, const TimeGrid& grid,
                             RngStream& stream);

}  // namespace mc2
