#pragma once

#include "mc2/model.hpp"
#include "mc2/time_grid.hpp"
#include "mc2/vol_path.hpp"

namespace mc2 {

/// Per-path conditional moments of the asset given the volatility trajectory.
///
/// For a normal backbone (beta = 0) the terminal level (or Asian average) is
/// conditionally Normal(s0 * (1 + shift), s0^2 * cond_variance); for a
/// lognormal backbone (beta = 1), ln(S_T / s0) is conditionally
/// Normal(shift - cond_variance / 2, cond_variance). Both fields are
/// dimensionless (relative to s0 and s0^2).
struct ConditionalMoments {
    double shift = 0.0;
    double cond_variance = 0.0;
    VolModel backbone = VolModel::Normal;
};

ConditionalMoments sabr_b0_vanilla_moments(const VolPath& path, const SabrParams& params,
                                           const TimeGrid& grid);
ConditionalMoments sabr_b1_vanilla_moments(const VolPath& path, const SabrParams& params,
                                           const TimeGrid& grid);

/// Asian (arithmetic average over the grid's marked fixings) under SABR
/// beta = 0. With a single fixing at maturity this reduces bitwise to
/// sabr_b0_vanilla_moments.
ConditionalMoments sabr_b0_asian_moments(const VolPath& path, const SabrParams& params,
                                         const TimeGrid& grid);

/// Heston conditional moments; `path` holds the truncated CIR variance.
/// Serves both betas (the lognormal correction uses the integrated variance).
ConditionalMoments heston_vanilla_moments(const VolPath& path, const HestonParams& params,
                                          const TimeGrid& grid);
ConditionalMoments heston_asian_moments(const VolPath& path, const HestonParams& params,
                                        const TimeGrid& grid);

ConditionalMoments schobel_zhu_vanilla_moments(const VolPath& path,
                                               const SchobelZhuParams& params,
                                               const TimeGrid& grid);
ConditionalMoments schobel_zhu_asian_moments(const VolPath& path, const SchobelZhuParams& params,
                                             const TimeGrid& grid);

}  // namespace mc2
