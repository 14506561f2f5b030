#pragma once

#include "mc2/conditional_moments.hpp"
#include "mc2/model.hpp"
#include "mc2/time_grid.hpp"

namespace mc2 {

/// Conditional Monte-Carlo: simulates the volatility factor only and
/// averages the per-path closed-form conditional prices. Vanilla contracts
/// for every model and beta; Asian contracts for beta = 0 models.
Quote price_mc2(const ModelSpec& model, const Contract& contract, const McConfig& config);

/// Two-factor Euler baseline. The volatility factor reuses the exact stream
/// MC2 draws for the same (seed, path) so the two estimators share
/// volatility randomness; the asset factor draws from an independent
/// substream.
Quote price_mc1(const ModelSpec& model, const Contract& contract, const McConfig& config);

/// Deterministic-volatility closed form: the model with nu = 0 and rho = 0,
/// evaluated through the conditional-moments machinery on its (single)
/// deterministic path. Exact for SABR; for Heston/Schobel-Zhu it carries the
/// mean-reverting relaxation of the variance.
Quote price_closed_form(const ModelSpec& model, const Contract& contract,
                        const McConfig& config);

/// Simulation grid for a problem: contract fixings are marked grid points
/// and parameter-schedule breakpoints are refinement points.
TimeGrid problem_grid(const ModelSpec& model, const Contract& contract, const McConfig& config);

/// Worker count used by the pricing loops: the MC2_THREADS environment
/// variable when set, otherwise the hardware default. Results are bitwise
/// independent of this value.
unsigned worker_count();

}  // namespace mc2
