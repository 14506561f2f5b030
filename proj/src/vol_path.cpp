#include "mc2/vol_path.hpp"

#include <cmath>

namespace mc2 {

VolPath simulate_sabr_vol_path(const SabrParams& params, const TimeGrid& grid,
                               RngStream& stream) {
    const std::size_t n = grid.n_steps();
    VolPath path;
    path.values.resize(n + 1);
    path.gauss.resize(n);
    path.values[0] = params.sigma0;
    for (std::size_t k = 0; k < n; ++k) {
        const double g = stream.next_gaussian();
        path.gauss[k] = g;
        const double nu = params.nu.at(grid.times[k]);
        const double dt = grid.dt[k];
        path.values[k + 1] =
            path.values[k] * std::exp(nu * g * std::sqrt(dt) - 0.5 * nu * nu * dt);
    }
    return path;
}

VolPath simulate_cir_variance_path(const HestonParams& params, const TimeGrid& grid,
                                   RngStream& stream) {
    const std::size_t n = grid.n_steps();
    VolPath path;
    path.values.resize(n + 1);
    path.gauss.resize(n);
    path.values[0] = std::max(params.w0, 0.0);
    double w = params.w0;  // untruncated state
    for (std::size_t k = 0; k < n; ++k) {
        const double g = stream.next_gaussian();
        path.gauss[k] = g;
        const double dt = grid.dt[k];
        const double w_plus = std::max(w, 0.0);
        w += params.kappa * (params.w_long - w_plus) * dt +
             params.nu * std::sqrt(w_plus) * g * std::sqrt(dt);
        path.values[k + 1] = std::max(w, 0.0);
    }
    return path;
}

VolPath simulate_ou_vol_path(const SchobelZhuParams& params, const TimeGrid& grid,
                             RngStream& stream) {
    const std::size_t n = grid.n_steps();
    VolPath path;
    path.values.resize(n + 1);
    path.gauss.resize(n);
    path.values[0] = params.zeta0;
    for (std::size_t k = 0; k < n; ++k) {
        const double g = stream.next_gaussian();
        path.gauss[k] = g;
        const double dt = grid.dt[k];
        const double kdt = params.kappa * dt;
        // Var over one step: nu^2 (1 - e^{-2 kappa dt}) / (2 kappa), -> nu^2 dt as kappa -> 0.
        const double step_var =
            kdt < 1e-12 ? params.nu * params.nu * dt
                        : params.nu * params.nu * (-std::expm1(-2.0 * kdt)) / (2.0 * params.kappa);
        const double decay = std::exp(-kdt);
        path.values[k + 1] = params.zeta_long + (path.values[k] - params.zeta_long) * decay +
                             std::sqrt(step_var) * g;
    }
    return path;
}

}  // namespace mc2
