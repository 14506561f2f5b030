#include "mc2/conditional_moments.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace mc2 {

namespace {

// Below this, the (rho/nu) * d sigma form switches to its analytic nu -> 0
// limit rho * sigma_k * g_k * sqrt(dt).
constexpr double kNuLimit = 1e-8;

// Prefix shift and per-fixing-interval variance buckets, evaluated at each
// requested grid index. `var` carries (1 - rho^2) sigma^2 dt sums, `quad`
// the rho^2 sigma^2 dt sums needed by the lognormal drift correction.
struct FixingAccumulation {
    std::vector<double> shift;
    std::vector<double> var;
    std::vector<double> quad;
};

// Walks the grid once; `step(k)` returns the shift increment over step k and
// `rate(k)` the instantaneous variance at the left endpoint.
template <typename ShiftFn, typename RateFn, typename RhoFn, typename SnapshotFn>
FixingAccumulation accumulate(std::span<const std::size_t> marks, std::size_t n_steps,
                              ShiftFn shift_increment, RateFn variance_rate, RhoFn rho_at,
                              std::span<const double> dts, SnapshotFn at_mark) {
    if (marks.empty()) throw std::invalid_argument("conditional moments: no fixings marked");
    FixingAccumulation acc;
    acc.shift.reserve(marks.size());
    acc.var.reserve(marks.size());
    acc.quad.reserve(marks.size());

    double shift = 0.0, var_bucket = 0.0, quad_bucket = 0.0;
    std::size_t next = 0;
    for (std::size_t k = 0; k < n_steps && next < marks.size(); ++k) {
        const double rho = rho_at(k);
        const double dv = variance_rate(k) * dts[k];
        var_bucket += (1.0 - rho * rho) * dv;
        quad_bucket += rho * rho * dv;
        shift += shift_increment(k);
        while (next < marks.size() && marks[next] == k + 1) {
            acc.shift.push_back(at_mark(k, shift));
            acc.var.push_back(var_bucket);
            acc.quad.push_back(quad_bucket);
            var_bucket = quad_bucket = 0.0;
            ++next;
        }
    }
    if (next != marks.size())
        throw std::logic_error("conditional moments: fixing index beyond grid");
    return acc;
}

ConditionalMoments vanilla_from(const FixingAccumulation& acc, double beta) {
    ConditionalMoments m;
    m.cond_variance = acc.var[0];
    if (beta == 1.0) {
        m.shift = acc.shift[0] - 0.5 * acc.quad[0];
        m.backbone = VolModel::Lognormal;
    } else {
        m.shift = acc.shift[0];
        m.backbone = VolModel::Normal;
    }
    return m;
}

// Average of the per-fixing shifts; variance buckets weighted by the number
// of fixings they feed, squared.
ConditionalMoments asian_from(const FixingAccumulation& acc) {
    const auto n_fix = acc.shift.size();
    const double n = static_cast<double>(n_fix);
    double shift_sum = 0.0, var_sum = 0.0;
    for (std::size_t j = 0; j < n_fix; ++j) {
        shift_sum += acc.shift[j];
        const double weight = n - static_cast<double>(j);
        var_sum += weight * weight * acc.var[j];
    }
    ConditionalMoments m;
    m.shift = shift_sum / n;
    m.cond_variance = var_sum / (n * n);
    m.backbone = VolModel::Normal;
    return m;
}

FixingAccumulation sabr_accumulate(const VolPath& path, const SabrParams& params,
                                   const TimeGrid& grid, std::span<const std::size_t> marks) {
    return accumulate(
        marks, grid.n_steps(),
        [&](std::size_t k) {
            const double rho = params.rho.at(grid.times[k]);
            const double nu = params.nu.at(grid.times[k]);
            if (nu >= kNuLimit) return (rho / nu) * (path.values[k + 1] - path.values[k]);
            return rho * path.values[k] * path.gauss[k] * std::sqrt(grid.dt[k]);
        },
        [&](std::size_t k) { return path.values[k] * path.values[k]; },
        [&](std::size_t k) { return params.rho.at(grid.times[k]); }, grid.dt,
        [](std::size_t, double shift) { return shift; });
}

FixingAccumulation heston_accumulate(const VolPath& path, const HestonParams& params,
                                     const TimeGrid& grid, std::span<const std::size_t> marks) {
    const bool limit = params.nu < kNuLimit;
    double integrated_w = 0.0;  // running left-endpoint sum of w dt
    double limit_shift = 0.0;   // running sum of sqrt(w) g sqrt(dt)
    return accumulate(
        marks, grid.n_steps(),
        [&](std::size_t k) {
            integrated_w += path.values[k] * grid.dt[k];
            if (limit)
                limit_shift += std::sqrt(path.values[k]) * path.gauss[k] * std::sqrt(grid.dt[k]);
            return 0.0;  // shift is evaluated from the SDE identity at the marks
        },
        [&](std::size_t k) { return path.values[k]; }, [&](std::size_t) { return params.rho; },
        grid.dt,
        [&](std::size_t k, double) {
            // integral of sqrt(w) dV over [0, t_{k+1}] from integrating the
            // variance SDE; exact for the full-truncation scheme.
            const double int_sqrt_w_dv =
                limit ? limit_shift
                      : (path.values[k + 1] - path.values[0] -
                         params.kappa * params.w_long * grid.times[k + 1] +
                         params.kappa * integrated_w) /
                            params.nu;
            return params.rho * int_sqrt_w_dv;
        });
}

FixingAccumulation schobel_zhu_accumulate(const VolPath& path, const SchobelZhuParams& params,
                                          const TimeGrid& grid,
                                          std::span<const std::size_t> marks) {
    const bool limit = params.nu < kNuLimit;
    double drift_integral = 0.0;  // running sum of zeta (zeta_long - zeta) dt
    double limit_shift = 0.0;     // running sum of zeta g sqrt(dt)
    return accumulate(
        marks, grid.n_steps(),
        [&](std::size_t k) {
            drift_integral +=
                path.values[k] * (params.zeta_long - path.values[k]) * grid.dt[k];
            if (limit) limit_shift += path.values[k] * path.gauss[k] * std::sqrt(grid.dt[k]);
            return 0.0;
        },
        [&](std::size_t k) { return path.values[k] * path.values[k]; },
        [&](std::size_t) { return params.rho; }, grid.dt,
        [&](std::size_t k, double) {
            // integral of zeta dV over [0, t_{k+1}], from the chain rule on
            // zeta^2 and the OU dynamics.
            const double zt = path.values[k + 1];
            const double z0 = path.values[0];
            const double int_zeta_dv =
                limit ? limit_shift
                      : (zt * zt - z0 * z0 - params.nu * params.nu * grid.times[k + 1]) /
                                (2.0 * params.nu) -
                            (params.kappa / params.nu) * drift_integral;
            return params.rho * int_zeta_dv;
        });
}

std::span<const std::size_t> require_fixings(const TimeGrid& grid) {
    if (grid.fixing_indices.empty())
        throw std::invalid_argument("asian moments: grid has no marked fixings");
    return grid.fixing_indices;
}

}  // namespace

ConditionalMoments sabr_b0_vanilla_moments(const VolPath& path, const SabrParams& params,
                                           const TimeGrid& grid) {
    const std::size_t end[] = {grid.n_steps()};
    return vanilla_from(sabr_accumulate(path, params, grid, end), 0.0);
}

ConditionalMoments sabr_b1_vanilla_moments(const VolPath& path, const SabrParams& params,
                                           const TimeGrid& grid) {
    const std::size_t end[] = {grid.n_steps()};
    return vanilla_from(sabr_accumulate(path, params, grid, end), 1.0);
}

ConditionalMoments sabr_b0_asian_moments(const VolPath& path, const SabrParams& params,
                                         const TimeGrid& grid) {
    return asian_from(sabr_accumulate(path, params, grid, require_fixings(grid)));
}

ConditionalMoments heston_vanilla_moments(const VolPath& path, const HestonParams& params,
                                          const TimeGrid& grid) {
    const std::size_t end[] = {grid.n_steps()};
    return vanilla_from(heston_accumulate(path, params, grid, end), params.beta);
}

ConditionalMoments heston_asian_moments(const VolPath& path, const HestonParams& params,
                                        const TimeGrid& grid) {
    if (params.beta != 0.0)
        throw std::invalid_argument("asian moments require beta = 0");
    return asian_from(heston_accumulate(path, params, grid, require_fixings(grid)));
}

ConditionalMoments schobel_zhu_vanilla_moments(const VolPath& path,
                                               const SchobelZhuParams& params,
                                               const TimeGrid& grid) {
    const std::size_t end[] = {grid.n_steps()};
    return vanilla_from(schobel_zhu_accumulate(path, params, grid, end), params.beta);
}

ConditionalMoments schobel_zhu_asian_moments(const VolPath& path, const SchobelZhuParams& params,
                                             const TimeGrid& grid) {
    if (params.beta != 0.0)
        throw std::invalid_argument("asian moments require beta = 0");
    return asian_from(schobel_zhu_accumulate(path, params, grid, require_fixings(grid)));
}

}  // namespace mc2
