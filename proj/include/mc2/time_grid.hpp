#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace mc2 {

/// Discretization 0 = t_0 < t_1 < ... < t_n = T with precomputed step sizes
/// and the grid index of every Asian fixing.
struct TimeGrid {
    std::vector<double> times;                // size n+1
    std::vector<double> dt;                   // size n
    std::vector<std::size_t> fixing_indices;  // grid index of each fixing, increasing

    std::size_t n_steps() const { return dt.size(); }
    double maturity() const { return times.back(); }
};

/// Uniform grid of ceil(T * steps_per_year) steps refined so that every
/// fixing (marked) and every extra time (unmarked, e.g. parameter-schedule
/// breakpoints) is a grid point, exactly.
TimeGrid make_time_grid(double maturity, int steps_per_year,
                        std::span<const double> fixings = {},
                        std::span<const double> extra_times = {});

}  // namespace mc2
