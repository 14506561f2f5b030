#include "mc2/time_grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mc2 {

TimeGrid make_time_grid(double maturity, int steps_per_year, std::span<const double> fixings,
                        std::span<const double> extra_times) {
    if (!(maturity > 0.0)) throw std::invalid_argument("make_time_grid: maturity must be > 0");
    if (steps_per_year < 1)
        throw std::invalid_argument("make_time_grid: steps_per_year must be >= 1");
    for (double t : fixings)
        if (t > maturity * (1.0 + 1e-12) || !(t > 0.0))
            throw std::invalid_argument("make_time_grid: fixing outside (0, maturity]");

    const double tol = 1e-12 * std::max(1.0, maturity);
    const auto n_base = static_cast<std::size_t>(std::ceil(maturity * steps_per_year - tol));

    std::vector<double> points;
    points.reserve(n_base + 1 + fixings.size() + extra_times.size());
    points.push_back(0.0);
    for (std::size_t k = 1; k < n_base; ++k)
        points.push_back(maturity * static_cast<double>(k) / static_cast<double>(n_base));
    points.push_back(maturity);

    // Refinement points override nearby uniform points so they land on the
    // grid with their exact values.
    auto insert_exact = [&](double t) {
        if (t <= 0.0 || t >= maturity) return;
        auto it = std::lower_bound(points.begin(), points.end(), t - tol);
        if (it != points.end() && std::abs(*it - t) <= tol)
            *it = t;
        else
            points.insert(it, t);
    };
    for (double t : extra_times) insert_exact(t);
    for (double t : fixings) insert_exact(t);

    TimeGrid grid;
    grid.times = std::move(points);
    grid.dt.resize(grid.times.size() - 1);
    for (std::size_t k = 0; k + 1 < grid.times.size(); ++k)
        grid.dt[k] = grid.times[k + 1] - grid.times[k];

    grid.fixing_indices.reserve(fixings.size());
    for (double t : fixings) {
        const double target = std::abs(t - maturity) <= tol ? maturity : t;
        auto it = std::lower_bound(grid.times.begin(), grid.times.end(), target - tol);
        if (it == grid.times.end() || std::abs(*it - target) > tol)
            throw std::logic_error("make_time_grid: fixing not on grid");
        grid.fixing_indices.push_back(static_cast<std::size_t>(it - grid.times.begin()));
    }
    return grid;
}

}  // namespace mc2
