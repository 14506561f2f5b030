#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace mc2 {

/// Inverse of the standard normal CDF (Wichura's AS241 algorithm, full
/// double precision). Requires p in (0, 1).
double inverse_normal_cdf(double p);

/// Counter-based random stream: every draw is a pure function of
/// (seed, stream, substream, counter), so identical keys replay the same
/// sequence on any platform, thread, or call order.
///
/// One stream per Monte-Carlo path (stream = path index); the substream
/// separates the volatility-factor draws (0) from the asset-factor draws (1)
/// so MC1 and MC2 can share volatility randomness.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream, std::uint64_t substream = 0);

    /// Uniform draw in the open interval (0, 1).
    double next_uniform();

    /// Standard normal draw via the inverse CDF.
    double next_gaussian();

    void fill_gaussian(std::span<double> out);

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

/// `count` i.i.d. standard normal draws from the given stream state.
std::vector<double> gaussian_batch(RngStream stream, std::size_t count);

}  // namespace mc2
