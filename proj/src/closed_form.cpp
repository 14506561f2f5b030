#include "mc2/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace mc2 {

namespace {
constexpr double kInvSqrt2Pi = 0.3989422804014326779399461;
constexpr double kInvSqrt2 = 0.7071067811865475244008444;
}  // namespace

double normal_cdf(double x) { return 0.5 * std::erfc(-x * kInvSqrt2); }

double normal_pdf(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

double bachelier_price(double forward, double strike, double total_stdev, OptionType type) {
    if (!(total_stdev >= 0.0)) throw std::domain_error("bachelier_price: total_stdev must be >= 0");
    if (total_stdev == 0.0) {
        return type == OptionType::Call ? std::max(forward - strike, 0.0)
                                        : std::max(strike - forward, 0.0);
    }
    const double d = (forward - strike) / total_stdev;
    if (type == OptionType::Call)
        return (forward - strike) * normal_cdf(d) + total_stdev * normal_pdf(d);
    return (strike - forward) * normal_cdf(-d) + total_stdev * normal_pdf(d);
}

double black_scholes_price(double forward, double strike, double total_stdev, OptionType type) {
    if (!(forward > 0.0)) throw std::domain_error("black_scholes_price: forward must be > 0");
    if (!(strike > 0.0)) throw std::domain_error("black_scholes_price: strike must be > 0");
    if (!(total_stdev >= 0.0))
        throw std::domain_error("black_scholes_price: total_stdev must be >= 0");
    if (total_stdev == 0.0) {
        return type == OptionType::Call ? std::max(forward - strike, 0.0)
                                        : std::max(strike - forward, 0.0);
    }
    const double d1 = std::log(forward / strike) / total_stdev + 0.5 * total_stdev;
    const double d2 = d1 - total_stdev;
    if (type == OptionType::Call)
        return forward * normal_cdf(d1) - strike * normal_cdf(d2);
    return strike * normal_cdf(-d2) - forward * normal_cdf(-d1);
}

namespace {

// x(z) = integral_0^z du / sqrt(1 - 2 rho u + u^2), with the |rho| = 1 limits.
double hagan_z_over_x(double z, double rho) {
    if (std::abs(z) < 1e-8) return 1.0 - 0.5 * rho * z;
    double x;
    if (rho >= 1.0) {
        if (z >= 1.0) throw std::domain_error("hagan_implied_vol: rho = 1 with z >= 1");
        x = -std::log1p(-z);
    } else if (rho <= -1.0) {
        if (z <= -1.0) throw std::domain_error("hagan_implied_vol: rho = -1 with z <= -1");
        x = std::log1p(z);
    } else {
        x = std::log((std::sqrt(1.0 - 2.0 * rho * z + z * z) + z - rho) / (1.0 - rho));
    }
    return z / x;
}

}  // namespace

double hagan_implied_vol(const SabrParams& params, double strike, double maturity) {
    validate(params);
    if (!params.nu.is_constant() || !params.rho.is_constant())
        throw std::invalid_argument(
            "hagan_implied_vol: term-structured nu/rho is unsupported");
    if (!(strike > 0.0)) throw std::domain_error("hagan_implied_vol: strike must be > 0");
    if (!(maturity > 0.0)) throw std::domain_error("hagan_implied_vol: maturity must be > 0");

    const double alpha = params.sigma0;
    const double nu = params.nu.constant_value();
    const double rho = params.rho.constant_value();
    const double forward = params.s0;
    const double log_fk = std::log(forward / strike);

    if (params.beta == 1.0) {
        const double z = (nu / alpha) * log_fk;
        const double correction =
            1.0 + (0.25 * rho * nu * alpha + (2.0 - 3.0 * rho * rho) * nu * nu / 24.0) * maturity;
        return alpha * hagan_z_over_x(z, rho) * correction;
    }

    // beta = 0 specialization: normal backbone quoted as lognormal vol.
    const double sqrt_fk = std::sqrt(forward * strike);
    const double prefactor =
        std::abs(forward - strike) < 1e-10 * forward ? alpha / sqrt_fk
                                                     : alpha * log_fk / (forward - strike);
    const double z = (nu / alpha) * sqrt_fk * log_fk;
    const double correction =
        1.0 + (alpha * alpha / (24.0 * forward * strike) +
               (2.0 - 3.0 * rho * rho) * nu * nu / 24.0) *
                  maturity;
    return prefactor * hagan_z_over_x(z, rho) * correction;
}

double implied_vol_from_price(double price, double forward, double strike, double maturity,
                              VolModel model, OptionType type) {
    if (!(maturity > 0.0)) throw std::domain_error("implied_vol_from_price: maturity must be > 0");
    const bool lognormal = model == VolModel::Lognormal;
    if (lognormal && (!(forward > 0.0) || !(strike > 0.0)))
        throw std::domain_error("implied_vol_from_price: lognormal needs F > 0 and K > 0");

    const double intrinsic = type == OptionType::Call ? std::max(forward - strike, 0.0)
                                                      : std::max(strike - forward, 0.0);
    const double upper_bound =
        lognormal ? (type == OptionType::Call ? forward : strike)
                  : std::numeric_limits<double>::infinity();
    if (price < intrinsic - 1e-12) throw std::domain_error("implied_vol_from_price: price below intrinsic");
    if (price >= upper_bound) throw std::domain_error("implied_vol_from_price: price at upper bound");
    if (price <= intrinsic) return 0.0;

    auto value = [&](double s) {
        return lognormal ? black_scholes_price(forward, strike, s, type)
                         : bachelier_price(forward, strike, s, type);
    };
    auto vega = [&](double s) {
        if (s <= 0.0) return 0.0;
        if (lognormal)
            return forward * normal_pdf(std::log(forward / strike) / s + 0.5 * s);
        return normal_pdf((forward - strike) / s);
    };

    // Bracket [lo, hi] with value(hi) >= price.
    double lo = 0.0;
    double hi = lognormal ? 1.0 : std::max(std::abs(forward - strike), 0.1 * std::abs(strike));
    for (int i = 0; i < 200 && value(hi) < price; ++i) hi *= 2.0;

    constexpr double kTol = 1e-10;
    double s = 0.5 * (lo + hi);
    for (int i = 0; i < 200; ++i) {
        const double v = value(s);
        const double diff = v - price;
        if (std::abs(diff) < kTol) break;
        if (diff > 0.0)
            hi = s;
        else
            lo = s;
        // Newton step when it stays inside the bracket, bisection otherwise.
        const double dv = vega(s);
        double next = dv > 0.0 ? s - diff / dv : 0.5 * (lo + hi);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        s = next;
    }
    return s / std::sqrt(maturity);
}

}  // namespace mc2
