#pragma once

#include "mc2/model.hpp"

namespace mc2 {

double normal_cdf(double x);
double normal_pdf(double x);

/// Undiscounted Bachelier price. `total_stdev` is the standard deviation of
/// the terminal level in currency units (sigma_abs * sqrt(T) folded in).
/// The forward may be negative or zero; the formula stays continuous there.
double bachelier_price(double forward, double strike, double total_stdev, OptionType type);

/// Undiscounted Black-Scholes price on a positive forward. `total_stdev` is
/// the lognormal standard deviation sigma * sqrt(T).
double black_scholes_price(double forward, double strike, double total_stdev, OptionType type);

/// Lognormal implied volatility of a constant-parameter SABR model at
/// (F = s0, K, T), from the published asymptotic expansion restricted to
/// beta in {0, 1}. Term-structured nu or rho is rejected.
double hagan_implied_vol(const SabrParams& params, double strike, double maturity);

/// Inverts bachelier_price / black_scholes_price for the annualized
/// volatility (total stdev / sqrt(T)). Bracketed bisection refined by
/// Newton, to 1e-10 absolute in price.
double implied_vol_from_price(double price, double forward, double strike, double maturity,
                              VolModel model, OptionType type = OptionType::Call);

}  // namespace mc2
