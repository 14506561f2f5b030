#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace mc2 {

enum class OptionType { Call, Put };
enum class PayoffKind { Vanilla, Asian };
enum class Method { Mc1, Mc2 };

/// Backbone of the conditional law: Normal for beta = 0, Lognormal for beta = 1.
enum class VolModel { Normal, Lognormal };

/// Piecewise-constant parameter on [0, T]: value(t) = values[i] on
/// [end_times[i-1], end_times[i]). A single-value schedule is a constant.
struct PiecewiseConstant {
    std::vector<double> end_times;  // strictly increasing segment end times
    std::vector<double> values;     // one value per segment

    PiecewiseConstant(double constant) : end_times{0.0}, values{constant} {}  // NOLINT(google-explicit-constructor)
    PiecewiseConstant(std::vector<double> ends, std::vector<double> vals)
        : end_times(std::move(ends)), values(std::move(vals)) {}

    bool is_constant() const { return values.size() == 1; }
    double constant_value() const { return values.front(); }

    /// Value of the segment containing t; t past the last breakpoint takes
    /// the final value.
    double at(double t) const {
        for (std::size_t i = 0; i + 1 < end_times.size(); ++i)
            if (t < end_times[i]) return values[i];
        return values.back();
    }
};

/// SABR parameters. sigma0 is the initial relative volatility (per sqrt-year),
/// beta must be exactly 0 or 1, and nu/rho may carry piecewise-constant term
/// structures over [0, T].
struct SabrParams {
    double sigma0;
    PiecewiseConstant nu;
    PiecewiseConstant rho;
    double beta;
    double s0;
};

/// Heston parameters: CIR variance factor, w0/w_long in variance units (per year).
struct HestonParams {
    double w0;
    double kappa;
    double w_long;
    double nu;
    double rho;
    double beta;
    double s0;
};

/// Schobel-Zhu parameters: Ornstein-Uhlenbeck volatility factor.
struct SchobelZhuParams {
    double zeta0;
    double kappa;
    double zeta_long;
    double nu;
    double rho;
    double beta;
    double s0;
};

using ModelSpec = std::variant<SabrParams, HestonParams, SchobelZhuParams>;

struct Contract {
    PayoffKind kind = PayoffKind::Vanilla;
    OptionType option_type = OptionType::Call;
    double strike = 0.0;
    double maturity = 0.0;
    std::vector<double> fixings;  // Asian only: increasing times in (0, T], last == T

    static Contract vanilla(OptionType type, double strike, double maturity);
    static Contract asian(OptionType type, double strike, double maturity,
                          std::vector<double> fixings);
    /// 12 equally spaced fixings t_j = j/12 * T.
    static Contract asian_monthly(OptionType type, double strike, double maturity);
};

struct McConfig {
    std::int64_t n_paths = 1;
    int steps_per_year = 256;
    std::uint64_t seed = 0;
    Method method = Method::Mc2;
};

/// Price estimate with sampling error and timing metadata.
struct Quote {
    double price = 0.0;
    double std_error = 0.0;
    std::int64_t n_paths = 0;
    double runtime_seconds = 0.0;
};

struct PricingProblem {
    ModelSpec model;
    Contract contract;
    McConfig config;
};

double beta_of(const ModelSpec& model);
double spot_of(const ModelSpec& model);

/// Throws std::invalid_argument naming the offending field.
void validate(const SabrParams& p);
void validate(const HestonParams& p);
void validate(const SchobelZhuParams& p);
void validate(const Contract& c);
void validate(const McConfig& c);

/// Validates every component and returns the bundle with the last Asian
/// fixing snapped to the maturity (within 1e-9 relative; anything farther is
/// an error). Idempotent.
PricingProblem validate(PricingProblem problem);

}  // namespace mc2
