#include "mc2/model.hpp"

#include <cmath>
#include <stdexcept>

namespace mc2 {

namespace {

void check_finite(double x, const char* field) {
    if (!std::isfinite(x)) throw std::invalid_argument(std::string(field) + " must be finite");
}

void check_schedule(const PiecewiseConstant& s, const char* field) {
    if (s.values.empty() || s.end_times.size() != s.values.size())
        throw std::invalid_argument(std::string(field) + " schedule is malformed");
    for (std::size_t i = 0; i < s.end_times.size(); ++i) {
        check_finite(s.end_times[i], field);
        check_finite(s.values[i], field);
        if (i > 0 && !(s.end_times[i] > s.end_times[i - 1]))
            throw std::invalid_argument(std::string(field) +
                                        " schedule breakpoints must be strictly increasing");
    }
}

void check_beta(double beta) {
    if (beta != 0.0 && beta != 1.0) throw std::invalid_argument("beta must be 0 or 1");
}

void check_rho(double rho, const char* field = "rho") {
    check_finite(rho, field);
    if (rho < -1.0 || rho > 1.0)
        throw std::invalid_argument(std::string(field) + " must be in [-1, 1]");
}

void check_nu(double nu, const char* field = "nu") {
    check_finite(nu, field);
    if (nu < 0.0) throw std::invalid_argument(std::string(field) + " must be >= 0");
}

}  // namespace

Contract Contract::vanilla(OptionType type, double strike, double maturity) {
    return Contract{PayoffKind::Vanilla, type, strike, maturity, {}};
}

Contract Contract::asian(OptionType type, double strike, double maturity,
                         std::vector<double> fixings) {
    return Contract{PayoffKind::Asian, type, strike, maturity, std::move(fixings)};
}

Contract Contract::asian_monthly(OptionType type, double strike, double maturity) {
    std::vector<double> fixings(12);
    for (int j = 1; j <= 12; ++j) fixings[j - 1] = maturity * j / 12.0;
    fixings.back() = maturity;
    return asian(type, strike, maturity, std::move(fixings));
}

double beta_of(const ModelSpec& model) {
    return std::visit([](const auto& p) { return p.beta; }, model);
}

double spot_of(const ModelSpec& model) {
    return std::visit([](const auto& p) { return p.s0; }, model);
}

void validate(const SabrParams& p) {
    check_finite(p.sigma0, "sigma0");
    if (!(p.sigma0 > 0.0)) throw std::invalid_argument("sigma0 must be > 0");
    check_finite(p.s0, "s0");
    if (!(p.s0 > 0.0)) throw std::invalid_argument("s0 must be > 0");
    check_beta(p.beta);
    check_schedule(p.nu, "nu");
    for (double v : p.nu.values) check_nu(v);
    check_schedule(p.rho, "rho");
    for (double v : p.rho.values) check_rho(v);
}

void validate(const HestonParams& p) {
    check_finite(p.w0, "w0");
    if (p.w0 < 0.0) throw std::invalid_argument("w0 must be >= 0");
    check_finite(p.kappa, "kappa");
    if (p.kappa < 0.0) throw std::invalid_argument("kappa must be >= 0");
    check_finite(p.w_long, "w_long");
    if (p.w_long < 0.0) throw std::invalid_argument("w_long must be >= 0");
    check_nu(p.nu);
    check_rho(p.rho);
    check_beta(p.beta);
    check_finite(p.s0, "s0");
    if (!(p.s0 > 0.0)) throw std::invalid_argument("s0 must be > 0");
}

void validate(const SchobelZhuParams& p) {
    check_finite(p.zeta0, "zeta0");
    check_finite(p.kappa, "kappa");
    if (p.kappa < 0.0) throw std::invalid_argument("kappa must be >= 0");
    check_finite(p.zeta_long, "zeta_long");
    check_nu(p.nu);
    check_rho(p.rho);
    check_beta(p.beta);
    check_finite(p.s0, "s0");
    if (!(p.s0 > 0.0)) throw std::invalid_argument("s0 must be > 0");
}

void validate(const Contract& c) {
    check_finite(c.strike, "strike");
    if (!(c.strike > 0.0)) throw std::invalid_argument("strike must be > 0");
    check_finite(c.maturity, "maturity");
    if (!(c.maturity > 0.0)) throw std::invalid_argument("maturity must be > 0");
    if (c.kind == PayoffKind::Asian) {
        if (c.fixings.empty()) throw std::invalid_argument("fixings must be non-empty");
        double prev = 0.0;
        for (double t : c.fixings) {
            check_finite(t, "fixings");
            if (!(t > prev)) throw std::invalid_argument("fixings not increasing");
            prev = t;
        }
        if (std::abs(c.fixings.back() - c.maturity) >
            1e-9 * std::max(1.0, std::abs(c.maturity)))
            throw std::invalid_argument("fixings must end at the maturity");
    } else if (!c.fixings.empty()) {
        throw std::invalid_argument("fixings are only valid for asian contracts");
    }
}

void validate(const McConfig& c) {
    if (c.n_paths < 1) throw std::invalid_argument("n_paths must be >= 1");
    if (c.steps_per_year < 1) throw std::invalid_argument("steps_per_year must be >= 1");
}

PricingProblem validate(PricingProblem problem) {
    std::visit([](const auto& p) { validate(p); }, problem.model);
    validate(problem.contract);
    validate(problem.config);
    if (problem.contract.kind == PayoffKind::Asian)
        problem.contract.fixings.back() = problem.contract.maturity;
    return problem;
}

}  // namespace mc2
