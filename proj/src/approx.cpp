#include "scanstat/approx.hpp"

#include <cmath>

#include "scanstat/fixedpoint.hpp"

namespace scanstat {

double log_phi_star(const ProcessParams& params) {
    const FixedPointSolution sol = solve_B(params.lambda * params.s);
    const double log_A = -std::log(sol.B * (1.0 + sol.x * sol.B));
    return log_A - params.lambda * sol.one_minus_B * params.t;
}

Estimate phi_star(const ProcessParams& params) {
    Estimate est;
    est.method = Method::Star;
    const double value = std::exp(log_phi_star(params));
    if (value > 1.0 + kProbClampEps) {
        est.value = value;
        est.set_diag("out_of_domain", 1.0);
        return est;
    }
    bool clamped = false;
    est.value = clamp_probability(value, &clamped);
    if (clamped) est.set_diag("clamped", 1.0);
    return est;
}

Estimate phi2_star(const ProcessParams& params) {
    // B * phi_star = exp(-lambda[1-B]t) / (1 + x B) < 1 for all t >= 0
    const FixedPointSolution sol = solve_B(params.lambda * params.s);
    Estimate est;
    est.method = Method::Star;
    bool clamped = false;
    est.value =
        clamp_probability(sol.B * std::exp(log_phi_star(params)), &clamped);
    if (clamped) est.set_diag("clamped", 1.0);
    return est;
}

double tau_cdf_approx(const ProcessParams& params) {
    if (params.t < params.s)
        throw std::domain_error("tau_cdf_approx: defined for t >= s");
    return 1.0 - phi_star(params).value;
}

double laplace_phi_closed(double u, const ProcessParams& params) {
    if (!(u > u_c(params)))
        throw std::domain_error(
            "laplace_phi_closed: transform diverges for u <= u_c");
    const double ul = u + params.lambda;
    return 1.0 / ul +
           params.lambda / ul /
               (ul - params.lambda * std::exp(-ul * params.s));
}

double heavy_window_limit(double c) {
    if (!(c > 0.0))
        throw std::invalid_argument("heavy_window_limit: c must be > 0");
    return std::exp(-c);
}

}  // namespace scanstat
