#include "scanstat/waiting_time.hpp"

#include <cmath>

#include "scanstat/exact.hpp"

namespace scanstat {

namespace {

void check_rate_window(double lambda, double s, const char* who) {
    if (!std::isfinite(lambda) || lambda <= 0.0 || !std::isfinite(s) || s <= 0.0)
        throw std::invalid_argument(std::string(who) +
                                    ": lambda and s must be finite and > 0");
}

}  // namespace

double geometric_Y_pmf(long long i, double lambda, double s) {
    if (i < 1) throw std::invalid_argument("geometric_Y_pmf: i must be >= 1");
    check_rate_window(lambda, s, "geometric_Y_pmf");
    const double ls = lambda * s;
    // -expm1(-ls) keeps the success probability accurate down to ls ~ 1e-300
    return std::exp(-ls * static_cast<double>(i - 1)) * (-std::expm1(-ls));
}

WaitingTimeMoments tau2_moments(double lambda, double s) {
    check_rate_window(lambda, s, "tau2_moments");
    const double ls = lambda * s;
    const double p = -std::expm1(-ls);  // 1 - e^{-lambda s}
    const double mean = 1.0 / (lambda * p);
    const double variance =
        (1.0 + 2.0 * ls * std::exp(-ls)) / (lambda * lambda * p * p);
    return WaitingTimeMoments{mean, variance};
}

WaitingTimeMoments tau_moments(double lambda, double s) {
    const WaitingTimeMoments m2 = tau2_moments(lambda, s);
    return WaitingTimeMoments{1.0 / lambda + m2.mean,
                              1.0 / (lambda * lambda) + m2.variance};
}

double tau2_cdf_exact(const ProcessParams& params) {
    return 1.0 - phi2_exact(params).value;
}

}  // namespace scanstat
