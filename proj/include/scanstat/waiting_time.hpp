#pragma once

#include "scanstat/core.hpp"

namespace scanstat {

struct WaitingTimeMoments {
    double mean;
    double variance;
};

// P(Y = i) for the index Y of the first inter-arrival below s:
// e^{-lambda s (i-1)} (1 - e^{-lambda s}).
double geometric_Y_pmf(long long i, double lambda, double s);

// tau2 = sum of inter-arrivals up to and including the first one below s.
// mean = 1 / (lambda (1 - e^{-lambda s})),
// variance = (1 + 2 lambda s e^{-lambda s}) / (lambda (1 - e^{-lambda s}))^2.
WaitingTimeMoments tau2_moments(double lambda, double s);

// tau = xi + tau2 with xi an independent Exp(lambda) head start.
WaitingTimeMoments tau_moments(double lambda, double s);

// P(tau2 <= t) = 1 - phi2(s,t;lambda), exact.
double tau2_cdf_exact(const ProcessParams& params);

}  // namespace scanstat
