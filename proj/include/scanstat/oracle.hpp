#pragma once

#include <cstdint>

#include "scanstat/core.hpp"

namespace scanstat {

// Seeded simulation run. Identical (seed, samples, chunk_size) give an
// identical estimate regardless of the thread count used to execute it.
struct SimConfig {
    uint64_t seed = 0;
    long long samples = 1'000'000;
    long long chunk_size = 1 << 16;
};

struct McEstimate {
    double estimate;
    double stderr_;  // sample standard deviation / sqrt(samples)
    long long samples;
    uint64_t seed;
};

// Mean/variance estimates with their standard errors, for two-sample
// comparisons of waiting-time distributions.
struct McMoments {
    double mean;
    double mean_stderr;
    double variance;
    double variance_stderr;
    long long samples;
    uint64_t seed;
};

// Bernoulli estimate of phi: simulate Exp(lambda) inter-arrivals until the
// horizon, success iff no two consecutive events inside [0,t] are closer
// than s.
McEstimate mc_phi(const ProcessParams& params, const SimConfig& cfg,
                  int threads = 1);

// Bernoulli estimate of phi2: additionally requires no event in [0,s].
McEstimate mc_phi2(const ProcessParams& params, const SimConfig& cfg,
                   int threads = 1);

// Mean of tau2 (sum of inter-arrivals through the first one below s).
McEstimate mc_tau2(double lambda, double s, const SimConfig& cfg,
                   int threads = 1);

// Mean and variance of tau2 sampled by direct gap simulation.
McMoments mc_tau2_moments(double lambda, double s, const SimConfig& cfg,
                          int threads = 1);

// Same moments sampled through the geometric decomposition
// sum_{i<Y}(s + xi_i) + zeta, with Y geometric and zeta a truncated
// exponential on (0,s).
McMoments mc_tau2_decomposed(double lambda, double s, const SimConfig& cfg,
                             int threads = 1);

// Raw samples for distribution-level (Kolmogorov-Smirnov) comparisons.
std::vector<double> sample_tau2_direct(double lambda, double s,
                                       const SimConfig& cfg);
std::vector<double> sample_tau2_decomposed(double lambda, double s,
                                           const SimConfig& cfg);

// Two-sample Kolmogorov-Smirnov statistic sup_x |F1(x) - F2(x)|; inputs
// need not be sorted.
double two_sample_ks(std::vector<double> a, std::vector<double> b);

// Critical value c(alpha) * sqrt((n+m)/(n m)) of the two-sample KS test.
double ks_critical_value(double alpha, long long n, long long m);

// Marches the first-event renewal recursion
//   phi(t) = e^{-lambda t}(1 + lambda s) + e^{-lambda t} int_0^{t-s}
//            lambda e^{lambda u} phi(u) du,   t > s,
// on a uniform grid with trapezoidal quadrature (O(step^2)); an independent
// cross-check of the closed-form sum for moderate lambda*t.
Estimate renewal_phi(const ProcessParams& params, double grid_step);

// Numeric int_0^inf e^{-u t} phi(t) dt by adaptive Simpson on [0,T], with T
// from the exponential envelope of phi so the discarded tail is below
// tail_tol.
double laplace_phi_quadrature(double u, const ProcessParams& params,
                              double tail_tol);

}  // namespace scanstat
