#pragma once

#include "scanstat/core.hpp"

namespace scanstat {

// Restriction of the exact sum to the k-range where the Poisson(lambda*t)
// mass sits, |k - lambda*t| < a*sqrt(lambda*t), boundaries excluded. The
// omitted terms total at most 2*(1 - Phi(a)).
struct TruncationWindow {
    double a;
    long long k_lo;  // inclusive
    long long k_hi;  // inclusive
    double error_bound;
};

// Number of terms K in the exact sum: the largest k with (k-1)*s < t,
// adjusted so that t - (K-1)*s > 0 holds in floating point. Matches the
// mathematical ceil(t/s) away from integer ratios.
long long term_count(const ProcessParams& params);

TruncationWindow make_window(const ProcessParams& params, double a);

// Probability that no two consecutive events in [0,t] are closer than s.
// Full sum by default; a window restricts the summed k-range and carries
// the 2*(1-Phi(a)) bound. Evaluated entirely in log space.
Estimate phi_exact(const ProcessParams& params,
                   const std::optional<TruncationWindow>& window = std::nullopt);

// Probability that before every event in [0,t] there is an event-free
// interval longer than s (the minimum failure-free operating period).
Estimate phi2_exact(const ProcessParams& params);

// ln phi without forming phi; usable when phi underflows the linear scale.
double log_phi_exact(const ProcessParams& params);
double log_phi_exact(const ProcessParams& params,
                     const std::optional<TruncationWindow>& window);

// Probability that n uniform order statistics on [0,t] have all n-1
// consecutive gaps exceeding the given values: (1 - sum(gaps)/t)^n.
double spacing_probability(double t, std::span<const double> gaps, int n);

}  // namespace scanstat
