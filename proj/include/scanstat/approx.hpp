#pragma once

#include "scanstat/core.hpp"

namespace scanstat {

// The fixed-point approximation A(lambda s) * exp(-lambda [1 - B(lambda s)] t),
// asymptotically exact as t/s -> infinity and remarkably accurate already for
// t a few multiples of s. Values above 1 + eps (t << s, outside the design
// domain) are returned with an out_of_domain diagnostic instead of clamping.
Estimate phi_star(const ProcessParams& params);

// ln A(lambda s) + u_c * t, exactly the exponent behind phi_star.
double log_phi_star(const ProcessParams& params);

// Counterpart for the event-free-interval probability:
// B(lambda s) * phi_star = exp(-lambda [1-B] t) / (1 + lambda s B).
Estimate phi2_star(const ProcessParams& params);

// P(tau <= t) ~ 1 - phi_star for t >= s; tau is the waiting time until two
// events fall within s of each other.
double tau_cdf_approx(const ProcessParams& params);

// Closed form of int_0^inf e^{-u t} phi(s,t;lambda) dt, valid for u > u_c.
double laplace_phi_closed(double u, const ProcessParams& params);

// Limit value e^{-c} of phi for c = lambda^2 * s * t held fixed while the
// window shrinks (s down, t or lambda up).
double heavy_window_limit(double c);

}  // namespace scanstat
