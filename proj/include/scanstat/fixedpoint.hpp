#pragma once

#include "scanstat/core.hpp"

namespace scanstat {

// Root of exp(-x*B) = B on (0,1), equal to W(x)/x with W the principal
// Lambert branch. one_minus_B is computed as -expm1(-x*B) so it stays
// accurate when B is within round-off of 1.
struct FixedPointSolution {
    double x;
    double B;
    double residual;   // exp(-x*B) - B at the returned B
    int iterations;
    double one_minus_B;
};

// Safeguarded Newton on h(B) = exp(-x*B) - B with bracket (0,1); h is
// strictly decreasing so a step leaving the bracket falls back to bisection.
FixedPointSolution solve_B(double x);

// A(x) = 1 / (B(x) * (1 + x*B(x))).
double A_of(double x);

// Finite-horizon counterpart A(x,r) = e^{x r} phi / e^{x B r}, evaluated in
// log space as exp(log_phi + x*(1-B)*r) so e^{x r} is never formed.
double A_xr(const ReducedParams& reduced);

// Abscissa of convergence of the Laplace transform of phi in t:
// u_c = -lambda * (1 - B(lambda*s)) < 0.
double u_c(const ProcessParams& params);

// Root p of p * exp(s*p) = lambda, which equals lambda * B(lambda*s).
double p_gates_westcott(double lambda, double s);

}  // namespace scanstat
