#include "scanstat/fixedpoint.hpp"

#include <cmath>

#include "scanstat/exact.hpp"

namespace scanstat {

namespace {
constexpr int kMaxIterations = 100;
constexpr double kStepTol = 2.3e-16;  // ~1 ulp relative
constexpr double kResidualTol = 1e-14;
}  // namespace

FixedPointSolution solve_B(double x) {
    if (!std::isfinite(x) || x <= 0.0)
        throw std::invalid_argument("solve_B: x must be finite and > 0");

    // h(0)=1 > 0, h(1)=e^{-x}-1 < 0; keep the bracket tight as we go.
    // Iterated to step stagnation (~1 ulp of B) so that derived identities
    // like x B e^{xB} = x hold to near machine precision even for large x.
    double lo = 0.0, hi = 1.0;
    double b = 1.0 / (1.0 + x);  // matches B to O(x^2) as x->0, stays in (0,1)
    double h = std::exp(-x * b) - b;
    int iter = 0;
    while (iter < kMaxIterations) {
        ++iter;
        if (h > 0.0)
            lo = b;
        else
            hi = b;
        const double hprime = -x * std::exp(-x * b) - 1.0;
        double next = b - h / hprime;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        const double step = next - b;
        b = next;
        h = std::exp(-x * b) - b;
        if (std::abs(step) <= kStepTol * b) break;
    }
    if (std::abs(h) > kResidualTol * std::max(1.0, x * b))
        throw std::runtime_error("solve_B: no convergence after max iterations");
    return FixedPointSolution{x, b, h, iter, -std::expm1(-x * b)};
}

double A_of(double x) {
    const FixedPointSolution sol = solve_B(x);
    return 1.0 / (sol.B * (1.0 + x * sol.B));
}

double A_xr(const ReducedParams& reduced) {
    if (!(reduced.x > 0.0) || !(reduced.r > 0.0))
        throw std::invalid_argument("A_xr: requires x > 0 and r > 0");
    const FixedPointSolution sol = solve_B(reduced.x);
    const ProcessParams canonical(reduced.x, 1.0, reduced.r);
    return std::exp(log_phi_exact(canonical) +
                    reduced.x * sol.one_minus_B * reduced.r);
}

double u_c(const ProcessParams& params) {
    const FixedPointSolution sol = solve_B(params.lambda * params.s);
    return -params.lambda * sol.one_minus_B;
}

double p_gates_westcott(double lambda, double s) {
    if (!(lambda > 0.0) || !(s > 0.0))
        throw std::invalid_argument("p_gates_westcott: lambda, s must be > 0");
    return lambda * solve_B(lambda * s).B;
}

}  // namespace scanstat
