#pragma once

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace scanstat {

// Poisson process with rate lambda observed on [0,t]; s is the minimum-gap
// window. All probabilities in this library are functions of this triple.
struct ProcessParams {
    double lambda;
    double s;
    double t;

    ProcessParams(double lambda_, double s_, double t_);
};

// Scale-free coordinates: x = lambda*s, r = t/s, lambda_t = lambda*t = x*r.
// The probabilities depend on (lambda,s,t) only through (x,r).
struct ReducedParams {
    double x;
    double r;
    double lambda_t;
};

ReducedParams reduce(const ProcessParams& params);

enum class Method {
    ExactFull,
    ExactWindow,
    Star,
    Series,
    MonteCarlo,
    Quadrature,
};

const char* method_name(Method m);

// A computed value plus provenance: how it was obtained, a rigorous error
// bound where one exists, and named diagnostic scalars.
struct Estimate {
    double value = 0.0;
    Method method = Method::ExactFull;
    std::optional<double> error_bound;
    std::vector<std::pair<std::string, double>> diagnostics;

    void set_diag(const std::string& key, double v);
    std::optional<double> diag(const std::string& key) const;
};

// Tolerance below which a probability slightly above 1 is treated as
// round-off and clamped; anything further out is an error.
inline constexpr double kProbClampEps = 1e-10;

// Clamps a would-be probability to [0,1] under the kProbClampEps policy.
// Sets *clamped when rounding was applied; throws std::domain_error beyond
// the tolerance.
double clamp_probability(double value, bool* clamped = nullptr);

// ln a_k for the k-th term of the exact sum, a_k = lambda^k [t-(k-1)s]^k / k!,
// evaluated as k*ln(lambda*(t-(k-1)s)) - lgamma(k+1). Finite for every
// representable input; the direct product overflows already at modest k.
double log_term(long long k, const ProcessParams& params);

// ln(sum(exp(v))) against the running maximum. -inf for an empty span,
// exact for a singleton.
double log_sum_exp(std::span<const double> log_terms);

// Two-term compensated (Kahan) accumulator for linear-space sums.
struct KahanSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double value) {
        const double y = value - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    double value() const { return sum; }
};

}  // namespace scanstat
