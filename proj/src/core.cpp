#include "scanstat/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace scanstat {

ProcessParams::ProcessParams(double lambda_, double s_, double t_)
    : lambda(lambda_), s(s_), t(t_) {
    if (!std::isfinite(lambda) || lambda <= 0.0)
        throw std::invalid_argument("ProcessParams: lambda must be finite and > 0");
    if (!std::isfinite(s) || s <= 0.0)
        throw std::invalid_argument("ProcessParams: s must be finite and > 0");
    if (!std::isfinite(t) || t < 0.0)
        throw std::invalid_argument("ProcessParams: t must be finite and >= 0");
}

ReducedParams reduce(const ProcessParams& params) {
    return ReducedParams{params.lambda * params.s, params.t / params.s,
                         params.lambda * params.t};
}

const char* method_name(Method m) {
    switch (m) {
        case Method::ExactFull: return "exact-full";
        case Method::ExactWindow: return "exact-window";
        case Method::Star: return "star";
        case Method::Series: return "series";
        case Method::MonteCarlo: return "monte-carlo";
        case Method::Quadrature: return "quadrature";
    }
    return "unknown";
}

void Estimate::set_diag(const std::string& key, double v) {
    for (auto& [k, val] : diagnostics) {
        if (k == key) {
            val = v;
            return;
        }
    }
    diagnostics.emplace_back(key, v);
}

std::optional<double> Estimate::diag(const std::string& key) const {
    for (const auto& [k, val] : diagnostics)
        if (k == key) return val;
    return std::nullopt;
}

double clamp_probability(double value, bool* clamped) {
    if (clamped) *clamped = false;
    if (value >= 0.0 && value <= 1.0) return value;
    if (value > 1.0 && value <= 1.0 + kProbClampEps) {
        if (clamped) *clamped = true;
        return 1.0;
    }
    if (value < 0.0 && value >= -kProbClampEps) {
        if (clamped) *clamped = true;
        return 0.0;
    }
    throw std::domain_error("probability outside [-eps, 1+eps]: " +
                            std::to_string(value));
}

double log_term(long long k, const ProcessParams& params) {
    if (k < 1) throw std::invalid_argument("log_term: k must be >= 1");
    const double base = params.t - static_cast<double>(k - 1) * params.s;
    if (base <= 0.0)
        throw std::domain_error("log_term: t - (k-1)s must be positive");
    return static_cast<double>(k) * std::log(params.lambda * base) -
           std::lgamma(static_cast<double>(k) + 1.0);
}

double log_sum_exp(std::span<const double> log_terms) {
    const double neg_inf = -std::numeric_limits<double>::infinity();
    if (log_terms.empty()) return neg_inf;
    double mx = neg_inf;
    for (double v : log_terms) mx = std::max(mx, v);
    if (mx == neg_inf) return neg_inf;
    KahanSum acc;
    for (double v : log_terms) acc.add(std::exp(v - mx));
    return mx + std::log(acc.value());
}

}  // namespace scanstat
