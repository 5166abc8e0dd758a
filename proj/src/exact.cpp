#include "scanstat/exact.hpp"

#include <cmath>

namespace scanstat {

namespace {

// Above this many terms the full sum is no longer worth its cost and the
// truncation window (error <= 2*(1-Phi(8)) ~ 1.2e-15) takes over.
constexpr long long kMaxFullTerms = 1'000'000;
constexpr double kAutoWindowA = 8.0;

}  // namespace

long long term_count(const ProcessParams& params) {
    if (!(params.t > 0.0))
        throw std::invalid_argument("term_count: requires t > 0");
    long long k = static_cast<long long>(std::ceil(params.t / params.s));
    if (k < 1) k = 1;
    while (k > 1 && params.t - static_cast<double>(k - 1) * params.s <= 0.0) --k;
    while (params.t - static_cast<double>(k) * params.s > 0.0) ++k;
    return k;
}

TruncationWindow make_window(const ProcessParams& params, double a) {
    if (!(a > 0.0)) throw std::invalid_argument("make_window: a must be > 0");
    const double lt = params.lambda * params.t;
    if (!(lt > 0.0)) throw std::invalid_argument("make_window: requires lambda*t > 0");
    const long long K = term_count(params);
    const double half = a * std::sqrt(lt);
    // strictly inside (lt - half, lt + half)
    long long k_lo = static_cast<long long>(std::floor(lt - half)) + 1;
    long long k_hi = static_cast<long long>(std::ceil(lt + half)) - 1;
    k_lo = std::max<long long>(k_lo, 0);
    k_hi = std::min<long long>(k_hi, K);
    if (k_lo > k_hi)
        throw std::domain_error("make_window: window is empty after clipping");
    const double bound = std::erfc(a / std::sqrt(2.0));
    return TruncationWindow{a, k_lo, k_hi, bound};
}

namespace {

// ln phi = -lambda*t + ln( [k_lo==0] + sum_{k=k_lo..k_hi, k>=1} a_k ).
double log_phi_range(const ProcessParams& params, long long k_lo, long long k_hi) {
    std::vector<double> terms;
    terms.reserve(static_cast<size_t>(k_hi - k_lo + 1) + 1);
    if (k_lo == 0) terms.push_back(0.0);
    for (long long k = std::max<long long>(k_lo, 1); k <= k_hi; ++k)
        terms.push_back(log_term(k, params));
    return -params.lambda * params.t + log_sum_exp(terms);
}

Estimate finish_estimate(double log_phi, Method method, double error_bound,
                         long long terms_summed, std::optional<double> window_a) {
    Estimate est;
    bool clamped = false;
    est.value = clamp_probability(std::exp(log_phi), &clamped);
    est.method = method;
    est.error_bound = error_bound;
    est.set_diag("terms_summed", static_cast<double>(terms_summed));
    if (window_a) est.set_diag("window_a", *window_a);
    if (clamped) est.set_diag("clamped", 1.0);
    return est;
}

}  // namespace

double log_phi_exact(const ProcessParams& params,
                     const std::optional<TruncationWindow>& window) {
    if (params.t == 0.0) return 0.0;
    const long long K = term_count(params);
    if (window) {
        long long k_lo = std::max<long long>(window->k_lo, 0);
        long long k_hi = std::min<long long>(window->k_hi, K);
        if (k_lo > k_hi)
            throw std::domain_error("phi_exact: window is empty after clipping");
        return log_phi_range(params, k_lo, k_hi);
    }
    if (K > kMaxFullTerms) {
        // The auto window can be empty when lambda*s >> 1 puts all available
        // k far below lambda*t; the full sum is the only exact route then.
        const double lt = params.lambda * params.t;
        const double half = kAutoWindowA * std::sqrt(lt);
        if (lt - half < static_cast<double>(K)) {
            const TruncationWindow w = make_window(params, kAutoWindowA);
            return log_phi_range(params, w.k_lo, w.k_hi);
        }
    }
    return log_phi_range(params, 0, K);
}

double log_phi_exact(const ProcessParams& params) {
    return log_phi_exact(params, std::nullopt);
}

Estimate phi_exact(const ProcessParams& params,
                   const std::optional<TruncationWindow>& window) {
    if (params.t == 0.0)
        return finish_estimate(0.0, Method::ExactFull, 0.0, 0, std::nullopt);
    const long long K = term_count(params);
    if (window) {
        long long k_lo = std::max<long long>(window->k_lo, 0);
        long long k_hi = std::min<long long>(window->k_hi, K);
        if (k_lo > k_hi)
            throw std::domain_error("phi_exact: window is empty after clipping");
        const long long n = k_hi - k_lo + 1;
        return finish_estimate(log_phi_range(params, k_lo, k_hi),
                               Method::ExactWindow, window->error_bound, n,
                               window->a);
    }
    if (K > kMaxFullTerms) {
        const double lt = params.lambda * params.t;
        const double half = kAutoWindowA * std::sqrt(lt);
        if (lt - half < static_cast<double>(K)) {
            const TruncationWindow w = make_window(params, kAutoWindowA);
            const long long n = w.k_hi - w.k_lo + 1;
            return finish_estimate(log_phi_range(params, w.k_lo, w.k_hi),
                                   Method::ExactWindow, w.error_bound, n, w.a);
        }
    }
    return finish_estimate(log_phi_range(params, 0, K), Method::ExactFull, 0.0,
                           K + 1, std::nullopt);
}

Estimate phi2_exact(const ProcessParams& params) {
    if (params.t == 0.0)
        return finish_estimate(0.0, Method::ExactFull, 0.0, 0, std::nullopt);
    std::vector<double> terms;
    terms.push_back(0.0);
    if (params.t > params.s) {
        // bases t - k*s coincide with the k-th bases of phi at horizon t-s
        const ProcessParams shifted(params.lambda, params.s, params.t - params.s);
        const long long K2 = term_count(shifted);
        terms.reserve(static_cast<size_t>(K2) + 1);
        for (long long k = 1; k <= K2; ++k)
            terms.push_back(log_term(k, shifted));
    }
    const double log_phi2 = -params.lambda * params.t + log_sum_exp(terms);
    return finish_estimate(log_phi2, Method::ExactFull, 0.0,
                           static_cast<long long>(terms.size()), std::nullopt);
}

double spacing_probability(double t, std::span<const double> gaps, int n) {
    if (n < 1) throw std::invalid_argument("spacing_probability: n must be >= 1");
    if (!(t > 0.0)) throw std::invalid_argument("spacing_probability: t must be > 0");
    if (gaps.size() != static_cast<size_t>(n - 1))
        throw std::invalid_argument("spacing_probability: need n-1 gaps");
    KahanSum total;
    for (double g : gaps) {
        if (!(g >= 0.0))
            throw std::invalid_argument("spacing_probability: gaps must be >= 0");
        total.add(g);
    }
    const double sum = total.value();
    if (sum > t)
        throw std::domain_error("spacing_probability: gaps exceed the horizon");
    if (sum == t) return 0.0;
    return std::pow(1.0 - sum / t, static_cast<double>(n));
}

}  // namespace scanstat
