#include "scanstat/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <thread>

#include "scanstat/exact.hpp"
#include "scanstat/fixedpoint.hpp"
#include "scanstat/rng.hpp"

namespace scanstat {

namespace {

void check_sim(const SimConfig& cfg) {
    if (cfg.samples < 100)
        throw std::invalid_argument("SimConfig: need at least 100 samples");
    if (cfg.chunk_size < 1)
        throw std::invalid_argument("SimConfig: chunk_size must be >= 1");
}

// Runs one accumulator per chunk (possibly on several threads) and merges
// the per-chunk results in chunk order, so the outcome is a function of
// (seed, samples, chunk_size) only.
template <typename ChunkResult, typename ChunkFn>
std::vector<ChunkResult> run_chunks(const SimConfig& cfg, int threads,
                                    ChunkFn fn) {
    const long long n_chunks =
        (cfg.samples + cfg.chunk_size - 1) / cfg.chunk_size;
    std::vector<ChunkResult> results(static_cast<size_t>(n_chunks));
    auto worker = [&](long long first, long long stride) {
        for (long long c = first; c < n_chunks; c += stride) {
            const long long count = std::min<long long>(
                cfg.chunk_size, cfg.samples - c * cfg.chunk_size);
            SplitMix64 rng =
                chunk_stream(cfg.seed, static_cast<uint64_t>(c));
            results[static_cast<size_t>(c)] = fn(rng, count);
        }
    };
    if (threads <= 1) {
        worker(0, 1);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(threads));
        for (int i = 0; i < threads; ++i)
            pool.emplace_back(worker, static_cast<long long>(i),
                              static_cast<long long>(threads));
        for (auto& th : pool) th.join();
    }
    return results;
}

McEstimate bernoulli_estimate(const SimConfig& cfg, int threads,
                              const std::function<bool(SplitMix64&)>& trial) {
    auto counts = run_chunks<long long>(
        cfg, threads, [&](SplitMix64& rng, long long count) {
            long long hits = 0;
            for (long long i = 0; i < count; ++i)
                if (trial(rng)) ++hits;
            return hits;
        });
    long long hits = 0;
    for (long long c : counts) hits += c;
    const double n = static_cast<double>(cfg.samples);
    const double p = static_cast<double>(hits) / n;
    const double sd = std::sqrt(std::max(0.0, p * (1.0 - p) * n / (n - 1.0)));
    return McEstimate{p, sd / std::sqrt(n), cfg.samples, cfg.seed};
}

// success iff no two consecutive arrivals inside [0,t] are closer than s,
// optionally also requiring the first arrival to clear `head` (phi2).
bool no_close_pair_trial(SplitMix64& rng, const ProcessParams& p, double head) {
    double prev = rng.next_exponential(p.lambda);
    if (prev <= head) return false;
    while (prev <= p.t) {
        const double gap = rng.next_exponential(p.lambda);
        const double next = prev + gap;
        if (next > p.t) return true;
        if (gap < p.s) return false;
        prev = next;
    }
    return true;
}

double tau2_trial(SplitMix64& rng, double lambda, double s) {
    KahanSum total;
    for (;;) {
        const double gap = rng.next_exponential(lambda);
        total.add(gap);
        if (gap < s) return total.value();
    }
}

double tau2_decomposed_trial(SplitMix64& rng, double lambda, double s) {
    const double ls = lambda * s;
    const double p = -std::expm1(-ls);  // 1 - e^{-lambda s}
    const double e = -std::log1p(-rng.next_unit());
    const long long y = 1 + static_cast<long long>(std::floor(e / ls));
    KahanSum total;
    for (long long i = 1; i < y; ++i)
        total.add(s + rng.next_exponential(lambda));
    // truncated exponential on (0,s) by inverse CDF
    total.add(-std::log1p(-rng.next_unit() * p) / lambda);
    return total.value();
}

struct MomentSums {
    double s1 = 0, s2 = 0, s3 = 0, s4 = 0;
};

McMoments moments_estimate(const SimConfig& cfg, int threads,
                           const std::function<double(SplitMix64&)>& draw) {
    auto sums = run_chunks<MomentSums>(
        cfg, threads, [&](SplitMix64& rng, long long count) {
            KahanSum s1, s2, s3, s4;
            for (long long i = 0; i < count; ++i) {
                const double x = draw(rng);
                const double x2 = x * x;
                s1.add(x);
                s2.add(x2);
                s3.add(x2 * x);
                s4.add(x2 * x2);
            }
            return MomentSums{s1.value(), s2.value(), s3.value(), s4.value()};
        });
    KahanSum s1, s2, s3, s4;
    for (const auto& m : sums) {
        s1.add(m.s1);
        s2.add(m.s2);
        s3.add(m.s3);
        s4.add(m.s4);
    }
    const double n = static_cast<double>(cfg.samples);
    const double m1 = s1.value() / n;
    const double r2 = s2.value() / n;
    const double r3 = s3.value() / n;
    const double r4 = s4.value() / n;
    const double m2 = std::max(0.0, r2 - m1 * m1);
    const double m4 = std::max(
        0.0, r4 - 4.0 * m1 * r3 + 6.0 * m1 * m1 * r2 - 3.0 * m1 * m1 * m1 * m1);
    const double var = m2 * n / (n - 1.0);
    return McMoments{m1,
                     std::sqrt(var / n),
                     var,
                     std::sqrt(std::max(0.0, m4 - m2 * m2) / n),
                     cfg.samples,
                     cfg.seed};
}

}  // namespace

McEstimate mc_phi(const ProcessParams& params, const SimConfig& cfg,
                  int threads) {
    check_sim(cfg);
    return bernoulli_estimate(cfg, threads, [&](SplitMix64& rng) {
        return no_close_pair_trial(rng, params, 0.0);
    });
}

McEstimate mc_phi2(const ProcessParams& params, const SimConfig& cfg,
                   int threads) {
    check_sim(cfg);
    const double head = std::min(params.s, params.t);
    return bernoulli_estimate(cfg, threads, [&](SplitMix64& rng) {
        return no_close_pair_trial(rng, params, head);
    });
}

McEstimate mc_tau2(double lambda, double s, const SimConfig& cfg,
                   int threads) {
    const McMoments m = mc_tau2_moments(lambda, s, cfg, threads);
    return McEstimate{m.mean, m.mean_stderr, m.samples, m.seed};
}

McMoments mc_tau2_moments(double lambda, double s, const SimConfig& cfg,
                          int threads) {
    check_sim(cfg);
    return moments_estimate(cfg, threads, [&](SplitMix64& rng) {
        return tau2_trial(rng, lambda, s);
    });
}

McMoments mc_tau2_decomposed(double lambda, double s, const SimConfig& cfg,
                             int threads) {
    check_sim(cfg);
    return moments_estimate(cfg, threads, [&](SplitMix64& rng) {
        return tau2_decomposed_trial(rng, lambda, s);
    });
}

namespace {

std::vector<double> collect_samples(
    const SimConfig& cfg, const std::function<double(SplitMix64&)>& draw) {
    check_sim(cfg);
    std::vector<double> out;
    out.reserve(static_cast<size_t>(cfg.samples));
    const long long n_chunks =
        (cfg.samples + cfg.chunk_size - 1) / cfg.chunk_size;
    for (long long c = 0; c < n_chunks; ++c) {
        const long long count = std::min<long long>(
            cfg.chunk_size, cfg.samples - c * cfg.chunk_size);
        SplitMix64 rng = chunk_stream(cfg.seed, static_cast<uint64_t>(c));
        for (long long i = 0; i < count; ++i) out.push_back(draw(rng));
    }
    return out;
}

}  // namespace

std::vector<double> sample_tau2_direct(double lambda, double s,
                                       const SimConfig& cfg) {
    return collect_samples(
        cfg, [&](SplitMix64& rng) { return tau2_trial(rng, lambda, s); });
}

std::vector<double> sample_tau2_decomposed(double lambda, double s,
                                           const SimConfig& cfg) {
    return collect_samples(cfg, [&](SplitMix64& rng) {
        return tau2_decomposed_trial(rng, lambda, s);
    });
}

double two_sample_ks(std::vector<double> a, std::vector<double> b) {
    if (a.empty() || b.empty())
        throw std::invalid_argument("two_sample_ks: empty sample");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    size_t i = 0, j = 0;
    double d = 0.0;
    while (i < a.size() && j < b.size()) {
        const double v = std::min(a[i], b[j]);
        while (i < a.size() && a[i] == v) ++i;
        while (j < b.size() && b[j] == v) ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / na -
                                 static_cast<double>(j) / nb));
    }
    return d;
}

double ks_critical_value(double alpha, long long n, long long m) {
    if (!(alpha > 0.0 && alpha < 1.0) || n < 1 || m < 1)
        throw std::invalid_argument("ks_critical_value: bad arguments");
    const double c = std::sqrt(-0.5 * std::log(alpha / 2.0));
    return c * std::sqrt(static_cast<double>(n + m) /
                         (static_cast<double>(n) * static_cast<double>(m)));
}

Estimate renewal_phi(const ProcessParams& params, double grid_step) {
    if (!(grid_step > 0.0) || grid_step > params.s / 16.0)
        throw std::invalid_argument("renewal_phi: grid_step must be <= s/16");
    if (!(params.t > params.s))
        throw std::invalid_argument("renewal_phi: requires t > s");

    auto march = [&](double target_step) {
        const double lambda = params.lambda, s = params.s, t = params.t;
        const long long n =
            static_cast<long long>(std::ceil(t / target_step));
        const double h = t / static_cast<double>(n);
        std::vector<double> phi(static_cast<size_t>(n) + 1);
        std::vector<double> integrand(static_cast<size_t>(n) + 1);
        std::vector<double> cumulative(static_cast<size_t>(n) + 1, 0.0);
        phi[0] = 1.0;
        integrand[0] = lambda;
        for (long long i = 1; i <= n; ++i) {
            const double u = static_cast<double>(i) * h;
            if (u <= s) {
                phi[static_cast<size_t>(i)] =
                    std::exp(-lambda * u) * (1.0 + lambda * u);
            } else {
                const double y = u - s;
                long long j = static_cast<long long>(std::floor(y / h));
                if (j >= i) j = i - 1;
                const double uj = static_cast<double>(j) * h;
                const double gj = integrand[static_cast<size_t>(j)];
                const double gj1 = integrand[static_cast<size_t>(j) + 1];
                const double gy = gj + (gj1 - gj) * (y - uj) / h;
                const double integral =
                    cumulative[static_cast<size_t>(j)] +
                    (y - uj) * 0.5 * (gj + gy);
                phi[static_cast<size_t>(i)] =
                    std::exp(-lambda * u) * (1.0 + lambda * s) +
                    std::exp(-lambda * u) * integral;
            }
            integrand[static_cast<size_t>(i)] =
                lambda * std::exp(lambda * u) * phi[static_cast<size_t>(i)];
            cumulative[static_cast<size_t>(i)] =
                cumulative[static_cast<size_t>(i) - 1] +
                0.5 * h *
                    (integrand[static_cast<size_t>(i) - 1] +
                     integrand[static_cast<size_t>(i)]);
        }
        return phi[static_cast<size_t>(n)];
    };

    const double coarse = march(grid_step);
    const double fine = march(grid_step * 0.5);
    Estimate est;
    est.value = clamp_probability(fine);
    est.method = Method::Quadrature;
    est.set_diag("step", grid_step * 0.5);
    est.set_diag("halfstep_diff", std::abs(fine - coarse));
    return est;
}

namespace {

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double fa, double fm, double fb, double whole,
                        double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol) {
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, 48);
}

}  // namespace

double laplace_phi_quadrature(double u, const ProcessParams& params,
                              double tail_tol) {
    if (!(tail_tol > 0.0))
        throw std::invalid_argument("laplace_phi_quadrature: tail_tol must be > 0");
    const double uc = u_c(params);
    if (!(u > uc + 0.1 * std::abs(uc)))
        throw std::domain_error("laplace_phi_quadrature: u too close to u_c");
    // tail envelope phi(t) <= C e^{u_c t} with a safety factor of 2 on A
    const double C = 2.0 * A_of(params.lambda * params.s);
    const double decay = u - uc;
    double T = std::log(C / (decay * tail_tol)) / decay;
    T = std::max(T, params.s);
    auto f = [&](double t) {
        return t == 0.0 ? 1.0
                        : std::exp(-u * t +
                                   log_phi_exact(ProcessParams(
                                       params.lambda, params.s, t)));
    };
    return integrate(f, 0.0, T, tail_tol);
}

}  // namespace scanstat
