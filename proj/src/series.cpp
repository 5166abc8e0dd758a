#include "scanstat/series.hpp"

#include <cmath>
#include <limits>

namespace scanstat {

namespace {

BigInt int_pow(const BigInt& base, int exponent) {
    BigInt result = 1;
    for (int i = 0; i < exponent; ++i) result *= base;
    return result;
}

std::vector<BigInt> binomial_row(int n) {
    std::vector<BigInt> row(static_cast<size_t>(n) + 1);
    row[0] = 1;
    for (int i = 1; i <= n; ++i)
        row[static_cast<size_t>(i)] =
            row[static_cast<size_t>(i) - 1] * (n - i + 1) / i;
    return row;
}

}  // namespace

StirlingTable stirling_table(int n_max) {
    if (n_max < 0 || n_max > kMaxStirlingRows)
        throw std::invalid_argument("stirling_table: n_max out of range");
    StirlingTable table;
    table.n_max = n_max;
    table.rows.resize(static_cast<size_t>(n_max) + 1);
    for (int i = 0; i <= n_max; ++i) {
        auto& row = table.rows[static_cast<size_t>(i)];
        row.assign(static_cast<size_t>(i) + 1, BigInt(0));
        if (i == 0) {
            row[0] = 1;
            continue;
        }
        row[static_cast<size_t>(i)] = 1;
        row[1] = 1;
        for (int j = 2; j < i; ++j)
            row[static_cast<size_t>(j)] =
                table.rows[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1] +
                BigInt(j) *
                    table.rows[static_cast<size_t>(i) - 1][static_cast<size_t>(j)];
    }
    return table;
}

IntPolynomial pn_polynomial(int n) {
    if (n < 0 || n > kMaxSeriesOrder)
        throw std::invalid_argument("pn_polynomial: n out of range");
    const StirlingTable S = stirling_table(n);
    const std::vector<BigInt> choose = binomial_row(n);
    IntPolynomial poly;
    poly.degree = n;
    poly.coeffs.assign(static_cast<size_t>(n) + 1, BigInt(0));
    for (int j = 0; j <= n; ++j) {
        BigInt c = 0;
        for (int i = j; i <= n; ++i)
            c += choose[static_cast<size_t>(i)] * int_pow(BigInt(n - 1), n - i) *
                 S.at(i, j);
        poly.coeffs[static_cast<size_t>(j)] = c;
    }
    return poly;
}

double pn_eval(int n, double x) {
    if (!(x >= 0.0) || !std::isfinite(x))
        throw std::invalid_argument("pn_eval: x must be finite and >= 0");
    if (x > 1e6) return std::exp(pn_log_eval(n, x));
    const IntPolynomial poly = pn_polynomial(n);
    double acc = 0.0;
    for (int j = n; j >= 0; --j)
        acc = acc * x + poly.coeffs[static_cast<size_t>(j)].convert_to<double>();
    return acc;
}

double pn_log_eval(int n, double x) {
    if (!(x >= 0.0) || !std::isfinite(x))
        throw std::invalid_argument("pn_log_eval: x must be finite and >= 0");
    const IntPolynomial poly = pn_polynomial(n);
    const double log_x =
        x > 0.0 ? std::log(x) : -std::numeric_limits<double>::infinity();
    std::vector<double> terms(static_cast<size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) {
        const double c = poly.coeffs[static_cast<size_t>(j)].convert_to<double>();
        terms[static_cast<size_t>(j)] =
            (c > 0.0 ? std::log(c) : -std::numeric_limits<double>::infinity()) +
            (j > 0 ? j * log_x : 0.0);
    }
    return log_sum_exp(terms);
}

namespace {

// S_N = sum_{n=1..N} (-1)^(n+1) P_n(lambda t) (lambda s)^n / n!, each term
// assembled in log magnitude so P_n(lambda t) never overflows on its own.
double complement_sum(const ProcessParams& params, int N) {
    const double lt = params.lambda * params.t;
    const double log_ls = std::log(params.lambda * params.s);
    KahanSum acc;
    for (int n = 1; n <= N; ++n) {
        const double log_mag =
            pn_log_eval(n, lt) + n * log_ls - std::lgamma(n + 1.0);
        const double term = std::exp(log_mag);
        acc.add(n % 2 == 1 ? term : -term);
    }
    return acc.value();
}

}  // namespace

Estimate series_phi(const ProcessParams& params, int N) {
    if (N < 0 || N > kMaxSeriesOrder)
        throw std::invalid_argument("series_phi: N out of range");
    if (!(params.t > 0.0))
        throw std::invalid_argument("series_phi: requires t > 0");
    Estimate est;
    est.value = N == 0 ? 1.0 : 1.0 - complement_sum(params, N);
    est.method = Method::Series;
    est.set_diag("N", static_cast<double>(N));
    return est;
}

double series_SN(const ProcessParams& params, int N) {
    if (N < 1 || N > kMaxSeriesOrder)
        throw std::invalid_argument("series_SN: N out of range");
    if (!(params.t > 0.0))
        throw std::invalid_argument("series_SN: requires t > 0");
    return complement_sum(params, N);
}

}  // namespace scanstat
