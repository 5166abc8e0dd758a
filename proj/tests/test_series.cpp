#include <doctest.h>

#include <cmath>

#include "scanstat/approx.hpp"
#include "scanstat/exact.hpp"
#include "scanstat/series.hpp"

using namespace scanstat;

namespace {

// the ungrouped double-sum ordering: accumulate whole Stirling rows scaled
// by C(n,i)(n-1)^{n-i}, an independent route to the same coefficients
IntPolynomial pn_polynomial_rowwise(int n) {
    const StirlingTable S = stirling_table(n);
    IntPolynomial poly;
    poly.degree = n;
    poly.coeffs.assign(static_cast<size_t>(n) + 1, BigInt(0));
    BigInt choose = 1;
    for (int i = 0; i <= n; ++i) {
        if (i > 0) choose = choose * (n - i + 1) / i;
        BigInt weight = 1;
        for (int e = 0; e < n - i; ++e) weight *= (n - 1);
        for (int j = 0; j <= i; ++j)
            poly.coeffs[static_cast<size_t>(j)] += choose * weight * S.at(i, j);
    }
    return poly;
}

// truncated Poisson-moment form sum_k e^{-x} x^k / k! * (k + n - 1)^n
double pn_poisson_sum(int n, double x) {
    if (n == 0) return 1.0;  // the weights alone
    const double cap = x + 40.0 * std::sqrt(std::max(x, 1.0)) + 60.0;
    double log_weight = -x;  // ln of e^{-x} x^k / k! at k = 0
    KahanSum acc;
    for (double k = 0.0; k <= cap; k += 1.0) {
        if (k > 0.0) log_weight += std::log(x / k);
        acc.add(std::exp(log_weight + n * std::log(k + n - 1.0)));
    }
    return acc.value();
}

}  // namespace

TEST_CASE("stirling table recursion and edges") {
    const StirlingTable S = stirling_table(8);
    CHECK(S.at(0, 0) == 1);
    CHECK(S.at(3, 0) == 0);
    CHECK(S.at(4, 2) == 7);
    for (int i = 1; i <= 8; ++i) {
        CHECK(S.at(i, 1) == 1);
        CHECK(S.at(i, i) == 1);
    }
    CHECK_THROWS_AS(stirling_table(65), std::invalid_argument);
    CHECK_THROWS_AS(stirling_table(-1), std::invalid_argument);
}

TEST_CASE("stirling row sums are Bell numbers") {
    const StirlingTable S = stirling_table(6);
    const long long bell[] = {1, 1, 2, 5, 15, 52, 203};
    for (int i = 0; i <= 6; ++i) {
        BigInt row_sum = 0;
        for (int j = 0; j <= i; ++j) row_sum += S.at(i, j);
        CHECK(row_sum == bell[i]);
    }
}

TEST_CASE("first eight polynomials match the published table") {
    const std::vector<std::vector<long long>> table = {
        {1},
        {0, 1},
        {1, 3, 1},
        {8, 19, 9, 1},
        {81, 175, 97, 18, 1},
        {1024, 2101, 1275, 305, 30, 1},
        {15625, 31031, 19981, 5590, 740, 45, 1},
        {279936, 543607, 365001, 113701, 18200, 1526, 63, 1},
    };
    for (int n = 0; n <= 7; ++n) {
        const IntPolynomial poly = pn_polynomial(n);
        REQUIRE(poly.degree == n);
        REQUIRE(poly.coeffs.size() == table[static_cast<size_t>(n)].size());
        for (int j = 0; j <= n; ++j)
            CHECK(poly.coeffs[static_cast<size_t>(j)] ==
                  table[static_cast<size_t>(n)][static_cast<size_t>(j)]);
    }
}

TEST_CASE("grouped and rowwise coefficient formulas agree exactly") {
    for (int n = 0; n <= 30; ++n) {
        const IntPolynomial a = pn_polynomial(n);
        const IntPolynomial b = pn_polynomial_rowwise(n);
        REQUIRE(a.coeffs.size() == b.coeffs.size());
        for (size_t j = 0; j < a.coeffs.size(); ++j)
            CHECK(a.coeffs[j] == b.coeffs[j]);
    }
}

TEST_CASE("coefficient patterns for n <= 30") {
    for (int n = 0; n <= 30; ++n) {
        const IntPolynomial poly = pn_polynomial(n);
        CHECK(poly.coeffs.back() == 1);  // monic
        if (n == 0) {
            CHECK(poly.coeffs[0] == 1);
        } else if (n == 1) {
            CHECK(poly.coeffs[0] == 0);
        } else {
            BigInt expect = 1;
            for (int e = 0; e < n; ++e) expect *= (n - 1);
            CHECK(poly.coeffs[0] == expect);  // (n-1)^n
        }
    }
    CHECK_THROWS_AS(pn_polynomial(31), std::invalid_argument);
}

TEST_CASE("pn_eval values") {
    CHECK(pn_eval(0, 3.7) == 1.0);
    CHECK(pn_eval(1, 7.3) == 7.3);
    CHECK(pn_eval(2, 10.0) == doctest::Approx(131.0).epsilon(1e-15));
    CHECK(pn_eval(1, 0.0) == 0.0);
    CHECK(pn_eval(3, 0.0) == 8.0);
}

TEST_CASE("pn_eval agrees with the Poisson-moment sum") {
    for (int n = 0; n <= 10; ++n)
        for (double x : {0.1, 1.0, 10.0, 100.0, 1e4}) {
            const double horner = pn_eval(n, x);
            const double poisson = pn_poisson_sum(n, x);
            CHECK(horner == doctest::Approx(poisson).epsilon(1e-10));
        }
}

TEST_CASE("pn_eval and pn_log_eval agree across the overflow switch") {
    for (int n : {3, 12, 30})
        for (double x : {0.5, 1e3, 9e5, 2e6, 1e9}) {
            const double direct = pn_eval(n, x);
            const double via_log = std::exp(pn_log_eval(n, x));
            if (std::isfinite(direct))
                CHECK(via_log == doctest::Approx(direct).epsilon(1e-12));
        }
    // far beyond double range for x^n yet finite in log form
    CHECK(std::isfinite(pn_log_eval(30, 1e300)));
    CHECK(pn_log_eval(30, 1e300) ==
          doctest::Approx(30.0 * std::log(1e300)).epsilon(1e-6));
}

TEST_CASE("series_phi basics") {
    const ProcessParams p(1.0, 0.01, 1.0);
    CHECK(series_phi(p, 0).value == 1.0);
    // N=1 term is P_1(lambda t) lambda s = lambda^2 s t
    CHECK(series_phi(p, 1).value == doctest::Approx(0.99).epsilon(1e-14));
    CHECK(series_phi(p, 1).method == Method::Series);
    CHECK_THROWS_AS(series_phi(p, 31), std::invalid_argument);
    CHECK_THROWS_AS(series_phi(ProcessParams(1.0, 1.0, 0.0), 2),
                    std::invalid_argument);
}

TEST_CASE("series complement identity is exact") {
    const ProcessParams p(1.0, 3e-3, 5.0);
    for (int N : {1, 2, 5, 11}) {
        const double sn = series_SN(p, N);
        const double phi_n = series_phi(p, N).value;
        CHECK(std::abs(sn - (1.0 - phi_n)) <= 2.3e-16);
    }
}

TEST_CASE("series approximation order in s") {
    // error at s vs s/2 shrinks by about 2^{N+1}
    const double lambda = 1.0, t = 5.0;
    for (int N : {2, 3})
        for (double s : {1e-2, 5e-3}) {
            const double err_s =
                std::abs(phi_exact(ProcessParams(lambda, s, t)).value -
                         series_phi(ProcessParams(lambda, s, t), N).value);
            const double err_half =
                std::abs(phi_exact(ProcessParams(lambda, s / 2.0, t)).value -
                         series_phi(ProcessParams(lambda, s / 2.0, t), N).value);
            const double ratio = err_s / err_half;
            CHECK(ratio >= std::pow(2.0, N));
            CHECK(ratio <= std::pow(2.0, N + 2));
        }
}

TEST_CASE("series complement row against the star approximation") {
    // lambda=1, t=1e4, s=1e-4: star minus N-th partial sum of phi
    const ProcessParams p(1.0, 1e-4, 1e4);
    const double star = phi_star(p).value;
    const double expected[] = {-1.8e-4, 2.2e-5, -2.5e-6, 2.6e-7, -2.3e-8};
    for (int N = 6; N <= 10; ++N) {
        const double gap = star - series_phi(p, N).value;
        const double want = expected[N - 6];
        CHECK(gap * want > 0.0);  // sign
        CHECK(std::abs(gap - want) <=
              0.55 * std::pow(10.0, std::floor(std::log10(std::abs(want)))));
    }
}

TEST_CASE("series S_N vanishes at tiny s") {
    // every term carries s^n, n >= 1
    const ProcessParams p(1.0, 1e-300, 2.0);
    CHECK(series_SN(p, 5) == doctest::Approx(0.0).epsilon(1e-250));
}
