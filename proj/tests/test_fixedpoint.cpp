#include <doctest.h>

#include <cmath>

#include "scanstat/exact.hpp"
#include "scanstat/fixedpoint.hpp"

using namespace scanstat;

namespace {

// independent oracle: 200-step bisection of exp(-x*b) = b on (0,1)
double bisect_B(double x) {
    double lo = 0.0, hi = 1.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (std::exp(-x * mid) - mid > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("solve_B matches bisection oracle") {
    for (double x : {0.2, 0.5, 1.0, 2.0, 10.0, 100.0}) {
        const FixedPointSolution sol = solve_B(x);
        CHECK(sol.B == doctest::Approx(bisect_B(x)).epsilon(1e-13));
        CHECK(sol.B > 0.0);
        CHECK(sol.B < 1.0);
        CHECK(std::abs(sol.residual) <= 1e-14 * std::max(1.0, x * sol.B));
    }
    // omega constant
    CHECK(solve_B(1.0).B == doctest::Approx(0.56714329040978387).epsilon(1e-14));
}

TEST_CASE("solve_B near zero window") {
    const FixedPointSolution sol = solve_B(1e-8);
    CHECK(sol.B == doctest::Approx(1.0 - 1e-8).epsilon(1e-15));
    CHECK(sol.one_minus_B == doctest::Approx(1e-8).epsilon(1e-7));
}

TEST_CASE("solve_B rejects bad input") {
    CHECK_THROWS_AS(solve_B(0.0), std::invalid_argument);
    CHECK_THROWS_AS(solve_B(-1.0), std::invalid_argument);
    CHECK_THROWS_AS(solve_B(std::numeric_limits<double>::infinity()),
                    std::invalid_argument);
}

TEST_CASE("residual and Lambert identities on a log grid") {
    // 100 points, 1e-6 .. 1e3
    for (int i = 0; i < 100; ++i) {
        const double x = std::pow(10.0, -6.0 + 9.0 * i / 99.0);
        const FixedPointSolution sol = solve_B(x);
        CHECK(std::abs(sol.residual) <= 1e-14 * std::max(1.0, x * sol.B));
        // x B e^{x B} = x, i.e. B = W(x)/x
        const double lambert = x * sol.B * std::exp(x * sol.B);
        CHECK(lambert == doctest::Approx(x).epsilon(1e-12));
    }
}

TEST_CASE("B strictly decreasing on a sampled grid") {
    double prev = 1.0;
    for (int i = 0; i < 200; ++i) {
        const double x = std::pow(10.0, -4.0 + 7.0 * i / 199.0);
        const double b = solve_B(x).B;
        CHECK(b < prev);
        prev = b;
    }
}

TEST_CASE("solve_B is deterministic") {
    for (double x : {0.37, 5.5, 250.0}) {
        const FixedPointSolution a = solve_B(x);
        const FixedPointSolution b = solve_B(x);
        CHECK(a.B == b.B);
        CHECK(a.residual == b.residual);
        CHECK(a.iterations == b.iterations);
    }
}

TEST_CASE("A_of values and limits") {
    CHECK(A_of(1e-9) == doctest::Approx(1.0).epsilon(1e-8));
    // from the bisection oracle: A = 1/(B(1+B)) at x=1
    const double b1 = bisect_B(1.0);
    CHECK(A_of(1.0) == doctest::Approx(1.0 / (b1 * (1.0 + b1))).epsilon(1e-13));
    CHECK(A_of(1.0) == doctest::Approx(1.1251190909867859).epsilon(1e-13));
    // coarse sanity band for the large-x end of the plotted range
    CHECK(A_of(100.0) > 6.3);
    CHECK(A_of(100.0) < 7.4);
}

TEST_CASE("A_of grows on a sampled grid and stays >= 1") {
    double prev = 0.0;
    for (int i = 0; i < 200; ++i) {
        const double x = std::pow(10.0, -3.0 + 6.0 * i / 199.0);
        const double a = A_of(x);
        CHECK(a >= 1.0);
        CHECK(a > prev);
        prev = a;
    }
}

TEST_CASE("A_xr approaches A_of as r grows") {
    for (double x : {0.25, 1.0, 5.0}) {
        const double ax = A_of(x);
        const double d10 = std::abs(A_xr(ReducedParams{x, 10.0, 10.0 * x}) - ax);
        const double d25 = std::abs(A_xr(ReducedParams{x, 25.0, 25.0 * x}) - ax);
        const double d50 = std::abs(A_xr(ReducedParams{x, 50.0, 50.0 * x}) - ax);
        if (d10 > 1e-13 && d25 > 1e-13 && d50 > 1e-13) {
            CHECK(d50 < d25);
            CHECK(d25 < d10);
        }
    }
}

TEST_CASE("A_xr reproduces the resolvable tabulated differences") {
    // r = 10 column, one significant printed figure
    const double d100 = A_xr(ReducedParams{100.0, 10.0, 1000.0}) - A_of(100.0);
    CHECK(d100 > 0.0);
    CHECK(std::abs(d100 - 2e-2) <= 0.5e-2);
    const double d50 = A_xr(ReducedParams{50.0, 10.0, 500.0}) - A_of(50.0);
    CHECK(d50 > 0.0);
    CHECK(std::abs(d50 - 1e-3) <= 0.5e-3);
    const double d25 = A_xr(ReducedParams{25.0, 10.0, 250.0}) - A_of(25.0);
    CHECK(d25 < 0.0);
    CHECK(std::abs(d25 - (-5e-4)) <= 0.5e-4);
}

TEST_CASE("u_c values and scaling") {
    CHECK(u_c(ProcessParams(1.0, 1.0, 1.0)) ==
          doctest::Approx(-(1.0 - bisect_B(1.0))).epsilon(1e-13));
    CHECK(u_c(ProcessParams(1.0, 1e-9, 1.0)) < 0.0);
    CHECK(u_c(ProcessParams(1.0, 1e-9, 1.0)) > -1e-8);
    // u_c(lambda, s) = lambda * u_c(1, lambda*s)
    const double lambda = 3.7, s = 0.21;
    CHECK(u_c(ProcessParams(lambda, s, 1.0)) ==
          doctest::Approx(lambda * u_c(ProcessParams(1.0, lambda * s, 1.0)))
              .epsilon(1e-15));
}

TEST_CASE("p_gates_westcott solves p e^{s p} = lambda") {
    for (auto [lambda, s] : {std::pair{1.0, 1.0}, {0.2, 1.0}, {5.0, 0.3}}) {
        const double p = p_gates_westcott(lambda, s);
        CHECK(std::abs(p * std::exp(s * p) - lambda) <= 1e-12 * lambda);
    }
    CHECK(p_gates_westcott(1.0, 1.0) ==
          doctest::Approx(bisect_B(1.0)).epsilon(1e-13));
    // s -> 0 gives p -> lambda
    CHECK(p_gates_westcott(2.0, 1e-12) == doctest::Approx(2.0).epsilon(1e-9));
}
