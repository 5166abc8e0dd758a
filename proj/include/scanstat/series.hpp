#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "scanstat/core.hpp"

namespace scanstat {

using BigInt = boost::multiprecision::cpp_int;

// Stirling numbers of the second kind S(i,j), 0 <= j <= i <= n_max, exact.
struct StirlingTable {
    int n_max;
    std::vector<std::vector<BigInt>> rows;  // rows[i][j]

    const BigInt& at(int i, int j) const { return rows.at(i).at(j); }
};

// S(i,j) = S(i-1,j-1) + j*S(i-1,j), S(i,1) = S(i,i) = 1, S(i,0) = [i==0].
StirlingTable stirling_table(int n_max);

// P_n(x) = sum_j c_j x^j with exact integer c_j; the Poisson(x) moment of
// (k + n - 1)^n. Leading coefficient 1; c_0 = (n-1)^n for n >= 2.
struct IntPolynomial {
    int degree;
    std::vector<BigInt> coeffs;  // c_0 .. c_degree
};

// Coefficients c_j = sum_{i=j..n} C(n,i) (n-1)^(n-i) S(i,j), exact.
IntPolynomial pn_polynomial(int n);

// P_n(x) in double precision. Horner on the exact coefficients for moderate
// x; log-magnitude accumulation for huge x where x^n overflows.
double pn_eval(int n, double x);

// ln P_n(x) for x >= 0 (P_n has nonnegative coefficients, so P_n(x) > 0).
double pn_log_eval(int n, double x);

// Partial sum of the expansion of phi in powers of s at fixed t:
// sum_{n=0..N} (-1)^n P_n(lambda t) (lambda s)^n / n!.
Estimate series_phi(const ProcessParams& params, int N);

// Complement partial sum S_N = 1 - series_phi(params, N); the identity
// holds to the last bit by construction.
double series_SN(const ProcessParams& params, int N);

// Policy cap on n: beyond this the alternating series cannot be resolved in
// doubles at any s where it converges.
inline constexpr int kMaxSeriesOrder = 30;
inline constexpr int kMaxStirlingRows = 64;

}  // namespace scanstat
