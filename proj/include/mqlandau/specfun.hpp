#pragma once

namespace mqlandau::specfun {

/// Arguments of Kummer's function M(a, b, x).
struct HypergeometricParams {
  double a = 0.0;
  double b = 1.0;  // not a non-positive integer
  double x = 0.0;  // >= 0
};

/// ln Gamma(x) for x > 0.  Relative error below 1e-12 away from the zeros at
/// x = 1 and x = 2, absolute error below 1e-14 near them.  Throws DomainError
/// for x <= 0.
[[nodiscard]] double log_gamma(double x);

/// Kummer's function M(a, b, x) = sum_k (a)_k x^k / ((b)_k k!).
///
/// Forward summation.  For a = -n the series terminates exactly after n + 1
/// terms.  Otherwise summation stops once the terms are decreasing and three
/// consecutive terms fall below 1e-15 of the partial sum; throws
/// ConvergenceError after 500 terms and DomainError for invalid b or x < 0.
[[nodiscard]] double confluent_m(const HypergeometricParams& p);

/// Exact (n + 1)-term sum of M(-n, b, x).
[[nodiscard]] double confluent_m_polynomial(int n, double b, double x);

/// Associated Laguerre polynomial L_n^alpha(x) via the three-term recurrence.
[[nodiscard]] double laguerre(int n, double alpha, double x);

}  // namespace mqlandau::specfun
