#pragma once

#include <vector>

namespace fusion {

/// Three-term relation y P_l = a P_{l+1} + b P_l + c P_{l-1}.
struct Recurrence {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;  ///< zero for l = 0
};

/// Univariate zonal polynomials P_l(y), l = 0..p_max, orthogonal on [0, 1] for
/// y^{(k-2)/2} (1-y)^{(d-2-k)/2} dy and normalized by P_l(1) = 1. This is the
/// law of <P_x, P_V> for a uniform line R x against a fixed k-plane V in R^d.
struct JacobiFamily {
  int k = 1;
  int d = 2;
  std::vector<std::vector<double>> polys;  ///< ascending monomial coefficients
  std::vector<Recurrence> recurrence;      ///< entries l = 0..p_max-1

  double weight_exponent_zero() const { return (k - 2) / 2.0; }
  double weight_exponent_one() const { return (d - 2 - k) / 2.0; }
  int p_max() const { return static_cast<int>(polys.size()) - 1; }

  double evaluate(int l, double y) const;
};

inline constexpr int kJacobiMaxDegree = 10;

/// Gram-Schmidt on 1, y, y^2, ... with exact Beta-function moments of the
/// weight, then rescaled so P_l(1) = 1. Throws ParameterError when a weight
/// exponent is <= -1 or p_max is outside [0, 10].
JacobiFamily jacobi_family(int k, int d, int p_max);

/// Normalized moments E[y^m], m = 0..count-1, of the Beta(a+1, b+1) law.
std::vector<long double> beta_moments(double a, double b, int count);

}  // namespace fusion
