#pragma once

#include <vector>

namespace fusion {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  template <class F>
  double integrate(F&& f) const {
    double s = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) s += weights[i] * f(nodes[i]);
    return s;
  }
};

/// n-point Gauss-Jacobi rule on [-1, 1] for the weight (1-x)^alpha (1+x)^beta,
/// alpha, beta > -1 (Golub-Welsch). Exact for polynomials of degree <= 2n - 1.
QuadratureRule gauss_jacobi(int n, double alpha, double beta);

/// n-point rule on [0, 1] for the weight y^a (1-y)^b; weights sum to B(a+1, b+1).
QuadratureRule gauss_jacobi_unit(int n, double a, double b);

/// n-point Gauss-Legendre rule on [lo, hi].
QuadratureRule gauss_legendre(int n, double lo = -1.0, double hi = 1.0);

}  // namespace fusion
