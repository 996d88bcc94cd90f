#include "fusion/quadrature.hpp"

#include "fusion/error.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace fusion {

QuadratureRule gauss_jacobi(int n, double alpha, double beta) {
  if (n < 1) throw Error(Errc::ParameterError, "quadrature needs at least one node");
  if (!(alpha > -1.0) || !(beta > -1.0)) {
    throw Error(Errc::ParameterError, "Jacobi exponents must exceed -1");
  }
  const double ab = alpha + beta;
  Eigen::VectorXd diag(n);
  Eigen::VectorXd off(n > 1 ? n - 1 : 0);

  // Monic Jacobi recurrence: x p_j = p_{j+1} + a_j p_j + b_j p_{j-1}.
  for (int j = 0; j < n; ++j) {
    const double s = 2.0 * j + ab;
    if (j == 0) {
      diag(j) = (beta - alpha) / (ab + 2.0);
    } else {
      diag(j) = (beta * beta - alpha * alpha) / (s * (s + 2.0));
    }
  }
  for (int j = 1; j < n; ++j) {
    const double s = 2.0 * j + ab;
    double bj;
    if (j == 1) {
      // (1 + alpha + beta) cancels; keeps alpha + beta = -1 well defined.
      bj = 4.0 * (1.0 + alpha) * (1.0 + beta) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
    } else {
      bj = 4.0 * j * (j + alpha) * (j + beta) * (j + ab) / (s * s * (s + 1.0) * (s - 1.0));
    }
    off(j - 1) = std::sqrt(bj);
  }

  Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(n, n);
  jac.diagonal() = diag;
  if (n > 1) {
    jac.diagonal(1) = off;
    jac.diagonal(-1) = off;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(jac);
  const double mu0 = std::exp((ab + 1.0) * std::log(2.0) + std::lgamma(alpha + 1.0) +
                              std::lgamma(beta + 1.0) - std::lgamma(ab + 2.0));
  QuadratureRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double v0 = eig.eigenvectors()(0, i);
    rule.nodes[static_cast<std::size_t>(i)] = eig.eigenvalues()(i);
    rule.weights[static_cast<std::size_t>(i)] = mu0 * v0 * v0;
  }
  return rule;
}

QuadratureRule gauss_jacobi_unit(int n, double a, double b) {
  // y = (1 + x)/2: (1-x)^alpha <-> (1-y)^b, (1+x)^beta <-> y^a.
  QuadratureRule rule = gauss_jacobi(n, b, a);
  const double scale = std::pow(2.0, -(a + b + 1.0));
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    rule.nodes[i] = 0.5 * (1.0 + rule.nodes[i]);
    rule.weights[i] *= scale;
  }
  return rule;
}

QuadratureRule gauss_legendre(int n, double lo, double hi) {
  QuadratureRule rule = gauss_jacobi(n, 0.0, 0.0);
  const double half = 0.5 * (hi - lo);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    rule.nodes[i] = lo + half * (rule.nodes[i] + 1.0);
    rule.weights[i] *= half;
  }
  return rule;
}

}  // namespace fusion
