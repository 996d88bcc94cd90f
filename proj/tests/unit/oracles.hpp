#pragma once

// Independent reference computations used as test oracles. Nothing here
// calls into the library code it is meant to check.

#include "fusion/frame.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

using fusion::Matrix;
using fusion::Rng;
using fusion::Vector;

inline Vector unit2(double theta) {
  Vector v(2);
  v << std::cos(theta), std::sin(theta);
  return v;
}

inline Matrix gaussian(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m(i, j) = n(rng);
  }
  return m;
}

inline Vector sphere_point(int d, Rng& rng) {
  Vector v = gaussian(d, 1, rng).col(0);
  return v / v.norm();
}

/// Random orthogonal matrix from the Q of a Gaussian matrix (not sign-fixed; fine for invariance checks).
inline Matrix random_orthogonal(int d, Rng& rng) {
  Eigen::HouseholderQR<Matrix> qr(gaussian(d, d, rng));
  return qr.householderQ() * Matrix::Identity(d, d);
}

/// sum_j w_j ||P_j x||^{2p} evaluated directly from the bases.
inline double power_sum(const fusion::WeightedFrame& f, int p, const Vector& x) {
  double s = 0.0;
  for (const auto& e : f.entries()) s += e.weight * std::pow((e.subspace.basis().transpose() * x).squaredNorm(), p);
  return s;
}

/// Empirical (min, max) of power_sum over random unit vectors.
inline std::pair<double, double> sampled_extrema(const fusion::WeightedFrame& f, int p, int samples, Rng& rng) {
  double lo = 1e300;
  double hi = -1e300;
  for (int i = 0; i < samples; ++i) {
    const double v = power_sum(f, p, sphere_point(f.ambient_dim(), rng));
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return {lo, hi};
}

/// Mean of g over the unit circle by the trapezoid rule (exact for trigonometric polynomials of degree < n).
inline double circle_mean(const std::function<double(double)>& g, int n = 256) {
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += g(2.0 * std::numbers::pi * i / n);
  return s / n;
}

inline double gen_binomial(double top, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= (top - i) / (i + 1);
  return r;
}

/// Classical Jacobi polynomial P_n^{(alpha, beta)}(x) by its explicit finite sum.
inline double jacobi_p(int n, double alpha, double beta, double x) {
  double s = 0.0;
  for (int j = 0; j <= n; ++j) {
    s += gen_binomial(n + alpha, n - j) * gen_binomial(n + beta, j) * std::pow((x - 1.0) / 2.0, j) *
         std::pow((x + 1.0) / 2.0, n - j);
  }
  return s;
}

/// Zonal polynomial for a line against a k-plane in R^d, normalized to 1 at y = 1:
/// the Jacobi polynomial for (1-x)^{(d-2-k)/2} (1+x)^{(k-2)/2} at x = 2y - 1.
inline double zonal(int l, int k, int d, double y) {
  const double alpha = (d - 2 - k) / 2.0;
  const double beta = (k - 2) / 2.0;
  return jacobi_p(l, alpha, beta, 2.0 * y - 1.0) / jacobi_p(l, alpha, beta, 1.0);
}

/// Dimension of the degree-m invariants of a finite matrix group by averaging
/// h_m(eigenvalues of g), with h_m obtained from the power sums trace(g^j)
/// through Newton's identities.
inline double molien_invariant_dim(const std::vector<Matrix>& elements, int m) {
  double total = 0.0;
  for (const auto& g : elements) {
    std::vector<double> power(static_cast<std::size_t>(m) + 1, 0.0);
    Matrix gj = Matrix::Identity(g.rows(), g.cols());
    for (int j = 1; j <= m; ++j) {
      gj = gj * g;
      power[static_cast<std::size_t>(j)] = gj.trace();
    }
    std::vector<double> h(static_cast<std::size_t>(m) + 1, 0.0);
    h[0] = 1.0;
    for (int q = 1; q <= m; ++q) {
      double s = 0.0;
      for (int j = 1; j <= q; ++j) s += power[static_cast<std::size_t>(j)] * h[static_cast<std::size_t>(q - j)];
      h[static_cast<std::size_t>(q)] = s / q;
    }
    total += h[static_cast<std::size_t>(m)];
  }
  return total / static_cast<double>(elements.size());
}

/// Random frame generator: n in [2, max_n], dimensions in [1, d-1] (or fixed k), weights in [0.2, 3].
inline fusion::WeightedFrame random_frame(int d, Rng& rng, int max_n = 6, int k = 0) {
  std::uniform_int_distribution<int> count(2, max_n);
  std::uniform_int_distribution<int> dim(1, d - 1);
  std::uniform_real_distribution<double> weight(0.2, 3.0);
  const int n = count(rng);
  std::vector<fusion::FrameEntry> entries;
  for (int i = 0; i < n; ++i) {
    const int kk = k > 0 ? k : dim(rng);
    entries.push_back({fusion::make_subspace(gaussian(d, kk, rng)), weight(rng)});
  }
  return fusion::WeightedFrame(std::move(entries));
}

}  // namespace oracle
