#include "fusion/subspace.hpp"

#include "fusion/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace fusion {

namespace {

void require_nontrivial(int d, int k) {
  if (k < 1 || k > d - 1) {
    throw Error(Errc::DimensionError, "subspace dimension " + std::to_string(k) +
                                          " outside [1, " + std::to_string(d - 1) + "]");
  }
}

void require_same_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw Error(Errc::DimensionError, "ambient dimensions differ: " +
                                          std::to_string(a.ambient_dim()) + " vs " +
                                          std::to_string(b.ambient_dim()));
  }
}

}  // namespace

double PrincipalAngleProfile::sum() const noexcept {
  return std::accumulate(y.begin(), y.end(), 0.0);
}

Subspace Subspace::from_orthonormal(Matrix basis) {
  const int d = static_cast<int>(basis.rows());
  const int k = static_cast<int>(basis.cols());
  require_nontrivial(d, k);
  const Matrix gram = basis.transpose() * basis - Matrix::Identity(k, k);
  if (gram.cwiseAbs().maxCoeff() > 1e-12) {
    throw Error(Errc::RankDeficient, "basis columns are not orthonormal");
  }
  return Subspace(std::move(basis));
}

Matrix orthonormalize(const Matrix& raw) {
  const Eigen::Index d = raw.rows();
  const Eigen::Index k = raw.cols();
  Eigen::HouseholderQR<Matrix> qr(raw);
  Matrix q = qr.householderQ() * Matrix::Identity(d, k);
  const Matrix& r = qr.matrixQR();
  for (Eigen::Index j = 0; j < k; ++j) {
    if (r(j, j) < 0.0) q.col(j) *= -1.0;
  }
  return q;
}

Subspace make_subspace(const Matrix& raw) {
  const int d = static_cast<int>(raw.rows());
  const int k = static_cast<int>(raw.cols());
  require_nontrivial(d, k);
  Eigen::JacobiSVD<Matrix> svd(raw);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(sv.size() - 1) <= 1e-10) {
    throw Error(Errc::RankDeficient, "input columns are (numerically) linearly dependent");
  }
  return Subspace(orthonormalize(raw));
}

Matrix projector(const Subspace& s) { return s.basis() * s.basis().transpose(); }

double hs_inner(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  return (a.basis().transpose() * b.basis()).squaredNorm();
}

PrincipalAngleProfile principal_angles(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  const Matrix cross = a.basis().transpose() * b.basis();
  Eigen::JacobiSVD<Matrix> svd(cross);
  const auto& sv = svd.singularValues();  // already descending
  PrincipalAngleProfile out;
  out.y.reserve(static_cast<std::size_t>(sv.size()));
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    out.y.push_back(std::clamp(sv(i) * sv(i), 0.0, 1.0));
  }
  return out;
}

double chordal_distance_sq(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  if (a.dim() != b.dim()) {
    throw Error(Errc::DimensionError, "chordal distance needs equal subspace dimensions");
  }
  return std::max(0.0, a.dim() - hs_inner(a, b));
}

Subspace haar_random(int d, int k, Rng& rng) {
  require_nontrivial(d, k);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix g(d, k);
  for (int j = 0; j < k; ++j) {
    for (int i = 0; i < d; ++i) g(i, j) = gauss(rng);
  }
  return Subspace::from_orthonormal(orthonormalize(g));
}

Vector random_unit_vector(int d, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector v(d);
  do {
    for (int i = 0; i < d; ++i) v(i) = gauss(rng);
  } while (v.norm() < 1e-12);
  return v.normalized();
}

Subspace complement(const Subspace& s) {
  const int d = s.ambient_dim();
  const int k = s.dim();
  Eigen::HouseholderQR<Matrix> qr(s.basis());
  const Matrix full = qr.householderQ() * Matrix::Identity(d, d);
  return Subspace::from_orthonormal(full.rightCols(d - k));
}

bool same_subspace(const Subspace& a, const Subspace& b, double tol) {
  if (a.ambient_dim() != b.ambient_dim() || a.dim() != b.dim()) return false;
  return (projector(a) - projector(b)).cwiseAbs().maxCoeff() <= tol;
}

Subspace line_at_angle(double radians) {
  Matrix b(2, 1);
  b << std::cos(radians), std::sin(radians);
  return make_subspace(b);
}

Subspace coordinate_subspace(int d, const std::vector<int>& axes) {
  Matrix b = Matrix::Zero(d, static_cast<Eigen::Index>(axes.size()));
  for (std::size_t j = 0; j < axes.size(); ++j) {
    if (axes[j] < 0 || axes[j] >= d) {
      throw Error(Errc::DimensionError, "coordinate axis out of range");
    }
    b(axes[j], static_cast<Eigen::Index>(j)) = 1.0;
  }
  return make_subspace(b);
}

}  // namespace fusion
