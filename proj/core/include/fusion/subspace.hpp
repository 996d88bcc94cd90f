#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <vector>

namespace fusion {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// All randomness flows through an explicit engine owned by the caller.
using Rng = std::mt19937_64;

/// A nontrivial linear subspace of R^d, held as a d x k matrix with
/// orthonormal columns. Two Subspace values may span the same space with
/// different bases; compare them with same_subspace().
class Subspace;
Subspace make_subspace(const Matrix& raw);

class Subspace {
 public:
  /// Wraps a basis that is already orthonormal (checked to 1e-12).
  /// Use make_subspace() for arbitrary spanning sets.
  static Subspace from_orthonormal(Matrix basis);

  int ambient_dim() const noexcept { return static_cast<int>(basis_.rows()); }
  int dim() const noexcept { return static_cast<int>(basis_.cols()); }
  const Matrix& basis() const noexcept { return basis_; }

 private:
  friend Subspace make_subspace(const Matrix& raw);
  explicit Subspace(Matrix basis) : basis_(std::move(basis)) {}
  Matrix basis_;
};

/// Squared cosines of the principal angles, descending, clamped to [0, 1].
struct PrincipalAngleProfile {
  std::vector<double> y;
  double sum() const noexcept;
};

/// Orthonormalizes the columns of raw (full column rank required, smallest
/// singular value > 1e-10). The triangular factor is sign-fixed to a positive
/// diagonal, so an already orthonormal input comes back unchanged.
Subspace make_subspace(const Matrix& raw);

/// Q factor of a thin QR decomposition with diag(R) > 0.
Matrix orthonormalize(const Matrix& raw);

Matrix projector(const Subspace& s);

/// trace(P1 P2) = ||B1^T B2||_F^2.
double hs_inner(const Subspace& a, const Subspace& b);

PrincipalAngleProfile principal_angles(const Subspace& a, const Subspace& b);

/// k - <P1, P2>; both subspaces must have the same dimension k.
double chordal_distance_sq(const Subspace& a, const Subspace& b);

/// Haar-distributed k-dimensional subspace of R^d.
Subspace haar_random(int d, int k, Rng& rng);

/// Uniform point on the unit sphere S^{d-1}.
Vector random_unit_vector(int d, Rng& rng);

Subspace complement(const Subspace& s);

/// Projector comparison: ||P1 - P2||_max <= tol.
bool same_subspace(const Subspace& a, const Subspace& b, double tol = 1e-8);

/// Line through the origin in R^2 at the given angle (radians).
Subspace line_at_angle(double radians);

/// Span of the listed standard basis vectors e_i (0-based) in R^d.
Subspace coordinate_subspace(int d, const std::vector<int>& axes);

}  // namespace fusion
