#pragma once

#include "fusion/frame.hpp"
#include "fusion/polynomial.hpp"

#include <complex>
#include <string>
#include <vector>

namespace fusion {

/// A finite subgroup of O(R^d), stored as its full element list.
struct MatrixGroup {
  int d = 0;
  std::vector<Matrix> elements;    ///< element 0 is the identity
  std::vector<Matrix> generators;

  std::size_t order() const noexcept { return elements.size(); }
};

/// Breadth-first closure of the generators under multiplication. Elements are
/// identified when they agree to 1e-8 in max-norm. Throws NotOrthogonal for a
/// generator with ||G^T G - I||_max > 1e-10 and GroupTooLarge past max_order.
MatrixGroup close_group(const std::vector<Matrix>& generators, std::size_t max_order = 100'000);

/// Guard on C(d + 2p - 1, 2p) for the Reynolds operator.
inline constexpr std::uint64_t kReynoldsMonomialLimit = 100'000;

struct InvarianceReport {
  int p = 1;
  int invariant_dim = 0;  ///< rank of the Reynolds operator on degree-2p forms
  double trace = 0.0;     ///< trace of the Reynolds operator (equals the rank)
  bool passes = false;    ///< invariant_dim == 1
};

/// Matrix of f -> f(X g) on the monomial basis of degree `degree`
/// (column j holds the image of monomial j).
Matrix monomial_action(const Matrix& g, int degree);

/// Reynolds operator (1/|G|) sum_g (action of g) on degree-2p forms.
Matrix reynolds_operator(const MatrixGroup& group, int p);

/// Checks whether the only degree-2p invariants of G are multiples of
/// (x_1^2 + ... + x_d^2)^p, in which case every orbit is a tight p-fusion frame.
InvarianceReport invariance_check(const MatrixGroup& group, int p);

/// {g(V) : g in G} with duplicates removed (projector distance 1e-8), weights 1.
WeightedFrame orbit_frame(const MatrixGroup& group, const Subspace& seed);

/// Fits inner (a frame in R^l) into every l-dimensional subspace of outer:
/// entry (i, j) has basis B_i C_j and weight w_i v_j.
WeightedFrame extend(const WeightedFrame& inner, const WeightedFrame& outer);

/// Unit vectors in C^d.
struct ComplexLineSet {
  int d_complex = 0;
  std::vector<std::vector<std::complex<double>>> vectors;

  /// Validates unit hermitian norms (1e-12).
  static ComplexLineSet from_vectors(std::vector<std::vector<std::complex<double>>> vectors);
};

/// Standard identification C^d -> R^{2d}: (z_1, ..., z_d) -> (Re z_1, Im z_1, Re z_2, ...).
Vector realify_vector(const std::vector<std::complex<double>>& z);

/// Each complex line C z becomes the real 2-plane spanned by realify(z) and
/// realify(i z); weights 1.
WeightedFrame realify(const ComplexLineSet& lines);

/// The six vectors |0>, |1>, |+->, |+-i> of three mutually unbiased bases of C^2.
ComplexLineSet mub_c2();

struct CatalogEntry {
  WeightedFrame frame;
  int tight_order = 1;        ///< certified tight for every p <= tight_order
  bool fails_above = true;    ///< documented to fail certification at tight_order + 1
  std::string description;
};

/// Built-in frames: "mercedes", "equispaced-lines(n)", "mub-planes-r4",
/// "cross-polytope-lines(d)", "weyl-a2-orbit(deg)" (seed line at deg degrees).
CatalogEntry catalog_entry(const std::string& name);
WeightedFrame catalog(const std::string& name);

/// Names usable in tests and sweeps, one per family member.
std::vector<std::string> catalog_names();

/// Generators of the Weyl group of A2 acting on R^2: reflections in lines at 0 and 60 degrees
/// (dihedral of order 6).
std::vector<Matrix> weyl_a2_generators();

/// Generators of the Weyl group of D4 (order 192): reflections in e1-e2, e2-e3, e3-e4, e3+e4.
std::vector<Matrix> weyl_d4_generators();

/// Generators of the Weyl group of F4 (order 1152), the full symmetry group of
/// the D4 root system: reflections in e2-e3, e3-e4, e4, (e1-e2-e3-e4)/2.
std::vector<Matrix> weyl_f4_generators();

/// Signed permutations of R^d (hyperoctahedral group B_d, order 2^d d!).
std::vector<Matrix> hyperoctahedral_generators(int d);

/// Reflection matrix I - 2 n n^T / |n|^2.
Matrix reflection(const Vector& normal);

/// Rotation of R^2 by the given angle.
Matrix rotation2(double radians);

}  // namespace fusion
