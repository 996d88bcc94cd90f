#pragma once

#include "fusion/polynomial.hpp"
#include "fusion/subspace.hpp"

#include <vector>

namespace fusion {

struct FrameEntry {
  Subspace subspace;
  double weight;
};

/// A finite weighted collection {(V_j, w_j)} of nontrivial subspaces of R^d.
/// Immutable after construction; every weight is strictly positive and the
/// collection is never empty.
class WeightedFrame {
 public:
  explicit WeightedFrame(std::vector<FrameEntry> entries);

  /// Every subspace gets the same weight.
  static WeightedFrame uniform(std::vector<Subspace> subspaces, double weight = 1.0);

  int ambient_dim() const noexcept { return d_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const std::vector<FrameEntry>& entries() const noexcept { return entries_; }
  const FrameEntry& operator[](std::size_t i) const { return entries_[i]; }

  double total_weight() const;
  /// m = sum_j w_j dim(V_j).
  double weighted_dimension() const;
  /// m_k = sum over dim(V_j) = k of w_j, for k = 1..d-1 (index 0 is k = 1).
  std::vector<double> dimension_masses() const;
  /// Common dimension, or 0 when dimensions are mixed.
  int common_dim() const;

  WeightedFrame with_weights(const std::vector<double>& weights) const;
  /// Same subspaces, weights rescaled to sum to one.
  WeightedFrame normalized() const;

 private:
  int d_;
  std::vector<FrameEntry> entries_;
};

/// S = sum_j w_j P_j.
Matrix frame_operator(const WeightedFrame& f);

/// x -> (P_1 x, ..., P_n x).
std::vector<Vector> analysis(const WeightedFrame& f, const Vector& x);

/// (f_1, ..., f_n) -> sum_j w_j f_j.
Vector synthesis(const WeightedFrame& f, const std::vector<Vector>& parts);

/// S^{-1} synthesis(parts). Throws NotAFrame when the smallest eigenvalue of S
/// is <= 1e-10.
Vector reconstruct(const WeightedFrame& f, const std::vector<Vector>& parts);

/// Guard on C(d + 2p - 1, 2p) for exact polynomial expansions.
inline constexpr std::uint64_t kPowerFormMonomialLimit = 1'000'000;

/// Exact expansion of sum_j w_j (x^T P_j x)^p.
HomogeneousPoly power_form(const WeightedFrame& f, int p);

/// The only constant a tight p-fusion frame can have:
/// sum_k m_k (k/2)_p / (d/2)_p.
double tightness_constant(const WeightedFrame& f, int p);

struct TightnessCertificate {
  int p = 1;
  double target_A = 0.0;
  double residual = 0.0;  ///< max |coefficient| of power_form - A (sum x_i^2)^p
  double tolerance = 0.0;
  bool tight = false;
};

inline constexpr double kDefaultTightTolerance = 1e-9;

/// Exact certificate: two homogeneous polynomials agree on R^d iff their
/// coefficients agree, so the residual is a complete test.
TightnessCertificate certify_tight(const WeightedFrame& f, int p,
                                   double tol = kDefaultTightTolerance);

/// w_j -> w_j (p - 1 + dim(V_j)/2). Tight at p implies tight at p - 1.
WeightedFrame reweight_down(const WeightedFrame& f, int p);

/// V_j -> V_j^perp with weights kept; requires equal dimensions.
WeightedFrame complement_frame(const WeightedFrame& f);

/// Concatenation of two frames in the same ambient space.
WeightedFrame frame_union(const WeightedFrame& a, const WeightedFrame& b);

}  // namespace fusion
