#pragma once

#include "fusion/frame.hpp"
#include "fusion/jacobi.hpp"

#include <cstdint>
#include <limits>
#include <string_view>
#include <vector>

namespace fusion {

enum class MomentMethod { Auto, ClosedForm, Quadrature, MonteCarlo };

std::string_view to_string(MomentMethod m) noexcept;

/// One Grassmannian moment T_{k,l,d}(p) = E[<P_V, P_W>^p] for independent
/// uniformly distributed V in G(k,d), W in G(l,d).
struct MomentEstimate {
  double value = std::numeric_limits<double>::quiet_NaN();
  double error = 0.0;  ///< 0 for closed forms, node-doubling difference, or MC standard error
  MomentMethod method = MomentMethod::Auto;
};

struct MomentOptions {
  MomentMethod method = MomentMethod::Auto;
  std::size_t mc_samples = 100'000;
  int threads = 1;             ///< Monte-Carlo worker threads; 0 = hardware concurrency
  int quadrature_nodes = 40;
};

/// (k/2)_p / (d/2)_p, the moment against a line.
double t_one(int k, int d, int p);

/// Method ladder under Auto: closed form (p = 1 or a line involved), then
/// quadrature over the principal-angle density (smaller dimension <= 2 after
/// complement reduction), else Monte-Carlo.
MomentEstimate t_moment(int k, int l, int d, int p, const MomentOptions& opts, Rng& rng);

/// E[<P_V, P_W>^j] for j = 0..p by quadrature. Throws UnsupportedQuadratureDim
/// when the reduced smaller dimension is >= 3.
std::vector<MomentEstimate> t_moments_quadrature(int k, int l, int d, int p, int nodes = 40);

/// Monte-Carlo mean and standard error of <P_V, P_W>^p. Sampling is split into
/// a fixed number of chunks seeded in order from rng, so results do not depend
/// on the thread count.
MomentEstimate t_moment_monte_carlo(int k, int l, int d, int p, std::size_t samples, Rng& rng,
                                    int threads = 1);

/// The (d-1) x (d-1) table (T_{k,l,d}(p))_{k,l}.
struct TMatrix {
  int d = 0;
  int p = 0;
  std::vector<MomentEstimate> entries;  ///< row-major, index (k-1)(d-1) + (l-1)

  const MomentEstimate& at(int k, int l) const;
  MomentEstimate& at(int k, int l);
};

TMatrix t_matrix(int d, int p, const MomentOptions& opts, Rng& rng);

/// Per-degree residuals l = 1..p: max over probe directions x of
/// |sum_j w_j P_l(<P_x, P_{V_j}>)| with weights normalized to sum 1.
/// All vanish when the frame is tight at p.
std::vector<double> design_diagnostic(const WeightedFrame& f, int p, int n_probes, Rng& rng);

enum class CubatureVerdict { Cubature, NotCubature, Inconclusive };

std::string_view to_string(CubatureVerdict v) noexcept;

struct CubatureCertificate {
  int p = 1;
  double ffp_value = 0.0;  ///< with weights normalized to sum 1
  double t_value = 0.0;
  double t_error = 0.0;
  MomentMethod t_method = MomentMethod::Auto;
  double margin = 0.0;     ///< ffp_value - t_value
  double tolerance = 0.0;
  CubatureVerdict verdict = CubatureVerdict::NotCubature;
  /// max - min of sum_j w_j <P_W, P_{V_j}>^p over random W in G(k,d); zero for a cubature.
  double probe_spread = 0.0;
};

/// A frame of equal-dimension subspaces with weights summing to one is a
/// cubature of strength 2p iff its p-potential equals T_{k,d}(p).
CubatureCertificate certify_cubature(const WeightedFrame& f, int p, double tol, Rng& rng,
                                     const MomentOptions& opts = {}, int probes = 1000);

struct SizeBounds {
  std::uint64_t tight_p_existence_bound = 0;  ///< C(2p+d-1, d-1) - 1
  std::vector<std::uint64_t> harmonic_dims;   ///< l = 1..p: C(d+2l-1, d-1) - C(d+2l-3, d-1)
  std::uint64_t max_equiangular = 0;          ///< C(d+1, 2)
};

SizeBounds size_bounds(int d, int p);

}  // namespace fusion
