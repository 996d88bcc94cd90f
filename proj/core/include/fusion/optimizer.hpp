#pragma once

#include "fusion/frame.hpp"
#include "fusion/moments.hpp"

#include <utility>
#include <vector>

namespace fusion {

struct OptimizerConfig {
  int n = 3;
  int k = 1;
  int d = 2;
  int p = 2;
  int restarts = 16;
  int max_iters = 5000;
  double step = 0.1;             ///< initial step of the backtracking search
  double tol_grad = 1e-10;       ///< stop once the horizontal gradient norm falls below this
  double target_margin = 1e-5;   ///< success iff FFP <= T_{k,k,d}(p) (1 + target_margin)
  double armijo_factor = 0.5;
  int threads = 1;               ///< restarts run in parallel; 0 = hardware concurrency
  MomentOptions moments{};       ///< how T_{k,k,d}(p) is obtained
};

/// Throws ParameterError unless every field is positive and 1 <= k <= d - 1.
void validate(const OptimizerConfig& cfg);

struct OptimizerTrace {
  std::vector<double> ffp;           ///< best restart: initial value, then one per accepted step
  WeightedFrame frame;               ///< best restart, weights 1/n
  double final_ffp = 0.0;
  double t_value = 0.0;
  double t_error = 0.0;
  double margin = 0.0;               ///< final_ffp / t_value - 1
  bool success = false;
  int best_restart = 0;
  std::vector<double> restart_ffp;   ///< final value of every restart
  double grad_norm = 0.0;            ///< of the reported frame
};

/// Horizontal Euclidean gradient of sum_{i,j} w_i w_j tr(Y_i^T P_j Y_i)^p with
/// respect to each basis Y_i. Throws MixedDimensions.
std::vector<Matrix> ffp_gradient(const WeightedFrame& f, int p);

/// Best-of-restarts gradient descent on the product of Grassmannians with QR
/// retraction and Armijo backtracking. Failing to reach the moment bound is a
/// reported outcome, not an error.
OptimizerTrace minimize_ffp(const OptimizerConfig& cfg, Rng& rng);

/// Estimates of min and max over the unit sphere of sum_j w_j (x^T P_j x)^p,
/// the optimal frame bounds (A, B).
std::pair<double, double> sphere_extrema(const WeightedFrame& f, int p, int restarts, Rng& rng);

}  // namespace fusion
