#pragma once

#include "fusion/frame.hpp"

#include <optional>

namespace fusion {

struct TMatrix;

/// Matrix of pairwise inner products <P_i, P_j>, diagonal = dim(V_i).
Matrix inner_product_table(const WeightedFrame& f);

/// p-fusion frame potential sum_{i,j} w_i w_j <P_i, P_j>^p, diagonal included.
double ffp(const WeightedFrame& f, int p);

/// m^2/d - sum_j w_j^2 dim(V_j), the quantity both simplex-type bounds are built on.
double simplex_numerator(const WeightedFrame& f);

/// Lower bound on max_{i != j} <P_i, P_j>:
/// (m^2/d - sum w_j^2 dim V_j) / sum_{i != j} w_i w_j. Throws SingleSubspace for n = 1.
double simplex_bound_rhs(const WeightedFrame& f);

/// Lower bound on ffp(f, p):
/// max(0, m^2/d - sum w_j^2 dim V_j)^p / (sum_{i != j} w_i w_j)^{p-1} + sum w_j^2 dim(V_j)^p.
/// A negative numerator is clamped to zero, leaving the diagonal sum.
double ffp_lower_bound_p(const WeightedFrame& f, int p);

enum class BoundKind { SimplexGeneral, EqualDimMinimum, MixedMatrix };

struct PotentialReport {
  int p = 1;
  double value = 0.0;
  double lower_bound = 0.0;
  BoundKind bound_kind = BoundKind::SimplexGeneral;
  double gap = 0.0;
  bool numerator_clamped = false;
};

/// ffp together with the generalized simplex lower bound.
PotentialReport potential_report(const WeightedFrame& f, int p);

struct EquiangularityReport {
  bool is_equiangular = false;
  std::optional<double> common_value;
  double spread = 0.0;             ///< max - min of off-diagonal <P_i, P_j>
  bool pairwise_distinct = false;  ///< all projector distances > 1e-8
  std::size_t gerzon_limit = 0;    ///< C(d+1, 2)
  bool gerzon_ok = false;          ///< n <= C(d+1, 2)
  /// Set when the frame has equal dims and weights and is tight at p = 1:
  /// the value k(nk - d)/((n-1)d) that an equiangular tight frame must have.
  std::optional<double> expected_common_value;
};

inline constexpr double kDefaultEquiangularTolerance = 1e-8;

EquiangularityReport equiangularity(const WeightedFrame& f,
                                    double tol = kDefaultEquiangularTolerance);

struct MixedBound {
  double value = 0.0;  ///< M T M^T
  double error = 0.0;  ///< propagated from the per-entry error estimates of T
};

/// M T_d(p) M^T with M the dimension masses of f. Throws MissingMoment when T
/// does not cover f's ambient dimension.
MixedBound ffp_lower_bound_mixed(const WeightedFrame& f, const TMatrix& t);

/// True when the p = 1 simplex bound holds with equality, i.e. the maximal
/// off-diagonal inner product equals simplex_bound_rhs within tol.
bool simplex_equality(const WeightedFrame& f, double tol = 1e-8);

}  // namespace fusion
