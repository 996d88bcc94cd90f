#include "fusion/potential.hpp"

#include "fusion/combinatorics.hpp"
#include "fusion/error.hpp"
#include "fusion/moments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fusion {

Matrix inner_product_table(const WeightedFrame& f) {
  const auto n = static_cast<Eigen::Index>(f.size());
  Matrix g(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    g(i, i) = f[static_cast<std::size_t>(i)].subspace.dim();
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double v = hs_inner(f[static_cast<std::size_t>(i)].subspace, f[static_cast<std::size_t>(j)].subspace);
      g(i, j) = v;
      g(j, i) = v;
    }
  }
  return g;
}

double ffp(const WeightedFrame& f, int p) {
  if (p < 1) throw Error(Errc::ParameterError, "p must be >= 1");
  const Matrix g = inner_product_table(f);
  double total = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = 0; j < f.size(); ++j) {
      total += f[i].weight * f[j].weight *
               std::pow(g(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)), p);
    }
  }
  return total;
}

namespace {

struct SimplexTerms {
  double numerator = 0.0;      // m^2/d - sum w^2 dim
  double off_diag_mass = 0.0;  // sum_{i != j} w_i w_j
};

SimplexTerms simplex_terms(const WeightedFrame& f) {
  const double m = f.weighted_dimension();
  double sq = 0.0;
  double w_sum = 0.0;
  double w_sq = 0.0;
  for (const auto& e : f.entries()) {
    sq += e.weight * e.weight * e.subspace.dim();
    w_sum += e.weight;
    w_sq += e.weight * e.weight;
  }
  return {m * m / f.ambient_dim() - sq, w_sum * w_sum - w_sq};
}

}  // namespace

double simplex_numerator(const WeightedFrame& f) { return simplex_terms(f).numerator; }

double simplex_bound_rhs(const WeightedFrame& f) {
  if (f.size() < 2) throw Error(Errc::SingleSubspace, "simplex bound needs at least two subspaces");
  const SimplexTerms t = simplex_terms(f);
  return t.numerator / t.off_diag_mass;
}

double ffp_lower_bound_p(const WeightedFrame& f, int p) {
  if (p < 1) throw Error(Errc::ParameterError, "p must be >= 1");
  double diagonal = 0.0;
  for (const auto& e : f.entries()) diagonal += e.weight * e.weight * std::pow(e.subspace.dim(), p);
  if (f.size() < 2) return diagonal;
  const SimplexTerms t = simplex_terms(f);
  const double num = std::max(0.0, t.numerator);
  return std::pow(num, p) / std::pow(t.off_diag_mass, p - 1) + diagonal;
}

PotentialReport potential_report(const WeightedFrame& f, int p) {
  PotentialReport r;
  r.p = p;
  r.value = ffp(f, p);
  r.lower_bound = ffp_lower_bound_p(f, p);
  r.bound_kind = BoundKind::SimplexGeneral;
  r.gap = r.value - r.lower_bound;
  r.numerator_clamped = f.size() >= 2 && simplex_numerator(f) < 0.0;
  return r;
}

EquiangularityReport equiangularity(const WeightedFrame& f, double tol) {
  EquiangularityReport r;
  const std::size_t n = f.size();
  const int d = f.ambient_dim();
  r.gerzon_limit = static_cast<std::size_t>(binomial(d + 1, 2));
  r.gerzon_ok = n <= r.gerzon_limit;
  if (n < 2) {
    r.pairwise_distinct = true;
    return r;
  }

  const Matrix g = inner_product_table(f);
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  r.pairwise_distinct = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = g(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      lo = std::min(lo, v);
      hi = std::max(hi, v);
      if (same_subspace(f[i].subspace, f[j].subspace, 1e-8)) r.pairwise_distinct = false;
    }
  }
  r.spread = hi - lo;
  r.is_equiangular = r.spread <= tol;
  if (r.is_equiangular) r.common_value = 0.5 * (lo + hi);

  const int k = f.common_dim();
  bool equal_weights = true;
  for (const auto& e : f.entries()) {
    if (std::abs(e.weight - f[0].weight) > 1e-12 * std::abs(f[0].weight)) equal_weights = false;
  }
  if (k != 0 && equal_weights && certify_tight(f, 1).tight) {
    const double nn = static_cast<double>(n);
    r.expected_common_value = k * (nn * k - d) / ((nn - 1.0) * d);
  }
  return r;
}

MixedBound ffp_lower_bound_mixed(const WeightedFrame& f, const TMatrix& t) {
  const int d = f.ambient_dim();
  if (t.d != d) {
    throw Error(Errc::MissingMoment, "moment table is for d = " + std::to_string(t.d) +
                                         ", frame has d = " + std::to_string(d));
  }
  const std::vector<double> m = f.dimension_masses();
  MixedBound out;
  double var = 0.0;
  for (int k = 1; k < d; ++k) {
    const double mk = m[static_cast<std::size_t>(k - 1)];
    if (mk == 0.0) continue;
    for (int l = 1; l < d; ++l) {
      const double ml = m[static_cast<std::size_t>(l - 1)];
      if (ml == 0.0) continue;
      const MomentEstimate& e = t.at(k, l);
      if (!std::isfinite(e.value)) {
        throw Error(Errc::MissingMoment, "T entry (" + std::to_string(k) + "," + std::to_string(l) + ") missing");
      }
      out.value += mk * ml * e.value;
      // T[k][l] and T[l][k] are one estimate, so off-diagonal pairs add coherently.
      if (l == k) {
        var += std::pow(mk * ml * e.error, 2);
      } else if (l > k) {
        var += std::pow(2.0 * mk * ml * e.error, 2);
      }
    }
  }
  out.error = std::sqrt(var);
  return out;
}

bool simplex_equality(const WeightedFrame& f, double tol) {
  if (f.size() < 2) return false;
  const Matrix g = inner_product_table(f);
  double hi = -std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < g.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < g.cols(); ++j) hi = std::max(hi, g(i, j));
  }
  return std::abs(hi - simplex_bound_rhs(f)) <= tol;
}

}  // namespace fusion
