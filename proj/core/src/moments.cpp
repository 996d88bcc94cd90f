#include "fusion/moments.hpp"

#include "fusion/combinatorics.hpp"
#include "fusion/error.hpp"
#include "fusion/potential.hpp"
#include "fusion/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <thread>

namespace fusion {

std::string_view to_string(MomentMethod m) noexcept {
  switch (m) {
    case MomentMethod::Auto: return "auto";
    case MomentMethod::ClosedForm: return "closed-form";
    case MomentMethod::Quadrature: return "quadrature";
    case MomentMethod::MonteCarlo: return "monte-carlo";
  }
  return "unknown";
}

std::string_view to_string(CubatureVerdict v) noexcept {
  switch (v) {
    case CubatureVerdict::Cubature: return "cubature";
    case CubatureVerdict::NotCubature: return "not cubature";
    case CubatureVerdict::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

namespace {

void require_grassmann_dims(int k, int l, int d) {
  if (d < 2 || k < 1 || k > d - 1 || l < 1 || l > d - 1) {
    throw Error(Errc::DimensionError, "need 1 <= k, l <= d - 1 (k=" + std::to_string(k) +
                                          ", l=" + std::to_string(l) + ", d=" + std::to_string(d) + ")");
  }
}

/// <P_V, P_W> = offset + slope * <P_V', P_W'> for a pair of dimensions
/// (k', l') with k' + l' <= d obtained by complementing V and/or W.
struct Reduction {
  int k = 0;
  int l = 0;
  double offset = 0.0;
  double slope = 1.0;
};

Reduction reduce_pair(int k, int l, int d) {
  const Reduction candidates[] = {
      {k, l, 0.0, 1.0},
      {d - k, l, static_cast<double>(l), -1.0},
      {k, d - l, static_cast<double>(k), -1.0},
      {d - k, d - l, static_cast<double>(k + l - d), 1.0},
  };
  const Reduction* best = nullptr;
  for (const auto& c : candidates) {
    if (c.k + c.l > d) continue;
    if (!best || std::min(c.k, c.l) < std::min(best->k, best->l)) best = &c;
  }
  return *best;  // at least one of the first and last candidates is always admissible
}

/// E[s^j], j = 0..p, for s the sum of squared principal cosines of a pair of
/// dimensions (m, big) with m <= 2 and m + big <= d, using `nodes` points.
std::vector<double> reduced_moments(int m, int big, int d, int p, int nodes) {
  std::vector<double> z(static_cast<std::size_t>(p) + 1, 0.0);
  if (m == 1) {
    const QuadratureRule rule = gauss_jacobi_unit(nodes, (big - 2) / 2.0, (d - big - 2) / 2.0);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      double pw = 1.0;
      for (int j = 0; j <= p; ++j) {
        z[static_cast<std::size_t>(j)] += rule.weights[i] * pw;
        pw *= rule.nodes[i];
      }
    }
  } else {
    // Two squared cosines with density |y1 - y2| prod y^a (1-y)^b. Substituting
    // y = sin^2(phi) turns each y^a (1-y)^b dy into 2 sin^{big-2} cos^{d-big-2} dphi,
    // integer powers, so the integrand is smooth on each side of the diagonal.
    // Integrate over phi2 < phi1 and double.
    const int sp = big - 2;
    const int cp = d - big - 2;
    const double half_pi = std::numbers::pi / 2.0;
    const QuadratureRule outer = gauss_legendre(nodes, 0.0, half_pi);
    const QuadratureRule inner_unit = gauss_legendre(nodes, 0.0, 1.0);
    auto factor = [&](double phi) {
      return 2.0 * std::pow(std::sin(phi), sp) * std::pow(std::cos(phi), cp);
    };
    for (std::size_t i = 0; i < outer.nodes.size(); ++i) {
      const double phi1 = outer.nodes[i];
      const double y1 = std::sin(phi1) * std::sin(phi1);
      const double f1 = factor(phi1);
      for (std::size_t j = 0; j < inner_unit.nodes.size(); ++j) {
        const double phi2 = phi1 * inner_unit.nodes[j];
        const double y2 = std::sin(phi2) * std::sin(phi2);
        const double w = 2.0 * outer.weights[i] * phi1 * inner_unit.weights[j] * (y1 - y2) * f1 *
                         factor(phi2);
        double pw = 1.0;
        for (int e = 0; e <= p; ++e) {
          z[static_cast<std::size_t>(e)] += w * pw;
          pw *= y1 + y2;
        }
      }
    }
  }
  const double norm = z[0];
  for (auto& v : z) v /= norm;
  return z;
}

/// Moments of offset + slope * s from moments of s by binomial expansion.
std::vector<double> shift_moments(const std::vector<double>& ms, double offset, double slope) {
  const int p = static_cast<int>(ms.size()) - 1;
  std::vector<double> out(ms.size(), 0.0);
  for (int q = 0; q <= p; ++q) {
    double total = 0.0;
    for (int j = 0; j <= q; ++j) {
      total += static_cast<double>(binomial(q, j)) * std::pow(offset, q - j) * std::pow(slope, j) *
               ms[static_cast<std::size_t>(j)];
    }
    out[static_cast<std::size_t>(q)] = total;
  }
  return out;
}

}  // namespace

double t_one(int k, int d, int p) {
  require_grassmann_dims(k, 1, d);
  return pochhammer(k / 2.0, p) / pochhammer(d / 2.0, p);
}

std::vector<MomentEstimate> t_moments_quadrature(int k, int l, int d, int p, int nodes) {
  require_grassmann_dims(k, l, d);
  if (p < 0) throw Error(Errc::ParameterError, "p must be >= 0");
  const Reduction r = reduce_pair(k, l, d);
  const int m = std::min(r.k, r.l);
  const int big = std::max(r.k, r.l);
  if (m > 2) {
    throw Error(Errc::UnsupportedQuadratureDim,
                "quadrature supports smaller dimension <= 2 after complement reduction, got " +
                    std::to_string(m));
  }
  const auto coarse = shift_moments(reduced_moments(m, big, d, p, nodes), r.offset, r.slope);
  const auto fine = shift_moments(reduced_moments(m, big, d, p, 2 * nodes), r.offset, r.slope);
  std::vector<MomentEstimate> out;
  for (std::size_t j = 0; j < fine.size(); ++j) {
    const double err = std::abs(fine[j] - coarse[j]) + 8.0 * 2.2e-16 * std::abs(fine[j]);
    out.push_back({fine[j], err, MomentMethod::Quadrature});
  }
  return out;
}

MomentEstimate t_moment_monte_carlo(int k, int l, int d, int p, std::size_t samples, Rng& rng,
                                    int threads) {
  require_grassmann_dims(k, l, d);
  if (samples < 2) throw Error(Errc::ParameterError, "Monte-Carlo needs at least two samples");
  constexpr std::size_t kChunks = 16;
  std::vector<std::uint64_t> seeds(kChunks);
  for (auto& s : seeds) s = rng();
  struct Partial {
    long double sum = 0.0L;
    long double sum_sq = 0.0L;
  };
  std::vector<Partial> partial(kChunks);

  auto run_chunk = [&](std::size_t c) {
    const std::size_t count = samples / kChunks + (c < samples % kChunks ? 1 : 0);
    Rng local(seeds[c]);
    Partial acc;
    for (std::size_t i = 0; i < count; ++i) {
      const Subspace v = haar_random(d, k, local);
      const double s = v.basis().topRows(l).squaredNorm();
      const double x = std::pow(s, p);
      acc.sum += x;
      acc.sum_sq += static_cast<long double>(x) * x;
    }
    partial[c] = acc;
  };

  unsigned workers = threads <= 0 ? std::max(1u, std::thread::hardware_concurrency())
                                  : static_cast<unsigned>(threads);
  workers = std::min<unsigned>(workers, kChunks);
  if (workers <= 1) {
    for (std::size_t c = 0; c < kChunks; ++c) run_chunk(c);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t c = t; c < kChunks; c += workers) run_chunk(c);
      });
    }
    for (auto& th : pool) th.join();
  }

  long double sum = 0.0L;
  long double sum_sq = 0.0L;
  for (const auto& part : partial) {
    sum += part.sum;
    sum_sq += part.sum_sq;
  }
  const auto n = static_cast<long double>(samples);
  const long double mean = sum / n;
  const long double var = std::max(0.0L, (sum_sq - n * mean * mean) / (n - 1.0L));
  return {static_cast<double>(mean), static_cast<double>(std::sqrt(var / n)), MomentMethod::MonteCarlo};
}

MomentEstimate t_moment(int k, int l, int d, int p, const MomentOptions& opts, Rng& rng) {
  require_grassmann_dims(k, l, d);
  if (p < 1) throw Error(Errc::ParameterError, "p must be >= 1");
  const bool closed_available = p == 1 || k == 1 || l == 1;
  auto closed = [&]() -> MomentEstimate {
    if (p == 1) return {static_cast<double>(k) * l / d, 0.0, MomentMethod::ClosedForm};
    return {t_one(std::max(k, l), d, p), 0.0, MomentMethod::ClosedForm};
  };
  auto quadrature = [&]() { return t_moments_quadrature(k, l, d, p, opts.quadrature_nodes).back(); };

  switch (opts.method) {
    case MomentMethod::ClosedForm:
      if (!closed_available) {
        throw Error(Errc::ParameterError, "no closed form for T_{k,l,d}(p) with k, l >= 2 and p >= 2");
      }
      return closed();
    case MomentMethod::Quadrature:
      return quadrature();
    case MomentMethod::MonteCarlo:
      return t_moment_monte_carlo(k, l, d, p, opts.mc_samples, rng, opts.threads);
    case MomentMethod::Auto:
      break;
  }
  if (closed_available) return closed();
  const Reduction r = reduce_pair(k, l, d);
  if (std::min(r.k, r.l) <= 2) return quadrature();
  return t_moment_monte_carlo(k, l, d, p, opts.mc_samples, rng, opts.threads);
}

const MomentEstimate& TMatrix::at(int k, int l) const {
  if (k < 1 || l < 1 || k > d - 1 || l > d - 1) throw Error(Errc::MissingMoment, "T index out of range");
  return entries[static_cast<std::size_t>((k - 1) * (d - 1) + (l - 1))];
}

MomentEstimate& TMatrix::at(int k, int l) {
  return const_cast<MomentEstimate&>(static_cast<const TMatrix&>(*this).at(k, l));
}

TMatrix t_matrix(int d, int p, const MomentOptions& opts, Rng& rng) {
  if (d < 2) throw Error(Errc::DimensionError, "t_matrix needs d >= 2");
  TMatrix t;
  t.d = d;
  t.p = p;
  t.entries.resize(static_cast<std::size_t>((d - 1) * (d - 1)));
  for (int k = 1; k < d; ++k) {
    for (int l = k; l < d; ++l) {
      MomentOptions entry_opts = opts;
      // Lines always use the exact value.
      if (k == 1 || p == 1) entry_opts.method = MomentMethod::Auto;
      const MomentEstimate e = t_moment(k, l, d, p, entry_opts, rng);
      t.at(k, l) = e;
      t.at(l, k) = e;
    }
  }
  return t;
}

std::vector<double> design_diagnostic(const WeightedFrame& f, int p, int n_probes, Rng& rng) {
  const int k = f.common_dim();
  if (k == 0) throw Error(Errc::MixedDimensions, "design diagnostic needs equal dimensions");
  if (p < 1) throw Error(Errc::ParameterError, "p must be >= 1");
  const int d = f.ambient_dim();
  const JacobiFamily fam = jacobi_family(k, d, p);
  const double total = f.total_weight();
  std::vector<double> residual(static_cast<std::size_t>(p), 0.0);
  for (int probe = 0; probe < n_probes; ++probe) {
    const Vector x = random_unit_vector(d, rng);
    std::vector<double> sums(static_cast<std::size_t>(p), 0.0);
    for (const auto& e : f.entries()) {
      const double y = (e.subspace.basis().transpose() * x).squaredNorm();
      for (int l = 1; l <= p; ++l) sums[static_cast<std::size_t>(l - 1)] += e.weight / total * fam.evaluate(l, y);
    }
    for (std::size_t l = 0; l < sums.size(); ++l) residual[l] = std::max(residual[l], std::abs(sums[l]));
  }
  return residual;
}

CubatureCertificate certify_cubature(const WeightedFrame& f, int p, double tol, Rng& rng,
                                     const MomentOptions& opts, int probes) {
  const int k = f.common_dim();
  if (k == 0) throw Error(Errc::MixedDimensions, "cubature certification needs equal dimensions");
  const int d = f.ambient_dim();
  const WeightedFrame g = f.normalized();

  CubatureCertificate cert;
  cert.p = p;
  cert.tolerance = tol;
  cert.ffp_value = ffp(g, p);
  const MomentEstimate t = t_moment(k, k, d, p, opts, rng);
  cert.t_value = t.value;
  cert.t_error = t.error;
  cert.t_method = t.method;
  cert.margin = cert.ffp_value - cert.t_value;
  if (cert.margin > tol + cert.t_error) {
    cert.verdict = CubatureVerdict::NotCubature;
  } else if (cert.t_error > tol) {
    cert.verdict = CubatureVerdict::Inconclusive;
  } else {
    cert.verdict = CubatureVerdict::Cubature;
  }

  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (int i = 0; i < probes; ++i) {
    const Subspace w = haar_random(d, k, rng);
    double s = 0.0;
    for (const auto& e : g.entries()) s += e.weight * std::pow(hs_inner(w, e.subspace), p);
    lo = std::min(lo, s);
    hi = std::max(hi, s);
  }
  cert.probe_spread = probes > 0 ? hi - lo : 0.0;
  return cert;
}

SizeBounds size_bounds(int d, int p) {
  if (d < 2 || p < 1) throw Error(Errc::ParameterError, "size bounds need d >= 2, p >= 1");
  SizeBounds b;
  b.tight_p_existence_bound = binomial(2 * p + d - 1, d - 1) - 1;
  for (int l = 1; l <= p; ++l) {
    b.harmonic_dims.push_back(binomial(d + 2 * l - 1, d - 1) - binomial(d + 2 * l - 3, d - 1));
  }
  b.max_equiangular = binomial(d + 1, 2);
  return b;
}

}  // namespace fusion
