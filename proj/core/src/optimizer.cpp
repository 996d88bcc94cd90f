#include "fusion/optimizer.hpp"

#include "fusion/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

namespace fusion {

namespace {

using Bases = std::vector<Matrix>;

double potential(const Bases& y, const std::vector<double>& w, int p) {
  double total = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    total += w[i] * w[i] * std::pow(static_cast<double>(y[i].cols()), p);
    for (std::size_t j = i + 1; j < y.size(); ++j) {
      total += 2.0 * w[i] * w[j] * std::pow((y[i].transpose() * y[j]).squaredNorm(), p);
    }
  }
  return total;
}

Bases gradient(const Bases& y, const std::vector<double>& w, int p) {
  Bases g;
  g.reserve(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    Matrix gi = Matrix::Zero(y[i].rows(), y[i].cols());
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (j == i) continue;
      const Matrix cross = y[j].transpose() * y[i];  // Y_j^T Y_i, so P_j Y_i = Y_j cross
      const double s = cross.squaredNorm();
      gi += (4.0 * p * w[i] * w[j] * std::pow(s, p - 1)) * (y[j] * cross);
    }
    gi -= y[i] * (y[i].transpose() * gi);
    g.push_back(std::move(gi));
  }
  return g;
}

double squared_norm(const Bases& g) {
  double s = 0.0;
  for (const auto& m : g) s += m.squaredNorm();
  return s;
}

struct RestartResult {
  Bases bases;
  std::vector<double> trace;
  double grad_norm = 0.0;
};

RestartResult descend(Bases y, const std::vector<double>& w, const OptimizerConfig& cfg) {
  constexpr double kArmijoSlope = 1e-4;
  constexpr double kMinStep = 1e-16;
  RestartResult out;
  double f = potential(y, w, cfg.p);
  out.trace.push_back(f);
  double eta = cfg.step;
  Bases g = gradient(y, w, cfg.p);
  double gg = squared_norm(g);
  for (int it = 0; it < cfg.max_iters && std::sqrt(gg) > cfg.tol_grad; ++it) {
    bool accepted = false;
    while (eta > kMinStep) {
      Bases trial(y.size());
      for (std::size_t i = 0; i < y.size(); ++i) trial[i] = orthonormalize(y[i] - eta * g[i]);
      const double ft = potential(trial, w, cfg.p);
      if (ft <= f - kArmijoSlope * eta * gg) {
        y = std::move(trial);
        f = ft;
        accepted = true;
        break;
      }
      eta *= cfg.armijo_factor;
    }
    if (!accepted) break;
    out.trace.push_back(f);
    // Let the step recover after backtracking.
    eta = std::min(eta / cfg.armijo_factor, 1e3 * cfg.step);
    g = gradient(y, w, cfg.p);
    gg = squared_norm(g);
  }
  out.grad_norm = std::sqrt(gg);
  out.bases = std::move(y);
  return out;
}

WeightedFrame to_frame(const Bases& y, double weight) {
  std::vector<Subspace> subs;
  subs.reserve(y.size());
  for (const auto& b : y) subs.push_back(make_subspace(b));
  return WeightedFrame::uniform(std::move(subs), weight);
}

}  // namespace

void validate(const OptimizerConfig& cfg) {
  if (cfg.n < 1 || cfg.p < 1 || cfg.restarts < 1 || cfg.max_iters < 0 || !(cfg.step > 0.0) ||
      !(cfg.tol_grad >= 0.0) || !(cfg.target_margin >= 0.0) || !(cfg.armijo_factor > 0.0) ||
      !(cfg.armijo_factor < 1.0) || cfg.threads < 0) {
    throw Error(Errc::ParameterError, "optimizer configuration has a non-positive field");
  }
  if (cfg.d < 2 || cfg.k < 1 || cfg.k > cfg.d - 1) {
    throw Error(Errc::ParameterError, "optimizer needs 1 <= k <= d - 1");
  }
}

std::vector<Matrix> ffp_gradient(const WeightedFrame& f, int p) {
  if (f.common_dim() == 0) throw Error(Errc::MixedDimensions, "gradient needs equal dimensions");
  if (p < 1) throw Error(Errc::ParameterError, "p must be >= 1");
  Bases y;
  std::vector<double> w;
  for (const auto& e : f.entries()) {
    y.push_back(e.subspace.basis());
    w.push_back(e.weight);
  }
  return gradient(y, w, p);
}

OptimizerTrace minimize_ffp(const OptimizerConfig& cfg, Rng& rng) {
  validate(cfg);
  const MomentEstimate t = t_moment(cfg.k, cfg.k, cfg.d, cfg.p, cfg.moments, rng);

  std::vector<std::uint64_t> seeds(static_cast<std::size_t>(cfg.restarts));
  for (auto& s : seeds) s = rng();
  const std::vector<double> w(static_cast<std::size_t>(cfg.n), 1.0 / cfg.n);
  std::vector<RestartResult> results(seeds.size());

  auto run = [&](std::size_t r) {
    Rng local(seeds[r]);
    Bases y;
    for (int i = 0; i < cfg.n; ++i) y.push_back(haar_random(cfg.d, cfg.k, local).basis());
    results[r] = descend(std::move(y), w, cfg);
  };

  unsigned workers = cfg.threads == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                      : static_cast<unsigned>(cfg.threads);
  workers = std::min<unsigned>(workers, static_cast<unsigned>(seeds.size()));
  if (workers <= 1) {
    for (std::size_t r = 0; r < seeds.size(); ++r) run(r);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < workers; ++id) {
      pool.emplace_back([&, id] {
        for (std::size_t r = id; r < seeds.size(); r += workers) run(r);
      });
    }
    for (auto& th : pool) th.join();
  }

  std::size_t best = 0;
  std::vector<double> finals;
  for (std::size_t r = 0; r < results.size(); ++r) {
    finals.push_back(results[r].trace.back());
    if (results[r].trace.back() < results[best].trace.back() - 1e-10) best = r;
  }

  const double final_ffp = results[best].trace.back();
  OptimizerTrace trace{
      .ffp = results[best].trace,
      .frame = to_frame(results[best].bases, 1.0 / cfg.n),
      .final_ffp = final_ffp,
      .t_value = t.value,
      .t_error = t.error,
      .margin = final_ffp / t.value - 1.0,
      .success = final_ffp <= t.value * (1.0 + cfg.target_margin),
      .best_restart = static_cast<int>(best),
      .restart_ffp = std::move(finals),
      .grad_norm = results[best].grad_norm,
  };
  return trace;
}

std::pair<double, double> sphere_extrema(const WeightedFrame& f, int p, int restarts, Rng& rng) {
  if (p < 1) throw Error(Errc::ParameterError, "p must be >= 1");
  const int d = f.ambient_dim();
  std::vector<Matrix> proj;
  for (const auto& e : f.entries()) proj.push_back(projector(e.subspace));

  auto value = [&](const Vector& x) {
    double s = 0.0;
    for (std::size_t j = 0; j < proj.size(); ++j) {
      s += f[j].weight * std::pow(x.dot(proj[j] * x), p);
    }
    return s;
  };
  auto grad = [&](const Vector& x) {
    Vector g = Vector::Zero(d);
    for (std::size_t j = 0; j < proj.size(); ++j) {
      const Vector px = proj[j] * x;
      g += (2.0 * p * f[j].weight * std::pow(x.dot(px), p - 1)) * px;
    }
    return Vector(g - x.dot(g) * x);
  };
  // sign = +1 descends, -1 ascends.
  auto optimize = [&](Vector x, double sign) {
    double fx = sign * value(x);
    double eta = 0.1;
    for (int it = 0; it < 2000; ++it) {
      const Vector g = sign * grad(x);
      const double gg = g.squaredNorm();
      if (gg < 1e-26) break;
      bool accepted = false;
      while (eta > 1e-16) {
        const Vector trial = (x - eta * g).normalized();
        const double ft = sign * value(trial);
        if (ft <= fx - 1e-4 * eta * gg) {
          x = trial;
          fx = ft;
          accepted = true;
          break;
        }
        eta *= 0.5;
      }
      if (!accepted) break;
      eta = std::min(2.0 * eta, 10.0);
    }
    return sign * fx;
  };

  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (int r = 0; r < std::max(1, restarts); ++r) {
    const Vector start = random_unit_vector(d, rng);
    lo = std::min(lo, optimize(start, 1.0));
    hi = std::max(hi, optimize(start, -1.0));
  }
  return {lo, hi};
}

}  // namespace fusion
