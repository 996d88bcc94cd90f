// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "oracles.hpp"

#include "fusion/combinatorics.hpp"
#include "fusion/constructions.hpp"
#include "fusion/moments.hpp"
#include "fusion/optimizer.hpp"
#include "fusion/potential.hpp"

#ifdef FUSION_HAVE_CLI
#include "cli.hpp"
#include <json.hpp>
#endif

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>

using namespace fusion;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(6);
  s << v;
  return s.str();
}

// ---------------------------------------------------------------------------

Outcome mercedes_suite() {
  Outcome o;
  WeightedFrame m = catalog("mercedes");
  double res1 = 0.0, res2 = 0.0;
  bool tight1 = false, tight2 = false, tight3 = true;
#ifdef FUSION_HAVE_CLI
  const std::filesystem::path dir(FUSION_TEST_TMPDIR);
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "mercedes.json").string();
  std::ostringstream out, err;
  o.require(cli::run({"gen", "catalog", "mercedes", "--out", path}, out, err) == cli::kExitOk, "gen failed");
  auto check = [&](int p, bool& tight, double& residual) {
    std::ostringstream co, ce;
    const int code = cli::run({"check", path, "--p", std::to_string(p), "--mode", "tight"}, co, ce);
    const auto j = nlohmann::json::parse(co.str());
    tight = code == cli::kExitOk && j["verdict"] == "tight";
    residual = j["residual"].get<double>();
  };
  check(1, tight1, res1);
  check(2, tight2, res2);
  double res3 = 0.0;
  check(3, tight3, res3);
#else
  const auto c1 = certify_tight(m, 1, 1e-10);
  const auto c2 = certify_tight(m, 2, 1e-10);
  tight1 = c1.tight;
  tight2 = c2.tight;
  res1 = c1.residual;
  res2 = c2.residual;
  tight3 = certify_tight(m, 3).tight;
#endif
  o.require(tight1 && res1 < 1e-10, "p=1 residual " + fmt(res1));
  o.require(tight2 && res2 < 1e-10, "p=2 residual " + fmt(res2));
  o.require(!tight3, "p=3 certified tight");

  const WeightedFrame third = m.with_weights({1.0 / 3, 1.0 / 3, 1.0 / 3});
  const double f2 = ffp(third, 2);
  o.require(std::abs(f2 - 3.0 / 8.0) <= 1e-12, "FFP(2) = " + fmt(f2));
  Rng rng(0);
  const CubatureCertificate cc = certify_cubature(third, 2, 1e-9, rng, {}, 100);
  o.require(std::abs(cc.t_value - t_one(1, 2, 2)) == 0.0 && t_one(1, 2, 2) == 3.0 / 8.0, "t_one(1,2,2) != 3/8");
  o.require(std::abs(cc.margin) < 1e-9 && cc.verdict == CubatureVerdict::Cubature, "cubature margin " + fmt(cc.margin));
  if (o.pass) o.detail = "residuals " + fmt(res1) + ", " + fmt(res2) + "; margin " + fmt(cc.margin);
  return o;
}

Outcome closed_form_moments() {
  Outcome o;
  Rng rng(2);
  for (int d = 2; d <= 6; ++d) {
    for (int k = 1; k < d; ++k) {
      o.require(t_one(k, d, 1) == static_cast<double>(k) / d, "t_one(" + std::to_string(k) + "," + std::to_string(d) + ",1)");
      for (int l = 1; l < d; ++l) {
        const MomentEstimate e = t_moment(k, l, d, 1, {}, rng);
        o.require(e.value == static_cast<double>(k * l) / d && e.method == MomentMethod::ClosedForm,
                  "t_moment(" + std::to_string(k) + "," + std::to_string(l) + "," + std::to_string(d) + ",1)");
      }
    }
  }
  int cases = 0;
  double worst = 0.0;
  for (int d = 2; d <= 6; ++d) {
    for (int k = 1; k < d; ++k) {
      for (int p = 1; p <= 3; ++p) {
        const MomentEstimate mc = t_moment_monte_carlo(k, 1, d, p, 100000, rng, 0);
        const double z = std::abs(mc.value - t_one(k, d, p)) / mc.error;
        worst = std::max(worst, z);
        ++cases;
        o.require(z <= 3.0, "MC (d,k,p)=(" + std::to_string(d) + "," + std::to_string(k) + "," + std::to_string(p) +
                                ") off by " + fmt(z) + " stderr");
      }
    }
  }
  if (o.pass) o.detail = std::to_string(cases) + " MC cases, worst " + fmt(worst) + " stderr";
  return o;
}

Outcome reweighting() {
  Outcome o;
  double worst = 0.0;
  int checked = 0;
  for (const auto& name : catalog_names()) {
    const CatalogEntry e = catalog_entry(name);
    for (int p = 2; p <= e.tight_order; ++p) {
      if (!certify_tight(e.frame, p).tight) continue;
      const TightnessCertificate c = certify_tight(reweight_down(e.frame, p), p - 1);
      worst = std::max(worst, c.residual);
      ++checked;
      o.require(c.tight && c.residual < 1e-9, name + " p=" + std::to_string(p));
    }
  }
  o.require(checked > 0, "no catalog frame tight at p >= 2");
  if (o.pass) o.detail = std::to_string(checked) + " cases, worst residual " + fmt(worst);
  return o;
}

Outcome complements() {
  Outcome o;
  int checked = 0;
  for (const auto& name : catalog_names()) {
    const CatalogEntry e = catalog_entry(name);
    if (e.frame.common_dim() == 0) continue;
    for (int p = 1; p <= e.tight_order; ++p) {
      if (!certify_tight(e.frame, p).tight) continue;
      ++checked;
      o.require(certify_tight(complement_frame(e.frame), p).tight, name + " p=" + std::to_string(p));
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " cases";
  return o;
}

Outcome extension() {
  Outcome o;
  const WeightedFrame inner = catalog("mercedes");
  const WeightedFrame outer = realify(mub_c2());
  const WeightedFrame ext = extend(inner, outer);
  const TightnessCertificate c = certify_tight(ext, 2);
  const double product = certify_tight(inner, 2).target_A * certify_tight(outer, 2).target_A;
  o.require(ext.ambient_dim() == 4, "ambient dimension");
  o.require(c.tight, "not tight, residual " + fmt(c.residual));
  o.require(std::abs(c.target_A - product) <= 1e-9, "constant " + fmt(c.target_A) + " vs " + fmt(product));
  if (o.pass) o.detail = std::to_string(ext.size()) + " lines, A = " + fmt(c.target_A);
  return o;
}

Outcome orbits() {
  Outcome o;
  Rng rng(6);
  const MatrixGroup a2 = close_group(weyl_a2_generators());
  const InvarianceReport r = invariance_check(a2, 2);
  o.require(r.passes && r.invariant_dim == 1, "A2 rank " + std::to_string(r.invariant_dim));
  int tight = 0;
  for (int s = 0; s < 20; ++s) tight += certify_tight(orbit_frame(a2, haar_random(2, 1, rng)), 2).tight ? 1 : 0;
  o.require(tight == 20, std::to_string(tight) + "/20 A2 orbits tight");

  const MatrixGroup refl = close_group({reflection(Vector::Unit(2, 1))});
  o.require(refl.order() == 2, "reflection group order");
  const InvarianceReport rr = invariance_check(refl, 2);
  o.require(!rr.passes, "reflection group passes the check");
  int failures = 0;
  for (int s = 0; s < 50; ++s) failures += certify_tight(orbit_frame(refl, haar_random(2, 1, rng)), 2).tight ? 0 : 1;
  o.require(failures >= 1, "no reflection orbit failed");
  if (o.pass) o.detail = "reflection rank " + std::to_string(rr.invariant_dim) + ", " + std::to_string(failures) + "/50 orbits fail";
  return o;
}

Outcome simplex_bound() {
  Outcome o;
  Rng rng(7);
  int violations = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const WeightedFrame f = oracle::random_frame(2 + trial % 5, rng);
    const Matrix g = inner_product_table(f);
    double max_off = -1.0;
    for (Eigen::Index i = 0; i < g.rows(); ++i) {
      for (Eigen::Index j = 0; j < g.cols(); ++j) {
        if (i != j) max_off = std::max(max_off, g(i, j));
      }
    }
    if (max_off < simplex_bound_rhs(f) - 1e-9) ++violations;
    for (int p = 1; p <= 3; ++p) {
      if (ffp(f, p) < ffp_lower_bound_p(f, p) - 1e-9) ++violations;
    }
  }
  o.require(violations == 0, std::to_string(violations) + " violations");

  int fired = 0;
  for (const auto& name : catalog_names()) {
    const WeightedFrame f = catalog(name);
    const EquiangularityReport e = equiangularity(f);
    const bool expected = e.is_equiangular && e.pairwise_distinct && certify_tight(f, 1).tight;
    const bool got = simplex_equality(f);
    fired += got ? 1 : 0;
    o.require(got == expected, "equality detector on " + name);
  }
  if (o.pass) o.detail = "equality fired on " + std::to_string(fired) + " catalog frames";
  return o;
}

Outcome mixed_bound() {
  Outcome o;
  Rng rng(8);
  MomentOptions ladder;
  MomentOptions mc;
  mc.method = MomentMethod::MonteCarlo;
  mc.mc_samples = 100000;
  mc.threads = 0;
  int checked = 0;
  for (int d = 3; d <= 5; ++d) {
    for (int p = 1; p <= 2; ++p) {
      const TMatrix exact = t_matrix(d, p, ladder, rng);
      const TMatrix sampled = t_matrix(d, p, mc, rng);
      const int per = d == 5 ? 84 : 83;
      for (int trial = 0; trial < per; ++trial) {
        const WeightedFrame f = oracle::random_frame(d, rng);
        const double v = ffp(f, p);
        for (const TMatrix* t : {&exact, &sampled}) {
          const MixedBound b = ffp_lower_bound_mixed(f, *t);
          o.require(v >= b.value - 3.0 * b.error - 1e-12,
                    "d=" + std::to_string(d) + " p=" + std::to_string(p) + " FFP " + fmt(v) + " < " + fmt(b.value));
        }
        ++checked;
      }
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " frames against ladder and sampled T";
  return o;
}

Outcome optimizer_recovery() {
  Outcome o;
  int successes = 0;
  double worst_eq = 0.0;
  for (std::uint64_t seed = 0; seed < 16; ++seed) {
    OptimizerConfig cfg;
    cfg.n = 3;
    cfg.k = 1;
    cfg.d = 2;
    cfg.p = 2;
    cfg.restarts = 16;
    Rng rng(seed);
    const OptimizerTrace t = minimize_ffp(cfg, rng);
    if (!(t.success && t.margin < 1e-5)) continue;
    const EquiangularityReport e = equiangularity(t.frame, 1e-5);
    const double expected = 1.0 * (3.0 * 1 - 2) / ((3 - 1) * 2.0);
    if (e.is_equiangular && e.common_value && std::abs(*e.common_value - expected) <= 1e-5) {
      ++successes;
      worst_eq = std::max(worst_eq, std::abs(*e.common_value - 0.25));
    }
  }
  o.require(successes >= 15, std::to_string(successes) + "/16 seeds");

  OptimizerConfig two;
  two.n = 2;
  two.k = 1;
  two.d = 2;
  two.p = 2;
  Rng rng(0);
  const OptimizerTrace t2 = minimize_ffp(two, rng);
  o.require(!t2.success, "two lines in R^2 reported success");
  if (o.pass) {
    o.detail = std::to_string(successes) + "/16 seeds, |common - 1/4| <= " + fmt(worst_eq) + "; n=2 margin " + fmt(t2.margin);
  }
  return o;
}

Outcome gradient_check() {
  Outcome o;
  Rng rng(10);
  std::uniform_real_distribution<double> wt(0.3, 2.0);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const int d = 2 + trial % 4;
    const int k = 1 + trial % std::min(2, d - 1);
    const int p = 1 + trial % 3;
    const int n = 2 + trial % 4;
    std::vector<Matrix> y;
    std::vector<double> w;
    std::vector<FrameEntry> entries;
    for (int i = 0; i < n; ++i) {
      y.push_back(haar_random(d, k, rng).basis());
      w.push_back(wt(rng));
      entries.push_back({Subspace::from_orthonormal(y.back()), w.back()});
    }
    const auto grad = ffp_gradient(WeightedFrame(entries), p);
    auto potential = [&](const std::vector<Matrix>& z) {
      double s = 0.0;
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          s += w[i] * w[j] * std::pow((z[i].transpose() * z[j]).squaredNorm(), p);
        }
      }
      return s;
    };
    const double h = 1e-5;
    for (int i = 0; i < n; ++i) {
      const Matrix dir = oracle::gaussian(d, k, rng);
      const Matrix horiz = dir - y[i] * (y[i].transpose() * dir);
      auto at = [&](double t) {
        std::vector<Matrix> z = y;
        Eigen::JacobiSVD<Matrix> svd(y[i] + t * horiz, Eigen::ComputeThinU | Eigen::ComputeThinV);
        z[i] = svd.matrixU() * svd.matrixV().transpose();
        return potential(z);
      };
      const double fd = (at(h) - at(-h)) / (2.0 * h);
      const double an = (grad[i].array() * horiz.array()).sum();
      const double rel = std::abs(fd - an) / std::max(1.0, std::abs(an));
      worst = std::max(worst, rel);
    }
  }
  o.require(worst <= 1e-6, "worst relative error " + fmt(worst));
  if (o.pass) o.detail = "worst relative error " + fmt(worst);
  return o;
}

std::uint64_t choose(int n, int r) {
  // Pascal's triangle, independent of the library's binomial.
  std::vector<std::vector<std::uint64_t>> c(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    c[i].assign(static_cast<std::size_t>(i) + 1, 1);
    for (int j = 1; j < i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
  }
  return r < 0 || r > n ? 0 : c[n][r];
}

Outcome size_and_gerzon() {
  Outcome o;
  for (int d = 2; d <= 8; ++d) {
    for (int p = 1; p <= 5; ++p) {
      const SizeBounds b = size_bounds(d, p);
      o.require(b.tight_p_existence_bound == choose(2 * p + d - 1, d - 1) - 1,
                "existence bound d=" + std::to_string(d) + " p=" + std::to_string(p));
      o.require(b.max_equiangular == choose(d + 1, 2), "Gerzon count d=" + std::to_string(d));
    }
  }

  Rng rng(11);
  std::vector<WeightedFrame> candidates;
  candidates.push_back(catalog("equispaced-lines(4)"));
  std::vector<Subspace> merc = {line_at_angle(0.0), line_at_angle(std::numbers::pi / 3), line_at_angle(2 * std::numbers::pi / 3)};
  merc.push_back(line_at_angle(0.0));
  candidates.push_back(WeightedFrame::uniform(merc));
  merc.back() = line_at_angle(1e-12);
  candidates.push_back(WeightedFrame::uniform(merc));
  candidates.push_back(WeightedFrame::uniform({line_at_angle(0.1), line_at_angle(0.1), line_at_angle(0.1), line_at_angle(0.1)}));
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Subspace> lines;
    for (int i = 0; i < 4; ++i) lines.push_back(haar_random(2, 1, rng));
    candidates.push_back(WeightedFrame::uniform(lines));
  }
  int certified = 0;
  for (const auto& f : candidates) {
    const EquiangularityReport e = equiangularity(f);
    o.require(!e.gerzon_ok, "gerzon_ok for 4 lines in R^2");
    if (e.is_equiangular && e.pairwise_distinct && e.gerzon_ok) ++certified;
  }
  o.require(certified == 0, std::to_string(certified) + " impossible sets certified");
  if (o.pass) o.detail = std::to_string(candidates.size()) + " four-line candidates rejected";
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;
  Outcome (*run)();
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "mercedes suite", 1.0, mercedes_suite},
      {2, "closed-form moments and MC agreement", 60.0, closed_form_moments},
      {3, "reweighting", 0.0, reweighting},
      {4, "complement", 0.0, complements},
      {5, "extension", 5.0, extension},
      {6, "orbit equivalence", 30.0, orbits},
      {7, "generalized simplex bound", 120.0, simplex_bound},
      {8, "mixed-dimension bound", 300.0, mixed_bound},
      {9, "optimizer recovery", 60.0, optimizer_recovery},
      {10, "gradient check", 30.0, gradient_check},
      {11, "size bounds and Gerzon", 0.0, size_and_gerzon},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0.0 && secs > c.limit_s) o.require(false, "runtime " + fmt(secs) + " s over " + fmt(c.limit_s) + " s");
    if (!o.pass) ++failed;
    std::printf("%s  [%2d] %-40s %8.3f s  %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
