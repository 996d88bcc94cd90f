#include "cli.hpp"

#include "fusion/constructions.hpp"
#include "fusion/error.hpp"
#include "fusion/io.hpp"
#include "fusion/moments.hpp"
#include "fusion/optimizer.hpp"
#include "fusion/potential.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

namespace fusion::cli {

namespace {

using ojson = nlohmann::ordered_json;

struct Globals {
  std::uint64_t seed = 0;
  int threads = 1;
};

struct CheckArgs {
  std::string file;
  int p = 1;
  std::string mode = "tight";
  double tol = -1.0;  // negative: mode default
  double mc_budget = 1e5;
  int probes = 1000;
  int restarts = 32;
};

struct GenArgs {
  std::string kind;
  std::string name;
  std::string generators;
  int seed_dim = 0;
  double seed_angle = std::nan("");
  std::string inner;
  std::string outer;
  std::string lines;
  std::string out;
};

struct MomentArgs {
  int d = 2;
  int p = 1;
  double mc_budget = 1e5;
  std::string method = "auto";
  int nodes = 40;
};

struct OptimizeArgs {
  OptimizerConfig cfg;
  std::string out;
  std::string trace;
  double mc_budget = 1e5;
};

std::string hex64(std::uint64_t v) {
  std::ostringstream s;
  s << std::hex << std::setw(16) << std::setfill('0') << v;
  return s.str();
}

std::string join(const std::vector<std::string>& args) {
  std::string s = "fusionframe";
  for (const auto& a : args) s += " " + a;
  return s;
}

/// Report skeleton; wall time is appended last so reports differ only there.
ojson report_head(const std::vector<std::string>& args, const std::string& digest_input) {
  ojson r;
  r["command"] = join(args);
  r["input_digest"] = hex64(fnv1a(digest_input));
  return r;
}

void finish(ojson& r, std::chrono::steady_clock::time_point start, std::ostream& out) {
  r["wall_time_s"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out << r.dump(2) << '\n';
}

MomentMethod parse_method(const std::string& m) {
  if (m == "auto") return MomentMethod::Auto;
  if (m == "closed-form") return MomentMethod::ClosedForm;
  if (m == "quadrature") return MomentMethod::Quadrature;
  if (m == "monte-carlo") return MomentMethod::MonteCarlo;
  throw Error(Errc::ParameterError, "unknown moment method '" + m + "'");
}

std::size_t budget(double b) {
  if (!(b >= 2.0) || b > 1e12) throw Error(Errc::ParameterError, "Monte-Carlo budget must be in [2, 1e12]");
  return static_cast<std::size_t>(std::llround(b));
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(Errc::ParseError, "cannot write " + path);
  f << text;
}

int cmd_check(const CheckArgs& a, const Globals& g, const std::vector<std::string>& args,
              std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const std::string text = read_text_file(a.file);
  const FrameReadResult in = parse_frame_json(text);
  const WeightedFrame& f = in.frame;
  Rng rng(g.seed);

  ojson r = report_head(args, text);
  r["mode"] = a.mode;
  r["p"] = a.p;
  r["frame"] = {{"ambient_dim", f.ambient_dim()}, {"size", f.size()}, {"common_dim", f.common_dim()}};
  ojson tol;
  int code = kExitOk;

  if (a.mode == "tight") {
    const double t = a.tol >= 0.0 ? a.tol : kDefaultTightTolerance;
    const TightnessCertificate c = certify_tight(f, a.p, t);
    r["verdict"] = c.tight ? "tight" : "not tight";
    r["target_A"] = c.target_A;
    r["residual"] = c.residual;
    tol["residual"] = t;
    code = c.tight ? kExitOk : kExitNegative;
  } else if (a.mode == "cubature") {
    const double t = a.tol >= 0.0 ? a.tol : 1e-9;
    MomentOptions opts;
    opts.mc_samples = budget(a.mc_budget);
    opts.threads = g.threads;
    const CubatureCertificate c = certify_cubature(f, a.p, t, rng, opts, a.probes);
    r["verdict"] = to_string(c.verdict);
    r["ffp"] = c.ffp_value;
    r["t_value"] = c.t_value;
    r["t_error"] = c.t_error;
    r["t_method"] = to_string(c.t_method);
    r["margin"] = c.margin;
    r["probe_spread"] = c.probe_spread;
    tol["margin"] = t;
    tol["mc_budget"] = opts.mc_samples;
    code = c.verdict == CubatureVerdict::Cubature ? kExitOk : kExitNegative;
  } else if (a.mode == "equiangular") {
    const double t = a.tol >= 0.0 ? a.tol : kDefaultEquiangularTolerance;
    const EquiangularityReport e = equiangularity(f, t);
    const bool ok = e.is_equiangular && e.pairwise_distinct && e.gerzon_ok;
    r["verdict"] = ok ? "equiangular" : "not equiangular";
    r["is_equiangular"] = e.is_equiangular;
    r["common_value"] = e.common_value ? ojson(*e.common_value) : ojson(nullptr);
    r["expected_common_value"] = e.expected_common_value ? ojson(*e.expected_common_value) : ojson(nullptr);
    r["spread"] = e.spread;
    r["pairwise_distinct"] = e.pairwise_distinct;
    r["gerzon_limit"] = e.gerzon_limit;
    r["gerzon_ok"] = e.gerzon_ok;
    tol["spread"] = t;
    code = ok ? kExitOk : kExitNegative;
  } else if (a.mode == "bounds") {
    const double t = a.tol >= 0.0 ? a.tol : 1e-9;
    const PotentialReport pr = potential_report(f, a.p);
    r["ffp"] = pr.value;
    r["ffp_lower_bound"] = pr.lower_bound;
    r["gap"] = pr.gap;
    r["numerator_clamped"] = pr.numerator_clamped;
    bool ok = pr.value >= pr.lower_bound - t;
    if (f.size() >= 2) {
      const Matrix table = inner_product_table(f);
      double max_off = -1.0;
      for (Eigen::Index i = 0; i < table.rows(); ++i) {
        for (Eigen::Index j = 0; j < table.cols(); ++j) {
          if (i != j) max_off = std::max(max_off, table(i, j));
        }
      }
      const double rhs = simplex_bound_rhs(f);
      r["max_off_diagonal"] = max_off;
      r["simplex_bound_rhs"] = rhs;
      r["simplex_equality"] = simplex_equality(f);
      ok = ok && max_off >= rhs - t;
    }
    if (f.common_dim() == 0) {
      MomentOptions opts;
      opts.mc_samples = budget(a.mc_budget);
      opts.threads = g.threads;
      const TMatrix tm = t_matrix(f.ambient_dim(), a.p, opts, rng);
      const MixedBound mb = ffp_lower_bound_mixed(f, tm);
      r["mixed_bound"] = mb.value;
      r["mixed_bound_error"] = mb.error;
      ok = ok && pr.value >= mb.value - 3.0 * mb.error - t;
      tol["mc_budget"] = opts.mc_samples;
    }
    const auto [lo, hi] = sphere_extrema(f, a.p, a.restarts, rng);
    r["frame_bound_A_est"] = lo;
    r["frame_bound_B_est"] = hi;
    r["verdict"] = ok ? "bounds hold" : "bound violated";
    tol["bound"] = t;
    code = ok ? kExitOk : kExitNegative;
  } else {
    throw Error(Errc::ParameterError, "unknown mode '" + a.mode + "'");
  }
  r["tolerances"] = tol;
  r["seed"] = g.seed;
  finish(r, start, out);
  return code;
}

int cmd_gen(const GenArgs& a, const Globals& g, const std::vector<std::string>& args, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  std::string digest_input;
  std::optional<WeightedFrame> frame;
  Rng rng(g.seed);

  if (a.kind == "catalog") {
    digest_input = a.name;
    frame = catalog(a.name);
  } else if (a.kind == "orbit") {
    digest_input = read_text_file(a.generators);
    const MatrixGroup group = close_group(parse_generators_json(digest_input));
    const bool by_angle = !std::isnan(a.seed_angle);
    if (by_angle == (a.seed_dim > 0)) {
      throw Error(Errc::ParameterError, "gen orbit needs exactly one of --seed-dim or --seed-angle");
    }
    if (by_angle) {
      if (group.d != 2) throw Error(Errc::DimensionError, "--seed-angle needs a group acting on R^2");
      frame = orbit_frame(group, line_at_angle(a.seed_angle * std::numbers::pi / 180.0));
    } else {
      frame = orbit_frame(group, haar_random(group.d, a.seed_dim, rng));
    }
  } else if (a.kind == "extend") {
    const std::string inner_text = read_text_file(a.inner);
    const std::string outer_text = read_text_file(a.outer);
    digest_input = inner_text + outer_text;
    frame = extend(parse_frame_json(inner_text).frame, parse_frame_json(outer_text).frame);
  } else if (a.kind == "realify") {
    digest_input = read_text_file(a.lines);
    frame = realify(parse_complex_lines_json(digest_input));
  } else {
    throw Error(Errc::ParameterError, "unknown generator '" + a.kind + "'");
  }

  const std::string json = frame_to_json(*frame);
  if (a.out.empty()) {
    out << json << '\n';
    return kExitOk;
  }
  write_text(a.out, json + "\n");
  ojson r = report_head(args, digest_input);
  r["output"] = a.out;
  r["ambient_dim"] = frame->ambient_dim();
  r["size"] = frame->size();
  r["seed"] = g.seed;
  finish(r, start, out);
  return kExitOk;
}

int cmd_moments(const MomentArgs& a, const Globals& g, std::ostream& out) {
  MomentOptions opts;
  opts.method = parse_method(a.method);
  opts.mc_samples = budget(a.mc_budget);
  opts.threads = g.threads;
  opts.quadrature_nodes = a.nodes;
  Rng rng(g.seed);
  const TMatrix t = t_matrix(a.d, a.p, opts, rng);
  std::ostringstream csv;
  csv << std::setprecision(17);
  csv << "k,l,p,value,error,method\n";
  for (int k = 1; k < a.d; ++k) {
    for (int l = 1; l < a.d; ++l) {
      const MomentEstimate& e = t.at(k, l);
      csv << k << ',' << l << ',' << a.p << ',' << e.value << ',' << e.error << ',' << to_string(e.method) << '\n';
    }
  }
  out << csv.str();
  return kExitOk;
}

int cmd_optimize(OptimizeArgs a, const Globals& g, const std::vector<std::string>& args, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  a.cfg.threads = g.threads;
  a.cfg.moments.mc_samples = budget(a.mc_budget);
  a.cfg.moments.threads = g.threads;
  Rng rng(g.seed);
  const OptimizerTrace tr = minimize_ffp(a.cfg, rng);

  if (!a.out.empty()) write_text(a.out, frame_to_json(tr.frame) + "\n");
  if (!a.trace.empty()) {
    std::ostringstream csv;
    csv << std::setprecision(17) << "iteration,ffp\n";
    for (std::size_t i = 0; i < tr.ffp.size(); ++i) csv << i << ',' << tr.ffp[i] << '\n';
    write_text(a.trace, csv.str());
  }

  const TightnessCertificate cert = certify_tight(tr.frame, a.cfg.p, 1e-6);
  ojson r = report_head(args, join(args));
  r["config"] = {{"n", a.cfg.n},          {"k", a.cfg.k},
                 {"d", a.cfg.d},          {"p", a.cfg.p},
                 {"restarts", a.cfg.restarts}, {"max_iters", a.cfg.max_iters},
                 {"step", a.cfg.step},    {"tol_grad", a.cfg.tol_grad},
                 {"target_margin", a.cfg.target_margin}};
  r["verdict"] = tr.success ? "success" : "failure";
  r["final_ffp"] = tr.final_ffp;
  r["t_value"] = tr.t_value;
  r["t_error"] = tr.t_error;
  r["margin"] = tr.margin;
  r["best_restart"] = tr.best_restart;
  r["iterations"] = tr.ffp.size() - 1;
  r["grad_norm"] = tr.grad_norm;
  r["restart_ffp"] = tr.restart_ffp;
  r["tight_residual"] = cert.residual;
  r["tight_certified"] = cert.tight;
  if (a.out.empty()) r["frame"] = ojson::parse(frame_to_json(tr.frame));
  r["tolerances"] = {{"target_margin", a.cfg.target_margin}, {"tight", 1e-6}};
  r["seed"] = g.seed;
  finish(r, start, out);
  return tr.success ? kExitOk : kExitNegative;
}

}  // namespace

std::uint64_t fnv1a(const std::string& bytes, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tight p-fusion frames: certification, moments, constructions, optimization"};
  app.name("fusionframe");
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "Seed for all randomness")->capture_default_str();
  app.add_option("--threads", g.threads, "Worker threads (0 = hardware concurrency)")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);

  CheckArgs ca;
  auto* check = app.add_subcommand("check", "Certify a frame file");
  check->add_option("file", ca.file, "Frame JSON")->required();
  check->add_option("--p", ca.p, "Power p")->required()->check(CLI::PositiveNumber);
  check->add_option("--mode", ca.mode, "tight | cubature | equiangular | bounds")
      ->capture_default_str()
      ->check(CLI::IsMember({"tight", "cubature", "equiangular", "bounds"}));
  check->add_option("--tol", ca.tol, "Tolerance (mode default when omitted)");
  check->add_option("--mc-budget", ca.mc_budget, "Monte-Carlo samples per moment")->capture_default_str();
  check->add_option("--probes", ca.probes, "Random probe subspaces for cubature mode")->capture_default_str();
  check->add_option("--restarts", ca.restarts, "Sphere restarts for bounds mode")->capture_default_str();

  GenArgs ga;
  auto* gen = app.add_subcommand("gen", "Generate a frame");
  gen->require_subcommand(1);
  auto* gen_catalog = gen->add_subcommand("catalog", "Built-in frame");
  gen_catalog->add_option("name", ga.name, "Catalog name")->required();
  auto* gen_orbit = gen->add_subcommand("orbit", "Orbit of a seed subspace under a finite group");
  gen_orbit->add_option("--generators", ga.generators, "Generator JSON file")->required();
  auto* seed_dim = gen_orbit->add_option("--seed-dim", ga.seed_dim, "Random seed subspace of this dimension");
  auto* seed_angle = gen_orbit->add_option("--seed-angle", ga.seed_angle, "Seed line at this angle (degrees), R^2 only");
  seed_dim->excludes(seed_angle);
  auto* gen_extend = gen->add_subcommand("extend", "Fit an inner frame into every subspace of an outer one");
  gen_extend->add_option("--inner", ga.inner, "Frame in R^l")->required();
  gen_extend->add_option("--outer", ga.outer, "Frame of l-dimensional subspaces")->required();
  auto* gen_realify = gen->add_subcommand("realify", "Complex lines to real 2-planes");
  gen_realify->add_option("--lines", ga.lines, "Complex line JSON file")->required();
  for (auto* sub : {gen_catalog, gen_orbit, gen_extend, gen_realify}) {
    sub->add_option("--out", ga.out, "Write the frame here and print a report instead");
  }

  MomentArgs ma;
  auto* moments = app.add_subcommand("moments", "Table of Grassmannian moments T_{k,l,d}(p) as CSV");
  moments->add_option("--d", ma.d, "Ambient dimension")->required()->check(CLI::Range(2, 64));
  moments->add_option("--p", ma.p, "Power p")->required()->check(CLI::PositiveNumber);
  moments->add_option("--mc-budget", ma.mc_budget, "Monte-Carlo samples per entry")->capture_default_str();
  moments->add_option("--method", ma.method, "auto | closed-form | quadrature | monte-carlo")
      ->capture_default_str()
      ->check(CLI::IsMember({"auto", "closed-form", "quadrature", "monte-carlo"}));
  moments->add_option("--nodes", ma.nodes, "Quadrature nodes per axis")->capture_default_str();

  OptimizeArgs oa;
  auto* optimize = app.add_subcommand("optimize", "Search for a cubature by minimizing the potential");
  optimize->add_option("--n", oa.cfg.n, "Number of subspaces")->required();
  optimize->add_option("--k", oa.cfg.k, "Subspace dimension")->required();
  optimize->add_option("--d", oa.cfg.d, "Ambient dimension")->required();
  optimize->add_option("--p", oa.cfg.p, "Power p")->required();
  optimize->add_option("--restarts", oa.cfg.restarts)->capture_default_str();
  optimize->add_option("--max-iters", oa.cfg.max_iters)->capture_default_str();
  optimize->add_option("--step", oa.cfg.step)->capture_default_str();
  optimize->add_option("--tol-grad", oa.cfg.tol_grad)->capture_default_str();
  optimize->add_option("--target-margin", oa.cfg.target_margin)->capture_default_str();
  optimize->add_option("--mc-budget", oa.mc_budget, "Monte-Carlo samples if T needs sampling")->capture_default_str();
  optimize->add_option("--out", oa.out, "Frame JSON output (embedded in the report when omitted)");
  optimize->add_option("--trace", oa.trace, "CSV trace output (iteration,ffp)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitError;
  }

  try {
    if (*check) return cmd_check(ca, g, args, out);
    if (*gen) {
      for (auto* sub : gen->get_subcommands()) ga.kind = sub->get_name();
      return cmd_gen(ga, g, args, out);
    }
    if (*moments) return cmd_moments(ma, g, out);
    if (*optimize) return cmd_optimize(oa, g, args, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: ParseError: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace fusion::cli
