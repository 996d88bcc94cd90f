#include "fusion/frame.hpp"

#include "fusion/combinatorics.hpp"
#include "fusion/error.hpp"

#include <cmath>
#include <string>

namespace fusion {

WeightedFrame::WeightedFrame(std::vector<FrameEntry> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw Error(Errc::LengthMismatch, "a frame needs at least one subspace");
  d_ = entries_.front().subspace.ambient_dim();
  for (const auto& e : entries_) {
    if (e.subspace.ambient_dim() != d_) {
      throw Error(Errc::DimensionError, "frame subspaces live in different ambient spaces");
    }
    if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
      throw Error(Errc::ParameterError, "frame weights must be positive and finite");
    }
  }
}

WeightedFrame WeightedFrame::uniform(std::vector<Subspace> subspaces, double weight) {
  std::vector<FrameEntry> entries;
  entries.reserve(subspaces.size());
  for (auto& s : subspaces) entries.push_back({std::move(s), weight});
  return WeightedFrame(std::move(entries));
}

double WeightedFrame::total_weight() const {
  double s = 0.0;
  for (const auto& e : entries_) s += e.weight;
  return s;
}

double WeightedFrame::weighted_dimension() const {
  double s = 0.0;
  for (const auto& e : entries_) s += e.weight * e.subspace.dim();
  return s;
}

std::vector<double> WeightedFrame::dimension_masses() const {
  std::vector<double> m(static_cast<std::size_t>(d_ - 1), 0.0);
  for (const auto& e : entries_) m[static_cast<std::size_t>(e.subspace.dim() - 1)] += e.weight;
  return m;
}

int WeightedFrame::common_dim() const {
  const int k = entries_.front().subspace.dim();
  for (const auto& e : entries_) {
    if (e.subspace.dim() != k) return 0;
  }
  return k;
}

WeightedFrame WeightedFrame::with_weights(const std::vector<double>& weights) const {
  if (weights.size() != entries_.size()) {
    throw Error(Errc::LengthMismatch, "weight list length differs from frame size");
  }
  std::vector<FrameEntry> out;
  out.reserve(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) out.push_back({entries_[i].subspace, weights[i]});
  return WeightedFrame(std::move(out));
}

WeightedFrame WeightedFrame::normalized() const {
  const double total = total_weight();
  std::vector<double> w;
  w.reserve(entries_.size());
  for (const auto& e : entries_) w.push_back(e.weight / total);
  return with_weights(w);
}

Matrix frame_operator(const WeightedFrame& f) {
  const int d = f.ambient_dim();
  Matrix s = Matrix::Zero(d, d);
  for (const auto& e : f.entries()) {
    const Matrix& b = e.subspace.basis();
    s.noalias() += e.weight * (b * b.transpose());
  }
  return 0.5 * (s + s.transpose());
}

std::vector<Vector> analysis(const WeightedFrame& f, const Vector& x) {
  if (x.size() != f.ambient_dim()) throw Error(Errc::DimensionError, "vector length != ambient dim");
  std::vector<Vector> out;
  out.reserve(f.size());
  for (const auto& e : f.entries()) {
    const Matrix& b = e.subspace.basis();
    out.emplace_back(b * (b.transpose() * x));
  }
  return out;
}

Vector synthesis(const WeightedFrame& f, const std::vector<Vector>& parts) {
  if (parts.size() != f.size()) {
    throw Error(Errc::LengthMismatch, "expected " + std::to_string(f.size()) + " components, got " +
                                          std::to_string(parts.size()));
  }
  Vector out = Vector::Zero(f.ambient_dim());
  for (std::size_t j = 0; j < parts.size(); ++j) {
    if (parts[j].size() != f.ambient_dim()) {
      throw Error(Errc::DimensionError, "component length != ambient dim");
    }
    out += f[j].weight * parts[j];
  }
  return out;
}

Vector reconstruct(const WeightedFrame& f, const std::vector<Vector>& parts) {
  const Matrix s = frame_operator(f);
  Eigen::SelfAdjointEigenSolver<Matrix> eig(s);
  if (eig.eigenvalues().minCoeff() <= 1e-10) {
    throw Error(Errc::NotAFrame, "frame operator is singular (lower frame bound 0)");
  }
  return s.ldlt().solve(synthesis(f, parts));
}

namespace {

void guard_power_form(int d, int p) {
  if (p < 1) throw Error(Errc::ParameterError, "p must be >= 1");
  const std::uint64_t n = monomial_count(d, 2 * p);
  if (n > kPowerFormMonomialLimit) {
    throw Error(Errc::SizeGuardExceeded, "C(d+2p-1, 2p) = " + std::to_string(n) +
                                             " monomials exceeds the expansion guard");
  }
}

}  // namespace

HomogeneousPoly power_form(const WeightedFrame& f, int p) {
  const int d = f.ambient_dim();
  guard_power_form(d, p);
  HomogeneousPoly total(d, 2 * p);
  for (const auto& e : f.entries()) {
    HomogeneousPoly term = HomogeneousPoly::quadratic_form(projector(e.subspace)).pow(p);
    term *= e.weight;
    total += term;
  }
  return total;
}

double tightness_constant(const WeightedFrame& f, int p) {
  const int d = f.ambient_dim();
  const std::vector<double> masses = f.dimension_masses();
  const double denom = pochhammer(d / 2.0, p);
  double a = 0.0;
  for (int k = 1; k < d; ++k) {
    const double mk = masses[static_cast<std::size_t>(k - 1)];
    if (mk != 0.0) a += mk * pochhammer(k / 2.0, p) / denom;
  }
  return a;
}

TightnessCertificate certify_tight(const WeightedFrame& f, int p, double tol) {
  TightnessCertificate cert;
  cert.p = p;
  cert.tolerance = tol;
  cert.target_A = tightness_constant(f, p);
  HomogeneousPoly diff = power_form(f, p);
  HomogeneousPoly sphere = HomogeneousPoly::sphere_power(f.ambient_dim(), p);
  sphere *= cert.target_A;
  diff -= sphere;
  cert.residual = diff.max_abs_coeff();
  cert.tight = cert.residual <= tol;
  return cert;
}

WeightedFrame reweight_down(const WeightedFrame& f, int p) {
  if (p < 2) throw Error(Errc::ParameterError, "reweighting needs p >= 2");
  std::vector<double> w;
  w.reserve(f.size());
  for (const auto& e : f.entries()) w.push_back(e.weight * (p - 1 + e.subspace.dim() / 2.0));
  return f.with_weights(w);
}

WeightedFrame complement_frame(const WeightedFrame& f) {
  if (f.common_dim() == 0) {
    throw Error(Errc::MixedDimensions, "complement theorem needs equal subspace dimensions");
  }
  std::vector<FrameEntry> out;
  out.reserve(f.size());
  for (const auto& e : f.entries()) out.push_back({complement(e.subspace), e.weight});
  return WeightedFrame(std::move(out));
}

WeightedFrame frame_union(const WeightedFrame& a, const WeightedFrame& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw Error(Errc::DimensionError, "union of frames in different ambient spaces");
  }
  std::vector<FrameEntry> out(a.entries());
  out.insert(out.end(), b.entries().begin(), b.entries().end());
  return WeightedFrame(std::move(out));
}

}  // namespace fusion
