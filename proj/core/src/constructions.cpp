#include "fusion/constructions.hpp"

#include "fusion/error.hpp"

#include <cmath>
#include <deque>
#include <map>
#include <numbers>
#include <regex>

namespace fusion {

namespace {

constexpr double kOrthogonalTol = 1e-10;
constexpr double kElementTol = 1e-8;

/// Fixed pseudo-random linear functional on matrices used to bucket group
/// elements before the exact max-norm comparison.
class ElementIndex {
 public:
  explicit ElementIndex(int d) : probe_(d, d) {
    std::mt19937_64 gen(0x5eedULL);
    std::uniform_real_distribution<double> u(0.5, 1.5);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) probe_(i, j) = u(gen);
    }
    radius_ = kElementTol * probe_.sum();
  }

  /// Index of a stored element within kElementTol of m, or -1.
  long find(const Matrix& m, const std::vector<Matrix>& store) const {
    const double key = signature(m);
    for (auto it = buckets_.lower_bound(key - radius_); it != buckets_.end() && it->first <= key + radius_; ++it) {
      if ((store[it->second] - m).cwiseAbs().maxCoeff() <= kElementTol) return static_cast<long>(it->second);
    }
    return -1;
  }

  void insert(const Matrix& m, std::size_t index) { buckets_.emplace(signature(m), index); }

 private:
  double signature(const Matrix& m) const { return m.cwiseProduct(probe_).sum(); }

  Matrix probe_;
  double radius_ = 0.0;
  std::multimap<double, std::size_t> buckets_;
};

}  // namespace

MatrixGroup close_group(const std::vector<Matrix>& generators, std::size_t max_order) {
  if (generators.empty()) throw Error(Errc::ParameterError, "at least one generator is required");
  const Eigen::Index d = generators.front().rows();
  for (const auto& g : generators) {
    if (g.rows() != d || g.cols() != d) throw Error(Errc::DimensionError, "generators must be square of equal size");
    const double defect = (g.transpose() * g - Matrix::Identity(d, d)).cwiseAbs().maxCoeff();
    if (defect > kOrthogonalTol) {
      throw Error(Errc::NotOrthogonal, "generator is not orthogonal (defect " + std::to_string(defect) + ")");
    }
  }

  MatrixGroup group;
  group.d = static_cast<int>(d);
  group.generators = generators;
  ElementIndex index(group.d);
  group.elements.push_back(Matrix::Identity(d, d));
  index.insert(group.elements.back(), 0);

  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const Matrix h = group.elements[queue.front()];
    queue.pop_front();
    for (const auto& g : generators) {
      Matrix prod = g * h;
      if (index.find(prod, group.elements) >= 0) continue;
      if (group.elements.size() >= max_order) {
        throw Error(Errc::GroupTooLarge, "group order exceeds " + std::to_string(max_order));
      }
      group.elements.push_back(std::move(prod));
      index.insert(group.elements.back(), group.elements.size() - 1);
      queue.push_back(group.elements.size() - 1);
    }
  }
  return group;
}

Matrix monomial_action(const Matrix& g, int degree) {
  const int d = static_cast<int>(g.rows());
  const auto monomials = enumerate_monomials(d, degree);
  std::map<Exponent, Eigen::Index> position;
  for (std::size_t i = 0; i < monomials.size(); ++i) position.emplace(monomials[i], static_cast<Eigen::Index>(i));

  // powers[i][m] = (row i of g applied to x)^m
  std::vector<std::vector<HomogeneousPoly>> powers(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    HomogeneousPoly lin(d, 1);
    for (int j = 0; j < d; ++j) {
      Exponent e(static_cast<std::size_t>(d), 0);
      e[static_cast<std::size_t>(j)] = 1;
      lin.add_term(e, g(i, j));
    }
    auto& row = powers[static_cast<std::size_t>(i)];
    row.push_back(HomogeneousPoly::sphere_power(d, 0));
    for (int m = 1; m <= degree; ++m) row.push_back(row.back() * lin);
  }

  const auto n = static_cast<Eigen::Index>(monomials.size());
  Matrix action = Matrix::Zero(n, n);
  for (Eigen::Index col = 0; col < n; ++col) {
    const Exponent& e = monomials[static_cast<std::size_t>(col)];
    HomogeneousPoly image = HomogeneousPoly::sphere_power(d, 0);
    for (int i = 0; i < d; ++i) {
      const int m = e[static_cast<std::size_t>(i)];
      if (m > 0) image = image * powers[static_cast<std::size_t>(i)][static_cast<std::size_t>(m)];
    }
    for (const auto& [exp, c] : image.coeffs()) action(position.at(exp), col) = c;
  }
  return action;
}

Matrix reynolds_operator(const MatrixGroup& group, int p) {
  if (p < 1) throw Error(Errc::ParameterError, "p must be >= 1");
  const std::uint64_t count = monomial_count(group.d, 2 * p);
  if (count > kReynoldsMonomialLimit) {
    throw Error(Errc::SizeGuardExceeded, std::to_string(count) + " monomials of degree " +
                                             std::to_string(2 * p) + " exceed the Reynolds guard");
  }
  const auto n = static_cast<Eigen::Index>(count);
  Matrix r = Matrix::Zero(n, n);
  for (const auto& g : group.elements) r += monomial_action(g, 2 * p);
  return r / static_cast<double>(group.order());
}

InvarianceReport invariance_check(const MatrixGroup& group, int p) {
  const Matrix r = reynolds_operator(group, p);
  Eigen::ColPivHouseholderQR<Matrix> qr(r);
  qr.setThreshold(1e-9);
  InvarianceReport rep;
  rep.p = p;
  rep.invariant_dim = static_cast<int>(qr.rank());
  rep.trace = r.trace();
  rep.passes = rep.invariant_dim == 1;
  return rep;
}

WeightedFrame orbit_frame(const MatrixGroup& group, const Subspace& seed) {
  if (seed.ambient_dim() != group.d) {
    throw Error(Errc::DimensionError, "seed lives in R^" + std::to_string(seed.ambient_dim()) +
                                          " but the group acts on R^" + std::to_string(group.d));
  }
  std::vector<Subspace> orbit;
  for (const auto& g : group.elements) {
    Subspace image = make_subspace(g * seed.basis());
    bool seen = false;
    for (const auto& s : orbit) {
      if (same_subspace(s, image, kElementTol)) {
        seen = true;
        break;
      }
    }
    if (!seen) orbit.push_back(std::move(image));
  }
  return WeightedFrame::uniform(std::move(orbit));
}

WeightedFrame extend(const WeightedFrame& inner, const WeightedFrame& outer) {
  const int l = inner.ambient_dim();
  std::vector<FrameEntry> entries;
  entries.reserve(inner.size() * outer.size());
  for (const auto& w : outer.entries()) {
    if (w.subspace.dim() != l) {
      throw Error(Errc::DimensionError, "outer subspaces must have dimension " + std::to_string(l) +
                                            ", found " + std::to_string(w.subspace.dim()));
    }
    for (const auto& v : inner.entries()) {
      entries.push_back({make_subspace(w.subspace.basis() * v.subspace.basis()), w.weight * v.weight});
    }
  }
  return WeightedFrame(std::move(entries));
}

ComplexLineSet ComplexLineSet::from_vectors(std::vector<std::vector<std::complex<double>>> vectors) {
  if (vectors.empty()) throw Error(Errc::ParameterError, "complex line set is empty");
  const std::size_t d = vectors.front().size();
  if (d < 2) throw Error(Errc::DimensionError, "complex lines need d_complex >= 2");
  for (const auto& z : vectors) {
    if (z.size() != d) throw Error(Errc::LengthMismatch, "complex vectors have different lengths");
    double norm = 0.0;
    for (const auto& c : z) norm += std::norm(c);
    if (std::abs(norm - 1.0) > 1e-12) throw Error(Errc::ParameterError, "complex vector is not unit length");
  }
  ComplexLineSet set;
  set.d_complex = static_cast<int>(d);
  set.vectors = std::move(vectors);
  return set;
}

Vector realify_vector(const std::vector<std::complex<double>>& z) {
  Vector v(2 * static_cast<Eigen::Index>(z.size()));
  for (std::size_t i = 0; i < z.size(); ++i) {
    v(2 * static_cast<Eigen::Index>(i)) = z[i].real();
    v(2 * static_cast<Eigen::Index>(i) + 1) = z[i].imag();
  }
  return v;
}

WeightedFrame realify(const ComplexLineSet& lines) {
  const std::complex<double> i_unit(0.0, 1.0);
  std::vector<Subspace> planes;
  for (const auto& z : lines.vectors) {
    std::vector<std::complex<double>> iz(z.size());
    for (std::size_t j = 0; j < z.size(); ++j) iz[j] = i_unit * z[j];
    Matrix basis(2 * lines.d_complex, 2);
    basis.col(0) = realify_vector(z);
    basis.col(1) = realify_vector(iz);
    planes.push_back(make_subspace(basis));
  }
  return WeightedFrame::uniform(std::move(planes));
}

ComplexLineSet mub_c2() {
  using C = std::complex<double>;
  const double r = 1.0 / std::sqrt(2.0);
  return ComplexLineSet::from_vectors({
      {C(1, 0), C(0, 0)},
      {C(0, 0), C(1, 0)},
      {C(r, 0), C(r, 0)},
      {C(r, 0), C(-r, 0)},
      {C(r, 0), C(0, r)},
      {C(r, 0), C(0, -r)},
  });
}

Matrix reflection(const Vector& normal) {
  const double nn = normal.squaredNorm();
  if (nn <= 0.0) throw Error(Errc::ParameterError, "reflection normal must be nonzero");
  return Matrix::Identity(normal.size(), normal.size()) - 2.0 * normal * normal.transpose() / nn;
}

Matrix rotation2(double radians) {
  Matrix r(2, 2);
  r << std::cos(radians), -std::sin(radians), std::sin(radians), std::cos(radians);
  return r;
}

std::vector<Matrix> weyl_a2_generators() {
  // Reflections in the lines at 0 and 60 degrees have normals at 90 and 150 degrees.
  const double a = std::numbers::pi / 2.0;
  const double b = 5.0 * std::numbers::pi / 6.0;
  Vector n1(2), n2(2);
  n1 << std::cos(a), std::sin(a);
  n2 << std::cos(b), std::sin(b);
  return {reflection(n1), reflection(n2)};
}

std::vector<Matrix> weyl_d4_generators() {
  std::vector<Matrix> gens;
  const double roots[4][4] = {{1, -1, 0, 0}, {0, 1, -1, 0}, {0, 0, 1, -1}, {0, 0, 1, 1}};
  for (const auto& r : roots) gens.push_back(reflection(Eigen::Map<const Vector>(r, 4)));
  return gens;
}

std::vector<Matrix> weyl_f4_generators() {
  std::vector<Matrix> gens;
  const double roots[4][4] = {{0, 1, -1, 0}, {0, 0, 1, -1}, {0, 0, 0, 1}, {0.5, -0.5, -0.5, -0.5}};
  for (const auto& r : roots) gens.push_back(reflection(Eigen::Map<const Vector>(r, 4)));
  return gens;
}

std::vector<Matrix> hyperoctahedral_generators(int d) {
  if (d < 1) throw Error(Errc::DimensionError, "d must be >= 1");
  std::vector<Matrix> gens;
  for (int i = 0; i + 1 < d; ++i) {
    Vector n = Vector::Zero(d);
    n(i) = 1.0;
    n(i + 1) = -1.0;
    gens.push_back(reflection(n));
  }
  Vector last = Vector::Zero(d);
  last(d - 1) = 1.0;
  gens.push_back(reflection(last));
  return gens;
}

namespace {

WeightedFrame equispaced_lines(int n) {
  std::vector<Subspace> lines;
  for (int j = 0; j < n; ++j) lines.push_back(line_at_angle(std::numbers::pi * j / n));
  return WeightedFrame::uniform(std::move(lines));
}

WeightedFrame cross_polytope_lines(int d) {
  std::vector<Subspace> lines;
  for (int i = 0; i < d; ++i) lines.push_back(coordinate_subspace(d, {i}));
  return WeightedFrame::uniform(std::move(lines));
}

int parse_argument(const std::string& name, const std::smatch& m) {
  try {
    return std::stoi(m[1].str());
  } catch (const std::exception&) {
    throw Error(Errc::UnknownName, "bad catalog argument in '" + name + "'");
  }
}

}  // namespace

CatalogEntry catalog_entry(const std::string& name) {
  static const std::regex equispaced(R"(equispaced-lines\((\d+)\))");
  static const std::regex cross(R"(cross-polytope-lines\((\d+)\))");
  static const std::regex weyl(R"(weyl-a2-orbit\((-?\d+)\))");
  std::smatch m;

  if (name == "mercedes") {
    return {equispaced_lines(3), 2, true, "three lines in R^2 at 60 degrees"};
  }
  if (name == "mub-planes-r4") {
    return {realify(mub_c2()), 3, true, "realified mutually unbiased bases of C^2: six 2-planes in R^4"};
  }
  if (std::regex_match(name, m, equispaced)) {
    const int n = parse_argument(name, m);
    if (n < 2) throw Error(Errc::UnknownName, "equispaced-lines needs n >= 2");
    return {equispaced_lines(n), n - 1, true, std::to_string(n) + " equispaced lines in R^2"};
  }
  if (std::regex_match(name, m, cross)) {
    const int d = parse_argument(name, m);
    if (d < 2) throw Error(Errc::UnknownName, "cross-polytope-lines needs d >= 2");
    return {cross_polytope_lines(d), 1, true, "coordinate axes of R^" + std::to_string(d)};
  }
  if (std::regex_match(name, m, weyl)) {
    const int deg = parse_argument(name, m);
    const MatrixGroup g = close_group(weyl_a2_generators());
    WeightedFrame f = orbit_frame(g, line_at_angle(deg * std::numbers::pi / 180.0));
    const int r = ((deg % 30) + 30) % 30;
    // Seeds on a mirror give three lines; seeds halfway between mirrors give
    // six equispaced lines; otherwise the orbit is two rotated Mercedes frames.
    const int order = r == 15 ? 5 : 2;
    return {std::move(f), order, true, "orbit of the line at " + std::to_string(deg) + " degrees under Weyl(A2)"};
  }
  throw Error(Errc::UnknownName, "unknown catalog frame '" + name + "'");
}

WeightedFrame catalog(const std::string& name) { return catalog_entry(name).frame; }

std::vector<std::string> catalog_names() {
  std::vector<std::string> names{"mercedes", "mub-planes-r4"};
  for (int n = 2; n <= 8; ++n) names.push_back("equispaced-lines(" + std::to_string(n) + ")");
  for (int d = 2; d <= 5; ++d) names.push_back("cross-polytope-lines(" + std::to_string(d) + ")");
  for (int deg : {0, 15, 20}) names.push_back("weyl-a2-orbit(" + std::to_string(deg) + ")");
  return names;
}

}  // namespace fusion
