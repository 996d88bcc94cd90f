#include "fusion/io.hpp"

#include "fusion/constructions.hpp"
#include "fusion/error.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

namespace fusion {

using json = nlohmann::json;

namespace {

json parse_or_throw(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

double as_number(const json& j, const char* what) {
  if (!j.is_number()) throw Error(Errc::ParseError, std::string(what) + " must be a number");
  return j.get<double>();
}

Matrix square_matrix(const json& j) {
  if (!j.is_array() || j.empty()) throw Error(Errc::ParseError, "matrix must be a non-empty array");
  if (j.front().is_array()) {
    const auto d = static_cast<Eigen::Index>(j.size());
    Matrix m(d, d);
    for (Eigen::Index r = 0; r < d; ++r) {
      const json& row = j[static_cast<std::size_t>(r)];
      if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != d) {
        throw Error(Errc::ParseError, "generator rows must have length d");
      }
      for (Eigen::Index c = 0; c < d; ++c) m(r, c) = as_number(row[static_cast<std::size_t>(c)], "entry");
    }
    return m;
  }
  const auto n = static_cast<Eigen::Index>(j.size());
  const auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(n))));
  if (d * d != n) throw Error(Errc::ParseError, "flat generator length is not a perfect square");
  Matrix m(d, d);
  for (Eigen::Index r = 0; r < d; ++r) {
    for (Eigen::Index c = 0; c < d; ++c) m(r, c) = as_number(j[static_cast<std::size_t>(r * d + c)], "entry");
  }
  return m;
}

}  // namespace

FrameReadResult parse_frame_json(const std::string& text) {
  const json doc = parse_or_throw(text);
  if (!doc.is_object() || !doc.contains("ambient_dim") || !doc.contains("entries")) {
    throw Error(Errc::ParseError, "frame JSON needs 'ambient_dim' and 'entries'");
  }
  const int d = static_cast<int>(as_number(doc["ambient_dim"], "ambient_dim"));
  if (d < 2) throw Error(Errc::DimensionError, "ambient_dim must be >= 2");
  const json& entries = doc["entries"];
  if (!entries.is_array() || entries.empty()) {
    throw Error(Errc::ParseError, "'entries' must be a non-empty array");
  }
  std::vector<FrameEntry> out;
  double worst = 0.0;
  for (const json& e : entries) {
    if (!e.is_object() || !e.contains("basis") || !e.contains("weight")) {
      throw Error(Errc::ParseError, "each entry needs 'basis' and 'weight'");
    }
    const json& cols = e["basis"];
    if (!cols.is_array() || cols.empty()) throw Error(Errc::ParseError, "'basis' must list columns");
    Matrix raw(d, static_cast<Eigen::Index>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (!cols[c].is_array() || static_cast<int>(cols[c].size()) != d) {
        throw Error(Errc::DimensionError, "basis column length differs from ambient_dim");
      }
      for (int r = 0; r < d; ++r) raw(r, static_cast<Eigen::Index>(c)) = as_number(cols[c][static_cast<std::size_t>(r)], "basis entry");
    }
    Subspace s = make_subspace(raw);
    const double correction = (s.basis() - raw).cwiseAbs().maxCoeff();
    if (correction > kMaxBasisCorrection) {
      throw Error(Errc::ParseError, "basis is not orthonormal (correction " + std::to_string(correction) + ")");
    }
    worst = std::max(worst, correction);
    out.push_back({std::move(s), as_number(e["weight"], "weight")});
  }
  return {WeightedFrame(std::move(out)), worst};
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

FrameReadResult read_frame_file(const std::string& path) { return parse_frame_json(read_text_file(path)); }

std::string frame_to_json(const WeightedFrame& f, int indent) {
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const auto& e : f.entries()) {
    nlohmann::ordered_json cols = nlohmann::ordered_json::array();
    const Matrix& b = e.subspace.basis();
    for (Eigen::Index c = 0; c < b.cols(); ++c) {
      nlohmann::ordered_json col = nlohmann::ordered_json::array();
      for (Eigen::Index r = 0; r < b.rows(); ++r) col.push_back(b(r, c));
      cols.push_back(std::move(col));
    }
    nlohmann::ordered_json entry = nlohmann::ordered_json::object();
    entry["basis"] = std::move(cols);
    entry["weight"] = e.weight;
    entries.push_back(std::move(entry));
  }
  nlohmann::ordered_json doc;
  doc["ambient_dim"] = f.ambient_dim();
  doc["entries"] = std::move(entries);
  return doc.dump(indent) + "\n";
}

void write_frame_file(const WeightedFrame& f, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::ParseError, "cannot write " + path);
  out << frame_to_json(f);
}

std::vector<Matrix> parse_generators_json(const std::string& text) {
  const json doc = parse_or_throw(text);
  if (!doc.is_array() || doc.empty()) throw Error(Errc::ParseError, "generator file must be a non-empty list");
  std::vector<Matrix> gens;
  for (const json& m : doc) gens.push_back(square_matrix(m));
  for (const auto& g : gens) {
    if (g.rows() != gens.front().rows()) throw Error(Errc::DimensionError, "generators of different sizes");
  }
  return gens;
}

ComplexLineSet parse_complex_lines_json(const std::string& text) {
  const json doc = parse_or_throw(text);
  if (!doc.is_array() || doc.empty()) throw Error(Errc::ParseError, "line file must be a non-empty list");
  std::vector<std::vector<std::complex<double>>> vectors;
  for (const json& v : doc) {
    if (!v.is_array() || v.size() % 2 != 0 || v.empty()) {
      throw Error(Errc::ParseError, "each line must be an even-length real array");
    }
    std::vector<std::complex<double>> z(v.size() / 2);
    for (std::size_t i = 0; i < z.size(); ++i) {
      z[i] = {as_number(v[2 * i], "re"), as_number(v[2 * i + 1], "im")};
    }
    vectors.push_back(std::move(z));
  }
  return ComplexLineSet::from_vectors(std::move(vectors));
}

}  // namespace fusion
