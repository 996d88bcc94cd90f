#pragma once

#include "fusion/frame.hpp"

#include <string>
#include <vector>

namespace fusion {

struct ComplexLineSet;

/// Largest entrywise change made by re-orthonormalizing the stored bases.
/// Readers reject files whose correction exceeds this.
inline constexpr double kMaxBasisCorrection = 1e-6;

struct FrameReadResult {
  WeightedFrame frame;
  double max_correction = 0.0;
};

/// Frame JSON:
///   {"ambient_dim": d,
///    "entries": [{"basis": [[col_1], ..., [col_k]], "weight": w}, ...]}
/// Each basis is a list of k columns of length d.
FrameReadResult parse_frame_json(const std::string& text);
FrameReadResult read_frame_file(const std::string& path);

std::string frame_to_json(const WeightedFrame& f, int indent = 2);
void write_frame_file(const WeightedFrame& f, const std::string& path);

/// Generator file: JSON list of d x d matrices, each either nested row-major
/// ([[row_1], ..., [row_d]]) or flat row-major with d*d numbers.
std::vector<Matrix> parse_generators_json(const std::string& text);

/// Complex line file: JSON list of 2d-length real arrays (re_1, im_1, re_2, ...).
ComplexLineSet parse_complex_lines_json(const std::string& text);

std::string read_text_file(const std::string& path);

}  // namespace fusion
