#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace fusion::cli {

/// Exit codes: 0 positive verdict, 1 negative verdict, 2 usage / input / numerical error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitError = 2;

/// Runs the fusionframe command line. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 64-bit FNV-1a, used for the input digest in reports.
std::uint64_t fnv1a(const std::string& bytes, std::uint64_t seed = 0xcbf29ce484222325ULL);

}  // namespace fusion::cli
