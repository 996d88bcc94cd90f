#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fusion {

enum class Errc {
  DimensionError,
  RankDeficient,
  LengthMismatch,
  NotAFrame,
  SizeGuardExceeded,
  MixedDimensions,
  SingleSubspace,
  MissingMoment,
  UnsupportedQuadratureDim,
  ParameterError,
  GroupTooLarge,
  NotOrthogonal,
  UnknownName,
  ParseError,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so that
/// callers (and the CLI exit-code contract) can branch on the kind of failure.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace fusion
