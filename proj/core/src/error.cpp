#include "fusion/error.hpp"

namespace fusion {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::DimensionError: return "DimensionError";
    case Errc::RankDeficient: return "RankDeficient";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::NotAFrame: return "NotAFrame";
    case Errc::SizeGuardExceeded: return "SizeGuardExceeded";
    case Errc::MixedDimensions: return "MixedDimensions";
    case Errc::SingleSubspace: return "SingleSubspace";
    case Errc::MissingMoment: return "MissingMoment";
    case Errc::UnsupportedQuadratureDim: return "UnsupportedQuadratureDim";
    case Errc::ParameterError: return "ParameterError";
    case Errc::GroupTooLarge: return "GroupTooLarge";
    case Errc::NotOrthogonal: return "NotOrthogonal";
    case Errc::UnknownName: return "UnknownName";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace fusion
