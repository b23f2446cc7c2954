#include "wfsplit/error.hpp"

namespace wfsplit {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DegenerateTet: return "DegenerateTet";
    case ErrorCode::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorCode::NotInPlane: return "NotInPlane";
    case ErrorCode::Outside: return "Outside";
    case ErrorCode::NoCrossing: return "NoCrossing";
    case ErrorCode::NonManifold: return "NonManifold";
    case ErrorCode::NonConforming: return "NonConforming";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::UnsupportedVersion: return "UnsupportedVersion";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::SplitPointOutsideFace: return "SplitPointOutsideFace";
    case ErrorCode::InvalidC0: return "InvalidC0";
  }
  return "Unknown";
}

}  // namespace wfsplit
