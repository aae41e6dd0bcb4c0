#include "steg/error.hpp"

namespace steg {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::OddDimension: return "OddDimension";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::CapacityExceeded: return "CapacityExceeded";
    case Errc::NonFinite: return "NonFinite";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::FileNotFound: return "FileNotFound";
    case Errc::UnsupportedFormat: return "UnsupportedFormat";
    case Errc::CorruptImage: return "CorruptImage";
    case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace steg
