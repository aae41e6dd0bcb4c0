#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace steg {

enum class Errc {
  OddDimension,
  EmptyInput,
  ShapeMismatch,
  CapacityExceeded,
  NonFinite,
  InvalidArgument,
  FileNotFound,
  UnsupportedFormat,
  CorruptImage,
  IoError,
};

std::string_view to_string(Errc code) noexcept;

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace steg
