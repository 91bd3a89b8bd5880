#pragma once

#include <stdexcept>
#include <string>

namespace ahpga {

enum class ErrorKind {
  InvalidInput,
  UnsupportedDimension,
  SearchLimit,
  Io,
  Internal,
};

/// Base exception for everything the library rejects. The kind is mapped onto
/// a status code at the C boundary.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline Error invalid_input(const std::string& what) {
  return Error(ErrorKind::InvalidInput, what);
}

}  // namespace ahpga
