#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace freeimm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ZeroPolynomial : public Error {
 public:
  ZeroPolynomial() : Error("operation requires a nonzero polynomial") {}
};

/// An interval endpoint is a root; the caller must shrink, split or deflate.
class EndpointIsRoot : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class StructureError : public Error {
 public:
  using Error::Error;
};

/// Schema or field-level validation failure. Carries every message found.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<std::string> messages)
      : Error(join(messages)), messages_(std::move(messages)) {}

  const std::vector<std::string>& messages() const { return messages_; }

 private:
  static std::string join(const std::vector<std::string>& m) {
    std::string out;
    for (const auto& s : m) {
      if (!out.empty()) out += "; ";
      out += s;
    }
    return out;
  }
  std::vector<std::string> messages_;
};

}  // namespace freeimm
