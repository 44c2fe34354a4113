#pragma once

#include <stdexcept>
#include <string>

namespace novikov {

// Base class for every error thrown by this library.
class error : public std::runtime_error {
public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Caller combined structurally incompatible values: mismatched free-abelian
// rank, mismatched coefficient domain, matrix shape violations, indices out
// of range.
class structural_error : public error {
public:
  using error::error;
};

// The operation is undefined on the given value, e.g. asking for the
// xi-leading data of the zero polynomial, or a division that is not exact.
class domain_error : public error {
public:
  using error::error;
};

// Input data is well-formed but fails a semantic check: boundary matrices
// that do not compose to zero, relators not killed by the weight map, a
// monodromy that is not invertible, and so on.
class validation_error : public error {
public:
  using error::error;
};

// A problem document could not be parsed.
class parse_error : public error {
public:
  using error::error;
};

// A configured enumeration bound was exceeded.
class resource_error : public error {
public:
  using error::error;
};

}  // namespace novikov
