#pragma once

#include <stdexcept>
#include <string>

namespace zetakit {

/// Base class for every error raised by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation (poles, s < 0, ...).
class domain_error : public error {
 public:
  using error::error;
};

/// Catalog lookup with an unknown id or a parameter outside the declared domain.
class key_error : public error {
 public:
  using error::error;
};

/// A truncation cap was reached before the requested bound could be met.
class inconclusive_error : public error {
 public:
  using error::error;
};

}  // namespace zetakit
