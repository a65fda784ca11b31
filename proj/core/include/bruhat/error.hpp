#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bruhat {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (type labels, words, JSON documents).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A word that was required to be reduced is not.
class NotReducedError : public Error {
 public:
  using Error::Error;
};

/// Arguments outside an operation's domain (bad rank, bad subset, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Exhaustive enumeration refused because the state space exceeds a bound.
class DimensionTooLarge : public Error {
 public:
  DimensionTooLarge(int dimension, int max_dimension, std::size_t required_bytes,
                    std::size_t cap_bytes);

  int dimension() const noexcept { return dimension_; }
  int max_dimension() const noexcept { return max_dimension_; }
  std::size_t required_bytes() const noexcept { return required_bytes_; }
  std::size_t cap_bytes() const noexcept { return cap_bytes_; }

 private:
  int dimension_;
  int max_dimension_;
  std::size_t required_bytes_;
  std::size_t cap_bytes_;
};

}  // namespace bruhat
