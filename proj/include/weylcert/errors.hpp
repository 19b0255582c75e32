#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace weylcert {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad argument: rank out of bounds, zero root, weight not a root, ...
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// The weight is not in the lattice the operation requires.
class LatticeError : public Error {
 public:
  using Error::Error;
};

/// A spanning set has the wrong dimension.
class RankError : public Error {
 public:
  RankError(const std::string& what, int actual_rank)
      : Error(what), actual_rank_(actual_rank) {}
  int actual_rank() const noexcept { return actual_rank_; }

 private:
  int actual_rank_;
};

/// Diagram type outside the B/C/D table.
class UnsupportedTypeError : public Error {
 public:
  using Error::Error;
};

/// A certificate precondition is violated.
class CertificateInvalidError : public Error {
 public:
  using Error::Error;
};

/// Input too large for a brute-force oracle.
class OracleScaleError : public Error {
 public:
  using Error::Error;
};

/// Text input could not be parsed; `position` is a 0-based character offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace weylcert
