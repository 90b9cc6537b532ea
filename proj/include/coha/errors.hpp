#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace coha {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "error"; }
};

/// Evaluation outside the domain of a value, e.g. q^-1 at q = 0.
class DomainError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "domain"; }
};

/// Operands whose arity or length do not agree.
class ShapeError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "shape"; }
};

/// Parameters outside their documented range (d < 1, m < 1, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "invalid-argument"; }
};

/// A computation would exceed a configured term or enumeration budget.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "resource-limit"; }
};

/// A polynomial handed to the m-basis conversion is not symmetric.
class NotSymmetricError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "not-symmetric"; }
};

/// Malformed textual or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "parse"; }
};

/// Budgets shared by the expensive operations.
struct Limits {
  std::size_t term_cap = 5'000'000;   // stored terms in any single polynomial
  std::size_t max_subsets = 100'000;  // subsets enumerated by the shuffle product
  int graph_bits = 24;                // n*k for the orientation enumeration
  std::size_t table_terms = 250'000;  // larger kernels are folded one variable at a time instead
};

}  // namespace coha
