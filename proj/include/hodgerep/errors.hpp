#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hodgerep {

/// Rank or family outside the catalogued simple types.
class InvalidTypeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Precondition on an argument failed (non-dominant weight, bad grading element, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A computation would exceed the configured size guard.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, std::string dimension)
      : std::runtime_error(what), dimension_(std::move(dimension)) {}
  const std::string& dimension() const noexcept { return dimension_; }

 private:
  std::string dimension_;
};

/// An assembled Hodge vector is not palindromic or not of the requested shape.
class ShapeError : public std::runtime_error {
 public:
  ShapeError(const std::string& what, std::vector<std::uint64_t> vec)
      : std::runtime_error(what), vector_(std::move(vec)) {}
  const std::vector<std::uint64_t>& offending() const noexcept { return vector_; }

 private:
  std::vector<std::uint64_t> vector_;
};

/// Internal invariant broken; indicates a catalog or numbering bug.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed user input (algebra strings, weight lists, expressions).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Expected-results file missing or malformed.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hodgerep
