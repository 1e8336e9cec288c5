#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace dwo {

/// Input that violates a type invariant (bad tiers, unknown names, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UniverseMismatch : public std::invalid_argument {
 public:
  UniverseMismatch() : std::invalid_argument("relations are over different alternative sets") {}
};

/// A voter leaves some pair incomparable where a complete profile is required.
class IncompleteRelationError : public std::domain_error {
 public:
  IncompleteRelationError(std::optional<std::size_t> voter, std::size_t a, std::size_t b,
                          const std::string& what)
      : std::domain_error(what), voter_(voter), a_(a), b_(b) {}

  /// Empty when raised from aggregated statistics rather than a single voter.
  std::optional<std::size_t> voter() const noexcept { return voter_; }
  std::size_t first() const noexcept { return a_; }
  std::size_t second() const noexcept { return b_; }

 private:
  std::optional<std::size_t> voter_;
  std::size_t a_;
  std::size_t b_;
};

class CapacityOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A postcondition that should hold by construction did not; indicates a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace dwo
