#pragma once

#include <stdexcept>
#include <string>

namespace parabose {

/// Input outside the domain where a formula or representation is defined
/// (mu <= -1/2, q = +-1, non-integer nu in the q -> -1 limit, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Index argument out of its admissible range.
class IndexError : public std::out_of_range {
 public:
  explicit IndexError(const std::string& what) : std::out_of_range(what) {}
};

/// Two routes that must agree did not, or an identity that holds exactly
/// in exact arithmetic was violated beyond tolerance.
class ConsistencyError : public std::runtime_error {
 public:
  explicit ConsistencyError(const std::string& what)
      : std::runtime_error(what) {}
};

/// A recurrence coefficient that must be strictly positive was not.
class PositivityError : public DomainError {
 public:
  explicit PositivityError(const std::string& what) : DomainError(what) {}
};

}  // namespace parabose
