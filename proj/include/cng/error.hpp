#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cng {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A resource bound (enumeration, degree, scan, ...) was exceeded.
/// Operations fail loudly instead of working on a partial group.
class BoundExceeded : public Error {
public:
  using Error::Error;
};

/// A backtrack search ran out of budget before covering its space.
/// Distinct from a completed search that proved nonexistence.
class SearchExhausted : public Error {
public:
  using Error::Error;
};

/// A generator-image assignment failed the homomorphism certificate.
class NotHomomorphism : public Error {
public:
  using Error::Error;
};

/// Malformed input document (spec file, cycle string, parameters).
class InvalidSpec : public Error {
public:
  using Error::Error;
};

/// An operation's precondition does not hold (degree mismatch, element
/// outside the group, non-soluble input to fitting_height, ...).
class Precondition : public Error {
public:
  using Error::Error;
};

/// Resource limits shared by the bounded operations.  The CLI overrides
/// these from flags; library code takes them as a parameter.
struct Limits {
  std::uint64_t max_enumeration = 1'000'000;     // element streams, class reps
  std::uint64_t max_quotient_degree = 10'000;    // coset actions
  std::uint64_t subgroup_scan_bound = 2'000;     // exhaustive normal-subgroup scans
  std::uint64_t search_budget = 10'000'000;      // fixed-point-free backtracking
  std::uint64_t max_semidirect_degree = 100'000; // module point sets
};

inline const Limits& default_limits() {
  static const Limits limits{};
  return limits;
}

} // namespace cng
