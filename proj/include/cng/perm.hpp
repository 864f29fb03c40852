#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cng/error.hpp"

namespace cng {

/// A permutation of {0..degree-1}, stored as its image table.
///
/// Composition is left-to-right throughout the project:
/// (p * q)(x) = q(p(x)), i.e. p acts first.
class Permutation {
public:
  Permutation() = default;

  /// Identity on `degree` points.
  explicit Permutation(unsigned degree);

  /// From an image table; validates that it is a bijection.
  explicit Permutation(std::vector<unsigned> images);

  static Permutation identity(unsigned degree) { return Permutation(degree); }

  unsigned degree() const { return static_cast<unsigned>(images_.size()); }
  unsigned operator[](unsigned point) const { return images_[point]; }
  const std::vector<unsigned>& images() const { return images_; }

  bool is_identity() const;

  /// Apply this first, then other.
  Permutation operator*(const Permutation& other) const;

  Permutation inverse() const;

  /// Conjugate this^g = g^-1 * this * g, computed in one pass.
  Permutation conjugated_by(const Permutation& g) const;

  Permutation power(long long e) const;

  /// Multiplicative order (lcm of cycle lengths).
  std::uint64_t order() const;

  /// Smallest moved point, or degree() if identity.
  unsigned first_moved_point() const;

  bool operator==(const Permutation& other) const { return images_ == other.images_; }
  bool operator!=(const Permutation& other) const { return images_ != other.images_; }
  bool operator<(const Permutation& other) const { return images_ < other.images_; }

  /// Canonical cycle string, 0-based, identity printed as "()".
  std::string cycle_string() const;

  /// Parse 0-based cycle notation like "(0 1 2)(3 4)"; "()" is the identity.
  static Permutation parse_cycles(const std::string& text, unsigned degree);

private:
  std::vector<unsigned> images_;
};

/// A permutation given by one cycle on `degree` points.
Permutation cycle_perm(unsigned degree, const std::vector<unsigned>& cycle);

} // namespace cng
