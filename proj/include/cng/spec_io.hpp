#pragma once

#include <map>
#include <string>

#include "cng/group.hpp"

namespace cng {

/// A group description document.  Three kinds:
///   perm:       degree + generators in 0-based cycle notation, with an
///               optional exact order hint that speeds up chain building
///   semidirect: module modulus/dim + one matrix per generator of a
///               nested acting-group spec
///   family:     a named constructor family plus parameters
struct GroupSpec {
  enum class Kind { Perm, Semidirect, Family };
  Kind kind = Kind::Perm;
  std::string name;

  // perm
  unsigned degree = 0;
  std::vector<std::string> generators;
  std::uint64_t order_hint = 0;

  // semidirect
  unsigned modulus = 0;
  unsigned dim = 0;
  std::vector<std::vector<unsigned>> matrices;
  std::shared_ptr<GroupSpec> acting;

  // family
  std::string family;
  std::map<std::string, std::string> params;
};

/// Parse a UTF-8 JSON document; schema violations name the offending field.
GroupSpec parse_spec(const std::string& json_text);

/// Canonical serialization (fixed field order).
std::string serialize_spec(const GroupSpec& spec);

/// Construct the group a spec describes.
PermGroup build_group(const GroupSpec& spec, const Limits& limits = default_limits());

/// Perm-kind spec (with order hint) for an already built group.
GroupSpec spec_from_group(const std::string& name, const PermGroup& g);

/// Family constructor dispatch; `params` uses the same keys as the spec
/// format (example1: k, p; example2: m, k; example3: p, n;
/// negative_frobenius_sl23: p).
PermGroup build_family(const std::string& family,
                       const std::map<std::string, std::string>& params,
                       const Limits& limits = default_limits());

} // namespace cng
