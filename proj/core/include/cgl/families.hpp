#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cgl/group.hpp"

namespace cgl {

enum class Family {
  Cyclic,
  Abelian,
  Modular,
  Dihedral,
  Semidihedral,
  Quaternion,
  Extraspecial,
  Wreath,
};

/// A named construction with its parameters.
///
/// Textual form (also used as the group descriptor):
///   cyclic(p,n)  abelian(p,[e1,e2,...])  modular(p,n)  dihedral(2,n)
///   semidihedral(2,n)  quaternion(2,n)  extraspecial(p,3,+|-)  wreath(p)
struct FamilySpec {
  Family family = Family::Cyclic;
  unsigned p = 2;
  /// log_p of the order (derived for abelian and wreath).
  unsigned n = 1;
  /// Abelian invariants, descending.
  std::vector<unsigned> partition;
  /// Extraspecial type: '+' or '-'.
  char sign = '+';

  std::string to_string() const;
  std::size_t order() const;

  friend bool operator==(const FamilySpec &, const FamilySpec &) = default;
};

std::string_view family_name(Family f);

/// Accepts the names used by to_string().
Family parse_family_name(std::string_view name);

/// Parses the textual form produced by to_string().
FamilySpec parse_family_spec(std::string_view text);

/// Builds a FamilySpec from CLI-style pieces. `variant` carries the
/// abelian partition ("3,1") or extraspecial sign ("+"/"-").
FamilySpec make_family_spec(std::string_view name, unsigned p, unsigned n,
                            std::string_view variant);

/// Builds the group. Elements are enumerated in lexicographic order of their
/// normal-form exponent vectors, so output is deterministic.
Group build_family(const FamilySpec &spec, std::size_t cap = kDefaultCap);

} // namespace cgl
