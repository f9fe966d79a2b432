#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "cgl/character_table.hpp"
#include "cgl/cyclotomic.hpp"
#include "cgl/group.hpp"

namespace cgl {

/// Values on the conjugacy classes of G, in canonical class order.
struct ClassFunction {
  std::vector<CyclotomicValue> values;

  friend bool operator==(const ClassFunction &,
                         const ClassFunction &) = default;
};

/// Values on the members of a subgroup H, aligned with H.members.
struct SubgroupFunction {
  std::vector<CyclotomicValue> values;
};

/// A homomorphism H -> <zeta_e>: value on H.members[i] is
/// zeta_e^exponents[i].
struct LinearCharacter {
  std::uint32_t e = 1;
  std::vector<std::uint32_t> exponents;

  SubgroupFunction values() const;
  friend auto operator<=>(const LinearCharacter &,
                          const LinearCharacter &) = default;
};

/// All |H : H'| linear characters of H with values in <zeta_e>, where e is a
/// multiple of exp(H). Sorted by exponent vector; index 0 is principal.
std::vector<LinearCharacter> linear_characters(const Group &g,
                                               const Subgroup &h,
                                               std::uint32_t e);

ClassFunction as_class_function(const Character &chi);

/// lambda^G(g) = |H|^-1 sum_{x in G, xgx^-1 in H} lambda(xgx^-1)
ClassFunction induce(const Group &g, const ConjugacyData &conj,
                     const Subgroup &h, const SubgroupFunction &lambda);
ClassFunction induce(const Group &g, const ConjugacyData &conj,
                     const Subgroup &h, const LinearCharacter &lambda);

/// |G|^-1 sum_j |C_j| a(g_j) conj(b(g_j)); throws if not a rational integer.
std::int64_t inner_product(const ConjugacyData &conj, const ClassFunction &a,
                           const ClassFunction &b);

struct MonomialWitness {
  /// Index into CharacterTable::characters.
  std::size_t character = 0;
  /// Index into the normal subgroup list, and into linear_characters() of
  /// that subgroup. Empty when no witness exists.
  std::optional<std::size_t> subgroup;
  std::optional<std::size_t> lambda;
  bool subgroup_abelian = false;
  bool faithful = false;
};

struct NormallyMonomialReport {
  /// One entry per nonlinear character, in table order.
  std::vector<MonomialWitness> witnesses;
  bool normally_monomial = true;
  /// Every faithful character with a witness was induced from an abelian
  /// normal subgroup.
  bool faithful_witnesses_abelian = true;
};

/// Searches, for each nonlinear chi, a normal H of index chi(1) and a linear
/// lambda of H with lambda^G = chi. Normal subgroups are tried in list order,
/// linear characters in canonical order; the first match is kept.
NormallyMonomialReport
normally_monomial_report(const CharacterTable &t,
                         const std::vector<Subgroup> &normals);

} // namespace cgl
