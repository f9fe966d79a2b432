#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "cgl/cyclotomic.hpp"
#include "cgl/group.hpp"

namespace cgl {

/// Class multiplication coefficients a[i][j][k] = #{(x, y) in C_i x C_j :
/// xy = z_k} for the representative z_k of class k. Stored sparsely per
/// middle index j; abelian groups would otherwise need k^3 entries.
struct ClassConstants {
  struct Entry {
    std::uint32_t i;
    std::uint32_t k;
    std::uint64_t count;
  };
  std::size_t num_classes = 0;
  /// by_middle[j] sorted by (i, k), zero entries omitted.
  std::vector<std::vector<Entry>> by_middle;

  std::uint64_t operator()(std::size_t i, std::size_t j, std::size_t k) const;
};

ClassConstants class_constants(const ConjugacyData &conj, const Group &g);

/// Eigenvalue multiplicities of rho(g) for one class: chi(g) = sum c_m
/// zeta_e^m. Only nonzero (m, c_m) pairs are stored, ascending in m.
struct Multiplicities {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> terms;

  std::vector<std::uint32_t> dense(std::uint32_t e) const;
  friend bool operator==(const Multiplicities &,
                         const Multiplicities &) = default;
};

struct Character {
  std::vector<CyclotomicValue> values;
  std::uint64_t degree = 1;
  std::vector<Multiplicities> multiplicities;
  Subgroup kernel;
  /// Z(chi): elements acting as scalars.
  Subgroup center;
  std::uint64_t codegree = 1;
  bool is_faithful = false;
};

struct CharacterTable {
  Group group;
  ConjugacyData conj;
  /// Ordered by (degree, concatenated multiplicity vectors).
  std::vector<Character> characters;
  std::uint32_t exponent = 1;
  std::uint64_t dixon_prime = 0;
  /// Image of zeta_e in F_dixon_prime used for lifting.
  std::uint64_t dixon_root = 1;
  std::vector<unsigned> cd_exponents;
  std::vector<unsigned> cod_exponents;
  unsigned b_exponent = 0;
};

struct DixonOptions {
  /// Search bound for the prime ell.
  std::uint64_t prime_bound = 1ull << 31;
};

/// Exact irreducible characters by Dixon's modular method with exact
/// cyclotomic lifting.
CharacterTable character_table(const Group &g, const ConjugacyData &conj,
                               const DixonOptions &options = {});
CharacterTable character_table(const Group &g);

/// |G : ker chi| / chi(1)
std::uint64_t codegree(const CharacterTable &t, const Character &chi);

} // namespace cgl
