#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cgl/group.hpp"

namespace cgl {

/// A normal-form word g_{k1}^{a1} g_{k2}^{a2} ... with k1 < k2 < ... and
/// 1 <= a <= p-1. Empty is the identity.
struct PcWord {
  std::vector<std::pair<unsigned, unsigned>> terms;

  friend bool operator==(const PcWord &, const PcWord &) = default;
};

/// Power-commutator presentation of a group of order p^n:
///   g_i^p = power[i]            (word in g_{i+1}..g_n)
///   [g_j, g_i] = comm[j][i]     (j > i, word in g_{j+1}..g_n)
struct PcPresentation {
  unsigned p = 2;
  unsigned n = 0;
  std::vector<std::string> names;
  std::vector<PcWord> power;
  /// comm[j][i] for i < j; comm[j] has length j.
  std::vector<std::vector<PcWord>> comm;
  std::string source;
};

/// File grammar (one statement per line, '#' starts a comment):
///   pgroup <p> <n>
///   gens <name_1> ... <name_n>
///   pow <name_i> = <word>
///   comm <name_j> <name_i> = <word>
///   word := "1" | term (" " term)*    term := name | name "^" int
/// Omitted relations are trivial. Throws ParseError with line and column.
PcPresentation parse_pcp(std::string_view text,
                         std::string source = "<input>");

PcPresentation load_pcp(const std::string &path);

/// Realizes the presentation on normal forms g_1^e_1 ... g_n^e_n, indexed by
/// sum e_i p^(n-i), using collection from the left. The result is
/// certified: the table must be a group (associative, generated by the
/// g_i) and every defining relation must hold; otherwise InvalidGroup.
Group realize_pcp(const PcPresentation &pres, std::size_t cap = kDefaultCap,
                  std::string descriptor = {});

/// Element index of a word in the realized group.
Elem pcp_element(const PcPresentation &pres, const PcWord &word);

/// Permutation generators on points 1..degree, stored 0-based as images.
struct PermGenSet {
  std::size_t degree = 0;
  std::vector<std::vector<std::uint32_t>> generators;
  std::string source;
};

/// File grammar:
///   perm degree <d>
///   gen (c1 c2 ...)(...)     # disjoint cycles on 1..d; "gen ()" is identity
PermGenSet parse_perm(std::string_view text, std::string source = "<input>");

PermGenSet load_perm(const std::string &path);

struct PermGroup {
  Group group;
  /// elements[i] is the permutation (0-based images) for element i.
  std::vector<std::vector<std::uint32_t>> elements;
};

/// Dimino closure under left-to-right composition ((xy)(k) = y(x(k))).
/// The closure must be a nontrivial p-group of order at most `cap`.
PermGroup realize_perm(const PermGenSet &gens, std::size_t cap = kDefaultCap,
                       std::string descriptor = {});

} // namespace cgl
