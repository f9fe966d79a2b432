#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cgl/character_table.hpp"
#include "cgl/class_function.hpp"
#include "cgl/group.hpp"

namespace cgl {

struct CodegreeProfile {
  std::vector<unsigned> cod_exponents;
  bool is_ladder = false;
  /// Set iff is_ladder: cod(G) = {p^i : 0 <= i <= c}.
  std::optional<unsigned> ladder_c;
};

/// Throws InternalError when 0 is missing (the principal character always
/// has codegree 1).
CodegreeProfile ladder_check(std::vector<unsigned> cod_exponents);

using DetailValue =
    std::variant<bool, std::int64_t, std::string, std::vector<unsigned>>;

struct Detail {
  std::string key;
  DetailValue value;
};

struct TheoremVerdict {
  std::string id;
  bool applicable = false;
  /// Meaningful only when applicable.
  bool pass = false;
  std::vector<Detail> details;

  bool failed() const noexcept { return applicable && !pass; }
};

/// Everything the verdicts need about one group.
struct GroupAnalysis {
  CharacterTable table;
  CentralSeriesData series;
  std::vector<Subgroup> normals;
  NormallyMonomialReport monomial;
  CodegreeProfile profile;
};

GroupAnalysis analyze_group(const Group &g);

TheoremVerdict classify_theorem_A(const GroupAnalysis &a);
TheoremVerdict theorem_A_converse(const GroupAnalysis &a);
TheoremVerdict verify_theorem_B(const GroupAnalysis &a);
TheoremVerdict verify_corollary_C(const GroupAnalysis &a);
TheoremVerdict verify_theorem_D(const GroupAnalysis &a);
/// L-p2, L-p3, L-p4, faithful-p.
std::vector<TheoremVerdict> lemma_membership_suite(const GroupAnalysis &a);

/// Which theorem blocks to run.
struct SuiteSelection {
  bool a = true;
  bool b = true;
  bool c = true;
  bool d = true;
  bool lemmas = true;

  /// Comma-separated subset of {A,B,C,D,lemmas}, or "all".
  static SuiteSelection parse(std::string_view text);
};

struct CharacterSummary {
  unsigned degree_exp = 0;
  std::size_t kernel_order = 0;
  unsigned codegree_exp = 0;
  bool faithful = false;
};

struct AnalysisReport {
  std::string descriptor;
  unsigned p = 0;
  unsigned n = 0;
  std::size_t order = 0;
  unsigned nilpotence_class = 0;
  bool maximal_class = false;
  bool metabelian = false;
  bool normally_monomial = false;
  std::vector<unsigned> cd_exponents;
  unsigned b_exponent = 0;
  CodegreeProfile profile;
  /// {i in [0, n-1] : p^i not in cod(G)}
  std::vector<unsigned> missing_exponents;
  std::vector<TheoremVerdict> verdicts;
  std::vector<CharacterSummary> characters;

  bool any_failure() const noexcept;
};

AnalysisReport make_report(const GroupAnalysis &a,
                           const SuiteSelection &suites = {});

/// Maximal class reports with n >= k+1 and k not in the codegree exponents.
std::vector<const AnalysisReport *>
missing_codegree_search(const std::vector<AnalysisReport> &corpus, unsigned k);

} // namespace cgl
