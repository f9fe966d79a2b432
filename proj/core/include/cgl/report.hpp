#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cgl/analysis.hpp"
#include "cgl/character_table.hpp"
#include "cgl/group.hpp"

namespace cgl {

inline constexpr std::string_view kToolName = "codegree-lab";
inline constexpr std::string_view kToolVersion = "1.0.0";

/// A presentation file compiled into the library from data/.
struct BundledSample {
  std::string_view name;
  std::string_view text;
};
std::span<const BundledSample> bundled_samples();

struct CorpusEntry {
  enum class Kind { Family, PcpFile, PermFile, Bundled };
  Kind kind = Kind::Family;
  /// Family descriptor, file path, or bundled sample name.
  std::string value;
};

struct CorpusSpec {
  std::vector<CorpusEntry> entries;
  std::size_t cap = kDefaultCap;
  unsigned jobs = 1;
};

/// Every family of order <= 2^6 (p = 2) or <= 3^5 (p = 3), plus the bundled
/// presentations.
std::vector<CorpusEntry> builtin_corpus();

/// "builtin", "empty", or a corpus file with one entry per line:
///   family <descriptor> | pcp <path> | perm <path> | sample <name>
/// Relative paths are resolved against the corpus file's directory.
std::vector<CorpusEntry> load_corpus(std::string_view arg);

Group realize_entry(const CorpusEntry &entry, std::size_t cap);

/// Analyzes every entry (up to `jobs` in parallel) and returns the reports
/// sorted by descriptor. Rethrows the first error in entry order.
std::vector<AnalysisReport> run_corpus(const CorpusSpec &corpus,
                                       const SuiteSelection &suites);

struct SuiteCount {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t not_applicable = 0;
};

struct ReportDocument {
  std::string command;
  std::vector<AnalysisReport> groups;
  /// Per verdict id, in first-seen order.
  std::vector<std::pair<std::string, SuiteCount>> summary;
  /// (descriptor, verdict id) of every failed applicable verdict.
  std::vector<std::pair<std::string, std::string>> failures;
  std::optional<unsigned> search_k;
  std::vector<std::string> search_matches;
};

ReportDocument make_document(std::string command,
                             std::vector<AnalysisReport> groups);

std::string to_json(const ReportDocument &doc);
std::string to_text(const ReportDocument &doc);
/// One group's report as a JSON object (the "groups" element schema).
std::string to_json(const AnalysisReport &report);

/// Classes, degrees, values and eigenvalue multiplicities.
std::string table_text(const CharacterTable &t);

} // namespace cgl
