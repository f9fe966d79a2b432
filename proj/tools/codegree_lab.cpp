#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cgl/analysis.hpp"
#include "cgl/error.hpp"
#include "cgl/families.hpp"
#include "cgl/pcp.hpp"
#include "cgl/report.hpp"

namespace {

constexpr int kExitFailedVerdict = 1;
constexpr int kExitInvalidInput = 2;

struct SourceFlags {
  std::string family;
  unsigned p = 0;
  unsigned n = 0;
  std::string variant;
  std::string pcp;
  std::string perm;

  void add(CLI::App *cmd) {
    cmd->add_option("--family", family, "Family name (cyclic, abelian, "
                                        "modular, dihedral, semidihedral, "
                                        "quaternion, extraspecial, wreath)");
    cmd->add_option("--p", p, "Prime");
    cmd->add_option("--n", n, "log_p of the order");
    cmd->add_option("--variant", variant,
                    "Abelian invariants (e.g. 3,1) or extraspecial type");
    cmd->add_option("--pcp", pcp, "Power-commutator presentation file");
    cmd->add_option("--perm", perm, "Permutation generator file");
  }

  cgl::Group realize(std::size_t cap) const {
    const int given = !family.empty() + !pcp.empty() + !perm.empty();
    if (given != 1)
      throw cgl::Error("give exactly one of --family, --pcp, --perm");
    if (!pcp.empty())
      return cgl::realize_pcp(cgl::load_pcp(pcp), cap);
    if (!perm.empty())
      return cgl::realize_perm(cgl::load_perm(perm), cap).group;
    if (p == 0)
      throw cgl::Error("--family needs --p");
    return cgl::build_family(cgl::make_family_spec(family, p, n, variant), cap);
  }
};

struct OutputFlags {
  std::string json;
  std::size_t cap = cgl::kDefaultCap;
  std::string suites = "all";

  void add(CLI::App *cmd, bool with_suites) {
    cmd->add_option("--json", json, "Write JSON to PATH, or '-' for stdout");
    cmd->add_option("--cap", cap, "Order cap")->capture_default_str();
    if (with_suites)
      cmd->add_option("--suites", suites,
                      "Comma-separated subset of A,B,C,D,lemmas, or all")
          ->capture_default_str();
  }

  void check_cap() const {
    if (cgl::validate_cap(cap))
      std::cerr << "warning: cap " << cap << " is above the default "
                << cgl::kDefaultCap
                << "; multiplication tables may need a lot of memory\n";
  }

  void emit(const cgl::ReportDocument &doc) const {
    if (json == "-") {
      std::cout << cgl::to_json(doc);
      return;
    }
    std::cout << cgl::to_text(doc);
    if (!json.empty()) {
      std::ofstream out(json, std::ios::binary);
      if (!out)
        throw cgl::Error("cannot write " + json);
      out << cgl::to_json(doc);
    }
  }
};

int finish(const cgl::ReportDocument &doc) {
  if (doc.failures.empty())
    return 0;
  // A failed verdict is either a bug or a discovery: dump everything.
  std::cerr << "error: " << doc.failures.size()
            << " applicable verdict(s) failed\n";
  for (const auto &r : doc.groups)
    if (r.any_failure())
      std::cerr << cgl::to_json(r);
  return kExitFailedVerdict;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Character tables and codegree sets of finite p-groups",
               std::string(cgl::kToolName)};
  app.set_version_flag("--version", std::string(cgl::kToolVersion));
  app.require_subcommand(1);

  SourceFlags analyze_src, table_src;
  OutputFlags analyze_out, verify_out, search_out;
  std::string verify_corpus = "builtin", search_corpus = "builtin";
  unsigned verify_jobs = 1, search_jobs = 1;
  unsigned k = 0;
  std::size_t table_cap = cgl::kDefaultCap;

  auto *analyze = app.add_subcommand("analyze", "Analyze one group");
  analyze_src.add(analyze);
  analyze_out.add(analyze, true);

  auto *verify = app.add_subcommand("verify", "Run theorem suites on a corpus");
  verify->add_option("--corpus", verify_corpus,
                     "builtin, empty, or a corpus file")
      ->capture_default_str();
  verify->add_option("--jobs", verify_jobs, "Parallel workers")
      ->check(CLI::PositiveNumber);
  verify_out.add(verify, true);

  auto *search = app.add_subcommand(
      "search", "Find maximal class groups with p^k missing from cod(G)");
  search->add_option("--corpus", search_corpus,
                     "builtin, empty, or a corpus file")
      ->capture_default_str();
  search->add_option("--k", k, "Codegree exponent, k >= 2")->required();
  search->add_option("--jobs", search_jobs, "Parallel workers")
      ->check(CLI::PositiveNumber);
  search_out.add(search, false);

  auto *table = app.add_subcommand("table", "Print the character table");
  table_src.add(table);
  table->add_option("--cap", table_cap, "Order cap")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalidInput;
  }

  try {
    if (*analyze) {
      analyze_out.check_cap();
      const auto suites = cgl::SuiteSelection::parse(analyze_out.suites);
      const cgl::Group g = analyze_src.realize(analyze_out.cap);
      auto doc = cgl::make_document(
          "analyze", {cgl::make_report(cgl::analyze_group(g), suites)});
      analyze_out.emit(doc);
      return finish(doc);
    }
    if (*verify) {
      verify_out.check_cap();
      const auto suites = cgl::SuiteSelection::parse(verify_out.suites);
      cgl::CorpusSpec corpus{cgl::load_corpus(verify_corpus), verify_out.cap,
                             verify_jobs};
      if (corpus.entries.empty())
        throw cgl::Error("empty corpus");
      auto doc = cgl::make_document("verify", cgl::run_corpus(corpus, suites));
      verify_out.emit(doc);
      return finish(doc);
    }
    if (*search) {
      if (k < 2) {
        std::cerr << "usage error: --k must be at least 2 (p is a codegree of "
                     "every nontrivial p-group)\n";
        return kExitInvalidInput;
      }
      search_out.check_cap();
      cgl::CorpusSpec corpus{cgl::load_corpus(search_corpus), search_out.cap,
                             search_jobs};
      if (corpus.entries.empty())
        throw cgl::Error("empty corpus");
      auto all = cgl::run_corpus(
          corpus, cgl::SuiteSelection{false, false, false, false, false});
      cgl::ReportDocument doc;
      doc.command = "search";
      doc.search_k = k;
      for (const auto *r : cgl::missing_codegree_search(all, k)) {
        doc.search_matches.push_back(r->descriptor);
        doc.groups.push_back(*r);
      }
      search_out.emit(doc);
      return 0;
    }
    if (*table) {
      if (cgl::validate_cap(table_cap))
        std::cerr << "warning: cap above the default\n";
      const cgl::Group g = table_src.realize(table_cap);
      std::cout << cgl::table_text(cgl::character_table(g));
      return 0;
    }
  } catch (const cgl::Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return 0;
}
