#include "cgl/report.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "cgl/error.hpp"
#include "cgl/families.hpp"
#include "cgl/pcp.hpp"

namespace cgl {

namespace {

using ordered_json = nlohmann::ordered_json;

void partitions(unsigned total, unsigned max_part, std::vector<unsigned> &cur,
                std::vector<std::vector<unsigned>> &out) {
  if (total == 0) {
    out.push_back(cur);
    return;
  }
  for (unsigned part = std::min(total, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions(total - part, part, cur, out);
    cur.pop_back();
  }
}

std::string join(const std::vector<unsigned> &v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

ordered_json detail_json(const DetailValue &v) {
  return std::visit([](const auto &x) { return ordered_json(x); }, v);
}

ordered_json report_json(const AnalysisReport &r) {
  ordered_json j;
  j["descriptor"] = r.descriptor;
  j["p"] = r.p;
  j["n"] = r.n;
  j["order"] = r.order;
  j["class"] = r.nilpotence_class;
  j["maximal_class"] = r.maximal_class;
  j["metabelian"] = r.metabelian;
  j["normally_monomial"] = r.normally_monomial;
  j["cd_exponents"] = r.cd_exponents;
  j["b_exponent"] = r.b_exponent;
  j["cod_exponents"] = r.profile.cod_exponents;
  j["is_ladder"] = r.profile.is_ladder;
  j["ladder_c"] = r.profile.ladder_c ? ordered_json(*r.profile.ladder_c)
                                     : ordered_json(nullptr);
  j["missing_exponents"] = r.missing_exponents;
  j["verdicts"] = ordered_json::array();
  for (const auto &v : r.verdicts) {
    ordered_json vj;
    vj["id"] = v.id;
    vj["applicable"] = v.applicable;
    vj["pass"] = v.applicable ? ordered_json(v.pass) : ordered_json(nullptr);
    ordered_json details = ordered_json::object();
    for (const auto &d : v.details)
      details[d.key] = detail_json(d.value);
    vj["details"] = std::move(details);
    j["verdicts"].push_back(std::move(vj));
  }
  j["characters"] = ordered_json::array();
  for (const auto &c : r.characters) {
    ordered_json cj;
    cj["degree_exp"] = c.degree_exp;
    cj["kernel_order"] = c.kernel_order;
    cj["codegree_exp"] = c.codegree_exp;
    cj["faithful"] = c.faithful;
    j["characters"].push_back(std::move(cj));
  }
  return j;
}

std::string exponent_set(const std::vector<unsigned> &v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? ", " : "") + std::string("p^") + std::to_string(v[i]);
  return s + "}";
}

std::string detail_text(const DetailValue &v) {
  struct Visitor {
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(std::int64_t x) const { return std::to_string(x); }
    std::string operator()(const std::string &s) const { return s; }
    std::string operator()(const std::vector<unsigned> &x) const {
      return "[" + join(x) + "]";
    }
  };
  return std::visit(Visitor{}, v);
}

} // namespace

std::vector<CorpusEntry> builtin_corpus() {
  std::vector<CorpusEntry> out;
  auto family = [&](const FamilySpec &spec) {
    out.push_back({CorpusEntry::Kind::Family, spec.to_string()});
  };
  const std::pair<unsigned, unsigned> limits[] = {{2, 6}, {3, 5}};
  for (const auto &[p, max_n] : limits) {
    for (unsigned n = 1; n <= max_n; ++n)
      family({Family::Cyclic, p, n, {}, '+'});
    for (unsigned n = 2; n <= max_n; ++n) {
      std::vector<std::vector<unsigned>> parts;
      std::vector<unsigned> cur;
      partitions(n, n, cur, parts);
      for (const auto &part : parts)
        if (part.size() >= 2)
          family({Family::Abelian, p, n, part, '+'});
    }
    for (unsigned n = 3; n <= max_n; ++n)
      family({Family::Modular, p, n, {}, '+'});
    if (p == 2) {
      for (unsigned n = 3; n <= max_n; ++n) {
        family({Family::Dihedral, p, n, {}, '+'});
        family({Family::Quaternion, p, n, {}, '+'});
      }
      for (unsigned n = 4; n <= max_n; ++n)
        family({Family::Semidihedral, p, n, {}, '+'});
    }
    family({Family::Extraspecial, p, 3, {}, '+'});
    family({Family::Extraspecial, p, 3, {}, '-'});
    family({Family::Wreath, p, p + 1, {}, '+'});
  }
  for (const auto &s : bundled_samples())
    out.push_back({CorpusEntry::Kind::Bundled, std::string(s.name)});
  return out;
}

std::vector<CorpusEntry> load_corpus(std::string_view arg) {
  if (arg == "builtin")
    return builtin_corpus();
  if (arg == "empty")
    return {};
  const std::string path(arg);
  std::ifstream in(path);
  if (!in)
    throw Error("cannot open corpus file " + path);
  const std::filesystem::path base =
      std::filesystem::path(path).parent_path();
  std::vector<CorpusEntry> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream ls(line);
    std::string kind, value;
    if (!(ls >> kind))
      continue;
    if (!(ls >> value))
      throw ParseError(path, lineno, 1, "missing value after '" + kind + "'");
    if (kind == "family")
      out.push_back({CorpusEntry::Kind::Family, value});
    else if (kind == "pcp" || kind == "perm")
      out.push_back({kind == "pcp" ? CorpusEntry::Kind::PcpFile
                                   : CorpusEntry::Kind::PermFile,
                     (base / value).lexically_normal().string()});
    else if (kind == "sample")
      out.push_back({CorpusEntry::Kind::Bundled, value});
    else
      throw ParseError(path, lineno, 1, "unknown corpus entry '" + kind + "'");
  }
  return out;
}

Group realize_entry(const CorpusEntry &entry, std::size_t cap) {
  switch (entry.kind) {
  case CorpusEntry::Kind::Family:
    return build_family(parse_family_spec(entry.value), cap);
  case CorpusEntry::Kind::PcpFile:
    return realize_pcp(load_pcp(entry.value), cap);
  case CorpusEntry::Kind::PermFile:
    return realize_perm(load_perm(entry.value), cap).group;
  case CorpusEntry::Kind::Bundled:
    for (const auto &s : bundled_samples())
      if (s.name == entry.value)
        return realize_pcp(parse_pcp(s.text, std::string(s.name) + ".pcp"),
                           cap, "pcp:" + std::string(s.name));
    throw Error("no bundled sample named '" + entry.value + "'");
  }
  throw InternalError("unhandled corpus entry kind");
}

std::vector<AnalysisReport> run_corpus(const CorpusSpec &corpus,
                                       const SuiteSelection &suites) {
  const std::size_t count = corpus.entries.size();
  std::vector<std::optional<AnalysisReport>> results(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        const Group g = realize_entry(corpus.entries[i], corpus.cap);
        results[i] = make_report(analyze_group(g), suites);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(
                                         corpus.jobs,
                                         static_cast<unsigned>(count)));
  std::vector<std::thread> threads;
  for (unsigned t = 1; t < jobs; ++t)
    threads.emplace_back(worker);
  worker();
  for (auto &t : threads)
    t.join();
  for (const auto &e : errors)
    if (e)
      std::rethrow_exception(e);

  std::vector<AnalysisReport> out;
  out.reserve(count);
  for (auto &r : results)
    out.push_back(std::move(*r));
  std::stable_sort(out.begin(), out.end(),
                   [](const AnalysisReport &a, const AnalysisReport &b) {
                     return a.descriptor < b.descriptor;
                   });
  return out;
}

ReportDocument make_document(std::string command,
                             std::vector<AnalysisReport> groups) {
  ReportDocument doc;
  doc.command = std::move(command);
  doc.groups = std::move(groups);
  for (const auto &r : doc.groups) {
    for (const auto &v : r.verdicts) {
      auto it = std::find_if(doc.summary.begin(), doc.summary.end(),
                             [&](const auto &e) { return e.first == v.id; });
      if (it == doc.summary.end()) {
        doc.summary.push_back({v.id, {}});
        it = doc.summary.end() - 1;
      }
      if (!v.applicable)
        ++it->second.not_applicable;
      else if (v.pass)
        ++it->second.pass;
      else {
        ++it->second.fail;
        doc.failures.push_back({r.descriptor, v.id});
      }
    }
  }
  return doc;
}

std::string to_json(const AnalysisReport &report) {
  return report_json(report).dump(2) + "\n";
}

std::string to_json(const ReportDocument &doc) {
  ordered_json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["command"] = doc.command;
  j["groups"] = ordered_json::array();
  for (const auto &r : doc.groups)
    j["groups"].push_back(report_json(r));
  ordered_json summary = ordered_json::object();
  for (const auto &[id, c] : doc.summary) {
    ordered_json cj;
    cj["pass"] = c.pass;
    cj["fail"] = c.fail;
    cj["not_applicable"] = c.not_applicable;
    summary[id] = std::move(cj);
  }
  j["summary"] = std::move(summary);
  j["failures"] = ordered_json::array();
  for (const auto &[desc, id] : doc.failures) {
    ordered_json fj;
    fj["descriptor"] = desc;
    fj["id"] = id;
    j["failures"].push_back(std::move(fj));
  }
  if (doc.search_k) {
    ordered_json sj;
    sj["k"] = *doc.search_k;
    sj["matches"] = doc.search_matches;
    j["search"] = std::move(sj);
  }
  return j.dump(2) + "\n";
}

std::string to_text(const ReportDocument &doc) {
  std::ostringstream os;
  for (const auto &r : doc.groups) {
    os << "group " << r.descriptor << "  |G| = " << r.p << "^" << r.n << " = "
       << r.order << "\n";
    os << "  class " << r.nilpotence_class
       << (r.maximal_class ? " (maximal class)" : "")
       << (r.metabelian ? ", metabelian" : "")
       << (r.normally_monomial ? ", normally monomial" : "") << "\n";
    os << "  cd(G)  = " << exponent_set(r.cd_exponents) << ", b = "
       << r.b_exponent << "\n";
    os << "  cod(G) = " << exponent_set(r.profile.cod_exponents);
    if (r.profile.is_ladder)
      os << ", ladder with c = " << *r.profile.ladder_c;
    else
      os << ", not a ladder";
    os << "\n";
    if (!r.missing_exponents.empty())
      os << "  missing below p^n: " << exponent_set(r.missing_exponents)
         << "\n";
    for (const auto &v : r.verdicts) {
      os << "  " << v.id << std::string(12 - std::min<std::size_t>(
                                              11, v.id.size()), ' ')
         << (!v.applicable ? "n/a " : v.pass ? "pass" : "FAIL");
      for (const auto &d : v.details)
        os << " " << d.key << "=" << detail_text(d.value);
      os << "\n";
    }
  }
  if (!doc.summary.empty()) {
    os << "summary (pass / fail / n/a)\n";
    for (const auto &[id, c] : doc.summary)
      os << "  " << id << std::string(12 - std::min<std::size_t>(11, id.size()),
                                      ' ')
         << c.pass << " / " << c.fail << " / " << c.not_applicable << "\n";
  }
  if (doc.search_k) {
    os << "search: maximal class groups with n >= " << *doc.search_k + 1
       << " and p^" << *doc.search_k << " not in cod(G): "
       << doc.search_matches.size() << "\n";
    for (const auto &m : doc.search_matches)
      os << "  " << m << "\n";
  }
  for (const auto &[desc, id] : doc.failures)
    os << "FAILED " << id << " on " << desc << "\n";
  return os.str();
}

std::string table_text(const CharacterTable &t) {
  std::ostringstream os;
  const auto &conj = t.conj;
  os << "group " << t.group.descriptor() << ", " << conj.num_classes()
     << " classes, e = " << t.exponent << ", ell = " << t.dixon_prime << "\n";
  os << "classes (representative, size, order):\n";
  for (std::size_t j = 0; j < conj.num_classes(); ++j)
    os << "  C" << j << ": " << conj.representative(j) << ", "
       << conj.class_sizes[j] << ", "
       << conj.element_orders[conj.representative(j)] << "\n";
  for (std::size_t c = 0; c < t.characters.size(); ++c) {
    const auto &chi = t.characters[c];
    os << "chi" << c << ": degree " << chi.degree << ", |ker| "
       << chi.kernel.order() << ", codegree " << chi.codegree
       << (chi.is_faithful ? ", faithful" : "") << "\n";
    for (std::size_t j = 0; j < conj.num_classes(); ++j) {
      os << "  C" << j << ": " << chi.values[j].to_string() << "  [";
      const auto dense = chi.multiplicities[j].dense(t.exponent);
      for (std::size_t m = 0; m < dense.size(); ++m)
        os << (m ? " " : "") << dense[m];
      os << "]\n";
    }
  }
  return os.str();
}

} // namespace cgl
