#include "cgl/analysis.hpp"

#include <algorithm>
#include <set>

#include "cgl/error.hpp"

namespace cgl {

namespace {

bool contains(const std::vector<unsigned> &v, unsigned x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

TheoremVerdict verdict(std::string id) {
  TheoremVerdict v;
  v.id = std::move(id);
  return v;
}

void put(TheoremVerdict &v, std::string key, DetailValue value) {
  v.details.push_back({std::move(key), std::move(value)});
}

std::int64_t as_int(std::uint64_t x) { return static_cast<std::int64_t>(x); }

unsigned n_of(const GroupAnalysis &a) { return a.table.group.log_order(); }

void put_ladder(TheoremVerdict &v, const CodegreeProfile &profile) {
  put(v, "cod_exponents", profile.cod_exponents);
  put(v, "is_ladder", profile.is_ladder);
  if (profile.ladder_c)
    put(v, "c", as_int(*profile.ladder_c));
}

bool full_ladder(const GroupAnalysis &a) {
  return a.profile.is_ladder && n_of(a) >= 1 &&
         *a.profile.ladder_c == n_of(a) - 1;
}

// Structural shape of <x> x| <y> with |G'| = p: an element of order
// p^(n-1) and an element of order p outside the cyclic subgroup it spans.
bool has_cyclic_maximal_with_complement(const Group &g) {
  const unsigned n = g.log_order();
  const std::uint64_t target = ipow(g.prime(), n - 1);
  for (Elem x = 1; x < g.order(); ++x) {
    if (g.element_order(x) != target)
      continue;
    std::vector<char> in_x(g.order(), 0);
    Elem y = 0;
    for (std::uint64_t k = 0; k < target; ++k) {
      in_x[y] = 1;
      y = g.mul(y, x);
    }
    for (Elem z = 1; z < g.order(); ++z)
      if (!in_x[z] && g.element_order(z) == g.prime())
        return true;
  }
  return false;
}

std::vector<unsigned> theorem_A_cases(const GroupAnalysis &a) {
  const Group &g = a.table.group;
  const unsigned n = n_of(a);
  std::vector<unsigned> cases;
  if (is_abelian(g) && abelian_invariants(g) == std::vector<unsigned>{n - 1, 1})
    cases.push_back(1);
  if (a.series.nilpotence_class == 2 && n >= 4 &&
      derived_subgroup(g).order() == g.prime() &&
      has_cyclic_maximal_with_complement(g))
    cases.push_back(2);
  if (a.series.is_maximal_class && a.table.cd_exponents.size() == 2)
    cases.push_back(3);
  return cases;
}

} // namespace

CodegreeProfile ladder_check(std::vector<unsigned> cod_exponents) {
  std::sort(cod_exponents.begin(), cod_exponents.end());
  cod_exponents.erase(std::unique(cod_exponents.begin(), cod_exponents.end()),
                      cod_exponents.end());
  if (cod_exponents.empty() || cod_exponents.front() != 0)
    throw InternalError("codegree set does not contain 1");
  CodegreeProfile profile;
  profile.is_ladder = cod_exponents.back() + 1 == cod_exponents.size();
  if (profile.is_ladder)
    profile.ladder_c = cod_exponents.back();
  profile.cod_exponents = std::move(cod_exponents);
  return profile;
}

GroupAnalysis analyze_group(const Group &g) {
  ConjugacyData conj = conjugacy_data(g);
  std::vector<Subgroup> normals = normal_subgroups(g, conj);
  CharacterTable table = character_table(g, conj);
  NormallyMonomialReport monomial = normally_monomial_report(table, normals);
  CodegreeProfile profile = ladder_check(table.cod_exponents);
  return GroupAnalysis{std::move(table), central_series(g), std::move(normals),
                       std::move(monomial), std::move(profile)};
}

TheoremVerdict classify_theorem_A(const GroupAnalysis &a) {
  TheoremVerdict v = verdict("A");
  const unsigned n = n_of(a);
  put(v, "n", as_int(n));
  put_ladder(v, a.profile);
  if (n < 2) {
    put(v, "reason", std::string("requires |G| >= p^2"));
    return v;
  }
  if (!full_ladder(a)) {
    put(v, "reason", std::string("cod(G) is not {p^i : 0 <= i <= n-1}"));
    return v;
  }
  v.applicable = true;
  const auto cases = theorem_A_cases(a);
  put(v, "direction", std::string("forward"));
  put(v, "matched_cases", cases);
  if (n == 2)
    put(v, "reading", std::string("n = 2 read as case 1: Z_p x Z_p"));
  v.pass = cases.size() == 1;
  return v;
}

TheoremVerdict theorem_A_converse(const GroupAnalysis &a) {
  TheoremVerdict v = verdict("A-converse");
  const unsigned n = n_of(a);
  put(v, "n", as_int(n));
  put_ladder(v, a.profile);
  if (n < 2) {
    put(v, "reason", std::string("requires |G| >= p^2"));
    return v;
  }
  const auto cases = theorem_A_cases(a);
  put(v, "direction", std::string("converse"));
  put(v, "matched_cases", cases);
  if (cases.empty()) {
    put(v, "reason", std::string("G matches none of the three cases"));
    return v;
  }
  v.applicable = true;
  v.pass = full_ladder(a);
  return v;
}

TheoremVerdict verify_theorem_B(const GroupAnalysis &a) {
  TheoremVerdict v = verdict("B");
  const unsigned n = n_of(a);
  const auto &cd = a.table.cd_exponents;
  const unsigned b = a.table.b_exponent;
  put(v, "n", as_int(n));
  put(v, "cd_exponents", cd);
  put(v, "b", as_int(b));
  put_ladder(v, a.profile);
  if (!a.series.is_maximal_class) {
    put(v, "reason", std::string("not of maximal class"));
    return v;
  }
  if (cd.size() != 3 || cd[0] != 0 || cd[1] != 1 || b < 2) {
    put(v, "reason", std::string("cd(G) is not {1, p, p^b} with b >= 2"));
    return v;
  }
  v.applicable = true;
  if (!a.profile.is_ladder)
    return v;
  const unsigned c = *a.profile.ladder_c;
  put(v, "lower_bound", as_int(n - b));
  put(v, "upper_bound", as_int(n - 2));
  v.pass = n - b <= c && c <= n - 2;
  if (b == 2) {
    put(v, "b2_requires_c", as_int(n - 2));
    v.pass = v.pass && c == n - 2;
  }
  return v;
}

TheoremVerdict verify_corollary_C(const GroupAnalysis &a) {
  TheoremVerdict v = verdict("C");
  const unsigned n = n_of(a);
  put(v, "n", as_int(n));
  put_ladder(v, a.profile);
  if (!a.series.is_maximal_class || !a.series.is_metabelian) {
    put(v, "reason", std::string("not metabelian of maximal class"));
    return v;
  }
  v.applicable = true;
  v.pass = a.profile.is_ladder &&
           (*a.profile.ladder_c == n - 1 || *a.profile.ladder_c == n - 2);
  return v;
}

TheoremVerdict verify_theorem_D(const GroupAnalysis &a) {
  TheoremVerdict v = verdict("D");
  const unsigned n = n_of(a);
  const unsigned b = a.table.b_exponent;
  put(v, "n", as_int(n));
  put(v, "b", as_int(b));
  put_ladder(v, a.profile);
  put(v, "normally_monomial", a.monomial.normally_monomial);
  if (!a.series.is_maximal_class || !a.monomial.normally_monomial) {
    put(v, "reason", std::string("not normally monomial of maximal class"));
    return v;
  }
  v.applicable = true;
  const std::uint64_t bdeg = ipow(a.table.group.prime(), b);
  bool faithful_degree_b = true;
  for (const auto &chi : a.table.characters)
    if (chi.is_faithful && chi.degree != bdeg)
      faithful_degree_b = false;
  put(v, "lower_bound", as_int(n - b));
  put(v, "faithful_degree_is_b", faithful_degree_b);
  put(v, "faithful_witnesses_abelian", a.monomial.faithful_witnesses_abelian);
  v.pass = a.profile.is_ladder && *a.profile.ladder_c >= n - b &&
           faithful_degree_b && a.monomial.faithful_witnesses_abelian;
  return v;
}

std::vector<TheoremVerdict> lemma_membership_suite(const GroupAnalysis &a) {
  const unsigned n = n_of(a);
  const auto &cod = a.profile.cod_exponents;
  std::vector<TheoremVerdict> out;
  const unsigned thresholds[] = {3, 4, 6};
  for (unsigned k = 2; k <= 4; ++k) {
    TheoremVerdict v = verdict("L-p" + std::to_string(k));
    put(v, "n", as_int(n));
    put(v, "exponent", as_int(k));
    put(v, "cod_exponents", cod);
    if (!a.series.is_maximal_class) {
      put(v, "reason", std::string("not of maximal class"));
    } else if (n < thresholds[k - 2]) {
      put(v, "reason", "requires n >= " + std::to_string(thresholds[k - 2]));
    } else {
      v.applicable = true;
      v.pass = contains(cod, k);
    }
    out.push_back(std::move(v));
  }

  TheoremVerdict v = verdict("faithful-p");
  const Group &g = a.table.group;
  bool hypothesis = false;
  for (const auto &chi : a.table.characters)
    if (chi.is_faithful && chi.degree == g.prime())
      hypothesis = true;
  put(v, "cd_exponents", a.table.cd_exponents);
  if (!hypothesis) {
    put(v, "reason", std::string("no faithful character of degree p"));
  } else {
    v.applicable = true;
    bool abelian_index_p = false;
    for (const auto &h : a.normals)
      if (h.order() * g.prime() == g.order() && is_abelian(g, h))
        abelian_index_p = true;
    const bool cd_ok = a.table.cd_exponents == std::vector<unsigned>{0, 1};
    put(v, "cd_is_1_p", cd_ok);
    put(v, "abelian_normal_index_p", abelian_index_p);
    v.pass = cd_ok && abelian_index_p;
  }
  out.push_back(std::move(v));
  return out;
}

SuiteSelection SuiteSelection::parse(std::string_view text) {
  if (text == "all")
    return {};
  SuiteSelection s{false, false, false, false, false};
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos)
      end = text.size();
    const std::string_view item = text.substr(start, end - start);
    if (item == "A")
      s.a = true;
    else if (item == "B")
      s.b = true;
    else if (item == "C")
      s.c = true;
    else if (item == "D")
      s.d = true;
    else if (item == "lemmas")
      s.lemmas = true;
    else if (item == "all")
      s = {};
    else
      throw Error("unknown suite '" + std::string(item) +
                  "' (expected A, B, C, D, lemmas or all)");
    start = end + 1;
  }
  return s;
}

bool AnalysisReport::any_failure() const noexcept {
  return std::any_of(verdicts.begin(), verdicts.end(),
                     [](const TheoremVerdict &v) { return v.failed(); });
}

AnalysisReport make_report(const GroupAnalysis &a, const SuiteSelection &s) {
  const Group &g = a.table.group;
  AnalysisReport r;
  r.descriptor = g.descriptor();
  r.p = g.prime();
  r.n = g.log_order();
  r.order = g.order();
  r.nilpotence_class = a.series.nilpotence_class;
  r.maximal_class = a.series.is_maximal_class;
  r.metabelian = a.series.is_metabelian;
  r.normally_monomial = a.monomial.normally_monomial;
  r.cd_exponents = a.table.cd_exponents;
  r.b_exponent = a.table.b_exponent;
  r.profile = a.profile;
  for (unsigned i = 0; i < r.n; ++i)
    if (!contains(r.profile.cod_exponents, i))
      r.missing_exponents.push_back(i);
  if (s.a) {
    r.verdicts.push_back(classify_theorem_A(a));
    r.verdicts.push_back(theorem_A_converse(a));
  }
  if (s.b)
    r.verdicts.push_back(verify_theorem_B(a));
  if (s.c)
    r.verdicts.push_back(verify_corollary_C(a));
  if (s.d)
    r.verdicts.push_back(verify_theorem_D(a));
  if (s.lemmas)
    for (auto &v : lemma_membership_suite(a))
      r.verdicts.push_back(std::move(v));
  for (const auto &chi : a.table.characters) {
    r.characters.push_back(
        {static_cast<unsigned>(exact_log(chi.degree, r.p)),
         chi.kernel.order(),
         static_cast<unsigned>(exact_log(chi.codegree, r.p)), chi.is_faithful});
  }
  return r;
}

std::vector<const AnalysisReport *>
missing_codegree_search(const std::vector<AnalysisReport> &corpus,
                        unsigned k) {
  std::vector<const AnalysisReport *> out;
  for (const auto &r : corpus)
    if (r.maximal_class && r.n >= k + 1 &&
        !contains(r.profile.cod_exponents, k))
      out.push_back(&r);
  return out;
}

} // namespace cgl
