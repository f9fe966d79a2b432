#include <doctest.h>

#include <algorithm>
#include <string>

#include "cgl/character_table.hpp"
#include "cgl/error.hpp"
#include "cgl/families.hpp"
#include "cgl/group.hpp"
#include "cgl/pcp.hpp"
#include "compare.hpp"
#include "gap_header.hpp"
#include "oracles.hpp"

using namespace cgl;

namespace {

const std::string kSource = CGL_SOURCE_DIR;

Group fam(const char *text) { return build_family(parse_family_spec(text)); }

// Returns "line:column" of the parse error, or "" if none was thrown.
std::string error_position(const std::string &text) {
  try {
    parse_pcp(text, "t");
  } catch (const ParseError &e) {
    return std::to_string(e.line()) + ":" + std::to_string(e.column());
  }
  return "";
}

std::string error_message(const std::string &text) {
  try {
    parse_pcp(text, "t");
  } catch (const ParseError &e) {
    return e.what();
  }
  return "";
}

bool contains(const std::string &hay, const std::string &needle) {
  return hay.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("pcp: parse D8") {
  const auto pres =
      parse_pcp("# D8\npgroup 2 3\ngens a b c\ncomm b a = c  # r\n", "d8");
  CHECK(pres.p == 2);
  CHECK(pres.n == 3);
  CHECK(pres.names == std::vector<std::string>{"a", "b", "c"});
  CHECK(pres.source == "d8");
  for (const auto &w : pres.power)
    CHECK(w.terms.empty());
  CHECK(pres.comm[1][0] == PcWord{{{2, 1}}});
  CHECK(pres.comm[2][0].terms.empty());
}

TEST_CASE("pcp: words with exponents") {
  const auto pres = parse_pcp("pgroup 3 3\ngens x y z\npow x = y^2 z\n"
                              "comm z y = 1\n");
  CHECK(pres.power[0] == PcWord{{{1, 2}, {2, 1}}});
  CHECK(pres.comm[2][1].terms.empty());
}

TEST_CASE("pcp: parse errors carry line and column") {
  CHECK(error_position("pgroup 4 2\n") == "1:8");
  CHECK(error_position("gens a\n") == "1:1");
  CHECK(error_position("pgroup 2 2\ngens a\n") == "2:1");
  CHECK(error_position("pgroup 2 2\ngens a b\ncomm a b = 1\n") == "3:6");
  CHECK(contains(error_message("pgroup 2 2\ngens a b\ncomm a b = 1\n"),
                 "relation must have later generator first: comm b a"));
  CHECK(error_position("pgroup 2 2\ngens a b\npow a = q\n") == "3:9");
  CHECK(contains(error_message("pgroup 2 2\ngens a b\npow a = q\n"),
                 "undeclared generator"));
  CHECK(error_position("pgroup 3 2\ngens a b\npow a = b^3\n") == "3:11");
  CHECK(error_position("pgroup 2 2\ngens a b\npow a = 2\n") == "3:9");
  CHECK(error_position("pgroup 2 2\ngens a b\npow b = a\n") == "3:9");
  CHECK(contains(error_message("pgroup 2 3\ngens a b c\npow a = c b\n"),
                 "word terms must appear in generator order"));
  CHECK(contains(error_message("pgroup 2 2\npow a = 1\ngens a b\n"),
                 "referenced before the gens statement"));
  CHECK(contains(error_message("pgroup 2 2\ngens a b\npow a = b\npow a = 1\n"),
                 "duplicate pow relation"));
  CHECK(contains(
      error_message("pgroup 2 2\ngens a b\ncomm b a = 1\ncomm b a = 1\n"),
      "duplicate comm relation"));
  CHECK(error_position("pgroup 2 2\ngens a b\nfrob a\n") == "3:1");
  CHECK(error_position("pgroup 2 2\ngens a\n") == "2:1");
  CHECK(error_position("pgroup 2 2\ngens a b\npow a =\n") != "");
  CHECK(error_position("pgroup 2 2\ngens a b\npow a = b\n") == "");
  CHECK(error_message("") != "");
}

TEST_CASE("pcp: realize D8 matches the dihedral family") {
  const auto pres = load_pcp(kSource + "/tests/support/d8_gap.pcp");
  const Group g = realize_pcp(pres);
  CHECK(g.order() == 8);
  CHECK(g.descriptor() == "pcp:" + pres.source);
  CHECK(fixture::profile(g) == fixture::profile(fam("dihedral(2,3)")));
  const Elem a = pcp_element(pres, PcWord{{{0, 1}}});
  const Elem b = pcp_element(pres, PcWord{{{1, 1}}});
  const Elem c = pcp_element(pres, PcWord{{{2, 1}}});
  CHECK(g.comm(b, a) == c);
  CHECK(g.mul(a, a) == 0);
  CHECK(g.element_order(g.mul(a, b)) == 4);
  CHECK(pcp_element(pres, PcWord{}) == 0);
}

TEST_CASE("pcp: elementary abelian and cyclic presentations") {
  const Group e9 = realize_pcp(parse_pcp("pgroup 3 2\ngens a b\n"));
  CHECK(e9.order() == 9);
  CHECK(is_abelian(e9));
  CHECK(abelian_invariants(e9) == std::vector<unsigned>{1, 1});
  const Group c8 = realize_pcp(
      parse_pcp("pgroup 2 3\ngens a b c\npow a = b\npow b = c\n"));
  CHECK(abelian_invariants(c8) == std::vector<unsigned>{3});
  const Group q8 = realize_pcp(parse_pcp(
      "pgroup 2 3\ngens a b c\npow a = c\npow b = c\ncomm b a = c\n"));
  CHECK(fixture::profile(q8) == fixture::profile(fam("quaternion(2,3)")));
}

TEST_CASE("pcp: inconsistent presentation is rejected") {
  const auto pres =
      parse_pcp("pgroup 2 3\ngens a b c\npow a = b\ncomm b a = c\n");
  CHECK_THROWS_AS(realize_pcp(pres), InvalidGroup);
}

TEST_CASE("pcp: cap") {
  const auto pres = parse_pcp("pgroup 2 5\ngens a b c d e\n");
  CHECK_THROWS_AS(realize_pcp(pres, 16), CapExceeded);
  CHECK(realize_pcp(pres, 32).order() == 32);
}

TEST_CASE("pcp: bundled samples match their exported invariants") {
  for (const char *name :
       {"maxclass_81_8", "maxclass_81_9", "maxclass_81_10", "maxclass_243_25",
        "maxclass_243_28", "maxclass_243_29", "maxclass_243_30"}) {
    CAPTURE(name);
    const std::string path = kSource + "/data/" + name + ".pcp";
    const auto inv = fixture::read_gap_invariants(path);
    const Group g = realize_pcp(load_pcp(path));
    CHECK(check_associative(g));
    const auto t = character_table(g);
    const auto &c = t.conj;
    CHECK(c.num_classes() == inv.classes);
    auto sizes = c.class_sizes;
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == inv.class_sizes);
    std::map<unsigned, std::size_t> orders;
    for (Elem x = 0; x < g.order(); ++x)
      ++orders[oracle::order_of(g, x)];
    CHECK(orders == inv.element_orders);
    const auto series = central_series(g);
    CHECK(series.nilpotence_class == inv.nilpotency_class);
    CHECK(series.is_maximal_class);
    CHECK(normal_subgroups(g, c).size() == inv.normal_subgroups);
    if (inv.has_extras) {
      CHECK(series.is_metabelian == inv.metabelian);
      CHECK(c.exponent == inv.exponent);
    }
    std::map<std::size_t, std::size_t> degrees;
    std::set<std::size_t> cods;
    for (const auto &chi : t.characters) {
      ++degrees[chi.degree];
      cods.insert(chi.codegree);
    }
    CHECK(degrees == inv.degrees);
    CHECK(std::vector<std::size_t>(cods.begin(), cods.end()) == inv.codegrees);
  }
}

TEST_CASE("perm: parse") {
  const auto gens = parse_perm("perm degree 4\ngen (1 2 3 4)\ngen (1 3)(2)\n");
  CHECK(gens.degree == 4);
  REQUIRE(gens.generators.size() == 2);
  CHECK(gens.generators[0] == std::vector<std::uint32_t>{1, 2, 3, 0});
  CHECK(gens.generators[1] == std::vector<std::uint32_t>{2, 1, 0, 3});
  CHECK(parse_perm("perm degree 3\ngen ()\n").generators[0] ==
        std::vector<std::uint32_t>{0, 1, 2});
}

TEST_CASE("perm: parse errors") {
  auto where = [](const std::string &text) -> std::string {
    try {
      parse_perm(text, "t");
    } catch (const ParseError &e) {
      return std::to_string(e.line()) + ":" + std::to_string(e.column());
    }
    return "";
  };
  CHECK(where("perm degree 4\ngen (1 5)\n") == "2:8");
  CHECK(where("perm degree 4\ngen (1 2 1)\n") == "2:10");
  CHECK(where("gen (1 2)\n") == "1:1");
  CHECK(where("perm degree 4\n") != "");
  CHECK(where("perm degree 4\ngen (1 2\n") != "");
  CHECK(where("perm size 4\n") == "1:6");
}

TEST_CASE("perm: realize D8 and generator-order independence") {
  const PermGroup pg = realize_perm(load_perm(kSource + "/tests/support/d8.perm"));
  CHECK(pg.group.order() == 8);
  CHECK(pg.elements.size() == 8);
  CHECK(fixture::profile(pg.group) == fixture::profile(fam("dihedral(2,3)")));
  // composition is left to right: (xy)(k) = y(x(k))
  for (Elem x = 0; x < 8; ++x)
    for (Elem y = 0; y < 8; ++y) {
      const auto &px = pg.elements[x], &py = pg.elements[y];
      const auto &pxy = pg.elements[pg.group.mul(x, y)];
      for (std::size_t k = 0; k < 4; ++k)
        CHECK(pxy[k] == py[px[k]]);
    }
  const auto swapped =
      realize_perm(parse_perm("perm degree 4\ngen (1 3)\ngen (1 2 3 4)\n"));
  CHECK(fixture::profile(swapped.group) == fixture::profile(pg.group));
}

TEST_CASE("perm: wreath product of Z3 by Z3 on 9 points") {
  const auto pg = realize_perm(parse_perm(
      "perm degree 9\ngen (1 2 3)\ngen (1 4 7)(2 5 8)(3 6 9)\n"));
  CHECK(pg.group.order() == 81);
  CHECK(fixture::profile(pg.group) == fixture::profile(fam("wreath(3)")));
}

TEST_CASE("perm: invalid groups and cap") {
  CHECK_THROWS_AS(realize_perm(parse_perm("perm degree 3\ngen ()\n")),
                  InvalidGroup);
  CHECK_THROWS_AS(
      realize_perm(parse_perm("perm degree 3\ngen (1 2 3)\ngen (1 2)\n")),
      InvalidGroup);
  const auto c16 = parse_perm(
      "perm degree 16\ngen (1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16)\n");
  CHECK_THROWS_AS(realize_perm(c16, 8), CapExceeded);
  CHECK(realize_perm(c16, 16).group.order() == 16);
}
