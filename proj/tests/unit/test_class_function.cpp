#include <doctest.h>

#include <algorithm>

#include "cgl/character_table.hpp"
#include "cgl/class_function.hpp"
#include "cgl/error.hpp"
#include "cgl/families.hpp"
#include "cgl/group.hpp"

using namespace cgl;

namespace {

Group fam(const char *text) { return build_family(parse_family_spec(text)); }

Elem find_order(const Group &g, unsigned order) {
  for (Elem x = 0; x < g.order(); ++x)
    if (g.element_order(x) == order)
      return x;
  FAIL("no element of order " << order);
  return 0;
}

std::size_t position(const Subgroup &h, Elem x) {
  return static_cast<std::size_t>(
      std::lower_bound(h.members.begin(), h.members.end(), x) -
      h.members.begin());
}

ClassFunction integers(std::uint32_t e, std::initializer_list<std::int64_t> v) {
  ClassFunction f;
  for (auto x : v)
    f.values.push_back(CyclotomicValue::integer(e, x));
  return f;
}

} // namespace

TEST_CASE("linear characters: Z3") {
  const Group g = fam("cyclic(3,1)");
  const auto lin = linear_characters(g, whole_group(g), 3);
  REQUIRE(lin.size() == 3);
  CHECK(lin[0].exponents == std::vector<std::uint32_t>{0, 0, 0});
  for (const auto &l : lin) {
    CHECK(l.e == 3);
    for (Elem x = 0; x < 3; ++x)
      for (Elem y = 0; y < 3; ++y)
        CHECK((l.exponents[x] + l.exponents[y]) % 3 ==
              l.exponents[g.mul(x, y)]);
  }
  CHECK(std::is_sorted(lin.begin(), lin.end()));
}

TEST_CASE("linear characters: cyclic subgroup of D8") {
  const Group g = fam("dihedral(2,3)");
  const Elem r = find_order(g, 4);
  const Elem gens[] = {r};
  const Subgroup h = subgroup_closure(g, gens, false);
  REQUIRE(h.order() == 4);
  const auto lin = linear_characters(g, h, 4);
  REQUIRE(lin.size() == 4);
  std::size_t faithful = 0;
  for (const auto &l : lin) {
    const bool trivial_kernel =
        std::count(l.exponents.begin(), l.exponents.end(), 0u) == 1;
    if (l.exponents[position(h, r)] % 2 == 1) {
      CHECK(trivial_kernel);
      ++faithful;
    }
  }
  CHECK(faithful == 2);
}

TEST_CASE("linear characters: D8 itself has G' in every kernel") {
  const Group g = fam("dihedral(2,3)");
  const Subgroup all = whole_group(g);
  const auto lin = linear_characters(g, all, 4);
  REQUIRE(lin.size() == 4);
  const Subgroup d = derived_subgroup(g);
  for (const auto &l : lin) {
    for (Elem x : d.members)
      CHECK(l.exponents[position(all, x)] == 0);
    const auto v = l.values();
    REQUIRE(v.values.size() == g.order());
    for (std::size_t i = 0; i < v.values.size(); ++i)
      CHECK(v.values[i] == CyclotomicValue::root_of_unity(4, l.exponents[i]));
  }
  // every linear character of G is a degree-one row of the table
  const auto t = character_table(g);
  for (const auto &l : lin) {
    const auto as_cf = induce(g, t.conj, all, l);
    bool found = false;
    for (const auto &chi : t.characters)
      found = found || as_class_function(chi) == as_cf;
    CHECK(found);
  }
}

TEST_CASE("induce: faithful character of <r> gives the degree-2 row of D8") {
  const Group g = fam("dihedral(2,3)");
  const auto t = character_table(g);
  const Elem r = find_order(g, 4);
  const Elem gens[] = {r};
  const Subgroup h = subgroup_closure(g, gens, false);
  const auto lin = linear_characters(g, h, 4);
  const auto it = std::find_if(lin.begin(), lin.end(), [&](const auto &l) {
    return l.exponents[position(h, r)] == 1;
  });
  REQUIRE(it != lin.end());
  const ClassFunction ind = induce(g, t.conj, h, *it);
  CHECK(ind == integers(4, {2, -2, 0, 0, 0}));
  CHECK(ind == as_class_function(t.characters.back()));
  CHECK(induce(g, t.conj, h, it->values()) == ind);
  CHECK(inner_product(t.conj, ind, ind) == 1);
}

TEST_CASE("induce: from G and from the center of D8") {
  const Group g = fam("dihedral(2,3)");
  const auto t = character_table(g);
  const auto whole = linear_characters(g, whole_group(g), 4);
  CHECK(induce(g, t.conj, whole_group(g), whole[0]) ==
        integers(4, {1, 1, 1, 1, 1}));

  const Subgroup z = center(g);
  const auto lin = linear_characters(g, z, 4);
  REQUIRE(lin.size() == 2);
  CHECK(induce(g, t.conj, z, lin[0]) == integers(4, {4, 4, 0, 0, 0}));
  const ClassFunction ind = induce(g, t.conj, z, lin[1]);
  CHECK(ind == integers(4, {4, -4, 0, 0, 0}));
  CHECK(induce(g, t.conj, z, lin[1].values()) == ind);
  CHECK(inner_product(t.conj, ind, ind) == 4);
  CHECK(inner_product(t.conj, ind, as_class_function(t.characters.back())) ==
        2);
}

TEST_CASE("induce: non-normal subgroup agrees between both overloads") {
  const Group g = fam("dihedral(2,4)");
  const auto t = character_table(g);
  // a reflection generates a non-normal subgroup of order 2
  Elem s = 0;
  for (Elem x = 1; x < g.order(); ++x)
    if (g.element_order(x) == 2 && t.conj.class_sizes[t.conj.class_of[x]] > 1) {
      s = x;
      break;
    }
  REQUIRE(s != 0);
  const Elem gens[] = {s};
  const Subgroup h = subgroup_closure(g, gens, false);
  for (const auto &l : linear_characters(g, h, t.exponent)) {
    const auto a = induce(g, t.conj, h, l);
    CHECK(a == induce(g, t.conj, h, l.values()));
    CHECK(a.values[0] == CyclotomicValue::integer(t.exponent, 8));
    // Frobenius reciprocity with the principal character
    const auto &one = *std::find_if(
        t.characters.begin(), t.characters.end(),
        [&](const auto &chi) { return chi.kernel.order() == g.order(); });
    const std::int64_t m = inner_product(t.conj, a, as_class_function(one));
    CHECK(m == (l.exponents[1] == 0 ? 1 : 0));
  }
}

TEST_CASE("inner product: table rows and errors") {
  const Group g = fam("quaternion(2,3)");
  const auto t = character_table(g);
  for (std::size_t i = 0; i < t.characters.size(); ++i)
    for (std::size_t j = 0; j < t.characters.size(); ++j)
      CHECK(inner_product(t.conj, as_class_function(t.characters[i]),
                          as_class_function(t.characters[j])) == (i == j));
  CHECK_THROWS_AS(inner_product(t.conj, integers(4, {1, 0, 0, 0, 0}),
                                integers(4, {1, 0, 0, 0, 0})),
                  InternalError);
}

TEST_CASE("normally monomial: D8, abelian, extraspecial") {
  {
    const Group g = fam("dihedral(2,3)");
    const auto t = character_table(g);
    const auto normals = normal_subgroups(g);
    const auto rep = normally_monomial_report(t, normals);
    REQUIRE(rep.witnesses.size() == 1);
    const auto &w = rep.witnesses[0];
    CHECK(rep.normally_monomial);
    CHECK(w.character == 4);
    REQUIRE(w.subgroup.has_value());
    REQUIRE(w.lambda.has_value());
    const Subgroup &h = normals[*w.subgroup];
    CHECK(h.order() == 4);
    CHECK(w.subgroup_abelian);
    CHECK(w.faithful);
    const auto lin = linear_characters(g, h, t.exponent);
    CHECK(induce(g, t.conj, h, lin[*w.lambda]) ==
          as_class_function(t.characters[w.character]));
  }
  {
    const Group g = fam("abelian(3,[2,1])");
    const auto rep =
        normally_monomial_report(character_table(g), normal_subgroups(g));
    CHECK(rep.witnesses.empty());
    CHECK(rep.normally_monomial);
  }
  for (const char *name : {"extraspecial(3,3,+)", "extraspecial(3,3,-)"}) {
    CAPTURE(name);
    const Group g = fam(name);
    const auto t = character_table(g);
    const auto normals = normal_subgroups(g);
    const auto rep = normally_monomial_report(t, normals);
    REQUIRE(rep.witnesses.size() == 2);
    CHECK(rep.normally_monomial);
    CHECK(rep.faithful_witnesses_abelian);
    for (const auto &w : rep.witnesses) {
      CHECK(w.faithful);
      REQUIRE(w.subgroup.has_value());
      CHECK(normals[*w.subgroup].order() == 9);
      CHECK(w.subgroup_abelian);
    }
  }
}

TEST_CASE("normally monomial: witnesses reproduce their characters") {
  for (const char *name : {"quaternion(2,4)", "semidihedral(2,5)",
                           "wreath(3)", "modular(3,3)", "wreath(2)"}) {
    CAPTURE(name);
    const Group g = fam(name);
    const auto t = character_table(g);
    const auto normals = normal_subgroups(g);
    const auto rep = normally_monomial_report(t, normals);
    std::size_t nonlinear = 0;
    for (const auto &chi : t.characters)
      nonlinear += chi.degree > 1;
    CHECK(rep.witnesses.size() == nonlinear);
    for (const auto &w : rep.witnesses) {
      REQUIRE(w.subgroup.has_value());
      const Subgroup &h = normals[*w.subgroup];
      const auto &chi = t.characters[w.character];
      CHECK(g.order() / h.order() == chi.degree);
      CHECK(w.subgroup_abelian == is_abelian(g, h));
      const auto lin = linear_characters(g, h, t.exponent);
      CHECK(induce(g, t.conj, h, lin[*w.lambda]) == as_class_function(chi));
    }
  }
}
