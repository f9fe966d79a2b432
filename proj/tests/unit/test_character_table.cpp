#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "cgl/character_table.hpp"
#include "cgl/cyclotomic.hpp"
#include "cgl/families.hpp"
#include "cgl/group.hpp"
#include "cgl/modular.hpp"
#include "compare.hpp"
#include "hand_tables.hpp"
#include "oracles.hpp"

using namespace cgl;

namespace {

Group fam(const char *text) { return build_family(parse_family_spec(text)); }

std::size_t class_with(const ConjugacyData &c, unsigned order,
                       std::size_t size) {
  for (std::size_t j = 0; j < c.num_classes(); ++j)
    if (c.element_orders[c.representative(j)] == order &&
        c.class_sizes[j] == size)
      return j;
  FAIL("no class of order " << order << " and size " << size);
  return 0;
}

std::multiset<std::uint64_t> codegrees(const CharacterTable &t) {
  std::multiset<std::uint64_t> out;
  for (const auto &chi : t.characters)
    out.insert(chi.codegree);
  return out;
}

const Character &principal(const CharacterTable &t) {
  for (const auto &chi : t.characters)
    if (chi.kernel.order() == t.group.order())
      return chi;
  FAIL("no principal character");
  return t.characters.front();
}

const char *const kCorpus[] = {
    "cyclic(2,1)",         "cyclic(3,3)",         "cyclic(5,2)",
    "abelian(2,[2,1])",    "abelian(2,[1,1,1])",  "abelian(3,[2,1])",
    "modular(2,4)",        "modular(2,5)",        "modular(3,3)",
    "dihedral(2,3)",       "dihedral(2,4)",       "dihedral(2,5)",
    "semidihedral(2,4)",   "semidihedral(2,5)",   "quaternion(2,3)",
    "quaternion(2,4)",     "quaternion(2,5)",     "extraspecial(2,3,+)",
    "extraspecial(3,3,+)", "extraspecial(3,3,-)", "extraspecial(5,3,+)",
    "wreath(2)",           "wreath(3)",
};

} // namespace

TEST_CASE("class constants: Z2 and D8") {
  const Group z2 = fam("cyclic(2,1)");
  const auto cz = conjugacy_data(z2);
  const auto az = class_constants(cz, z2);
  CHECK(az(1, 1, 0) == 1);
  CHECK(az(1, 1, 1) == 0);
  CHECK(az(0, 1, 1) == 1);

  const Group d8 = fam("dihedral(2,3)");
  const auto c = conjugacy_data(d8);
  const auto a = class_constants(c, d8);
  const std::size_t r = class_with(c, 4, 2);
  const std::size_t r2 = class_with(c, 2, 1);
  CHECK(a(r, r, 0) == 2);
  CHECK(a(r, r, r2) == 2);
  const std::size_t k = c.num_classes();
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t l = 0; l < k; ++l)
      CHECK(a(0, j, l) == (j == l ? 1u : 0u));
}

TEST_CASE("class constants: brute-force counts") {
  for (const char *name : {"quaternion(2,4)", "wreath(3)", "modular(3,3)"}) {
    CAPTURE(name);
    const Group g = fam(name);
    const auto c = conjugacy_data(g);
    const auto a = class_constants(c, g);
    const std::size_t k = c.num_classes();
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t l = 0; l < k; ++l) {
          const Elem z = c.representative(l);
          std::uint64_t count = 0;
          for (Elem x : c.classes[i])
            if (c.class_of[g.mul(g.inv(x), z)] == j)
              ++count;
          CHECK(a(i, j, l) == count);
        }
  }
}

TEST_CASE("character table: D8") {
  const auto t = character_table(fam("dihedral(2,3)"));
  std::vector<std::uint64_t> degrees;
  for (const auto &chi : t.characters)
    degrees.push_back(chi.degree);
  CHECK(degrees == std::vector<std::uint64_t>{1, 1, 1, 1, 2});
  const auto &chi = t.characters.back();
  CHECK(chi.kernel.is_trivial());
  CHECK(chi.codegree == 4);
  CHECK(chi.is_faithful);
  CHECK(chi.center.order() == 2);
  CHECK(t.cd_exponents == std::vector<unsigned>{0, 1});
  CHECK(t.cod_exponents == std::vector<unsigned>{0, 1, 2});
  CHECK(t.b_exponent == 1);
  CHECK(t.exponent == 4);
  CHECK(t.dixon_prime == 13);
}

TEST_CASE("character table: Z4 codegrees") {
  const auto t = character_table(fam("cyclic(2,2)"));
  CHECK(codegrees(t) == std::multiset<std::uint64_t>{1, 2, 4, 4});
  CHECK(t.cod_exponents == std::vector<unsigned>{0, 1, 2});
}

TEST_CASE("character table: extraspecial 27") {
  for (const char *name : {"extraspecial(3,3,+)", "extraspecial(3,3,-)"}) {
    CAPTURE(name);
    const auto t = character_table(fam(name));
    REQUIRE(t.characters.size() == 11);
    std::size_t linear = 0, faithful = 0;
    for (const auto &chi : t.characters) {
      if (chi.degree == 1)
        ++linear;
      if (chi.is_faithful) {
        ++faithful;
        CHECK(chi.degree == 3);
        CHECK(chi.codegree == 9);
        CHECK(chi.center.order() == 3);
      }
    }
    CHECK(linear == 9);
    CHECK(faithful == 2);
    CHECK(t.cod_exponents == std::vector<unsigned>{0, 1, 2});
  }
}

TEST_CASE("character table: Q8 and D16 codegrees") {
  CHECK(character_table(fam("quaternion(2,3)")).cod_exponents ==
        std::vector<unsigned>{0, 1, 2});
  const auto t = character_table(fam("dihedral(2,4)"));
  CHECK(principal(t).codegree == 1);
  CHECK(principal(t).degree == 1);
  std::size_t faithful = 0;
  for (const auto &chi : t.characters)
    if (chi.is_faithful) {
      ++faithful;
      CHECK(chi.degree == 2);
      CHECK(chi.codegree == 8);
      CHECK(codegree(t, chi) == 8);
    }
  CHECK(faithful == 2);
  CHECK(t.cod_exponents == std::vector<unsigned>{0, 1, 2, 3});
}

TEST_CASE("character table: hand tables for D8 and Q8") {
  CHECK(fixture::matches_hand_table(character_table(fam("dihedral(2,3)")),
                                    fixture::kD8Classes, fixture::kD8Table));
  CHECK(fixture::matches_hand_table(character_table(fam("quaternion(2,3)")),
                                    fixture::kQ8Classes, fixture::kQ8Table));
  // D8 and Q8 share a table, but not their class shapes.
  CHECK_FALSE(fixture::matches_hand_table(
      character_table(fam("quaternion(2,3)")), fixture::kD8Classes,
      fixture::kD8Table));
}

TEST_CASE("character table: agrees with the numeric eigenvector oracle") {
  for (const char *name : kCorpus) {
    CAPTURE(name);
    const Group g = fam(name);
    CHECK(fixture::matches_numeric(character_table(g),
                                   oracle::burnside_numeric(g)));
  }
}

TEST_CASE("character table: exact orthogonality and basic invariants") {
  for (const char *name : kCorpus) {
    CAPTURE(name);
    const Group g = fam(name);
    const auto t = character_table(g);
    const auto &c = t.conj;
    const std::size_t k = c.num_classes();
    const auto N = static_cast<std::int64_t>(g.order());
    REQUIRE(t.characters.size() == k);

    std::uint64_t sum = 0;
    for (const auto &chi : t.characters)
      sum += chi.degree * chi.degree;
    CHECK(sum == g.order());

    // dixon prime and root
    CHECK(t.dixon_prime % t.exponent == 1);
    const modp::Field f(t.dixon_prime);
    CHECK(f.pow(t.dixon_root, t.exponent) == 1);
    if (t.exponent > 1)
      CHECK(f.pow(t.dixon_root, t.exponent / g.prime()) != 1);

    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a; b < k; ++b) {
        CyclotomicAccumulator acc(t.exponent);
        for (std::size_t j = 0; j < k; ++j)
          acc.add_product_conj(t.characters[a].values[j],
                               t.characters[b].values[j],
                               static_cast<std::int64_t>(c.class_sizes[j]));
        CHECK(acc.value() == CyclotomicValue::integer(t.exponent,
                                                      a == b ? N : 0));
      }
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i; j < k; ++j) {
        CyclotomicAccumulator acc(t.exponent);
        for (const auto &chi : t.characters)
          acc.add_product_conj(chi.values[i], chi.values[j], 1);
        const std::int64_t want =
            i == j ? N / static_cast<std::int64_t>(c.class_sizes[i]) : 0;
        CHECK(acc.value() == CyclotomicValue::integer(t.exponent, want));
      }
  }
}

TEST_CASE("character table: multiplicities, kernels and centers") {
  for (const char *name : kCorpus) {
    CAPTURE(name);
    const Group g = fam(name);
    const auto t = character_table(g);
    const auto &c = t.conj;
    const auto normals = normal_subgroups(g);
    for (const auto &chi : t.characters) {
      const auto deg = static_cast<std::int64_t>(chi.degree);
      std::vector<Elem> ker, zee;
      for (std::size_t j = 0; j < c.num_classes(); ++j) {
        // value is the sum of eigenvalues
        CyclotomicAccumulator acc(t.exponent);
        std::uint64_t total = 0;
        for (auto [m, count] : chi.multiplicities[j].terms) {
          acc.add_root(m, count);
          total += count;
        }
        CHECK(total == chi.degree);
        CHECK(acc.value() == chi.values[j]);
        const auto v = chi.values[j];
        const double absval = std::hypot(v.real(), v.imag());
        for (Elem x : c.classes[j]) {
          if (v == CyclotomicValue::integer(t.exponent, deg))
            ker.push_back(x);
          if (std::abs(absval - static_cast<double>(deg)) < 1e-9)
            zee.push_back(x);
        }
      }
      std::sort(ker.begin(), ker.end());
      std::sort(zee.begin(), zee.end());
      CHECK(chi.kernel.members == ker);
      CHECK(chi.center.members == zee);
      CHECK(std::find(normals.begin(), normals.end(), chi.kernel) !=
            normals.end());
      CHECK(chi.is_faithful == chi.kernel.is_trivial());
      CHECK(chi.codegree * chi.degree * chi.kernel.order() == g.order());
      // chi(1)^2 <= |G : Z(chi)|
      CHECK(chi.degree * chi.degree * chi.center.order() <= g.order());
    }
    REQUIRE_FALSE(t.cod_exponents.empty());
    CHECK(t.cod_exponents.front() == 0);
    if (g.order() > 1)
      CHECK(t.cod_exponents[1] == 1);
    // degrees divide |G : Z(G)|
    for (const auto &chi : t.characters)
      CHECK((g.order() / center(g).order()) % chi.degree == 0);
  }
}

TEST_CASE("character table: codegrees of quotients are codegrees") {
  for (const char *name :
       {"dihedral(2,4)", "quaternion(2,4)", "modular(2,4)", "wreath(3)",
        "abelian(3,[2,2])", "extraspecial(3,3,-)", "semidihedral(2,4)"}) {
    CAPTURE(name);
    const Group g = fam(name);
    const auto t = character_table(g);
    for (const auto &n : normal_subgroups(g)) {
      const auto tq = character_table(quotient(g, n).group);
      for (unsigned e : tq.cod_exponents)
        CHECK(std::binary_search(t.cod_exponents.begin(),
                                 t.cod_exponents.end(), e));
    }
  }
}

TEST_CASE("character table: ordering is by degree then multiplicities") {
  const auto t = character_table(fam("wreath(3)"));
  for (std::size_t i = 1; i < t.characters.size(); ++i)
    CHECK(t.characters[i - 1].degree <= t.characters[i].degree);
  CHECK(t.cd_exponents == std::vector<unsigned>{0, 1});
  CHECK(t.cod_exponents == std::vector<unsigned>{0, 1, 2, 3});
  // same input, same table
  const auto again = character_table(fam("wreath(3)"));
  for (std::size_t i = 0; i < t.characters.size(); ++i)
    CHECK(t.characters[i].values == again.characters[i].values);
}
