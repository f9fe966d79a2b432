#include "cgl/class_function.hpp"

#include <algorithm>

#include "cgl/error.hpp"

namespace cgl {

namespace {

std::size_t position(const Subgroup &h, Elem x) {
  auto it = std::lower_bound(h.members.begin(), h.members.end(), x);
  return static_cast<std::size_t>(it - h.members.begin());
}

// Representatives of the right cosets Hx, smallest member of each.
std::vector<Elem> right_transversal(const Group &g, const Subgroup &h) {
  std::vector<char> seen(g.order(), 0);
  std::vector<Elem> reps;
  for (Elem x = 0; x < g.order(); ++x) {
    if (seen[x])
      continue;
    reps.push_back(x);
    for (Elem y : h.members)
      seen[g.mul(y, x)] = 1;
  }
  return reps;
}

} // namespace

SubgroupFunction LinearCharacter::values() const {
  SubgroupFunction f;
  f.values.reserve(exponents.size());
  for (auto m : exponents)
    f.values.push_back(CyclotomicValue::root_of_unity(e, m));
  return f;
}

std::vector<LinearCharacter> linear_characters(const Group &g,
                                               const Subgroup &h,
                                               std::uint32_t e) {
  const Subgroup hp = commutator(g, h, h);
  std::vector<char> in_hp(g.order(), 0);
  for (Elem x : hp.members)
    in_hp[x] = 1;

  // Greedy basis of H/H': each new element has maximal order modulo the span
  // so far, corrected so its order modulo H' equals that order.
  std::vector<Elem> basis;
  std::vector<std::uint32_t> orders;
  std::vector<char> in_span = in_hp;
  std::vector<Elem> span = hp.members;
  std::size_t index = h.order() / hp.order();
  while (span.size() < h.order()) {
    Elem best = 0;
    std::uint32_t best_order = 0;
    for (Elem x : h.members) {
      std::uint32_t m = 1;
      Elem y = x;
      while (!in_span[y]) {
        y = g.mul(y, x);
        ++m;
      }
      if (m > best_order) {
        best_order = m;
        best = x;
      }
    }
    const Elem s = g.pow(best, best_order);
    Elem correction = 0;
    bool found = false;
    for (Elem t : span) {
      if (in_hp[g.mul(g.pow(t, best_order), g.inv(s))]) {
        correction = t;
        found = true;
        break;
      }
    }
    if (!found)
      throw InternalError("no basis correction for H/H' in " + g.descriptor());
    const Elem a = g.mul(best, g.inv(correction));
    basis.push_back(a);
    orders.push_back(best_order);
    // span <- span * <a>
    std::vector<Elem> next;
    next.reserve(span.size() * best_order);
    Elem ak = 0;
    for (std::uint32_t k = 0; k < best_order; ++k) {
      for (Elem x : span)
        next.push_back(g.mul(x, ak));
      ak = g.mul(ak, a);
    }
    for (Elem x : next)
      in_span[x] = 1;
    span = std::move(next);
    if (span.size() > h.order())
      throw InternalError("basis of H/H' overshoots |H|");
  }
  std::uint64_t product = 1;
  for (auto m : orders)
    product *= m;
  if (product != index)
    throw InternalError("basis of H/H' has the wrong index");

  // Coordinates of every member of H with respect to the basis.
  const std::size_t r = basis.size();
  std::vector<std::vector<std::uint32_t>> coords(h.order());
  std::vector<std::uint32_t> k(r, 0);
  for (std::size_t count = 0; count < index; ++count) {
    Elem x = 0;
    for (std::size_t i = 0; i < r; ++i)
      x = g.mul(x, g.pow(basis[i], k[i]));
    for (Elem y : hp.members)
      coords[position(h, g.mul(x, y))] = k;
    for (std::size_t i = r; i-- > 0;) {
      if (++k[i] < orders[i])
        break;
      k[i] = 0;
    }
  }

  std::vector<LinearCharacter> out;
  out.reserve(index);
  std::vector<std::uint32_t> j(r, 0);
  for (std::size_t count = 0; count < index; ++count) {
    LinearCharacter lambda;
    lambda.e = e;
    lambda.exponents.resize(h.order());
    for (std::size_t x = 0; x < h.order(); ++x) {
      std::uint64_t m = 0;
      for (std::size_t i = 0; i < r; ++i)
        m += std::uint64_t{coords[x][i]} * j[i] * (e / orders[i]);
      lambda.exponents[x] = static_cast<std::uint32_t>(m % e);
    }
    out.push_back(std::move(lambda));
    for (std::size_t i = r; i-- > 0;) {
      if (++j[i] < orders[i])
        break;
      j[i] = 0;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ClassFunction as_class_function(const Character &chi) {
  return ClassFunction{chi.values};
}

ClassFunction induce(const Group &g, const ConjugacyData &conj,
                     const Subgroup &h, const SubgroupFunction &lambda) {
  const std::uint32_t e = conj.exponent;
  ClassFunction out;
  std::vector<char> in_h(g.order(), 0);
  for (Elem x : h.members)
    in_h[x] = 1;
  for (std::size_t j = 0; j < conj.num_classes(); ++j) {
    const Elem rep = conj.representative(j);
    CyclotomicAccumulator acc(e);
    for (Elem x = 0; x < g.order(); ++x) {
      const Elem y = g.mul(g.mul(x, rep), g.inv(x));
      if (in_h[y])
        acc.add(lambda.values[position(h, y)]);
    }
    out.values.push_back(
        acc.value().divided_by(static_cast<std::int64_t>(h.order())));
  }
  return out;
}

ClassFunction induce(const Group &g, const ConjugacyData &conj,
                     const Subgroup &h, const LinearCharacter &lambda) {
  const std::uint32_t e = conj.exponent;
  if (lambda.e != e)
    throw Error("linear character and group use different root orders");
  std::vector<char> in_h(g.order(), 0);
  for (Elem x : h.members)
    in_h[x] = 1;
  const std::vector<Elem> transversal = right_transversal(g, h);
  ClassFunction out;
  for (std::size_t j = 0; j < conj.num_classes(); ++j) {
    const Elem rep = conj.representative(j);
    CyclotomicAccumulator acc(e);
    if (h.is_normal) {
      if (in_h[rep])
        for (Elem t : transversal)
          acc.add_root(
              lambda.exponents[position(h, g.mul(g.mul(t, rep), g.inv(t)))],
              1);
    } else {
      for (Elem t : transversal) {
        const Elem y = g.mul(g.mul(t, rep), g.inv(t));
        if (in_h[y])
          acc.add_root(lambda.exponents[position(h, y)], 1);
      }
    }
    out.values.push_back(acc.value());
  }
  return out;
}

std::int64_t inner_product(const ConjugacyData &conj, const ClassFunction &a,
                           const ClassFunction &b) {
  if (a.values.size() != conj.num_classes() ||
      b.values.size() != conj.num_classes())
    throw Error("class function length does not match the class count");
  CyclotomicAccumulator acc(conj.exponent);
  std::size_t order = 0;
  for (std::size_t j = 0; j < conj.num_classes(); ++j) {
    acc.add_product_conj(a.values[j], b.values[j],
                         static_cast<std::int64_t>(conj.class_sizes[j]));
    order += conj.class_sizes[j];
  }
  const CyclotomicValue v = acc.value();
  if (!v.is_rational_integer() ||
      v.to_integer() % static_cast<std::int64_t>(order) != 0)
    throw InternalError("inner product is not an integer: " + v.to_string() +
                        " / " + std::to_string(order));
  return v.to_integer() / static_cast<std::int64_t>(order);
}

NormallyMonomialReport
normally_monomial_report(const CharacterTable &t,
                         const std::vector<Subgroup> &normals) {
  const Group &g = t.group;
  const ConjugacyData &conj = t.conj;
  NormallyMonomialReport report;
  // Linear characters per subgroup, computed on first use.
  std::vector<std::optional<std::vector<LinearCharacter>>> lin(normals.size());

  for (std::size_t c = 0; c < t.characters.size(); ++c) {
    const Character &chi = t.characters[c];
    if (chi.degree == 1)
      continue;
    MonomialWitness w;
    w.character = c;
    w.faithful = chi.is_faithful;
    for (std::size_t s = 0; s < normals.size() && !w.subgroup; ++s) {
      const Subgroup &h = normals[s];
      if (g.order() / h.order() != chi.degree)
        continue;
      // An induced character from normal H vanishes off H.
      bool vanishes = true;
      for (std::size_t j = 0; j < conj.num_classes() && vanishes; ++j)
        if (!h.contains(conj.representative(j)) && !chi.values[j].is_zero())
          vanishes = false;
      if (!vanishes)
        continue;
      if (!lin[s])
        lin[s] = linear_characters(g, h, conj.exponent);
      for (std::size_t l = 0; l < lin[s]->size(); ++l) {
        if (induce(g, conj, h, (*lin[s])[l]).values == chi.values) {
          w.subgroup = s;
          w.lambda = l;
          w.subgroup_abelian = is_abelian(g, h);
          break;
        }
      }
    }
    if (!w.subgroup)
      report.normally_monomial = false;
    else if (w.faithful && !w.subgroup_abelian)
      report.faithful_witnesses_abelian = false;
    report.witnesses.push_back(w);
  }
  return report;
}

} // namespace cgl
