#include "cgl/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

#include "cgl/error.hpp"

namespace cgl {

bool validate_cap(std::size_t cap) {
  if (cap > kMaxCap)
    throw CapExceeded("order cap " + std::to_string(cap) +
                      " exceeds the supported maximum " +
                      std::to_string(kMaxCap));
  return cap > kDefaultCap;
}

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

int exact_log(std::uint64_t value, unsigned p) {
  if (value == 0 || p < 2)
    return -1;
  int k = 0;
  while (value % p == 0) {
    value /= p;
    ++k;
  }
  return value == 1 ? k : -1;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp--)
    r *= base;
  return r;
}

namespace {

// Incremental Dimino closure. `elems` is kept as a union of right cosets of
// the subgroup generated by all but the most recent generator.
class Closure {
public:
  explicit Closure(const Group &g) : g_(g), in_(g.order(), 0) {
    elems_.push_back(0);
    in_[0] = 1;
  }

  Closure(const Group &g, std::span<const Elem> members,
          std::span<const Elem> gens)
      : g_(g), in_(g.order(), 0), elems_(members.begin(), members.end()),
        gens_(gens.begin(), gens.end()) {
    for (Elem x : elems_)
      in_[x] = 1;
  }

  void add(Elem s) {
    if (in_[s])
      return;
    gens_.push_back(s);
    const std::vector<Elem> prev = elems_;
    const std::size_t block = prev.size();
    append_coset(prev, s);
    for (std::size_t rep = block; rep < elems_.size(); rep += block) {
      for (Elem t : gens_) {
        Elem x = g_.mul(elems_[rep], t);
        if (!in_[x])
          append_coset(prev, x);
      }
    }
  }

  bool contains(Elem x) const { return in_[x] != 0; }
  const std::vector<Elem> &elements() const { return elems_; }
  const std::vector<Elem> &generators() const { return gens_; }

  std::vector<Elem> sorted() const {
    std::vector<Elem> v = elems_;
    std::sort(v.begin(), v.end());
    return v;
  }

private:
  void append_coset(const std::vector<Elem> &prev, Elem r) {
    for (Elem h : prev) {
      Elem x = g_.mul(h, r);
      in_[x] = 1;
      elems_.push_back(x);
    }
  }

  const Group &g_;
  std::vector<char> in_;
  std::vector<Elem> elems_;
  std::vector<Elem> gens_;
};

// Conjugacy class of x, by orbit under conjugation by the generators of G.
std::vector<Elem> conjugacy_orbit(const Group &g, Elem x) {
  std::vector<Elem> orbit{x};
  std::vector<char> seen(g.order(), 0);
  seen[x] = 1;
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (Elem s : g.generators()) {
      Elem y = g.conj(orbit[i], s);
      if (!seen[y]) {
        seen[y] = 1;
        orbit.push_back(y);
      }
    }
  }
  return orbit;
}

} // namespace

Group::Group(unsigned p, unsigned n, std::vector<std::uint16_t> table,
             std::string descriptor) {
  if (!is_prime(p))
    throw InvalidGroup("group prime " + std::to_string(p) + " is not prime");
  const std::uint64_t order = ipow(p, n);
  if (order > kMaxCap)
    throw CapExceeded("group order " + std::to_string(order) +
                      " exceeds the supported maximum");
  if (table.size() != order * order)
    throw InvalidGroup("multiplication table has wrong size");

  auto data = std::make_shared<Data>();
  data->p = p;
  data->n = n;
  data->order = static_cast<std::size_t>(order);
  data->descriptor = std::move(descriptor);
  const std::size_t N = data->order;

  for (std::size_t a = 0; a < N; ++a) {
    if (table[a] != a || table[a * N] != a)
      throw InvalidGroup("element 0 is not a two-sided identity");
  }
  data->inverse.assign(N, 0);
  std::vector<char> seen(N);
  for (std::size_t a = 0; a < N; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    bool found = false;
    for (std::size_t b = 0; b < N; ++b) {
      std::uint16_t c = table[a * N + b];
      if (c >= N || seen[c])
        throw InvalidGroup("multiplication table row is not a permutation");
      seen[c] = 1;
      if (c == 0) {
        data->inverse[a] = static_cast<Elem>(b);
        found = true;
      }
    }
    if (!found)
      throw InvalidGroup("element without inverse");
  }
  for (std::size_t a = 0; a < N; ++a) {
    if (table[data->inverse[a] * N + a] != 0)
      throw InvalidGroup("left and right inverses differ");
  }
  data->table = std::move(table);
  d_ = data;

  // Greedy generating set.
  Closure cl(*this);
  for (Elem x = 1; x < N; ++x) {
    if (!cl.contains(x))
      cl.add(x);
  }
  data->generators = cl.generators();
}

Elem Group::pow(Elem a, std::uint64_t k) const noexcept {
  Elem result = 0;
  Elem base = a;
  while (k) {
    if (k & 1)
      result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

unsigned Group::element_order(Elem a) const noexcept {
  unsigned k = 1;
  Elem x = a;
  while (x != 0) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

Group Group::with_descriptor(std::string descriptor) const {
  Group copy = *this;
  auto data = std::make_shared<Data>(*d_);
  data->descriptor = std::move(descriptor);
  copy.d_ = data;
  return copy;
}

bool check_associative(const Group &g) {
  const std::size_t N = g.order();
  for (Elem s : g.generators()) {
    for (Elem a = 0; a < N; ++a) {
      for (Elem b = 0; b < N; ++b) {
        if (g.mul(g.mul(a, b), s) != g.mul(a, g.mul(b, s)))
          return false;
      }
    }
  }
  // (ab)s = a(bs) for generators s extends to all c by induction on a word
  // for c, provided every element is a right-multiplication word in the
  // generators starting from the identity.
  std::vector<char> seen(N, 0);
  std::vector<Elem> queue{0};
  seen[0] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (Elem s : g.generators()) {
      Elem y = g.mul(queue[i], s);
      if (!seen[y]) {
        seen[y] = 1;
        queue.push_back(y);
      }
    }
  }
  return queue.size() == N;
}

bool Subgroup::contains(Elem x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

Subgroup trivial_subgroup(const Group &) { return Subgroup{{0}, true}; }

Subgroup whole_group(const Group &g) {
  Subgroup s;
  s.members.resize(g.order());
  std::iota(s.members.begin(), s.members.end(), Elem{0});
  s.is_normal = true;
  return s;
}

bool is_normal_set(const Group &g, std::span<const Elem> members) {
  std::vector<char> in(g.order(), 0);
  for (Elem x : members)
    in[x] = 1;
  for (Elem x : members) {
    for (Elem s : g.generators()) {
      if (!in[g.conj(x, s)])
        return false;
    }
  }
  return true;
}

Subgroup subgroup_closure(const Group &g, std::span<const Elem> gens,
                          bool normal) {
  Closure cl(g);
  if (normal) {
    std::vector<char> done(g.order(), 0);
    for (Elem x : gens) {
      if (done[x])
        continue;
      for (Elem y : conjugacy_orbit(g, x)) {
        done[y] = 1;
        cl.add(y);
      }
    }
  } else {
    for (Elem x : gens)
      cl.add(x);
  }
  Subgroup s;
  s.members = cl.sorted();
  s.is_normal = normal || is_normal_set(g, s.members);
  return s;
}

Subgroup center(const Group &g) {
  Subgroup z;
  for (Elem x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Elem s : g.generators()) {
      if (g.mul(x, s) != g.mul(s, x)) {
        central = false;
        break;
      }
    }
    if (central)
      z.members.push_back(x);
  }
  z.is_normal = true;
  return z;
}

Subgroup commutator(const Group &g, const Subgroup &a, const Subgroup &b) {
  std::vector<char> seen(g.order(), 0);
  std::vector<Elem> comms;
  for (Elem x : a.members) {
    for (Elem y : b.members) {
      Elem c = g.comm(x, y);
      if (!seen[c]) {
        seen[c] = 1;
        comms.push_back(c);
      }
    }
  }
  return subgroup_closure(g, comms, false);
}

Subgroup derived_subgroup(const Group &g) {
  const Subgroup all = whole_group(g);
  return commutator(g, all, all);
}

bool is_abelian(const Group &g) {
  for (Elem a : g.generators())
    for (Elem b : g.generators())
      if (g.mul(a, b) != g.mul(b, a))
        return false;
  return true;
}

bool is_abelian(const Group &g, const Subgroup &h) {
  for (Elem a : h.members)
    for (Elem b : h.members)
      if (b > a && g.mul(a, b) != g.mul(b, a))
        return false;
  return true;
}

std::vector<unsigned> abelian_invariants(const Group &g) {
  if (!is_abelian(g))
    throw Error("abelian_invariants requires an abelian group");
  const unsigned p = g.prime();
  const unsigned n = g.log_order();
  // omega[k] = log_p |{x : x^(p^k) = 1}| = sum_i min(e_i, k)
  std::vector<unsigned> omega(n + 1, 0);
  std::vector<std::size_t> count(n + 1, 0);
  for (Elem x = 0; x < g.order(); ++x) {
    int k = exact_log(g.element_order(x), p);
    for (int j = k; j <= static_cast<int>(n); ++j)
      ++count[j];
  }
  for (unsigned k = 0; k <= n; ++k)
    omega[k] = static_cast<unsigned>(exact_log(count[k], p));
  // #{i : e_i >= k} = omega[k] - omega[k-1]
  std::vector<unsigned> at_least(n + 2, 0);
  for (unsigned k = 1; k <= n; ++k)
    at_least[k] = omega[k] - omega[k - 1];
  std::vector<unsigned> inv;
  for (unsigned i = 0; i < at_least[1]; ++i) {
    unsigned e = 0;
    for (unsigned k = 1; k <= n; ++k)
      if (at_least[k] > i)
        e = k;
    inv.push_back(e);
  }
  return inv;
}

Quotient quotient(const Group &g, const Subgroup &n) {
  if (!n.is_normal || !is_normal_set(g, n.members))
    throw Error("quotient requires a normal subgroup");
  const std::size_t N = g.order();
  std::vector<Elem> proj(N, static_cast<Elem>(-1));
  std::vector<Elem> reps;
  for (Elem x = 0; x < N; ++x) {
    if (proj[x] != static_cast<Elem>(-1))
      continue;
    const Elem id = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (Elem m : n.members)
      proj[g.mul(x, m)] = id;
  }
  const std::size_t M = reps.size();
  std::vector<std::uint16_t> table(M * M);
  for (std::size_t a = 0; a < M; ++a)
    for (std::size_t b = 0; b < M; ++b)
      table[a * M + b] =
          static_cast<std::uint16_t>(proj[g.mul(reps[a], reps[b])]);
  const int k = exact_log(n.order(), g.prime());
  Group q(g.prime(), g.log_order() - static_cast<unsigned>(k), std::move(table),
          g.descriptor() + "/N" + std::to_string(n.order()));
  return Quotient{std::move(q), std::move(proj)};
}

ConjugacyData conjugacy_data(const Group &g) {
  const std::size_t N = g.order();
  ConjugacyData cd;
  cd.element_orders.resize(N);
  for (Elem x = 0; x < N; ++x) {
    cd.element_orders[x] = g.element_order(x);
    cd.exponent = std::max(cd.exponent, cd.element_orders[x]);
  }

  std::vector<char> done(N, 0);
  std::vector<std::vector<Elem>> classes;
  for (Elem x = 0; x < N; ++x) {
    if (done[x])
      continue;
    std::vector<Elem> cls = conjugacy_orbit(g, x);
    for (Elem y : cls)
      done[y] = 1;
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end(),
            [&](const std::vector<Elem> &a, const std::vector<Elem> &b) {
              return std::make_tuple(cd.element_orders[a[0]], a.size(), a[0]) <
                     std::make_tuple(cd.element_orders[b[0]], b.size(), b[0]);
            });
  cd.classes = std::move(classes);

  const std::size_t k = cd.classes.size();
  cd.class_of.resize(N);
  cd.class_sizes.resize(k);
  for (std::size_t j = 0; j < k; ++j) {
    cd.class_sizes[j] = cd.classes[j].size();
    for (Elem y : cd.classes[j])
      cd.class_of[y] = static_cast<std::uint32_t>(j);
  }

  const std::uint32_t e = cd.exponent;
  cd.power_map.resize(k * e);
  cd.inverse_class.resize(k);
  for (std::size_t j = 0; j < k; ++j) {
    const Elem rep = cd.representative(j);
    Elem x = 0;
    for (std::uint32_t t = 0; t < e; ++t) {
      cd.power_map[j * e + t] = cd.class_of[x];
      x = g.mul(x, rep);
    }
    cd.inverse_class[j] = cd.class_of[g.inv(rep)];
  }
  return cd;
}

CentralSeriesData central_series(const Group &g) {
  const std::size_t N = g.order();
  CentralSeriesData cs;

  Subgroup z = trivial_subgroup(g);
  cs.upper.push_back(z);
  while (z.order() < N) {
    std::vector<char> in(N, 0);
    for (Elem x : z.members)
      in[x] = 1;
    Subgroup next;
    for (Elem x = 0; x < N; ++x) {
      bool ok = true;
      for (Elem s : g.generators()) {
        if (!in[g.comm(x, s)]) {
          ok = false;
          break;
        }
      }
      if (ok)
        next.members.push_back(x);
    }
    next.is_normal = true;
    if (next.order() == z.order())
      throw InternalError("upper central series stalls below " +
                          g.descriptor() + "; table is not a p-group");
    z = std::move(next);
    cs.upper.push_back(z);
  }

  Subgroup l = whole_group(g);
  cs.lower.push_back(l);
  while (l.order() > 1) {
    std::vector<char> seen(N, 0);
    std::vector<Elem> comms;
    for (Elem a : l.members) {
      for (Elem s : g.generators()) {
        Elem c = g.comm(a, s);
        if (!seen[c]) {
          seen[c] = 1;
          comms.push_back(c);
        }
      }
    }
    Subgroup next = subgroup_closure(g, comms, true);
    if (next.order() == l.order())
      throw InternalError("lower central series stalls above 1 in " +
                          g.descriptor() + "; table is not a p-group");
    l = std::move(next);
    cs.lower.push_back(l);
  }

  cs.nilpotence_class = static_cast<unsigned>(cs.upper.size() - 1);
  if (cs.lower.size() - 1 != cs.nilpotence_class)
    throw InternalError("upper and lower central series lengths differ");
  cs.is_maximal_class =
      g.log_order() >= 3 && cs.nilpotence_class + 1 == g.log_order();
  const Subgroup &derived =
      cs.lower.size() > 1 ? cs.lower[1] : cs.lower.front();
  cs.is_metabelian = is_abelian(g, derived);
  return cs;
}

std::vector<Subgroup> normal_subgroups(const Group &g,
                                       const ConjugacyData &conj) {
  struct Entry {
    std::vector<Elem> members;
    std::vector<Elem> gens;
  };
  std::map<std::vector<Elem>, std::size_t> index;
  std::vector<Entry> found;
  found.push_back({{0}, {}});
  index.emplace(std::vector<Elem>{0}, 0);

  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t c = 1; c < conj.num_classes(); ++c) {
      const Entry &base = found[i];
      const Elem rep = conj.representative(c);
      if (std::binary_search(base.members.begin(), base.members.end(), rep))
        continue;
      Closure cl(g, base.members, base.gens);
      for (Elem y : conj.classes[c])
        cl.add(y);
      std::vector<Elem> members = cl.sorted();
      if (index.count(members))
        continue;
      index.emplace(members, found.size());
      found.push_back({std::move(members), cl.generators()});
    }
  }

  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (auto &e : found)
    out.push_back(Subgroup{std::move(e.members), true});
  std::sort(out.begin(), out.end(), [](const Subgroup &a, const Subgroup &b) {
    if (a.order() != b.order())
      return a.order() < b.order();
    return a.members < b.members;
  });
  return out;
}

std::vector<Subgroup> normal_subgroups(const Group &g) {
  return normal_subgroups(g, conjugacy_data(g));
}

} // namespace cgl
