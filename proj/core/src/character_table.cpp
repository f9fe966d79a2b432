#include "cgl/character_table.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cgl/error.hpp"
#include "cgl/modular.hpp"

namespace cgl {

std::uint64_t ClassConstants::operator()(std::size_t i, std::size_t j,
                                         std::size_t k) const {
  const auto &row = by_middle.at(j);
  auto it = std::lower_bound(
      row.begin(), row.end(), std::make_pair(i, k),
      [](const Entry &e, const std::pair<std::size_t, std::size_t> &key) {
        return std::make_pair<std::size_t, std::size_t>(e.i, e.k) < key;
      });
  if (it != row.end() && it->i == i && it->k == k)
    return it->count;
  return 0;
}

ClassConstants class_constants(const ConjugacyData &conj, const Group &g) {
  const std::size_t nc = conj.num_classes();
  ClassConstants cc;
  cc.num_classes = nc;
  cc.by_middle.resize(nc);
  // a[i][j][k] counts y in C_j with z_k y^-1 in C_i.
  for (std::size_t j = 0; j < nc; ++j) {
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint64_t> counts;
    for (std::size_t k = 0; k < nc; ++k) {
      const Elem z = conj.representative(k);
      for (Elem y : conj.classes[j]) {
        const std::uint32_t i = conj.class_of[g.mul(z, g.inv(y))];
        ++counts[{i, static_cast<std::uint32_t>(k)}];
      }
    }
    auto &row = cc.by_middle[j];
    row.reserve(counts.size());
    for (const auto &[key, count] : counts)
      row.push_back({key.first, key.second, count});
  }
  // sum_k a[i][j][k] |C_k| = |C_i| |C_j|
  std::vector<std::uint64_t> sums(nc);
  for (std::size_t j = 0; j < nc; ++j) {
    std::fill(sums.begin(), sums.end(), 0);
    for (const auto &e : cc.by_middle[j])
      sums[e.i] += e.count * conj.class_sizes[e.k];
    for (std::size_t i = 0; i < nc; ++i)
      if (sums[i] != conj.class_sizes[i] * conj.class_sizes[j])
        throw InternalError("class constants fail the class-size identity");
  }
  return cc;
}

std::vector<std::uint32_t> Multiplicities::dense(std::uint32_t e) const {
  std::vector<std::uint32_t> v(e, 0);
  for (const auto &[m, c] : terms)
    v[m] = c;
  return v;
}

namespace {

// Dense lexicographic comparison of two sparse multiplicity vectors.
int compare_terms(const Multiplicities &a, const Multiplicities &b) {
  std::size_t i = 0, j = 0;
  while (i < a.terms.size() || j < b.terms.size()) {
    const std::uint32_t ma =
        i < a.terms.size() ? a.terms[i].first : UINT32_MAX;
    const std::uint32_t mb =
        j < b.terms.size() ? b.terms[j].first : UINT32_MAX;
    const std::uint32_t m = std::min(ma, mb);
    const std::uint32_t va = ma == m ? a.terms[i].second : 0;
    const std::uint32_t vb = mb == m ? b.terms[j].second : 0;
    if (va != vb)
      return va < vb ? -1 : 1;
    if (ma == m)
      ++i;
    if (mb == m)
      ++j;
  }
  return 0;
}

// A subspace of F_ell^k given by an RREF basis.
struct Subspace {
  modp::Matrix basis;
  std::vector<std::size_t> pivots;
};

Subspace make_subspace(const modp::Field &f, modp::Matrix rows) {
  Subspace s;
  s.pivots = modp::rref(f, rows);
  s.basis = std::move(rows);
  return s;
}

// Splits W into eigenspaces of the class matrix A_j (acting on column
// vectors by (A v)_i = sum_k a[i][j][k] v_k). Returns {W} when A_j is scalar
// on W.
std::vector<Subspace> split(const modp::Field &f, const Subspace &w,
                            const std::vector<ClassConstants::Entry> &aj) {
  const std::size_t d = w.basis.rows;
  const std::size_t k = w.basis.cols;
  // images[s] = A_j b_s; coordinates read off at pivot columns.
  modp::Matrix coords(d, d);
  for (std::size_t s = 0; s < d; ++s) {
    std::vector<std::uint64_t> img(k, 0);
    for (const auto &e : aj) {
      const std::uint64_t v = w.basis(s, e.k);
      if (v)
        img[e.i] = f.add(img[e.i], f.mul(e.count % f.modulus(), v));
    }
    for (std::size_t t = 0; t < d; ++t)
      coords(s, t) = img[w.pivots[t]];
    // The subspace must be invariant: img == sum_t coords(s,t) b_t.
    for (std::size_t c = 0; c < k; ++c) {
      std::uint64_t acc = 0;
      for (std::size_t t = 0; t < d; ++t)
        acc = f.add(acc, f.mul(coords(s, t), w.basis(t, c)));
      if (acc != img[c])
        throw InternalError("eigenspace is not invariant under a class "
                            "matrix");
    }
  }
  // Eigenvectors y of coords^T give w = sum_s y_s b_s.
  modp::Matrix mt(d, d);
  for (std::size_t s = 0; s < d; ++s)
    for (std::size_t t = 0; t < d; ++t)
      mt(t, s) = coords(s, t);
  const auto eigenvalues = modp::roots(f, modp::charpoly(f, mt));
  if (eigenvalues.size() == 1)
    return {w};

  std::vector<Subspace> parts;
  std::size_t total = 0;
  for (std::uint64_t lambda : eigenvalues) {
    modp::Matrix shifted = mt;
    for (std::size_t i = 0; i < d; ++i)
      shifted(i, i) = f.sub(shifted(i, i), lambda);
    const auto ys = modp::nullspace(f, shifted);
    modp::Matrix rows(ys.size(), k);
    for (std::size_t r = 0; r < ys.size(); ++r)
      for (std::size_t s = 0; s < d; ++s)
        if (ys[r][s])
          for (std::size_t c = 0; c < k; ++c)
            rows(r, c) = f.add(rows(r, c), f.mul(ys[r][s], w.basis(s, c)));
    total += ys.size();
    parts.push_back(make_subspace(f, std::move(rows)));
  }
  if (total != d)
    throw InternalError("class matrix is not diagonalizable over F_ell");
  return parts;
}

} // namespace

CharacterTable character_table(const Group &g, const ConjugacyData &conj,
                               const DixonOptions &options) {
  const std::size_t nc = conj.num_classes();
  const std::uint64_t N = g.order();
  const std::uint32_t e = conj.exponent;

  CharacterTable t{g, conj, {}, e, 0, 1, {}, {}, 0};
  t.dixon_prime = modp::dixon_prime(e, N, options.prime_bound);
  const modp::Field f(t.dixon_prime);
  t.dixon_root = f.pow(modp::primitive_root(t.dixon_prime),
                       (t.dixon_prime - 1) / e);

  const ClassConstants cc = class_constants(conj, g);

  // Simultaneous eigenspaces of all class matrices, processed in canonical
  // class order.
  modp::Matrix identity(nc, nc);
  for (std::size_t i = 0; i < nc; ++i)
    identity(i, i) = 1;
  std::vector<Subspace> spaces{make_subspace(f, std::move(identity))};
  for (std::size_t j = 1; j < nc; ++j) {
    bool done = true;
    std::vector<Subspace> next;
    for (const auto &w : spaces) {
      if (w.basis.rows == 1) {
        next.push_back(w);
        continue;
      }
      for (auto &part : split(f, w, cc.by_middle[j]))
        next.push_back(std::move(part));
    }
    spaces = std::move(next);
    for (const auto &w : spaces)
      done = done && w.basis.rows == 1;
    if (done)
      break;
  }
  for (const auto &w : spaces)
    if (w.basis.rows != 1)
      throw InternalError("class matrices fail to split F_ell^k into lines "
                          "for " + g.descriptor());

  // Powers of the element of order e, for lifting.
  std::vector<std::uint64_t> zpow(e);
  zpow[0] = 1;
  for (std::uint32_t m = 1; m < e; ++m)
    zpow[m] = f.mul(zpow[m - 1], t.dixon_root);

  std::vector<std::uint64_t> inv_size(nc);
  for (std::size_t j = 0; j < nc; ++j)
    inv_size[j] = f.inv(conj.class_sizes[j] % t.dixon_prime);

  for (const auto &w : spaces) {
    // Central character omega_j = |C_j| chi(g_j) / chi(1), with omega_0 = 1.
    std::vector<std::uint64_t> omega(nc);
    for (std::size_t j = 0; j < nc; ++j)
      omega[j] = w.basis(0, j);
    if (omega[0] != 1)
      throw InternalError("central character vector has zero identity entry");

    // chi(1)^2 = |G| / sum_j omega_j omega_j' / |C_j|
    std::uint64_t s = 0;
    for (std::size_t j = 0; j < nc; ++j)
      s = f.add(s, f.mul(f.mul(omega[j], omega[conj.inverse_class[j]]),
                         inv_size[j]));
    const std::uint64_t d2 = f.mul(N % t.dixon_prime, f.inv(s));
    std::uint64_t degree = 0;
    for (std::uint64_t d = 1; d * d <= N; ++d) {
      if (f.mul(d, d) == d2) {
        degree = d;
        break;
      }
    }
    if (degree == 0)
      throw InternalError("no valid character degree for " + g.descriptor());

    std::vector<std::uint64_t> modval(nc);
    for (std::size_t j = 0; j < nc; ++j)
      modval[j] = f.mul(f.mul(omega[j], degree), inv_size[j]);

    Character chi;
    chi.degree = degree;
    chi.values.reserve(nc);
    chi.multiplicities.resize(nc);
    for (std::size_t j = 0; j < nc; ++j) {
      const std::uint32_t o = conj.element_orders[conj.representative(j)];
      const std::uint32_t stride = e / o;
      auto &terms = chi.multiplicities[j].terms;
      if (degree == 1) {
        // chi(g) is a single root of unity; find it directly.
        const std::uint64_t target = modval[j];
        for (std::uint32_t mp = 0; mp < o; ++mp) {
          if (zpow[mp * stride] == target) {
            terms.push_back({mp * stride, 1});
            break;
          }
        }
      } else {
        // c_{stride*m'} = o^-1 sum_{t<o} chi(g^t) w^{-m' t}, w = z^stride.
        const std::uint64_t inv_o = f.inv(o % t.dixon_prime);
        for (std::uint32_t mp = 0; mp < o; ++mp) {
          std::uint64_t acc = 0;
          for (std::uint32_t tt = 0; tt < o; ++tt) {
            const std::uint64_t ft = modval[conj.power_class(j, tt)];
            const std::uint32_t ex =
                static_cast<std::uint32_t>((e - (std::uint64_t{mp} * tt %
                                                 o) * stride) % e);
            acc = f.add(acc, f.mul(ft, zpow[ex]));
          }
          const std::uint64_t c = f.mul(acc, inv_o);
          if (c > degree)
            throw InternalError("eigenvalue multiplicity out of range");
          if (c)
            terms.push_back({mp * stride, static_cast<std::uint32_t>(c)});
        }
      }
      std::uint64_t sum = 0, image = 0;
      std::vector<std::int64_t> powers(e, 0);
      for (const auto &[m, c] : terms) {
        sum += c;
        image = f.add(image, f.mul(c, zpow[m]));
        powers[m] = c;
      }
      if (sum != degree || image != modval[j])
        throw InternalError("lifted character value does not reduce back to "
                            "its modular image");
      chi.values.push_back(CyclotomicValue::from_powers(e, powers));
    }

    for (std::size_t j = 0; j < nc; ++j) {
      const auto &terms = chi.multiplicities[j].terms;
      if (terms.size() != 1)
        continue;
      for (Elem x : conj.classes[j]) {
        chi.center.members.push_back(x);
        if (terms[0].first == 0)
          chi.kernel.members.push_back(x);
      }
    }
    std::sort(chi.kernel.members.begin(), chi.kernel.members.end());
    std::sort(chi.center.members.begin(), chi.center.members.end());
    chi.kernel.is_normal = chi.center.is_normal = true;
    const std::uint64_t index = N / chi.kernel.order();
    if (index % degree != 0)
      throw InternalError("codegree is not an integer");
    chi.codegree = index / degree;
    chi.is_faithful = chi.kernel.order() == 1;
    t.characters.push_back(std::move(chi));
  }

  std::sort(t.characters.begin(), t.characters.end(),
            [](const Character &a, const Character &b) {
              if (a.degree != b.degree)
                return a.degree < b.degree;
              for (std::size_t j = 0; j < a.multiplicities.size(); ++j) {
                const int c =
                    compare_terms(a.multiplicities[j], b.multiplicities[j]);
                if (c != 0)
                  return c < 0;
              }
              return false;
            });

  std::uint64_t sum_sq = 0;
  std::set<unsigned> cd, cod;
  for (const auto &chi : t.characters) {
    sum_sq += chi.degree * chi.degree;
    const int dexp = exact_log(chi.degree, g.prime());
    const int cexp = exact_log(chi.codegree, g.prime());
    if (dexp < 0 || cexp < 0)
      throw InternalError("degree or codegree is not a power of p");
    cd.insert(static_cast<unsigned>(dexp));
    cod.insert(static_cast<unsigned>(cexp));
  }
  if (t.characters.size() != nc || sum_sq != N)
    throw InternalError("character table of " + g.descriptor() +
                        " fails the degree-sum check");
  t.cd_exponents.assign(cd.begin(), cd.end());
  t.cod_exponents.assign(cod.begin(), cod.end());
  t.b_exponent = t.cd_exponents.back();
  return t;
}

CharacterTable character_table(const Group &g) {
  return character_table(g, conjugacy_data(g));
}

std::uint64_t codegree(const CharacterTable &t, const Character &chi) {
  return t.group.order() / chi.kernel.order() / chi.degree;
}

} // namespace cgl
