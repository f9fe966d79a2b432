#pragma once

// Brute-force reference computations. These use only the multiplication
// table, never the library's algorithms.

#include <algorithm>
#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include <Eigen/Dense>

#include "cgl/group.hpp"

namespace oracle {

using cgl::Elem;
using cgl::Group;

inline std::vector<std::vector<Elem>> classes(const Group &g) {
  std::vector<std::vector<Elem>> out;
  std::vector<char> seen(g.order(), 0);
  for (Elem x = 0; x < g.order(); ++x) {
    if (seen[x])
      continue;
    std::set<Elem> cls;
    for (Elem y = 0; y < g.order(); ++y)
      cls.insert(g.mul(g.mul(g.inv(y), x), y));
    for (Elem c : cls)
      seen[c] = 1;
    out.emplace_back(cls.begin(), cls.end());
  }
  return out;
}

inline std::vector<Elem> center(const Group &g) {
  std::vector<Elem> z;
  for (Elem x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Elem y = 0; y < g.order() && central; ++y)
      central = g.mul(x, y) == g.mul(y, x);
    if (central)
      z.push_back(x);
  }
  return z;
}

/// Closure of a set under multiplication (finite, so also under inverses).
inline std::vector<Elem> generated(const Group &g, std::vector<Elem> gens) {
  std::set<Elem> s{0};
  s.insert(gens.begin(), gens.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Elem> cur(s.begin(), s.end());
    for (Elem a : cur)
      for (Elem b : cur)
        if (s.insert(g.mul(a, b)).second)
          grew = true;
  }
  return {s.begin(), s.end()};
}

inline std::vector<Elem> commutator(const Group &g, const std::vector<Elem> &a,
                                    const std::vector<Elem> &b) {
  std::vector<Elem> comms;
  for (Elem x : a)
    for (Elem y : b)
      comms.push_back(g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y)));
  return generated(g, comms);
}

inline std::vector<Elem> all_elements(const Group &g) {
  std::vector<Elem> v(g.order());
  for (Elem x = 0; x < g.order(); ++x)
    v[x] = x;
  return v;
}

inline bool is_subgroup(const Group &g, const std::vector<Elem> &s) {
  std::set<Elem> set(s.begin(), s.end());
  if (!set.count(0))
    return false;
  for (Elem a : s)
    for (Elem b : s)
      if (!set.count(g.mul(a, b)))
        return false;
  return true;
}

inline bool is_normal(const Group &g, const std::vector<Elem> &s) {
  std::set<Elem> set(s.begin(), s.end());
  for (Elem a : s)
    for (Elem y = 0; y < g.order(); ++y)
      if (!set.count(g.mul(g.mul(g.inv(y), a), y)))
        return false;
  return true;
}

/// Every subset containing the identity, filtered; only for tiny groups.
inline std::vector<std::vector<Elem>> all_subgroups_by_subsets(const Group &g) {
  std::vector<std::vector<Elem>> out;
  const std::size_t N = g.order();
  for (std::uint64_t mask = 0; mask < (1ull << (N - 1)); ++mask) {
    std::vector<Elem> s{0};
    for (std::size_t i = 1; i < N; ++i)
      if (mask >> (i - 1) & 1)
        s.push_back(static_cast<Elem>(i));
    if (is_subgroup(g, s))
      out.push_back(s);
  }
  return out;
}

inline unsigned order_of(const Group &g, Elem x) {
  unsigned k = 1;
  for (Elem y = x; y != 0; y = g.mul(y, x))
    ++k;
  return k;
}

/// Characters computed numerically: the common eigenvectors of the class
/// matrices are the eigenvectors of a random combination of them. Rows are
/// indexed by the classes returned from oracle::classes().
struct NumericTable {
  std::vector<std::vector<Elem>> classes;
  std::vector<std::vector<std::complex<double>>> rows;
  std::vector<double> degrees;
};

inline NumericTable burnside_numeric(const Group &g) {
  NumericTable t;
  t.classes = classes(g);
  const std::size_t k = t.classes.size();
  std::vector<std::size_t> cls(g.order());
  for (std::size_t j = 0; j < k; ++j)
    for (Elem x : t.classes[j])
      cls[x] = j;
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> dist(0.5, 1.5);
  std::vector<double> r(k);
  for (auto &x : r)
    x = dist(rng);
  // M[i][c] = sum_j r_j a_{i j c}, a_{ijc} = #{(x,y) in C_i x C_j: xy = z_c}.
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(k, k);
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y = 0; y < g.order(); ++y) {
      const std::size_t c = cls[g.mul(x, y)];
      m(cls[x], c) += r[cls[y]] / static_cast<double>(t.classes[c].size());
    }
  Eigen::EigenSolver<Eigen::MatrixXd> es(m);
  const auto vecs = es.eigenvectors();
  const double N = static_cast<double>(g.order());
  for (std::size_t s = 0; s < k; ++s) {
    std::vector<std::complex<double>> w(k);
    for (std::size_t j = 0; j < k; ++j)
      w[j] = vecs(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(s)) /
             vecs(0, static_cast<Eigen::Index>(s));
    double sum = 0;
    for (std::size_t j = 0; j < k; ++j)
      sum += std::norm(w[j]) / static_cast<double>(t.classes[j].size());
    const double d = std::sqrt(N / sum);
    std::vector<std::complex<double>> row(k);
    for (std::size_t j = 0; j < k; ++j)
      row[j] = w[j] * d / static_cast<double>(t.classes[j].size());
    t.rows.push_back(std::move(row));
    t.degrees.push_back(d);
  }
  return t;
}

} // namespace oracle
