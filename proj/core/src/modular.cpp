#include "cgl/modular.hpp"

#include <algorithm>

#include "cgl/error.hpp"
#include "cgl/group.hpp"

namespace cgl::modp {

Field::Field(std::uint64_t ell) : ell_(ell) {
  if (ell < 2 || ell >= (1ull << 32))
    throw Error("prime field modulus out of range");
}

std::uint64_t Field::pow(std::uint64_t a, std::uint64_t k) const noexcept {
  std::uint64_t r = 1 % ell_;
  a %= ell_;
  while (k) {
    if (k & 1)
      r = r * a % ell_;
    a = a * a % ell_;
    k >>= 1;
  }
  return r;
}

std::uint64_t Field::inv(std::uint64_t a) const {
  if (a % ell_ == 0)
    throw InternalError("inverse of zero in F_" + std::to_string(ell_));
  return pow(a, ell_ - 2);
}

std::uint64_t Field::from_signed(std::int64_t v) const noexcept {
  std::int64_t r = v % static_cast<std::int64_t>(ell_);
  if (r < 0)
    r += static_cast<std::int64_t>(ell_);
  return static_cast<std::uint64_t>(r);
}

std::uint64_t dixon_prime(std::uint64_t e, std::uint64_t order,
                          std::uint64_t bound) {
  for (std::uint64_t ell = e + 1; ell < bound; ell += e) {
    if (ell * ell > 4 * order && is_prime(ell))
      return ell;
  }
  throw Error("no prime ell = 1 mod " + std::to_string(e) + " below " +
              std::to_string(bound));
}

std::uint64_t primitive_root(std::uint64_t ell) {
  std::vector<std::uint64_t> factors;
  std::uint64_t m = ell - 1;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0)
        m /= d;
    }
  }
  if (m > 1)
    factors.push_back(m);
  const Field f(ell);
  for (std::uint64_t g = 2; g < ell; ++g) {
    bool ok = true;
    for (auto q : factors) {
      if (f.pow(g, (ell - 1) / q) == 1) {
        ok = false;
        break;
      }
    }
    if (ok)
      return g;
  }
  return 1; // ell == 2
}

std::vector<std::uint64_t> charpoly(const Field &f, Matrix h) {
  const std::size_t n = h.rows;
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t piv = m;
    while (piv < n && h(piv, m - 1) == 0)
      ++piv;
    if (piv == n)
      continue;
    if (piv != m) {
      for (std::size_t j = 0; j < n; ++j)
        std::swap(h(piv, j), h(m, j));
      for (std::size_t i = 0; i < n; ++i)
        std::swap(h(i, piv), h(i, m));
    }
    const std::uint64_t inv = f.inv(h(m, m - 1));
    for (std::size_t i = m + 1; i < n; ++i) {
      const std::uint64_t u = f.mul(h(i, m - 1), inv);
      if (u == 0)
        continue;
      for (std::size_t j = 0; j < n; ++j)
        h(i, j) = f.sub(h(i, j), f.mul(u, h(m, j)));
      for (std::size_t r = 0; r < n; ++r)
        h(r, m) = f.add(h(r, m), f.mul(u, h(r, i)));
    }
  }
  // p_{m+1} = (x - h_mm) p_m - sum_{i<m} h_im (prod_{k=i+1..m} h_{k,k-1}) p_i
  std::vector<std::vector<std::uint64_t>> p(n + 1);
  p[0] = {1};
  for (std::size_t m = 0; m < n; ++m) {
    std::vector<std::uint64_t> next(m + 2, 0);
    for (std::size_t d = 0; d <= m; ++d) {
      next[d + 1] = f.add(next[d + 1], p[m][d]);
      next[d] = f.sub(next[d], f.mul(h(m, m), p[m][d]));
    }
    std::uint64_t prod = 1;
    for (std::size_t i = m; i-- > 0;) {
      prod = f.mul(prod, h(i + 1, i));
      if (prod == 0)
        break;
      const std::uint64_t c = f.mul(h(i, m), prod);
      if (c == 0)
        continue;
      for (std::size_t d = 0; d < p[i].size(); ++d)
        next[d] = f.sub(next[d], f.mul(c, p[i][d]));
    }
    p[m + 1] = std::move(next);
  }
  return p[n];
}

std::vector<std::uint64_t> roots(const Field &f,
                                 const std::vector<std::uint64_t> &poly) {
  std::vector<std::uint64_t> out;
  const std::uint64_t ell = f.modulus();
  const std::size_t degree = poly.size() - 1;
  for (std::uint64_t x = 0; x < ell && out.size() < degree; ++x) {
    std::uint64_t v = 0;
    for (std::size_t i = poly.size(); i-- > 0;)
      v = f.add(f.mul(v, x), poly[i]);
    if (v == 0)
      out.push_back(x);
  }
  return out;
}

std::vector<std::size_t> rref(const Field &f, Matrix &m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t piv = row;
    while (piv < m.rows && m(piv, col) == 0)
      ++piv;
    if (piv == m.rows)
      continue;
    if (piv != row)
      for (std::size_t j = 0; j < m.cols; ++j)
        std::swap(m(piv, j), m(row, j));
    const std::uint64_t inv = f.inv(m(row, col));
    for (std::size_t j = col; j < m.cols; ++j)
      m(row, j) = f.mul(m(row, j), inv);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == row || m(i, col) == 0)
        continue;
      const std::uint64_t u = m(i, col);
      for (std::size_t j = col; j < m.cols; ++j)
        m(i, j) = f.sub(m(i, j), f.mul(u, m(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  m.rows = row;
  m.a.resize(row * m.cols);
  return pivots;
}

std::vector<std::vector<std::uint64_t>> nullspace(const Field &f, Matrix m) {
  const std::size_t n = m.cols;
  const std::vector<std::size_t> pivots = rref(f, m);
  std::vector<char> is_pivot(n, 0);
  for (auto c : pivots)
    is_pivot[c] = 1;
  std::vector<std::vector<std::uint64_t>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free])
      continue;
    std::vector<std::uint64_t> v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = f.neg(m(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

} // namespace cgl::modp
