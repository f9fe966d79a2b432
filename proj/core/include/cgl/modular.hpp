#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

// Arithmetic and linear algebra over a prime field F_ell, ell < 2^32.
namespace cgl::modp {

class Field {
public:
  explicit Field(std::uint64_t ell);

  std::uint64_t modulus() const noexcept { return ell_; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
    std::uint64_t r = a + b;
    return r >= ell_ ? r - ell_ : r;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept {
    return a >= b ? a - b : a + ell_ - b;
  }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept {
    return a * b % ell_;
  }
  std::uint64_t neg(std::uint64_t a) const noexcept {
    return a == 0 ? 0 : ell_ - a;
  }
  std::uint64_t pow(std::uint64_t a, std::uint64_t k) const noexcept;
  std::uint64_t inv(std::uint64_t a) const;
  std::uint64_t from_signed(std::int64_t v) const noexcept;

private:
  std::uint64_t ell_;
};

/// Smallest prime ell with ell = 1 (mod e) and ell > 2*sqrt(order).
/// Throws Error if none exists below `bound`.
std::uint64_t dixon_prime(std::uint64_t e, std::uint64_t order,
                          std::uint64_t bound);

/// Smallest generator of the multiplicative group of F_ell.
std::uint64_t primitive_root(std::uint64_t ell);

/// Dense row-major matrix.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint64_t> a;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}
  std::uint64_t &operator()(std::size_t i, std::size_t j) {
    return a[i * cols + j];
  }
  std::uint64_t operator()(std::size_t i, std::size_t j) const {
    return a[i * cols + j];
  }
};

/// Characteristic polynomial det(xI - m) of a square matrix, via reduction to
/// Hessenberg form. Returned low degree first; leading coefficient 1.
std::vector<std::uint64_t> charpoly(const Field &f, Matrix m);

/// All roots in F_ell of a polynomial (low degree first), ascending.
std::vector<std::uint64_t> roots(const Field &f,
                                 const std::vector<std::uint64_t> &poly);

/// Reduced row echelon form in place; returns pivot columns. Zero rows are
/// dropped.
std::vector<std::size_t> rref(const Field &f, Matrix &m);

/// Basis of {x : m x = 0}, one vector per free column.
std::vector<std::vector<std::uint64_t>> nullspace(const Field &f, Matrix m);

} // namespace cgl::modp
