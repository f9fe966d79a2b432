#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace cgl {

/// Exact element of Z[zeta_e] for e a prime power (or e = 1), stored in the
/// power basis 1, zeta, ..., zeta^(phi(e)-1) reduced modulo the e-th
/// cyclotomic polynomial. Two values are equal iff their coefficients are.
///
/// Coefficients are 64-bit; any overflow throws InternalError instead of
/// wrapping.
class CyclotomicValue {
public:
  CyclotomicValue() : CyclotomicValue(1) {}
  /// Zero in Z[zeta_e].
  explicit CyclotomicValue(std::uint32_t e);

  static CyclotomicValue integer(std::uint32_t e, std::int64_t v);
  /// zeta_e^m
  static CyclotomicValue root_of_unity(std::uint32_t e, std::uint64_t m);
  /// sum_m c[m] zeta_e^m for c of any length (exponents taken mod e).
  static CyclotomicValue from_powers(std::uint32_t e,
                                     std::span<const std::int64_t> c);

  std::uint32_t order() const noexcept { return e_; }
  std::span<const std::int64_t> coeffs() const noexcept { return coeffs_; }

  bool is_zero() const noexcept;
  bool is_rational_integer() const noexcept;
  /// Requires is_rational_integer().
  std::int64_t to_integer() const;

  /// Complex conjugate (zeta -> zeta^-1).
  CyclotomicValue conj() const;

  /// Image under zeta_e -> z in the prime field F_ell.
  std::uint64_t reduce_mod(std::uint64_t ell, std::uint64_t z) const;

  /// Exact division by an integer; throws if a coefficient is not divisible.
  CyclotomicValue divided_by(std::int64_t d) const;

  /// Real and imaginary parts, for display and numeric cross-checks.
  double real() const;
  double imag() const;

  std::string to_string() const;

  friend CyclotomicValue operator+(const CyclotomicValue &a,
                                   const CyclotomicValue &b);
  friend CyclotomicValue operator-(const CyclotomicValue &a,
                                   const CyclotomicValue &b);
  friend CyclotomicValue operator*(const CyclotomicValue &a,
                                   const CyclotomicValue &b);
  friend CyclotomicValue operator*(std::int64_t k, const CyclotomicValue &a);
  friend bool operator==(const CyclotomicValue &a,
                         const CyclotomicValue &b) = default;

private:
  friend class CyclotomicAccumulator;
  std::uint32_t e_;
  std::vector<std::int64_t> coeffs_;
};

/// Sums of products of roots of unity, reduced once at the end. Used where
/// many terms are added (inner products, induction).
class CyclotomicAccumulator {
public:
  explicit CyclotomicAccumulator(std::uint32_t e);

  void add_root(std::uint64_t m, std::int64_t count);
  void add(const CyclotomicValue &v, std::int64_t scale = 1);
  /// Adds scale * a * conj(b).
  void add_product_conj(const CyclotomicValue &a, const CyclotomicValue &b,
                        std::int64_t scale);

  CyclotomicValue value() const;

private:
  std::uint32_t e_;
  std::vector<std::int64_t> full_;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

} // namespace cgl
