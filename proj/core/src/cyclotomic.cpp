#include "cgl/cyclotomic.hpp"

#include <cmath>
#include <numbers>

#include "cgl/error.hpp"

namespace cgl {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw InternalError("cyclotomic coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw InternalError("cyclotomic coefficient overflow");
  return r;
}

namespace {

std::uint32_t smallest_prime_factor(std::uint32_t e) {
  for (std::uint32_t d = 2; d * d <= e; ++d)
    if (e % d == 0)
      return d;
  return e;
}

std::uint32_t totient_of_prime_power(std::uint32_t e) {
  if (e == 1)
    return 1;
  return e - e / smallest_prime_factor(e);
}

void check_order(std::uint32_t e) {
  if (e == 0)
    throw Error("cyclotomic order must be positive");
  if (e == 1)
    return;
  const std::uint32_t p = smallest_prime_factor(e);
  std::uint32_t r = e;
  while (r % p == 0)
    r /= p;
  if (r != 1)
    throw Error("cyclotomic order " + std::to_string(e) +
                " is not a prime power");
}

// Reduces a length-e vector of zeta^m coefficients into the power basis.
// Phi_e(x) = sum_{i<p} x^(i e/p), so x^phi = -sum_{i<p-1} x^(i e/p).
std::vector<std::int64_t> reduce(std::uint32_t e,
                                 std::vector<std::int64_t> full) {
  if (e == 1) {
    std::int64_t s = 0;
    for (auto c : full)
      s = checked_add(s, c);
    return {s};
  }
  const std::uint32_t p = smallest_prime_factor(e);
  const std::uint32_t step = e / p;
  const std::uint32_t phi = e - step;
  for (std::uint32_t m = e; m-- > phi;) {
    const std::int64_t c = full[m];
    if (c == 0)
      continue;
    for (std::uint32_t i = 0; i + 1 < p; ++i) {
      auto &slot = full[m - phi + i * step];
      slot = checked_add(slot, -c);
    }
    full[m] = 0;
  }
  full.resize(phi);
  return full;
}

} // namespace

CyclotomicValue::CyclotomicValue(std::uint32_t e) : e_(e) {
  check_order(e);
  coeffs_.assign(totient_of_prime_power(e), 0);
}

CyclotomicValue CyclotomicValue::integer(std::uint32_t e, std::int64_t v) {
  CyclotomicValue r(e);
  r.coeffs_[0] = v;
  return r;
}

CyclotomicValue CyclotomicValue::root_of_unity(std::uint32_t e,
                                               std::uint64_t m) {
  CyclotomicAccumulator acc(e);
  acc.add_root(m, 1);
  return acc.value();
}

CyclotomicValue CyclotomicValue::from_powers(std::uint32_t e,
                                             std::span<const std::int64_t> c) {
  CyclotomicAccumulator acc(e);
  for (std::size_t m = 0; m < c.size(); ++m)
    if (c[m])
      acc.add_root(m, c[m]);
  return acc.value();
}

bool CyclotomicValue::is_zero() const noexcept {
  for (auto c : coeffs_)
    if (c)
      return false;
  return true;
}

bool CyclotomicValue::is_rational_integer() const noexcept {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i])
      return false;
  return true;
}

std::int64_t CyclotomicValue::to_integer() const {
  if (!is_rational_integer())
    throw Error("cyclotomic value " + to_string() + " is not an integer");
  return coeffs_[0];
}

CyclotomicValue CyclotomicValue::conj() const {
  CyclotomicAccumulator acc(e_);
  for (std::size_t m = 0; m < coeffs_.size(); ++m)
    if (coeffs_[m])
      acc.add_root((e_ - m) % e_, coeffs_[m]);
  return acc.value();
}

std::uint64_t CyclotomicValue::reduce_mod(std::uint64_t ell,
                                          std::uint64_t z) const {
  std::uint64_t r = 0;
  std::uint64_t zp = 1;
  for (auto c : coeffs_) {
    std::int64_t cm = c % static_cast<std::int64_t>(ell);
    if (cm < 0)
      cm += static_cast<std::int64_t>(ell);
    r = (r + static_cast<std::uint64_t>(cm) * zp) % ell;
    zp = zp * z % ell;
  }
  return r;
}

CyclotomicValue CyclotomicValue::divided_by(std::int64_t d) const {
  if (d == 0)
    throw Error("division of cyclotomic value by zero");
  CyclotomicValue r = *this;
  for (auto &c : r.coeffs_) {
    if (c % d != 0)
      throw Error("cyclotomic value " + to_string() + " not divisible by " +
                  std::to_string(d));
    c /= d;
  }
  return r;
}

double CyclotomicValue::real() const {
  double s = 0;
  for (std::size_t m = 0; m < coeffs_.size(); ++m)
    s += static_cast<double>(coeffs_[m]) *
         std::cos(2 * std::numbers::pi * static_cast<double>(m) / e_);
  return s;
}

double CyclotomicValue::imag() const {
  double s = 0;
  for (std::size_t m = 0; m < coeffs_.size(); ++m)
    s += static_cast<double>(coeffs_[m]) *
         std::sin(2 * std::numbers::pi * static_cast<double>(m) / e_);
  return s;
}

std::string CyclotomicValue::to_string() const {
  std::string s;
  for (std::size_t m = 0; m < coeffs_.size(); ++m) {
    const std::int64_t c = coeffs_[m];
    if (c == 0)
      continue;
    const bool neg = c < 0;
    const std::int64_t a = neg ? -c : c;
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    if (m == 0) {
      s += std::to_string(a);
      continue;
    }
    if (a != 1)
      s += std::to_string(a) + "*";
    s += "z" + std::to_string(e_);
    if (m != 1)
      s += "^" + std::to_string(m);
  }
  return s.empty() ? "0" : s;
}

CyclotomicValue operator+(const CyclotomicValue &a, const CyclotomicValue &b) {
  if (a.e_ != b.e_)
    throw Error("cyclotomic orders differ");
  CyclotomicValue r = a;
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i)
    r.coeffs_[i] = checked_add(r.coeffs_[i], b.coeffs_[i]);
  return r;
}

CyclotomicValue operator-(const CyclotomicValue &a, const CyclotomicValue &b) {
  return a + (-1) * b;
}

CyclotomicValue operator*(std::int64_t k, const CyclotomicValue &a) {
  CyclotomicValue r = a;
  for (auto &c : r.coeffs_)
    c = checked_mul(c, k);
  return r;
}

CyclotomicValue operator*(const CyclotomicValue &a, const CyclotomicValue &b) {
  if (a.e_ != b.e_)
    throw Error("cyclotomic orders differ");
  CyclotomicAccumulator acc(a.e_);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (!a.coeffs_[i])
      continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      if (b.coeffs_[j])
        acc.add_root(i + j, checked_mul(a.coeffs_[i], b.coeffs_[j]));
  }
  return acc.value();
}

CyclotomicAccumulator::CyclotomicAccumulator(std::uint32_t e)
    : e_(e), full_(e, 0) {
  check_order(e);
}

void CyclotomicAccumulator::add_root(std::uint64_t m, std::int64_t count) {
  auto &slot = full_[m % e_];
  slot = checked_add(slot, count);
}

void CyclotomicAccumulator::add(const CyclotomicValue &v, std::int64_t scale) {
  if (v.e_ != e_)
    throw Error("cyclotomic orders differ");
  for (std::size_t m = 0; m < v.coeffs_.size(); ++m)
    if (v.coeffs_[m])
      add_root(m, checked_mul(v.coeffs_[m], scale));
}

void CyclotomicAccumulator::add_product_conj(const CyclotomicValue &a,
                                             const CyclotomicValue &b,
                                             std::int64_t scale) {
  if (a.e_ != e_ || b.e_ != e_)
    throw Error("cyclotomic orders differ");
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (!a.coeffs_[i])
      continue;
    const std::int64_t ai = checked_mul(a.coeffs_[i], scale);
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      if (b.coeffs_[j])
        add_root(i + e_ - j, checked_mul(ai, b.coeffs_[j]));
  }
}

CyclotomicValue CyclotomicAccumulator::value() const {
  CyclotomicValue r(e_);
  r.coeffs_ = reduce(e_, full_);
  return r;
}

} // namespace cgl
