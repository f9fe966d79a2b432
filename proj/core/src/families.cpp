#include "cgl/families.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <functional>
#include <numeric>

#include "cgl/error.hpp"

namespace cgl {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 8> kNames{{
    {Family::Cyclic, "cyclic"},
    {Family::Abelian, "abelian"},
    {Family::Modular, "modular"},
    {Family::Dihedral, "dihedral"},
    {Family::Semidihedral, "semidihedral"},
    {Family::Quaternion, "quaternion"},
    {Family::Extraspecial, "extraspecial"},
    {Family::Wreath, "wreath"},
}};

using MulFn = std::function<std::size_t(std::size_t, std::size_t)>;

Group from_rule(unsigned p, unsigned n, const MulFn &mul,
                std::string descriptor) {
  const std::size_t N = ipow(p, n);
  std::vector<std::uint16_t> table(N * N);
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b)
      table[a * N + b] = static_cast<std::uint16_t>(mul(a, b));
  return Group(p, n, std::move(table), std::move(descriptor));
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp,
                      std::uint64_t mod) {
  std::uint64_t r = 1 % mod;
  base %= mod;
  while (exp) {
    if (exp & 1)
      r = r * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return r;
}

// Z_m semidirect Z_k, where the generator of Z_k acts by x -> x*u.
// Element (a, b) has index a*k + b.
MulFn cyclic_extension(std::uint64_t m, std::uint64_t k, std::uint64_t u) {
  std::vector<std::uint64_t> powers(k);
  for (std::uint64_t b = 0; b < k; ++b)
    powers[b] = mod_pow(u, b, m);
  return [m, k, powers](std::size_t x, std::size_t y) {
    const std::uint64_t a1 = x / k, b1 = x % k;
    const std::uint64_t a2 = y / k, b2 = y % k;
    const std::uint64_t a = (a1 + a2 * powers[b1]) % m;
    const std::uint64_t b = (b1 + b2) % k;
    return static_cast<std::size_t>(a * k + b);
  };
}

unsigned parse_unsigned(std::string_view s, std::string_view what) {
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw UnsupportedFamily("invalid " + std::string(what) + " '" +
                            std::string(s) + "'");
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
    s.remove_suffix(1);
  return s;
}

std::vector<unsigned> parse_partition(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '[' && s.back() == ']')
    s = s.substr(1, s.size() - 2);
  std::vector<unsigned> parts;
  while (!s.empty()) {
    auto comma = s.find(',');
    parts.push_back(parse_unsigned(trim(s.substr(0, comma)), "partition part"));
    if (comma == std::string_view::npos)
      break;
    s.remove_prefix(comma + 1);
  }
  return parts;
}

void validate(FamilySpec &spec) {
  const std::string name(family_name(spec.family));
  if (!is_prime(spec.p))
    throw UnsupportedFamily(name + ": p = " + std::to_string(spec.p) +
                            " is not prime");
  switch (spec.family) {
  case Family::Cyclic:
    break;
  case Family::Abelian:
    if (spec.partition.empty() ||
        std::find(spec.partition.begin(), spec.partition.end(), 0u) !=
            spec.partition.end())
      throw UnsupportedFamily("abelian: partition parts must be positive");
    std::sort(spec.partition.begin(), spec.partition.end(), std::greater<>());
    spec.n = std::accumulate(spec.partition.begin(), spec.partition.end(), 0u);
    break;
  case Family::Modular:
    if (spec.n < 3)
      throw UnsupportedFamily("modular: requires n >= 3");
    break;
  case Family::Dihedral:
  case Family::Quaternion:
    if (spec.p != 2)
      throw UnsupportedFamily(name + ": only defined for p = 2");
    if (spec.n < 3)
      throw UnsupportedFamily(name + ": requires n >= 3");
    break;
  case Family::Semidihedral:
    if (spec.p != 2)
      throw UnsupportedFamily("semidihedral: only defined for p = 2");
    if (spec.n < 4)
      throw UnsupportedFamily("semidihedral: requires n >= 4");
    break;
  case Family::Extraspecial:
    if (spec.n != 3)
      throw UnsupportedFamily("extraspecial: only order p^3 is supported");
    if (spec.sign != '+' && spec.sign != '-')
      throw UnsupportedFamily("extraspecial: type must be + or -");
    break;
  case Family::Wreath:
    spec.n = spec.p + 1;
    break;
  }
}

} // namespace

std::string_view family_name(Family f) {
  for (const auto &[fam, name] : kNames)
    if (fam == f)
      return name;
  return "unknown";
}

Family parse_family_name(std::string_view name) {
  for (const auto &[fam, n] : kNames)
    if (n == name)
      return fam;
  throw UnsupportedFamily("unknown family '" + std::string(name) + "'");
}

std::size_t FamilySpec::order() const {
  // Saturate rather than overflow; callers only compare against caps.
  std::uint64_t r = 1;
  for (unsigned i = 0; i < n; ++i) {
    r *= p;
    if (r > (1ull << 40))
      return static_cast<std::size_t>(r);
  }
  return static_cast<std::size_t>(r);
}

std::string FamilySpec::to_string() const {
  std::string s(family_name(family));
  s += "(" + std::to_string(p);
  switch (family) {
  case Family::Abelian: {
    s += ",[";
    for (std::size_t i = 0; i < partition.size(); ++i) {
      if (i)
        s += ",";
      s += std::to_string(partition[i]);
    }
    s += "]";
    break;
  }
  case Family::Extraspecial:
    s += "," + std::to_string(n) + "," + std::string(1, sign);
    break;
  case Family::Wreath:
    break;
  default:
    s += "," + std::to_string(n);
  }
  return s + ")";
}

FamilySpec parse_family_spec(std::string_view text) {
  text = trim(text);
  const auto open = text.find('(');
  if (open == std::string_view::npos || text.back() != ')')
    throw UnsupportedFamily("malformed family descriptor '" +
                            std::string(text) + "'");
  FamilySpec spec;
  spec.family = parse_family_name(trim(text.substr(0, open)));
  std::string_view args = text.substr(open + 1, text.size() - open - 2);

  // Split on commas outside brackets.
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == '[')
      ++depth;
    else if (args[i] == ']')
      --depth;
    else if (args[i] == ',' && depth == 0) {
      parts.push_back(trim(args.substr(start, i - start)));
      start = i + 1;
    }
  }
  parts.push_back(trim(args.substr(start)));

  auto expect = [&](std::size_t count) {
    if (parts.size() != count)
      throw UnsupportedFamily("wrong number of parameters in '" +
                              std::string(text) + "'");
  };
  spec.p = parse_unsigned(parts.at(0), "prime");
  switch (spec.family) {
  case Family::Abelian:
    expect(2);
    spec.partition = parse_partition(parts[1]);
    break;
  case Family::Extraspecial:
    expect(3);
    spec.n = parse_unsigned(parts[1], "exponent");
    if (parts[2].size() != 1)
      throw UnsupportedFamily("extraspecial: type must be + or -");
    spec.sign = parts[2][0];
    break;
  case Family::Wreath:
    expect(1);
    break;
  default:
    expect(2);
    spec.n = parse_unsigned(parts[1], "exponent");
  }
  validate(spec);
  return spec;
}

FamilySpec make_family_spec(std::string_view name, unsigned p, unsigned n,
                            std::string_view variant) {
  FamilySpec spec;
  spec.family = parse_family_name(name);
  spec.p = p;
  spec.n = n;
  switch (spec.family) {
  case Family::Abelian:
    if (variant.empty())
      throw UnsupportedFamily("abelian: --variant must give the invariants, "
                              "e.g. 3,1");
    spec.partition = parse_partition(variant);
    break;
  case Family::Extraspecial:
    if (spec.n == 0)
      spec.n = 3;
    if (!variant.empty()) {
      if (variant.size() != 1)
        throw UnsupportedFamily("extraspecial: type must be + or -");
      spec.sign = variant[0];
    }
    break;
  default:
    if (!variant.empty())
      throw UnsupportedFamily(std::string(name) + ": takes no variant");
  }
  const unsigned requested = spec.n;
  validate(spec);
  if ((spec.family == Family::Abelian || spec.family == Family::Wreath) &&
      requested != 0 && requested != spec.n)
    throw UnsupportedFamily(spec.to_string() + " has order " +
                            std::to_string(spec.p) + "^" +
                            std::to_string(spec.n) + ", not n = " +
                            std::to_string(requested));
  return spec;
}

Group build_family(const FamilySpec &input, std::size_t cap) {
  validate_cap(cap);
  FamilySpec spec = input;
  validate(spec);
  if (spec.order() > cap)
    throw CapExceeded(spec.to_string() + " has order " +
                      std::to_string(spec.order()) + " above the cap " +
                      std::to_string(cap));

  const unsigned p = spec.p;
  const unsigned n = spec.n;
  const std::string desc = spec.to_string();

  switch (spec.family) {
  case Family::Cyclic: {
    const std::size_t m = ipow(p, n);
    return from_rule(p, n, [m](std::size_t a, std::size_t b) {
      return (a + b) % m;
    }, desc);
  }
  case Family::Abelian: {
    std::vector<std::size_t> moduli;
    for (unsigned e : spec.partition)
      moduli.push_back(ipow(p, e));
    return from_rule(
        p, n,
        [moduli](std::size_t a, std::size_t b) {
          std::size_t result = 0, scale = 1;
          for (std::size_t i = moduli.size(); i-- > 0;) {
            const std::size_t m = moduli[i];
            result += ((a % m + b % m) % m) * scale;
            scale *= m;
            a /= m;
            b /= m;
          }
          return result;
        },
        desc);
  }
  case Family::Modular: {
    const std::uint64_t m = ipow(p, n - 1);
    return from_rule(p, n, cyclic_extension(m, p, 1 + ipow(p, n - 2)), desc);
  }
  case Family::Dihedral: {
    const std::uint64_t m = ipow(2, n - 1);
    return from_rule(2, n, cyclic_extension(m, 2, m - 1), desc);
  }
  case Family::Semidihedral: {
    const std::uint64_t m = ipow(2, n - 1);
    return from_rule(2, n, cyclic_extension(m, 2, m / 2 - 1), desc);
  }
  case Family::Quaternion: {
    // r^a s^b with s^2 = r^(m/2) and s r s^-1 = r^-1.
    const std::size_t m = ipow(2, n - 1);
    return from_rule(
        2, n,
        [m](std::size_t x, std::size_t y) {
          const std::size_t a1 = x / 2, b1 = x % 2, a2 = y / 2, b2 = y % 2;
          std::size_t a = b1 ? (a1 + m - a2) % m : (a1 + a2) % m;
          if (b1 && b2)
            a = (a + m / 2) % m;
          return a * 2 + (b1 ^ b2);
        },
        desc);
  }
  case Family::Extraspecial: {
    if (p == 2) {
      FamilySpec inner{spec.sign == '+' ? Family::Dihedral : Family::Quaternion,
                       2, 3, {}, '+'};
      return build_family(inner, cap).with_descriptor(desc);
    }
    if (spec.sign == '-') {
      return from_rule(p, 3, cyclic_extension(p * p, p, 1 + p), desc);
    }
    // Heisenberg group: (x,y,z)(x',y',z') = (x+x', y+y', z+z'+x*y').
    return from_rule(
        p, 3,
        [p](std::size_t a, std::size_t b) {
          const std::size_t x1 = a / (p * p), y1 = a / p % p, z1 = a % p;
          const std::size_t x2 = b / (p * p), y2 = b / p % p, z2 = b % p;
          const std::size_t x = (x1 + x2) % p, y = (y1 + y2) % p;
          const std::size_t z = (z1 + z2 + x1 * y2) % p;
          return (x * p + y) * p + z;
        },
        desc);
  }
  case Family::Wreath: {
    // (v, t)(w, s) = (v + shift^t(w), t + s), shift^t(w)_i = w_{i-t}.
    return from_rule(
        p, n,
        [p](std::size_t x, std::size_t y) {
          const std::size_t v = x / p, t = x % p, w = y / p, s = y % p;
          std::vector<std::size_t> vd(p), wd(p);
          std::size_t vv = v, ww = w;
          for (std::size_t i = p; i-- > 0;) {
            vd[i] = vv % p;
            wd[i] = ww % p;
            vv /= p;
            ww /= p;
          }
          std::size_t out = 0;
          for (std::size_t i = 0; i < p; ++i)
            out = out * p + (vd[i] + wd[(i + p - t) % p]) % p;
          return out * p + (t + s) % p;
        },
        desc);
  }
  }
  throw UnsupportedFamily("unhandled family");
}

} // namespace cgl
