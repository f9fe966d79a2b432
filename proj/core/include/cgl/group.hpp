#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace cgl {

/// Element index into a Group. Index 0 is always the identity.
using Elem = std::uint32_t;

/// Order caps for dense multiplication tables.
inline constexpr std::size_t kDefaultCap = 2048;
inline constexpr std::size_t kMaxCap = 6561;

/// Throws CapExceeded if `cap` is above kMaxCap. Returns true when the cap is
/// above the default and callers should warn about memory use.
bool validate_cap(std::size_t cap);

bool is_prime(std::uint64_t n);

/// Returns k with p^k == value, or -1 if value is not a power of p.
int exact_log(std::uint64_t value, unsigned p);

std::uint64_t ipow(std::uint64_t base, unsigned exp);

/// A finite p-group stored as a dense multiplication table.
///
/// Copies are cheap: the table is shared and never mutated after
/// construction.
class Group {
public:
  /// `table[a * N + b]` is the index of a*b. Validates that 0 is a two-sided
  /// identity, every row and column is a permutation, and N = p^n. Does not
  /// check associativity (see `check_associative`).
  Group(unsigned p, unsigned n, std::vector<std::uint16_t> table,
        std::string descriptor);

  std::size_t order() const noexcept { return d_->order; }
  unsigned prime() const noexcept { return d_->p; }
  unsigned log_order() const noexcept { return d_->n; }
  const std::string &descriptor() const noexcept { return d_->descriptor; }

  Elem mul(Elem a, Elem b) const noexcept {
    return d_->table[static_cast<std::size_t>(a) * d_->order + b];
  }
  Elem inv(Elem a) const noexcept { return d_->inverse[a]; }
  Elem pow(Elem a, std::uint64_t k) const noexcept;
  /// x^-1 g x
  Elem conj(Elem g, Elem x) const noexcept { return mul(mul(inv(x), g), x); }
  /// [a, b] = a^-1 b^-1 a b
  Elem comm(Elem a, Elem b) const noexcept {
    return mul(mul(inv(a), inv(b)), mul(a, b));
  }
  unsigned element_order(Elem a) const noexcept;

  /// A generating set, chosen greedily in index order.
  std::span<const Elem> generators() const noexcept { return d_->generators; }

  /// Same group, different provenance string.
  Group with_descriptor(std::string descriptor) const;

private:
  struct Data {
    unsigned p = 0;
    unsigned n = 0;
    std::size_t order = 0;
    std::vector<std::uint16_t> table;
    std::vector<Elem> inverse;
    std::vector<Elem> generators;
    std::string descriptor;
  };
  std::shared_ptr<const Data> d_;
};

/// Exhaustive associativity check, O(N^2 * |generators|) via generator
/// right-multiplications.
bool check_associative(const Group &g);

/// A subgroup given by its sorted member list.
struct Subgroup {
  std::vector<Elem> members;
  bool is_normal = false;

  std::size_t order() const noexcept { return members.size(); }
  bool contains(Elem x) const;
  bool is_trivial() const noexcept { return members.size() == 1; }

  friend bool operator==(const Subgroup &a, const Subgroup &b) {
    return a.members == b.members;
  }
};

Subgroup trivial_subgroup(const Group &g);
Subgroup whole_group(const Group &g);

/// Smallest subgroup containing `gens` (and, if `normal`, closed under
/// conjugation by G). Uses Dimino's coset-by-coset closure.
Subgroup subgroup_closure(const Group &g, std::span<const Elem> gens,
                          bool normal);

bool is_normal_set(const Group &g, std::span<const Elem> members);

Subgroup center(const Group &g);

/// Subgroup generated by all [a, b], a in A, b in B.
Subgroup commutator(const Group &g, const Subgroup &a, const Subgroup &b);

Subgroup derived_subgroup(const Group &g);

bool is_abelian(const Group &g);
bool is_abelian(const Group &g, const Subgroup &h);

/// Invariants (e_1 >= e_2 >= ...) with G = Z_{p^e_1} x Z_{p^e_2} x ...
/// Requires G abelian.
std::vector<unsigned> abelian_invariants(const Group &g);

struct Quotient {
  Group group;
  /// projection[g] is the index in `group` of the coset gN.
  std::vector<Elem> projection;
};

/// G/N with cosets numbered by their minimal member.
Quotient quotient(const Group &g, const Subgroup &n);

struct ConjugacyData {
  /// Classes ordered by (element order, class size, minimal member); each
  /// class sorted ascending, so classes[j][0] is its representative.
  std::vector<std::vector<Elem>> classes;
  std::vector<std::uint32_t> class_of;
  std::vector<std::size_t> class_sizes;
  std::vector<std::uint32_t> element_orders;
  std::uint32_t exponent = 1;
  /// Row-major (class, t) for t in [0, exponent).
  std::vector<std::uint32_t> power_map;
  /// Class containing the inverses of class j.
  std::vector<std::uint32_t> inverse_class;

  std::size_t num_classes() const noexcept { return classes.size(); }
  Elem representative(std::size_t j) const { return classes[j].front(); }
  std::uint32_t power_class(std::size_t j, std::uint64_t t) const {
    return power_map[j * exponent + t % exponent];
  }
};

ConjugacyData conjugacy_data(const Group &g);

struct CentralSeriesData {
  /// 1 = Z_0 < Z_1 < ... < Z_c = G
  std::vector<Subgroup> upper;
  /// G = G_1 > G_2 > ... > G_{c+1} = 1
  std::vector<Subgroup> lower;
  unsigned nilpotence_class = 0;
  bool is_maximal_class = false;
  bool is_metabelian = false;
};

CentralSeriesData central_series(const Group &g);

/// Every normal subgroup of G, sorted by (order, member list).
std::vector<Subgroup> normal_subgroups(const Group &g,
                                       const ConjugacyData &conj);
std::vector<Subgroup> normal_subgroups(const Group &g);

} // namespace cgl
