#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace hofa {

/// An element of a product of cyclic groups, stored as the reduced residue
/// tuple (r_1, ..., r_m) with 0 <= r_j < n_j. Elements carry no group handle;
/// every operation takes the group explicitly and checks arity/range.
struct GroupElement {
  std::vector<std::int32_t> residues;

  bool operator==(const GroupElement&) const = default;
};

/// A finite abelian group presented as Z_{n_1} x ... x Z_{n_m} with the
/// uniform probability measure. Elements are indexed in mixed-radix order,
/// last factor fastest, so iteration order is canonical and reproducible.
///
/// Factors are not required to be prime powers or in invariant-factor form;
/// a factor of 1 contributes a degenerate coordinate.
class FiniteAbelianGroup {
 public:
  /// Builds a group from cyclic orders. Throws std::invalid_argument on an
  /// empty list, a factor < 1, or order above size_cap (default 10^7).
  static FiniteAbelianGroup make(std::vector<std::int64_t> factors,
                                 std::int64_t size_cap = 10'000'000);

  const std::vector<std::int64_t>& factors() const { return factors_; }
  std::int64_t order() const { return order_; }
  std::size_t rank() const { return factors_.size(); }

  bool operator==(const FiniteAbelianGroup& other) const { return factors_ == other.factors_; }

  /// Index <-> residue-tuple bijection (mixed radix, last factor fastest).
  GroupElement element_at(std::int64_t index) const;
  std::int64_t index_of(const GroupElement& x) const;

  /// Membership: correct arity and reduced residues.
  bool contains(const GroupElement& x) const;

  // Index arithmetic for hot loops. Inputs must be valid indices.
  std::int64_t add_index(std::int64_t a, std::int64_t b) const;
  std::int64_t sub_index(std::int64_t a, std::int64_t b) const;
  std::int64_t neg_index(std::int64_t a) const;
  std::int64_t zero_index() const { return 0; }

  GroupElement zero() const;
  GroupElement add(const GroupElement& x, const GroupElement& y) const;
  GroupElement neg(const GroupElement& x) const;

 private:
  std::vector<std::int64_t> factors_;
  std::vector<std::int64_t> strides_;  // strides_[j] = prod of factors after j
  std::int64_t order_ = 1;
};

/// tau_k: sums a nonempty tuple of elements. Membership of xs in the
/// zero-sum subgroup D_k is exactly sum_map(g, xs) == g.zero().
GroupElement sum_map(const FiniteAbelianGroup& g, std::span<const GroupElement> xs);

/// A coset of a generated subgroup: the subgroup's sorted element indices
/// plus the minimal-index representative.
struct Coset {
  std::vector<std::int64_t> subgroup;
  GroupElement representative;
};

/// Closes the generators under the group law; returns sorted element indices.
/// Empty generator list yields the trivial subgroup {0}.
std::vector<std::int64_t> subgroup_closure(const FiniteAbelianGroup& g,
                                           std::span<const GroupElement> generators);

/// True iff the sorted index list is closed under addition and nonempty.
bool is_subgroup(const FiniteAbelianGroup& g, std::span<const std::int64_t> sorted_indices);

/// The coset partition of the subgroup generated by `generators`. Cosets are
/// disjoint, equal-sized, cover the group, and are ordered by representative.
std::vector<Coset> subgroup_cosets(const FiniteAbelianGroup& g,
                                   std::span<const GroupElement> generators);

}  // namespace hofa
