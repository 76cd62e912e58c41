#pragma once

#include <vector>

#include "hofa/group_function.hpp"

namespace hofa {

/// A finite sigma-algebra on a group, stored extensionally as a cell-label
/// table. Labels are canonical: cells are numbered by first occurrence in
/// element-index order, so equal partitions have equal tables.
class Partition {
 public:
  static Partition trivial(const FiniteAbelianGroup& g);
  static Partition discrete(const FiniteAbelianGroup& g);

  /// Canonicalizes an arbitrary label table (one label per element index).
  static Partition from_labels(const FiniteAbelianGroup& g, std::span<const std::int32_t> labels);

  /// Cells are the cosets of the subgroup given by sorted element indices.
  /// Throws std::invalid_argument if the list is not a subgroup.
  static Partition cosets(const FiniteAbelianGroup& g, std::span<const std::int64_t> subgroup);

  const FiniteAbelianGroup& group() const { return group_; }
  const std::vector<std::int32_t>& labels() const { return labels_; }
  std::int32_t cell_count() const { return cell_count_; }
  std::int32_t label_of(std::int64_t element_index) const {
    return labels_[static_cast<std::size_t>(element_index)];
  }

  /// Element indices per cell, in index order.
  std::vector<std::vector<std::int64_t>> cells() const;

  bool operator==(const Partition& other) const = default;

 private:
  FiniteAbelianGroup group_;
  std::vector<std::int32_t> labels_;
  std::int32_t cell_count_ = 0;
};

/// Common refinement; refines both arguments, join(P, P) = P.
Partition join(const Partition& p1, const Partition& p2);

/// Cell-average projection E(f | P): constant on cells, idempotent,
/// self-adjoint, L2-contractive.
GroupFunction conditional_expectation(const GroupFunction& f, const Partition& p);

/// Subgroup averaging T(f)(x) = (1/|H|) sum_{h in H} f(x + h). Coincides with
/// conditional expectation onto the coset partition of H.
GroupFunction coset_projection(const GroupFunction& f, std::span<const std::int64_t> subgroup);

/// True iff E(f | P2) is P1-measurable for every cell indicator f of P1
/// (within tol). A symmetric relation.
bool weak_orthogonality_check(const Partition& p1, const Partition& p2, double tol = 1e-12);

/// True iff mu(C intersect D) = mu(C) mu(D) for all cells C of P1, D of P2.
bool independence_check(const Partition& p1, const Partition& p2, double tol = 1e-12);

/// True iff E(f_i conj(f_j) | P) is the constant delta_ij within tol.
bool relative_orthonormal_check(std::span<const GroupFunction> fs, const Partition& p,
                                double tol = 1e-9);

}  // namespace hofa
