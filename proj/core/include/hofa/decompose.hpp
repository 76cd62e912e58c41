#pragma once

#include <variant>

#include "hofa/partition.hpp"
#include "hofa/phase.hpp"

namespace hofa {

/// A structured term is either a linear character (any group) or a polynomial
/// phase (Z_p^n dictionaries).
struct FrequencyLabel {
  GroupElement xi;
};
using TermLabel = std::variant<FrequencyLabel, PolynomialPhase>;

struct DecompositionTerm {
  TermLabel label;
  cplx coefficient;
};

/// f = sum coefficient * atom + residual, with term magnitudes non-increasing.
struct DecompositionResult {
  std::vector<DecompositionTerm> terms;
  GroupFunction residual;
  double residual_gowers = 0.0;  // U_k of the residual at the operation's level
  int iterations = 0;
  bool max_iter_exhausted = false;
};

/// The structured atom as a function on g.
GroupFunction term_function(const FiniteAbelianGroup& g, const TermLabel& label);

/// Reconstruction sum coefficient * atom + residual.
GroupFunction reconstruct(const DecompositionResult& r);

/// Exact first-order truncation: keeps exactly the frequencies with
/// |hat(f)(xi)| >= delta; the residual has all coefficients below delta and
/// its reported Gowers norm is U_2.
DecompositionResult fourier_truncate(const GroupFunction& f, double delta);

/// Greedy pursuit against the degree <= k-1 phase dictionary on Z_p^n:
/// repeatedly subtract the best-correlated atom until the maximum correlation
/// falls below delta or max_iter is reached. Deterministic via the canonical
/// phase order on ties; residual energy decreases by |correlation|^2 >= delta^2
/// per step. Repeated selections of one atom merge into a single term.
DecompositionResult matching_pursuit(const GroupFunction& f, int k, double delta, int max_iter,
                                     std::int64_t dictionary_cap = 1'000'000);

/// Cell-level Gram-Schmidt of the shifted inputs g_j = shift(f_j, t_j)
/// relative to a partition. The domain is the union of cells where the
/// conditional Gram matrix W_ij = E(g_i conj(g_j) | P) has |det| > 1e-9; on
/// it the outputs o_i = sum_j lambda_ij g_j satisfy
/// E(o_i conj(o_j) | P) = delta_ij with cell-constant lower-triangular
/// coefficients. Off the domain, outputs and coefficients are zero.
struct RelativeGramSchmidtResult {
  std::vector<char> cell_in_domain;                // indexed by cell label
  GroupFunction domain_indicator;                  // 1 on domain elements
  std::vector<std::vector<GroupFunction>> lambda;  // d x d cell-constant tables
  std::vector<GroupFunction> outputs;
};

RelativeGramSchmidtResult relative_gram_schmidt(std::span<const GroupFunction> fs,
                                                std::span<const GroupElement> shifts,
                                                const Partition& p);

}  // namespace hofa
