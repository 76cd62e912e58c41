#pragma once

#include <complex>
#include <vector>

#include "hofa/group.hpp"
#include "hofa/reduce.hpp"

namespace hofa {

/// A complex-valued function on a finite abelian group, stored as a value
/// table in element-index order. Immutable by convention: operations return
/// new functions.
struct GroupFunction {
  FiniteAbelianGroup group;
  std::vector<cplx> values;

  std::int64_t size() const { return static_cast<std::int64_t>(values.size()); }
  const cplx& operator[](std::int64_t i) const { return values[static_cast<std::size_t>(i)]; }
  cplx& operator[](std::int64_t i) { return values[static_cast<std::size_t>(i)]; }
};

GroupFunction make_constant(const FiniteAbelianGroup& g, cplx value);
GroupFunction make_zero(const FiniteAbelianGroup& g);

/// Indicator of a set of element indices.
GroupFunction make_indicator(const FiniteAbelianGroup& g, std::span<const std::int64_t> set);

/// Throws std::invalid_argument unless f.values has one entry per element.
void validate(const GroupFunction& f);

bool same_group(const GroupFunction& f, const GroupFunction& g);

/// max_x | |f(x)| - 1 | <= tol
bool is_unimodular(const GroupFunction& f, double tol = 1e-9);

/// Normalized L2 pairing (1/|A|) sum_x f(x) conj(g(x)), pairwise-tree summed.
cplx inner(const GroupFunction& f, const GroupFunction& g);

/// sqrt(inner(f, f)).
double l2_norm(const GroupFunction& f);

double sup_norm(const GroupFunction& f);
double sup_distance(const GroupFunction& f, const GroupFunction& g);

// Pointwise algebra.
GroupFunction pointwise_mul(const GroupFunction& f, const GroupFunction& g);
GroupFunction conjugate(const GroupFunction& f);
GroupFunction scale(const GroupFunction& f, cplx c);
GroupFunction fn_add(const GroupFunction& f, const GroupFunction& g);
GroupFunction fn_sub(const GroupFunction& f, const GroupFunction& g);

/// shift(f, t)(x) = f(x + t).
GroupFunction shift(const GroupFunction& f, const GroupElement& t);
GroupFunction shift(const GroupFunction& f, std::int64_t t_index);

/// Multiplicative derivative delta(f, t)(x) = f(x + t) conj(f(x)). Equals the
/// shifted ratio for unimodular f; callers needing ratio semantics must pass
/// unimodular input.
GroupFunction delta(const GroupFunction& f, const GroupElement& t);
GroupFunction delta(const GroupFunction& f, std::int64_t t_index);

/// chi_xi(x) = exp(2 pi i sum_j xi_j x_j / n_j); multiplicative and unimodular.
GroupFunction linear_character(const FiniteAbelianGroup& g, const GroupElement& xi);
GroupFunction linear_character(const FiniteAbelianGroup& g, std::int64_t xi_index);

/// Fourier transform: hat(f)(xi) = <f, chi_xi>, indexed like the group.
/// Direct O(|A|^2) character sums; Parseval holds to 1e-9 at desk scale.
GroupFunction fourier(const GroupFunction& f);

/// f(x) = sum_xi hat(f)(xi) chi_xi(x).
GroupFunction inverse_fourier(const GroupFunction& spectrum);

}  // namespace hofa
