#pragma once

#include "hofa/phase.hpp"

namespace hofa {

/// A complex function on A x A stored row-major (K[x * |A| + y]). Carries the
/// finite Hilbert-Schmidt algebra: composition integrates over the middle
/// variable under the uniform measure.
struct Kernel {
  FiniteAbelianGroup group;
  std::vector<cplx> values;

  std::int64_t order() const { return group.order(); }
  const cplx& at(std::int64_t x, std::int64_t y) const {
    return values[static_cast<std::size_t>(x * group.order() + y)];
  }
  cplx& at(std::int64_t x, std::int64_t y) {
    return values[static_cast<std::size_t>(x * group.order() + y)];
  }
};

void validate(const Kernel& k);

Kernel make_zero_kernel(const FiniteAbelianGroup& g);

/// I(x, y) = |A| [x = y]: the unit of composition.
Kernel make_identity_kernel(const FiniteAbelianGroup& g);

/// K(x, y) = f(x) conj(g(y)).
Kernel outer_kernel(const GroupFunction& f, const GroupFunction& g);

/// K(x, y) = h(y - x); shift-invariant, diagonalized by linear characters.
Kernel shift_invariant_kernel(const GroupFunction& h);

/// (K1 o K2)(x, y) = (1/|A|) sum_z K1(x, z) K2(z, y).
Kernel compose(const Kernel& k1, const Kernel& k2);

/// K*(x, y) = conj(K(y, x)); an involutive anti-automorphism.
Kernel adjoint(const Kernel& k);

/// (1/|A|^2) sum_{x,y} K1(x, y) conj(K2(x, y)).
cplx hs_inner(const Kernel& k1, const Kernel& k2);

bool is_self_adjoint(const Kernel& k, double tol = 1e-12);

struct CkReport {
  bool ok = false;
  double max_residual = 0.0;
};

/// Finite shadow of the higher-order group algebra membership: for every
/// (x, y) the diagonal-shift section t -> K(x+t, y+t) must lie within tol
/// (L2 residual) of the linear span of the degree <= k-1 phases.
CkReport ck_membership(const Kernel& k, int level, double tol);

/// e(f, g)(x, y): project t -> f(x+t) g(y+t) onto the degree <= k-1 phase
/// span and read the value at t = 0. Well defined because the span is
/// invariant under diagonal shifts. The product is unconjugated, matching the
/// algebra's pairing; see pair_kernel_hermitian for the conjugated variant.
Kernel pair_kernel(const GroupFunction& f, const GroupFunction& g, int level);

/// Same construction with conj(g); produces self-adjoint kernels when f = g.
Kernel pair_kernel_hermitian(const GroupFunction& f, const GroupFunction& g, int level);

/// One eigenvalue with an orthonormal basis of its eigenspace (normalized
/// inner product). Within an eigenspace the basis is ordered lexicographically
/// by value table; the basis choice inside a degenerate eigenspace is
/// otherwise arbitrary.
struct EigenSpace {
  double eigenvalue = 0.0;
  std::vector<GroupFunction> functions;
};

/// Spectral decomposition of a self-adjoint kernel acting by
/// (K f)(x) = (1/|A|) sum_y K(x, y) f(y). Eigenspaces are ordered by
/// descending |eigenvalue|; near-zero eigenvalues are dropped, so the zero
/// kernel has an empty spectrum. Reconstruction
/// sum_i lambda_i u_i(x) conj(u_i(y)) matches K to 1e-8.
std::vector<EigenSpace> spectral_decomposition(const Kernel& k, double self_adjoint_tol = 1e-9);

/// Matches each eigenfunction of each nonzero eigenspace against the degree
/// <= level phase dictionary and returns the top-correlation phases in
/// eigenvalue order. For K = sum_j c_j phi_j x conj(phi_j) with distinct
/// positive c_j and near-orthogonal phases this recovers exactly {phi_j} up
/// to constant phase factors.
std::vector<PolynomialPhase> planted_phase_recovery(const Kernel& k, int level,
                                                    std::int64_t dictionary_cap = 1'000'000);

}  // namespace hofa
