#pragma once

#include <map>
#include <optional>

#include "hofa/group_function.hpp"
#include "hofa/multifunction.hpp"

namespace hofa {

/// Exponent vector of a monomial, one entry per variable.
using Monomial = std::vector<std::int32_t>;

/// Orders monomials by total degree, then lexicographically. This is the
/// canonical enumeration and tie-break order everywhere phases are compared.
struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// A unimodular function x -> e(P(x)/p) on Z_p^n, stored as the reduced
/// coefficient map of P. Zero coefficients are absent, every exponent is at
/// most p-1, and the zero polynomial has degree 0. With degrees below p these
/// are exactly the finite order-k characters: the multiplicative derivative
/// of a degree-d phase has degree at most d-1.
struct PolynomialPhase {
  std::int64_t p = 3;
  int n = 1;
  std::map<Monomial, std::int64_t, MonomialLess> coeffs;
};

bool is_odd_prime(std::int64_t p);

/// Validates (p odd prime, n >= 1), reduces coefficients mod p, drops zeros.
PolynomialPhase make_phase(std::int64_t p, int n,
                           std::map<Monomial, std::int64_t, MonomialLess> coeffs);

int phase_degree(const PolynomialPhase& phi);

/// Pointwise multiplication of phases = addition of coefficient maps.
PolynomialPhase phase_mul(const PolynomialPhase& a, const PolynomialPhase& b);

/// Total order consistent with the canonical monomial order; used for
/// deterministic tie-breaks.
bool phase_less(const PolynomialPhase& a, const PolynomialPhase& b);
bool phase_equal(const PolynomialPhase& a, const PolynomialPhase& b);

/// Detects Z_p^n structure: every factor equal to the same odd prime.
std::optional<std::pair<std::int64_t, int>> as_prime_power_group(const FiniteAbelianGroup& g);

/// Throws unless g is Z_p^n for the phase's p and n.
GroupFunction phase_eval(const PolynomialPhase& phi, const FiniteAbelianGroup& g);

/// Exact symbolic expansion of P(x + t) - P(x) mod p. If deg P = d >= 1 and
/// d < p the result has degree at most d - 1.
PolynomialPhase phase_delta(const PolynomialPhase& phi, const GroupElement& t);

/// All monomials with total degree <= max_degree (constant included), in
/// canonical order.
std::vector<Monomial> monomials_up_to(int n, int max_degree, std::int64_t p);

/// Complete duplicate-free enumeration of coefficient maps over the monomials
/// of degree <= max_degree; count is p^(#monomials). Throws SizeCapError when
/// the count exceeds the cap.
std::vector<PolynomialPhase> enumerate_phases(std::int64_t p, int n, int max_degree,
                                              std::int64_t cap = 1'000'000);

/// Coset representatives of {deg <= k} modulo {deg <= k-1}: all coefficient
/// maps supported on monomials of total degree exactly k.
std::vector<PolynomialPhase> dual_representatives(std::int64_t p, int n, int k,
                                                  std::int64_t cap = 1'000'000);

/// The scalar-free dictionary: phases with zero constant term and degree at
/// most max_degree, evaluated on g. Includes the zero polynomial.
struct PhaseDictionary {
  std::vector<PolynomialPhase> phases;
  std::vector<GroupFunction> tables;
};
PhaseDictionary make_phase_dictionary(const FiniteAbelianGroup& g, int max_degree,
                                      std::int64_t cap = 1'000'000);

/// Pairs (phi, <f, eval(phi)>) sorted by descending correlation magnitude,
/// ties broken by the canonical phase order.
std::vector<std::pair<PolynomialPhase, cplx>> correlation_spectrum(
    const GroupFunction& f, const PhaseDictionary& family);

/// Orthonormal basis of the linear span of the degree <= max_degree phase
/// tables inside C^|A|, precomputed for repeated projections. The span is
/// shift-invariant, so projection commutes with diagonal shifts.
class PhaseSpan {
 public:
  static PhaseSpan build(const FiniteAbelianGroup& g, int max_degree,
                         std::int64_t cap = 1'000'000);

  const FiniteAbelianGroup& group() const { return group_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  bool is_full() const { return dim() == static_cast<int>(group_.order()); }

  GroupFunction project(const GroupFunction& f) const;
  /// L2 distance from f to the span.
  double residual(const GroupFunction& f) const;

 private:
  FiniteAbelianGroup group_;
  std::vector<GroupFunction> basis_;
};

struct PrecocycleReport {
  bool ok = false;
  bool unimodular = false;
  double max_residual = 0.0;
};

/// Finite pre-cocycle shadow: f must be unimodular and every multiplicative
/// derivative delta(f, t) must be within tol (in L2) of a single phase of
/// degree <= k-1, up to a constant phase factor. The residual against the
/// best dictionary atom is reported per worst shift.
PrecocycleReport precocycle_check(const GroupFunction& f, int k, double tol);

}  // namespace hofa
