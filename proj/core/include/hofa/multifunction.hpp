#pragma once

#include <stdexcept>
#include <string>

#include "hofa/cube.hpp"
#include "hofa/group_function.hpp"

namespace hofa {

/// Thrown when a requested computation exceeds a configured size cap. The
/// message names the offending dimension.
struct SizeCapError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A complex function on A^k stored row-major in element-index order (last
/// coordinate fastest).
struct MultiFunction {
  FiniteAbelianGroup group;
  int arity = 1;
  std::vector<cplx> values;

  std::int64_t size() const { return static_cast<std::int64_t>(values.size()); }
  const cplx& operator[](std::int64_t i) const { return values[static_cast<std::size_t>(i)]; }
  cplx& operator[](std::int64_t i) { return values[static_cast<std::size_t>(i)]; }
};

void validate(const MultiFunction& f);

/// f_k(x_1, ..., x_k) = f(x_1 + ... + x_k).
MultiFunction sum_lift(const GroupFunction& f, int k, std::int64_t size_cap = 10'000'000);

enum class OctahedralMethod {
  kFold,       // direction-by-direction derivative folding, no size gate
  kBruteForce  // direct 2k-variable integral, gated by order^{2k} <= cap
};

/// The 2^k-th root of the conjugation-patterned integral over x_{i,j}
/// (conjugate a factor iff its choice vector has odd weight). Real and
/// nonnegative; the fold path evaluates a sum of squared magnitudes.
double octahedral_norm(const MultiFunction& f,
                       OctahedralMethod method = OctahedralMethod::kFold,
                       std::int64_t brute_cap = 100'000'000);

enum class GowersMethod { kCube, kDefinition };

/// U_k(f). kCube evaluates the alternating-conjugation tilde form over spider
/// coordinates in O(|A|^{k+1}); kDefinition evaluates the octahedral norm of
/// the sum-lift by brute force and exists as an oracle for the cube path
/// (gated by order^{2k} <= definition_cap). The two agree to 1e-9.
double gowers_norm(const GroupFunction& f, int k, GowersMethod method = GowersMethod::kCube,
                   std::int64_t definition_cap = 100'000'000);

/// True iff octahedral_norm(f) <= eps (fold path). eps must be positive.
bool quasirandom_test(const MultiFunction& f, double eps);

/// slice(F, x)(x_1, ..., x_{k-1}) = F(x_1, ..., x_{k-1}, x). Arity must be
/// at least 2.
MultiFunction slice(const MultiFunction& f, const GroupElement& x);
MultiFunction slice(const MultiFunction& f, std::int64_t x_index);

/// Dimension of the linear span of all |A| slices: the rank of the slice
/// matrix, counting singular values above 1e-9.
int slice_span_dim(const MultiFunction& f);

}  // namespace hofa
