#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

#include "hofa/group_function.hpp"

namespace hofa {

/// Vertices of the k-dimensional combinatorial cube, as bit masks over the k
/// directions in mask order. Vertex 0 is the empty set.
struct CubeIndex {
  int k = 0;

  explicit CubeIndex(int dim);

  std::int64_t vertex_count() const { return std::int64_t{1} << k; }

  /// Unordered vertex pairs at Hamming distance 1.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges() const;

  /// 2-faces as (base, base|e_i, base|e_j, base|e_i|e_j) with i < j and the
  /// base mask clear in both directions.
  std::vector<std::array<std::uint32_t, 4>> two_faces() const;
};

/// delta_k(a_0, ..., a_k)_v = a_0 + sum_{i in v} a_i for every vertex mask v.
/// The output satisfies every 2-face equation, the map is injective, and its
/// image has size |A|^{k+1}.
std::vector<GroupElement> spider_map(const FiniteAbelianGroup& g, int k,
                                     std::span<const GroupElement> coords);

/// True iff every 2-face (p, q, r, s) with q, r one flip from p and s both
/// flips satisfies a_p - a_q + a_s - a_r = 0. The two vertices at Hamming
/// distance 2 carry the same sign; this is the unique orientation under which
/// spider_map outputs satisfy all equations.
bool cube_membership(const FiniteAbelianGroup& g, int k, std::span<const GroupElement> vertex_tuple);

/// The 2^k-form (1/|A|^{k+1}) sum over spider coordinates of
/// prod_v f_v(delta_k(coords)_v). Multilinear in each slot; the vertex product
/// walks masks in Gray-code order so each step is one group add.
cplx tilde_form(std::span<const GroupFunction> fs, int k);

/// Automorphism descriptor for face actions: a translation by a group element
/// or an explicit point permutation of element indices.
struct Translation {
  std::int64_t by = 0;  // element index
};
struct PointPermutation {
  std::vector<std::int64_t> table;  // forward bijection on element indices
};
using AutomorphismDescriptor = std::variant<Translation, PointPermutation>;

/// Throws unless the descriptor is a bijection of the group's elements.
void validate_descriptor(const FiniteAbelianGroup& g, const AutomorphismDescriptor& s);

AutomorphismDescriptor descriptor_inverse(const FiniteAbelianGroup& g,
                                          const AutomorphismDescriptor& s);

/// Composition as point maps: (a then-after b)(x) = a(b(x)).
AutomorphismDescriptor descriptor_compose(const FiniteAbelianGroup& g,
                                          const AutomorphismDescriptor& a,
                                          const AutomorphismDescriptor& b);

/// s1 s2 s1^{-1} s2^{-1} as a point map.
AutomorphismDescriptor descriptor_commutator(const FiniteAbelianGroup& g,
                                             const AutomorphismDescriptor& s1,
                                             const AutomorphismDescriptor& s2);

/// l(T, sigma): applies sigma to the function slots indexed by T. A
/// translation descriptor c acts as f_v -> shift(f_v, c); a permutation pi
/// acts as f_v -> f_v o pi^{-1}.
struct FaceAction {
  std::vector<std::uint32_t> slots;  // vertex masks in V_dim
  AutomorphismDescriptor sigma;
};

std::vector<GroupFunction> apply_face_action(const FaceAction& action,
                                             std::span<const GroupFunction> fs, int dim);

/// An edge of V_dim given by its two vertex masks (Hamming distance 1).
struct Edge {
  std::uint32_t v1 = 0;
  std::uint32_t v2 = 0;
};

/// Verifies that the commutator of the two edge actions acts as
/// l(w, [s1, s2]) at the shared vertex w and as the identity elsewhere, on a
/// spanning family of vertex-indexed tuples (delta function at one slot,
/// constant 1 elsewhere). Throws unless the edges intersect in exactly one
/// vertex.
bool commutator_check(const FiniteAbelianGroup& g, int dim, const Edge& e1, const Edge& e2,
                      const AutomorphismDescriptor& s1, const AutomorphismDescriptor& s2);

}  // namespace hofa
