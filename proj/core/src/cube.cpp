#include "hofa/cube.hpp"

#include <array>
#include <bit>
#include <stdexcept>

namespace hofa {

namespace {

void check_dim(int k) {
  if (k < 1 || k > 24) throw std::invalid_argument("cube: dimension out of range");
}

std::int64_t ipow(std::int64_t base, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

CubeIndex::CubeIndex(int dim) : k(dim) { check_dim(dim); }

std::vector<std::pair<std::uint32_t, std::uint32_t>> CubeIndex::edges() const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  const std::uint32_t n = std::uint32_t{1} << k;
  for (std::uint32_t v = 0; v < n; ++v) {
    for (int i = 0; i < k; ++i) {
      if (v & (std::uint32_t{1} << i)) continue;
      out.emplace_back(v, v | (std::uint32_t{1} << i));
    }
  }
  return out;
}

std::vector<std::array<std::uint32_t, 4>> CubeIndex::two_faces() const {
  std::vector<std::array<std::uint32_t, 4>> out;
  const std::uint32_t n = std::uint32_t{1} << k;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      const std::uint32_t bi = std::uint32_t{1} << i;
      const std::uint32_t bj = std::uint32_t{1} << j;
      for (std::uint32_t base = 0; base < n; ++base) {
        if (base & (bi | bj)) continue;
        out.push_back({base, base | bi, base | bj, base | bi | bj});
      }
    }
  }
  return out;
}

std::vector<GroupElement> spider_map(const FiniteAbelianGroup& g, int k,
                                     std::span<const GroupElement> coords) {
  check_dim(k);
  if (static_cast<int>(coords.size()) != k + 1)
    throw std::invalid_argument("spider_map: expected k+1 coordinates");
  std::vector<std::int64_t> idx(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) idx[i] = g.index_of(coords[i]);

  const std::int64_t vertices = std::int64_t{1} << k;
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(vertices));
  for (std::int64_t v = 0; v < vertices; ++v) {
    std::int64_t acc = idx[0];
    for (int i = 0; i < k; ++i) {
      if (v & (std::int64_t{1} << i)) acc = g.add_index(acc, idx[static_cast<std::size_t>(i) + 1]);
    }
    out.push_back(g.element_at(acc));
  }
  return out;
}

bool cube_membership(const FiniteAbelianGroup& g, int k,
                     std::span<const GroupElement> vertex_tuple) {
  check_dim(k);
  if (static_cast<std::int64_t>(vertex_tuple.size()) != (std::int64_t{1} << k))
    throw std::invalid_argument("cube_membership: expected 2^k vertices");
  std::vector<std::int64_t> idx(vertex_tuple.size());
  for (std::size_t i = 0; i < vertex_tuple.size(); ++i) idx[i] = g.index_of(vertex_tuple[i]);

  for (const auto& face : CubeIndex(k).two_faces()) {
    const std::int64_t p = idx[face[0]], q = idx[face[1]], r = idx[face[2]], s = idx[face[3]];
    // a_p + a_s = a_q + a_r
    if (g.add_index(p, s) != g.add_index(q, r)) return false;
  }
  return true;
}

cplx tilde_form(std::span<const GroupFunction> fs, int k) {
  check_dim(k);
  const std::int64_t vertices = std::int64_t{1} << k;
  if (static_cast<std::int64_t>(fs.size()) != vertices)
    throw std::invalid_argument("tilde_form: expected 2^k functions");
  const FiniteAbelianGroup& g = fs[0].group;
  for (const GroupFunction& f : fs) {
    validate(f);
    if (!(f.group == g)) throw std::invalid_argument("tilde_form: group mismatch");
  }
  const std::int64_t n = g.order();
  const std::int64_t total = ipow(n, k + 1);

  // Gray-code step table: after visiting mask gray(j-1), toggling direction
  // bit(j) reaches gray(j). Precomputed once.
  std::vector<int> toggle_dir(static_cast<std::size_t>(vertices));
  std::vector<std::uint32_t> gray(static_cast<std::size_t>(vertices));
  for (std::int64_t j = 0; j < vertices; ++j)
    gray[static_cast<std::size_t>(j)] = static_cast<std::uint32_t>(j ^ (j >> 1));
  for (std::int64_t j = 1; j < vertices; ++j)
    toggle_dir[static_cast<std::size_t>(j)] = std::countr_zero(static_cast<std::uint64_t>(j));

  const cplx total_sum = tree_reduce<cplx>(total, [&](std::int64_t flat) {
    // decode spider coordinates, a_0 slowest
    std::array<std::int64_t, 25> a{};
    std::int64_t rest = flat;
    for (int i = k; i >= 0; --i) {
      a[static_cast<std::size_t>(i)] = rest % n;
      rest /= n;
    }
    std::array<std::int64_t, 25> a_neg{};
    for (int i = 1; i <= k; ++i)
      a_neg[static_cast<std::size_t>(i)] = g.neg_index(a[static_cast<std::size_t>(i)]);

    std::int64_t cur = a[0];
    cplx prod = fs[0][cur];
    for (std::int64_t j = 1; j < vertices; ++j) {
      const int dir = toggle_dir[static_cast<std::size_t>(j)];
      const std::uint32_t mask = gray[static_cast<std::size_t>(j)];
      const bool turned_on = (mask >> dir) & 1u;
      cur = g.add_index(cur, turned_on ? a[static_cast<std::size_t>(dir) + 1]
                                       : a_neg[static_cast<std::size_t>(dir) + 1]);
      prod *= fs[mask][cur];
    }
    return prod;
  });
  return total_sum / static_cast<double>(total);
}

void validate_descriptor(const FiniteAbelianGroup& g, const AutomorphismDescriptor& s) {
  if (const auto* t = std::get_if<Translation>(&s)) {
    if (t->by < 0 || t->by >= g.order())
      throw std::invalid_argument("descriptor: translation index out of range");
    return;
  }
  const auto& p = std::get<PointPermutation>(s);
  if (static_cast<std::int64_t>(p.table.size()) != g.order())
    throw std::invalid_argument("descriptor: permutation table length != group order");
  std::vector<char> seen(p.table.size(), 0);
  for (std::int64_t v : p.table) {
    if (v < 0 || v >= g.order() || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("descriptor: table is not a bijection");
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

namespace {

// Forward point map of the descriptor. A translation descriptor c moves the
// point x to x - c, so that the induced function action is shift(f, c).
std::vector<std::int64_t> as_point_map(const FiniteAbelianGroup& g,
                                       const AutomorphismDescriptor& s) {
  std::vector<std::int64_t> table(static_cast<std::size_t>(g.order()));
  if (const auto* t = std::get_if<Translation>(&s)) {
    for (std::int64_t x = 0; x < g.order(); ++x)
      table[static_cast<std::size_t>(x)] = g.sub_index(x, t->by);
  } else {
    table = std::get<PointPermutation>(s).table;
  }
  return table;
}

}  // namespace

AutomorphismDescriptor descriptor_inverse(const FiniteAbelianGroup& g,
                                          const AutomorphismDescriptor& s) {
  validate_descriptor(g, s);
  if (const auto* t = std::get_if<Translation>(&s)) return Translation{g.neg_index(t->by)};
  const auto table = std::get<PointPermutation>(s).table;
  std::vector<std::int64_t> inv(table.size());
  for (std::size_t x = 0; x < table.size(); ++x)
    inv[static_cast<std::size_t>(table[x])] = static_cast<std::int64_t>(x);
  return PointPermutation{std::move(inv)};
}

AutomorphismDescriptor descriptor_compose(const FiniteAbelianGroup& g,
                                          const AutomorphismDescriptor& a,
                                          const AutomorphismDescriptor& b) {
  validate_descriptor(g, a);
  validate_descriptor(g, b);
  if (std::holds_alternative<Translation>(a) && std::holds_alternative<Translation>(b)) {
    return Translation{
        g.add_index(std::get<Translation>(a).by, std::get<Translation>(b).by)};
  }
  const auto ta = as_point_map(g, a);
  const auto tb = as_point_map(g, b);
  std::vector<std::int64_t> out(ta.size());
  for (std::size_t x = 0; x < out.size(); ++x)
    out[x] = ta[static_cast<std::size_t>(tb[x])];
  return PointPermutation{std::move(out)};
}

AutomorphismDescriptor descriptor_commutator(const FiniteAbelianGroup& g,
                                             const AutomorphismDescriptor& s1,
                                             const AutomorphismDescriptor& s2) {
  const auto i1 = descriptor_inverse(g, s1);
  const auto i2 = descriptor_inverse(g, s2);
  return descriptor_compose(g, descriptor_compose(g, s1, s2), descriptor_compose(g, i1, i2));
}

namespace {

GroupFunction apply_descriptor(const GroupFunction& f, const AutomorphismDescriptor& s) {
  if (const auto* t = std::get_if<Translation>(&s)) return shift(f, t->by);
  const auto& table = std::get<PointPermutation>(s).table;
  GroupFunction out{f.group, std::vector<cplx>(f.values.size())};
  // f -> f o pi^{-1}: the value at y moves to pi(y)
  for (std::int64_t y = 0; y < f.size(); ++y) out[table[static_cast<std::size_t>(y)]] = f[y];
  return out;
}

}  // namespace

std::vector<GroupFunction> apply_face_action(const FaceAction& action,
                                             std::span<const GroupFunction> fs, int dim) {
  check_dim(dim);
  const std::int64_t vertices = std::int64_t{1} << dim;
  if (static_cast<std::int64_t>(fs.size()) != vertices)
    throw std::invalid_argument("apply_face_action: expected 2^dim functions");
  validate_descriptor(fs[0].group, action.sigma);
  std::vector<char> in_t(static_cast<std::size_t>(vertices), 0);
  for (std::uint32_t v : action.slots) {
    if (static_cast<std::int64_t>(v) >= vertices)
      throw std::invalid_argument("apply_face_action: slot mask out of range");
    in_t[v] = 1;
  }
  std::vector<GroupFunction> out;
  out.reserve(fs.size());
  for (std::int64_t v = 0; v < vertices; ++v) {
    out.push_back(in_t[static_cast<std::size_t>(v)]
                      ? apply_descriptor(fs[static_cast<std::size_t>(v)], action.sigma)
                      : fs[static_cast<std::size_t>(v)]);
  }
  return out;
}

bool commutator_check(const FiniteAbelianGroup& g, int dim, const Edge& e1, const Edge& e2,
                      const AutomorphismDescriptor& s1, const AutomorphismDescriptor& s2) {
  check_dim(dim);
  const std::uint32_t vertices = std::uint32_t{1} << dim;
  auto check_edge = [&](const Edge& e) {
    if (e.v1 >= vertices || e.v2 >= vertices || std::popcount(e.v1 ^ e.v2) != 1)
      throw std::invalid_argument("commutator_check: not an edge of the cube");
  };
  check_edge(e1);
  check_edge(e2);

  std::vector<std::uint32_t> shared;
  for (std::uint32_t v : {e1.v1, e1.v2}) {
    if (v == e2.v1 || v == e2.v2) shared.push_back(v);
  }
  if (shared.size() != 1)
    throw std::invalid_argument("commutator_check: edges must intersect in exactly one vertex");
  const std::uint32_t w = shared[0];

  validate_descriptor(g, s1);
  validate_descriptor(g, s2);
  const FaceAction l1{{e1.v1, e1.v2}, s1};
  const FaceAction l2{{e2.v1, e2.v2}, s2};
  const FaceAction l1_inv{{e1.v1, e1.v2}, descriptor_inverse(g, s1)};
  const FaceAction l2_inv{{e2.v1, e2.v2}, descriptor_inverse(g, s2)};
  const FaceAction expected{{w}, descriptor_commutator(g, s1, s2)};

  const GroupFunction ones = make_constant(g, cplx{1.0, 0.0});
  for (std::uint32_t slot = 0; slot < vertices; ++slot) {
    for (std::int64_t b = 0; b < g.order(); ++b) {
      std::vector<GroupFunction> tuple(vertices, ones);
      const std::int64_t basis[1] = {b};
      tuple[slot] = make_indicator(g, basis);

      auto got = apply_face_action(l2_inv, tuple, dim);
      got = apply_face_action(l1_inv, got, dim);
      got = apply_face_action(l2, got, dim);
      got = apply_face_action(l1, got, dim);
      const auto want = apply_face_action(expected, tuple, dim);

      for (std::uint32_t v = 0; v < vertices; ++v) {
        if (got[v].values != want[v].values) return false;
      }
    }
  }
  return true;
}

}  // namespace hofa
