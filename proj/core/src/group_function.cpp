#include "hofa/group_function.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hofa {

namespace {

// Unit-root tables per factor: roots[j][t] = exp(2 pi i t / n_j).
std::vector<std::vector<cplx>> root_tables(const FiniteAbelianGroup& g) {
  std::vector<std::vector<cplx>> roots(g.rank());
  for (std::size_t j = 0; j < g.rank(); ++j) {
    const std::int64_t n = g.factors()[j];
    roots[j].resize(static_cast<std::size_t>(n));
    for (std::int64_t t = 0; t < n; ++t) {
      roots[j][static_cast<std::size_t>(t)] =
          std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(n));
    }
  }
  return roots;
}

cplx character_value(const FiniteAbelianGroup& g, const std::vector<std::vector<cplx>>& roots,
                     const GroupElement& xi, const GroupElement& x) {
  cplx v{1.0, 0.0};
  for (std::size_t j = 0; j < g.rank(); ++j) {
    const std::int64_t n = g.factors()[j];
    const std::int64_t t = (static_cast<std::int64_t>(xi.residues[j]) * x.residues[j]) % n;
    v *= roots[j][static_cast<std::size_t>(t)];
  }
  return v;
}

}  // namespace

GroupFunction make_constant(const FiniteAbelianGroup& g, cplx value) {
  return GroupFunction{g, std::vector<cplx>(static_cast<std::size_t>(g.order()), value)};
}

GroupFunction make_zero(const FiniteAbelianGroup& g) { return make_constant(g, cplx{0.0, 0.0}); }

GroupFunction make_indicator(const FiniteAbelianGroup& g, std::span<const std::int64_t> set) {
  GroupFunction f = make_zero(g);
  for (std::int64_t i : set) {
    if (i < 0 || i >= g.order()) throw std::invalid_argument("indicator: index out of range");
    f[i] = cplx{1.0, 0.0};
  }
  return f;
}

void validate(const GroupFunction& f) {
  if (f.size() != f.group.order())
    throw std::invalid_argument("group function: value table length != group order");
}

bool same_group(const GroupFunction& f, const GroupFunction& g) { return f.group == g.group; }

bool is_unimodular(const GroupFunction& f, double tol) {
  for (const cplx& v : f.values) {
    if (std::abs(std::abs(v) - 1.0) > tol) return false;
  }
  return true;
}

cplx inner(const GroupFunction& f, const GroupFunction& g) {
  if (!same_group(f, g)) throw std::invalid_argument("inner: group mismatch");
  const std::int64_t n = f.size();
  const cplx s = tree_reduce<cplx>(n, [&](std::int64_t i) { return f[i] * std::conj(g[i]); });
  return s / static_cast<double>(n);
}

double l2_norm(const GroupFunction& f) {
  const std::int64_t n = f.size();
  const double s = tree_reduce<double>(n, [&](std::int64_t i) { return std::norm(f[i]); });
  return std::sqrt(s / static_cast<double>(n));
}

double sup_norm(const GroupFunction& f) {
  double m = 0.0;
  for (const cplx& v : f.values) m = std::max(m, std::abs(v));
  return m;
}

double sup_distance(const GroupFunction& f, const GroupFunction& g) {
  if (!same_group(f, g)) throw std::invalid_argument("sup_distance: group mismatch");
  double m = 0.0;
  for (std::int64_t i = 0; i < f.size(); ++i) m = std::max(m, std::abs(f[i] - g[i]));
  return m;
}

GroupFunction pointwise_mul(const GroupFunction& f, const GroupFunction& g) {
  if (!same_group(f, g)) throw std::invalid_argument("pointwise_mul: group mismatch");
  GroupFunction out{f.group, f.values};
  for (std::int64_t i = 0; i < f.size(); ++i) out[i] = f[i] * g[i];
  return out;
}

GroupFunction conjugate(const GroupFunction& f) {
  GroupFunction out{f.group, f.values};
  for (cplx& v : out.values) v = std::conj(v);
  return out;
}

GroupFunction scale(const GroupFunction& f, cplx c) {
  GroupFunction out{f.group, f.values};
  for (cplx& v : out.values) v *= c;
  return out;
}

GroupFunction fn_add(const GroupFunction& f, const GroupFunction& g) {
  if (!same_group(f, g)) throw std::invalid_argument("fn_add: group mismatch");
  GroupFunction out{f.group, f.values};
  for (std::int64_t i = 0; i < f.size(); ++i) out[i] = f[i] + g[i];
  return out;
}

GroupFunction fn_sub(const GroupFunction& f, const GroupFunction& g) {
  if (!same_group(f, g)) throw std::invalid_argument("fn_sub: group mismatch");
  GroupFunction out{f.group, f.values};
  for (std::int64_t i = 0; i < f.size(); ++i) out[i] = f[i] - g[i];
  return out;
}

GroupFunction shift(const GroupFunction& f, std::int64_t t_index) {
  GroupFunction out{f.group, std::vector<cplx>(f.values.size())};
  for (std::int64_t x = 0; x < f.size(); ++x) out[x] = f[f.group.add_index(x, t_index)];
  return out;
}

GroupFunction shift(const GroupFunction& f, const GroupElement& t) {
  return shift(f, f.group.index_of(t));
}

GroupFunction delta(const GroupFunction& f, std::int64_t t_index) {
  GroupFunction out{f.group, std::vector<cplx>(f.values.size())};
  for (std::int64_t x = 0; x < f.size(); ++x)
    out[x] = f[f.group.add_index(x, t_index)] * std::conj(f[x]);
  return out;
}

GroupFunction delta(const GroupFunction& f, const GroupElement& t) {
  return delta(f, f.group.index_of(t));
}

GroupFunction linear_character(const FiniteAbelianGroup& g, const GroupElement& xi) {
  if (!g.contains(xi)) throw std::invalid_argument("linear_character: xi not in group");
  const auto roots = root_tables(g);
  GroupFunction out{g, std::vector<cplx>(static_cast<std::size_t>(g.order()))};
  for (std::int64_t x = 0; x < g.order(); ++x)
    out[x] = character_value(g, roots, xi, g.element_at(x));
  return out;
}

GroupFunction linear_character(const FiniteAbelianGroup& g, std::int64_t xi_index) {
  return linear_character(g, g.element_at(xi_index));
}

GroupFunction fourier(const GroupFunction& f) {
  validate(f);
  const FiniteAbelianGroup& g = f.group;
  const auto roots = root_tables(g);
  const std::int64_t n = g.order();
  GroupFunction out{g, std::vector<cplx>(static_cast<std::size_t>(n))};
  std::vector<GroupElement> elems;
  elems.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) elems.push_back(g.element_at(i));
  for (std::int64_t xi = 0; xi < n; ++xi) {
    const GroupElement& e_xi = elems[static_cast<std::size_t>(xi)];
    const cplx s = tree_reduce<cplx>(n, [&](std::int64_t x) {
      return f[x] * std::conj(character_value(g, roots, e_xi, elems[static_cast<std::size_t>(x)]));
    });
    out[xi] = s / static_cast<double>(n);
  }
  return out;
}

GroupFunction inverse_fourier(const GroupFunction& spectrum) {
  validate(spectrum);
  const FiniteAbelianGroup& g = spectrum.group;
  const auto roots = root_tables(g);
  const std::int64_t n = g.order();
  GroupFunction out{g, std::vector<cplx>(static_cast<std::size_t>(n))};
  std::vector<GroupElement> elems;
  elems.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) elems.push_back(g.element_at(i));
  for (std::int64_t x = 0; x < n; ++x) {
    const GroupElement& e_x = elems[static_cast<std::size_t>(x)];
    out[x] = tree_reduce<cplx>(n, [&](std::int64_t xi) {
      return spectrum[xi] * character_value(g, roots, elems[static_cast<std::size_t>(xi)], e_x);
    });
  }
  return out;
}

}  // namespace hofa
