#include "hofa/group.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hofa {

FiniteAbelianGroup FiniteAbelianGroup::make(std::vector<std::int64_t> factors,
                                            std::int64_t size_cap) {
  if (factors.empty()) throw std::invalid_argument("group: factor list is empty");
  std::int64_t order = 1;
  for (std::int64_t f : factors) {
    if (f < 1) throw std::invalid_argument("group: factor " + std::to_string(f) + " is not >= 1");
    if (order > size_cap / f)
      throw std::invalid_argument("group: order exceeds size cap " + std::to_string(size_cap));
    order *= f;
  }
  FiniteAbelianGroup g;
  g.factors_ = std::move(factors);
  g.order_ = order;
  g.strides_.assign(g.factors_.size(), 1);
  for (std::size_t j = g.factors_.size(); j-- > 1;)
    g.strides_[j - 1] = g.strides_[j] * g.factors_[j];
  return g;
}

GroupElement FiniteAbelianGroup::element_at(std::int64_t index) const {
  if (index < 0 || index >= order_) throw std::invalid_argument("group: element index out of range");
  GroupElement x;
  x.residues.resize(factors_.size());
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    x.residues[j] = static_cast<std::int32_t>((index / strides_[j]) % factors_[j]);
  }
  return x;
}

std::int64_t FiniteAbelianGroup::index_of(const GroupElement& x) const {
  if (!contains(x)) throw std::invalid_argument("group: element arity/range mismatch");
  std::int64_t idx = 0;
  for (std::size_t j = 0; j < factors_.size(); ++j) idx += x.residues[j] * strides_[j];
  return idx;
}

bool FiniteAbelianGroup::contains(const GroupElement& x) const {
  if (x.residues.size() != factors_.size()) return false;
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    if (x.residues[j] < 0 || x.residues[j] >= factors_[j]) return false;
  }
  return true;
}

std::int64_t FiniteAbelianGroup::add_index(std::int64_t a, std::int64_t b) const {
  std::int64_t out = 0;
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    const std::int64_t f = factors_[j];
    const std::int64_t s = strides_[j];
    const std::int64_t r = (a / s) % f + (b / s) % f;
    out += (r >= f ? r - f : r) * s;
  }
  return out;
}

std::int64_t FiniteAbelianGroup::sub_index(std::int64_t a, std::int64_t b) const {
  return add_index(a, neg_index(b));
}

std::int64_t FiniteAbelianGroup::neg_index(std::int64_t a) const {
  std::int64_t out = 0;
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    const std::int64_t f = factors_[j];
    const std::int64_t s = strides_[j];
    const std::int64_t r = (a / s) % f;
    out += (r == 0 ? 0 : f - r) * s;
  }
  return out;
}

GroupElement FiniteAbelianGroup::zero() const {
  GroupElement x;
  x.residues.assign(factors_.size(), 0);
  return x;
}

GroupElement FiniteAbelianGroup::add(const GroupElement& x, const GroupElement& y) const {
  if (!contains(x) || !contains(y))
    throw std::invalid_argument("group add: element arity/range mismatch");
  GroupElement out;
  out.residues.resize(factors_.size());
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    std::int64_t r = static_cast<std::int64_t>(x.residues[j]) + y.residues[j];
    if (r >= factors_[j]) r -= factors_[j];
    out.residues[j] = static_cast<std::int32_t>(r);
  }
  return out;
}

GroupElement FiniteAbelianGroup::neg(const GroupElement& x) const {
  if (!contains(x)) throw std::invalid_argument("group neg: element arity/range mismatch");
  GroupElement out;
  out.residues.resize(factors_.size());
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    out.residues[j] =
        static_cast<std::int32_t>(x.residues[j] == 0 ? 0 : factors_[j] - x.residues[j]);
  }
  return out;
}

GroupElement sum_map(const FiniteAbelianGroup& g, std::span<const GroupElement> xs) {
  if (xs.empty()) throw std::invalid_argument("sum_map: empty tuple");
  GroupElement acc = g.zero();
  for (const GroupElement& x : xs) acc = g.add(acc, x);
  return acc;
}

std::vector<std::int64_t> subgroup_closure(const FiniteAbelianGroup& g,
                                           std::span<const GroupElement> generators) {
  std::vector<std::int64_t> gens;
  gens.reserve(generators.size());
  for (const GroupElement& x : generators) gens.push_back(g.index_of(x));

  std::vector<char> in_set(static_cast<std::size_t>(g.order()), 0);
  in_set[0] = 1;
  std::vector<std::int64_t> frontier{0};
  while (!frontier.empty()) {
    std::vector<std::int64_t> next;
    for (std::int64_t h : frontier) {
      for (std::int64_t gen : gens) {
        const std::int64_t s = g.add_index(h, gen);
        if (!in_set[static_cast<std::size_t>(s)]) {
          in_set[static_cast<std::size_t>(s)] = 1;
          next.push_back(s);
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::int64_t> out;
  for (std::int64_t i = 0; i < g.order(); ++i)
    if (in_set[static_cast<std::size_t>(i)]) out.push_back(i);
  return out;
}

bool is_subgroup(const FiniteAbelianGroup& g, std::span<const std::int64_t> sorted_indices) {
  if (sorted_indices.empty()) return false;
  if (!std::is_sorted(sorted_indices.begin(), sorted_indices.end())) return false;
  auto member = [&](std::int64_t idx) {
    return std::binary_search(sorted_indices.begin(), sorted_indices.end(), idx);
  };
  if (!member(0)) return false;
  for (std::int64_t a : sorted_indices) {
    if (a < 0 || a >= g.order()) return false;
    for (std::int64_t b : sorted_indices) {
      if (!member(g.add_index(a, b))) return false;
    }
  }
  return true;
}

std::vector<Coset> subgroup_cosets(const FiniteAbelianGroup& g,
                                   std::span<const GroupElement> generators) {
  const std::vector<std::int64_t> subgroup = subgroup_closure(g, generators);
  std::vector<char> covered(static_cast<std::size_t>(g.order()), 0);
  std::vector<Coset> cosets;
  for (std::int64_t rep = 0; rep < g.order(); ++rep) {
    if (covered[static_cast<std::size_t>(rep)]) continue;
    for (std::int64_t h : subgroup) covered[static_cast<std::size_t>(g.add_index(rep, h))] = 1;
    cosets.push_back(Coset{subgroup, g.element_at(rep)});
  }
  return cosets;
}

}  // namespace hofa
