#include "hofa/partition.hpp"

#include <cmath>
#include <stdexcept>

namespace hofa {

namespace {

// Renumbers labels by first occurrence in element-index order.
std::pair<std::vector<std::int32_t>, std::int32_t> canonicalize(
    std::span<const std::int32_t> raw) {
  std::vector<std::int32_t> out(raw.size());
  std::vector<std::int32_t> remap;
  std::int32_t next = 0;
  // raw labels may be arbitrary integers >= 0; remap by first occurrence
  std::vector<std::int32_t> seen(raw.size(), -1);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const std::int32_t l = raw[i];
    if (l < 0 || static_cast<std::size_t>(l) >= raw.size())
      throw std::invalid_argument("partition: label out of range");
    if (seen[static_cast<std::size_t>(l)] < 0) {
      seen[static_cast<std::size_t>(l)] = next++;
    }
    out[i] = seen[static_cast<std::size_t>(l)];
  }
  (void)remap;
  return {std::move(out), next};
}

}  // namespace

Partition Partition::trivial(const FiniteAbelianGroup& g) {
  std::vector<std::int32_t> labels(static_cast<std::size_t>(g.order()), 0);
  return from_labels(g, labels);
}

Partition Partition::discrete(const FiniteAbelianGroup& g) {
  std::vector<std::int32_t> labels(static_cast<std::size_t>(g.order()));
  for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = static_cast<std::int32_t>(i);
  return from_labels(g, labels);
}

Partition Partition::from_labels(const FiniteAbelianGroup& g,
                                 std::span<const std::int32_t> labels) {
  if (static_cast<std::int64_t>(labels.size()) != g.order())
    throw std::invalid_argument("partition: label table length != group order");
  auto [canon, count] = canonicalize(labels);
  Partition p;
  p.group_ = g;
  p.labels_ = std::move(canon);
  p.cell_count_ = count;
  return p;
}

Partition Partition::cosets(const FiniteAbelianGroup& g,
                            std::span<const std::int64_t> subgroup) {
  if (!is_subgroup(g, subgroup)) throw std::invalid_argument("partition: not a subgroup");
  std::vector<std::int32_t> labels(static_cast<std::size_t>(g.order()), -1);
  std::int32_t next = 0;
  for (std::int64_t rep = 0; rep < g.order(); ++rep) {
    if (labels[static_cast<std::size_t>(rep)] >= 0) continue;
    for (std::int64_t h : subgroup)
      labels[static_cast<std::size_t>(g.add_index(rep, h))] = next;
    ++next;
  }
  return from_labels(g, labels);
}

std::vector<std::vector<std::int64_t>> Partition::cells() const {
  std::vector<std::vector<std::int64_t>> out(static_cast<std::size_t>(cell_count_));
  for (std::size_t i = 0; i < labels_.size(); ++i)
    out[static_cast<std::size_t>(labels_[i])].push_back(static_cast<std::int64_t>(i));
  return out;
}

Partition join(const Partition& p1, const Partition& p2) {
  if (!(p1.group() == p2.group())) throw std::invalid_argument("join: group mismatch");
  const std::int64_t n = p1.group().order();
  std::vector<std::int32_t> pair_label(static_cast<std::size_t>(n));
  const std::int64_t c2 = p2.cell_count();
  for (std::int64_t i = 0; i < n; ++i) {
    pair_label[static_cast<std::size_t>(i)] =
        static_cast<std::int32_t>(p1.label_of(i) * c2 + p2.label_of(i));
  }
  // pair labels can exceed n; compress through a map keyed by pair value
  std::vector<std::int32_t> compressed(static_cast<std::size_t>(n));
  std::vector<std::int32_t> remap(static_cast<std::size_t>(p1.cell_count()) *
                                      static_cast<std::size_t>(c2),
                                  -1);
  std::int32_t next = 0;
  for (std::int64_t i = 0; i < n; ++i) {
    std::int32_t& slot = remap[static_cast<std::size_t>(pair_label[static_cast<std::size_t>(i)])];
    if (slot < 0) slot = next++;
    compressed[static_cast<std::size_t>(i)] = slot;
  }
  return Partition::from_labels(p1.group(), compressed);
}

GroupFunction conditional_expectation(const GroupFunction& f, const Partition& p) {
  validate(f);
  if (!(f.group == p.group()))
    throw std::invalid_argument("conditional_expectation: partition/group mismatch");
  const auto cells = p.cells();
  std::vector<cplx> cell_mean(cells.size());
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const auto& cell = cells[c];
    const cplx s = tree_reduce<cplx>(static_cast<std::int64_t>(cell.size()),
                                     [&](std::int64_t i) { return f[cell[static_cast<std::size_t>(i)]]; });
    cell_mean[c] = s / static_cast<double>(cell.size());
  }
  GroupFunction out{f.group, std::vector<cplx>(f.values.size())};
  for (std::int64_t i = 0; i < f.size(); ++i)
    out[i] = cell_mean[static_cast<std::size_t>(p.label_of(i))];
  return out;
}

GroupFunction coset_projection(const GroupFunction& f, std::span<const std::int64_t> subgroup) {
  validate(f);
  if (!is_subgroup(f.group, subgroup))
    throw std::invalid_argument("coset_projection: not a subgroup");
  const std::int64_t m = static_cast<std::int64_t>(subgroup.size());
  GroupFunction out{f.group, std::vector<cplx>(f.values.size())};
  for (std::int64_t x = 0; x < f.size(); ++x) {
    const cplx s = tree_reduce<cplx>(
        m, [&](std::int64_t j) { return f[f.group.add_index(x, subgroup[static_cast<std::size_t>(j)])]; });
    out[x] = s / static_cast<double>(m);
  }
  return out;
}

bool weak_orthogonality_check(const Partition& p1, const Partition& p2, double tol) {
  if (!(p1.group() == p2.group()))
    throw std::invalid_argument("weak_orthogonality_check: group mismatch");
  const std::int64_t n = p1.group().order();
  const std::size_t c1 = static_cast<std::size_t>(p1.cell_count());
  const std::size_t c2 = static_cast<std::size_t>(p2.cell_count());

  std::vector<double> size2(c2, 0.0);
  for (std::int64_t x = 0; x < n; ++x) size2[static_cast<std::size_t>(p2.label_of(x))] += 1.0;

  // E(1_C | P2) per cell C of P1 is mu(C cap D)/mu(D) on each cell D of P2;
  // it must be constant on every cell of P1.
  std::vector<double> value_on_d(c2);
  std::vector<double> first(c1);
  std::vector<char> seen(c1);
  for (std::size_t a = 0; a < c1; ++a) {
    std::fill(value_on_d.begin(), value_on_d.end(), 0.0);
    for (std::int64_t x = 0; x < n; ++x) {
      if (static_cast<std::size_t>(p1.label_of(x)) == a)
        value_on_d[static_cast<std::size_t>(p2.label_of(x))] += 1.0;
    }
    for (std::size_t d = 0; d < c2; ++d) value_on_d[d] /= size2[d];
    std::fill(seen.begin(), seen.end(), 0);
    for (std::int64_t x = 0; x < n; ++x) {
      const double v = value_on_d[static_cast<std::size_t>(p2.label_of(x))];
      const std::size_t cell = static_cast<std::size_t>(p1.label_of(x));
      if (!seen[cell]) {
        seen[cell] = 1;
        first[cell] = v;
      } else if (std::abs(first[cell] - v) > tol) {
        return false;
      }
    }
  }
  return true;
}

bool independence_check(const Partition& p1, const Partition& p2, double tol) {
  if (!(p1.group() == p2.group()))
    throw std::invalid_argument("independence_check: group mismatch");
  const std::int64_t n = p1.group().order();
  const std::size_t c1 = static_cast<std::size_t>(p1.cell_count());
  const std::size_t c2 = static_cast<std::size_t>(p2.cell_count());
  std::vector<std::int64_t> joint(c1 * c2, 0), m1(c1, 0), m2(c2, 0);
  for (std::int64_t x = 0; x < n; ++x) {
    const auto a = static_cast<std::size_t>(p1.label_of(x));
    const auto b = static_cast<std::size_t>(p2.label_of(x));
    ++joint[a * c2 + b];
    ++m1[a];
    ++m2[b];
  }
  const double dn = static_cast<double>(n);
  for (std::size_t a = 0; a < c1; ++a) {
    for (std::size_t b = 0; b < c2; ++b) {
      const double lhs = static_cast<double>(joint[a * c2 + b]) / dn;
      const double rhs =
          (static_cast<double>(m1[a]) / dn) * (static_cast<double>(m2[b]) / dn);
      if (std::abs(lhs - rhs) > tol) return false;
    }
  }
  return true;
}

bool relative_orthonormal_check(std::span<const GroupFunction> fs, const Partition& p,
                                double tol) {
  for (const GroupFunction& f : fs) {
    if (!(f.group == p.group()))
      throw std::invalid_argument("relative_orthonormal_check: group mismatch");
  }
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (std::size_t j = 0; j < fs.size(); ++j) {
      const GroupFunction prod = pointwise_mul(fs[i], conjugate(fs[j]));
      const GroupFunction e = conditional_expectation(prod, p);
      const cplx want = (i == j) ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
      for (const cplx& v : e.values) {
        if (std::abs(v - want) > tol) return false;
      }
    }
  }
  return true;
}

}  // namespace hofa
