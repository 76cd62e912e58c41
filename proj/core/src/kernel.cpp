#include "hofa/kernel.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace hofa {

void validate(const Kernel& k) {
  if (static_cast<std::int64_t>(k.values.size()) != k.group.order() * k.group.order())
    throw std::invalid_argument("kernel: value table length != order^2");
}

Kernel make_zero_kernel(const FiniteAbelianGroup& g) {
  return Kernel{g, std::vector<cplx>(static_cast<std::size_t>(g.order() * g.order()))};
}

Kernel make_identity_kernel(const FiniteAbelianGroup& g) {
  Kernel k = make_zero_kernel(g);
  for (std::int64_t x = 0; x < g.order(); ++x)
    k.at(x, x) = cplx{static_cast<double>(g.order()), 0.0};
  return k;
}

Kernel outer_kernel(const GroupFunction& f, const GroupFunction& g) {
  if (!same_group(f, g)) throw std::invalid_argument("outer_kernel: group mismatch");
  Kernel k = make_zero_kernel(f.group);
  for (std::int64_t x = 0; x < f.size(); ++x) {
    for (std::int64_t y = 0; y < f.size(); ++y) k.at(x, y) = f[x] * std::conj(g[y]);
  }
  return k;
}

Kernel shift_invariant_kernel(const GroupFunction& h) {
  validate(h);
  Kernel k = make_zero_kernel(h.group);
  for (std::int64_t x = 0; x < h.size(); ++x) {
    for (std::int64_t y = 0; y < h.size(); ++y) k.at(x, y) = h[h.group.sub_index(y, x)];
  }
  return k;
}

Kernel compose(const Kernel& k1, const Kernel& k2) {
  validate(k1);
  validate(k2);
  if (!(k1.group == k2.group)) throw std::invalid_argument("compose: group mismatch");
  const std::int64_t n = k1.order();
  Kernel out = make_zero_kernel(k1.group);
  for (std::int64_t x = 0; x < n; ++x) {
    for (std::int64_t y = 0; y < n; ++y) {
      const cplx s =
          tree_reduce<cplx>(n, [&](std::int64_t z) { return k1.at(x, z) * k2.at(z, y); });
      out.at(x, y) = s / static_cast<double>(n);
    }
  }
  return out;
}

Kernel adjoint(const Kernel& k) {
  validate(k);
  Kernel out = make_zero_kernel(k.group);
  for (std::int64_t x = 0; x < k.order(); ++x) {
    for (std::int64_t y = 0; y < k.order(); ++y) out.at(x, y) = std::conj(k.at(y, x));
  }
  return out;
}

cplx hs_inner(const Kernel& k1, const Kernel& k2) {
  validate(k1);
  validate(k2);
  if (!(k1.group == k2.group)) throw std::invalid_argument("hs_inner: group mismatch");
  const std::int64_t total = static_cast<std::int64_t>(k1.values.size());
  const cplx s = tree_reduce<cplx>(total, [&](std::int64_t i) {
    return k1.values[static_cast<std::size_t>(i)] *
           std::conj(k2.values[static_cast<std::size_t>(i)]);
  });
  return s / static_cast<double>(total);
}

bool is_self_adjoint(const Kernel& k, double tol) {
  for (std::int64_t x = 0; x < k.order(); ++x) {
    for (std::int64_t y = 0; y < k.order(); ++y) {
      if (std::abs(k.at(x, y) - std::conj(k.at(y, x))) > tol) return false;
    }
  }
  return true;
}

namespace {

std::pair<std::int64_t, int> require_zpn(const FiniteAbelianGroup& g, int level,
                                         const char* what) {
  const auto pn = as_prime_power_group(g);
  if (!pn) throw std::invalid_argument(std::string(what) + ": group is not Z_p^n, p odd prime");
  if (level < 1 || level > pn->first - 1)
    throw std::invalid_argument(std::string(what) + ": level must lie in [1, p-1]");
  return *pn;
}

GroupFunction diagonal_section(const Kernel& k, std::int64_t x, std::int64_t y) {
  GroupFunction f{k.group, std::vector<cplx>(static_cast<std::size_t>(k.order()))};
  for (std::int64_t t = 0; t < k.order(); ++t)
    f[t] = k.at(k.group.add_index(x, t), k.group.add_index(y, t));
  return f;
}

}  // namespace

CkReport ck_membership(const Kernel& k, int level, double tol) {
  validate(k);
  require_zpn(k.group, level, "ck_membership");
  const PhaseSpan span = PhaseSpan::build(k.group, level - 1);
  CkReport report;
  if (span.is_full()) {
    report.ok = true;
    return report;
  }
  for (std::int64_t x = 0; x < k.order(); ++x) {
    for (std::int64_t y = 0; y < k.order(); ++y) {
      report.max_residual = std::max(report.max_residual, span.residual(diagonal_section(k, x, y)));
    }
  }
  report.ok = report.max_residual <= tol;
  return report;
}

namespace {

Kernel pair_kernel_impl(const GroupFunction& f, const GroupFunction& g, int level,
                        bool conjugate_second) {
  validate(f);
  validate(g);
  if (!same_group(f, g)) throw std::invalid_argument("pair_kernel: group mismatch");
  require_zpn(f.group, level, "pair_kernel");
  const PhaseSpan span = PhaseSpan::build(f.group, level - 1);
  const std::int64_t n = f.size();
  Kernel out = make_zero_kernel(f.group);
  GroupFunction section{f.group, std::vector<cplx>(static_cast<std::size_t>(n))};
  for (std::int64_t x = 0; x < n; ++x) {
    for (std::int64_t y = 0; y < n; ++y) {
      for (std::int64_t t = 0; t < n; ++t) {
        const cplx second = g[f.group.add_index(y, t)];
        section[t] = f[f.group.add_index(x, t)] * (conjugate_second ? std::conj(second) : second);
      }
      out.at(x, y) = span.project(section)[0];
    }
  }
  return out;
}

}  // namespace

Kernel pair_kernel(const GroupFunction& f, const GroupFunction& g, int level) {
  return pair_kernel_impl(f, g, level, false);
}

Kernel pair_kernel_hermitian(const GroupFunction& f, const GroupFunction& g, int level) {
  return pair_kernel_impl(f, g, level, true);
}

namespace {

bool table_less(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].real() != b[i].real()) return a[i].real() < b[i].real();
    if (a[i].imag() != b[i].imag()) return a[i].imag() < b[i].imag();
  }
  return false;
}

}  // namespace

std::vector<EigenSpace> spectral_decomposition(const Kernel& k, double self_adjoint_tol) {
  validate(k);
  if (!is_self_adjoint(k, self_adjoint_tol))
    throw std::invalid_argument("spectral_decomposition: kernel is not self-adjoint");
  const std::int64_t n = k.order();

  Eigen::MatrixXcd m(n, n);
  for (std::int64_t x = 0; x < n; ++x) {
    for (std::int64_t y = 0; y < n; ++y) m(x, y) = k.at(x, y);
  }
  m = (m + m.adjoint().eval()) / 2.0;  // remove sub-tolerance asymmetry
  m /= static_cast<double>(n);         // operator normalization

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("spectral_decomposition: eigensolver failed");

  struct Pair {
    double value;
    std::vector<cplx> table;
  };
  std::vector<Pair> pairs;
  double max_abs = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) max_abs = std::max(max_abs, std::abs(solver.eigenvalues()(i)));
  const double drop = 1e-10 * std::max(1.0, max_abs);
  const double scale = std::sqrt(static_cast<double>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    const double lambda = solver.eigenvalues()(i);
    if (std::abs(lambda) <= drop) continue;
    std::vector<cplx> table(static_cast<std::size_t>(n));
    for (Eigen::Index x = 0; x < n; ++x) table[static_cast<std::size_t>(x)] = scale * solver.eigenvectors()(x, i);
    pairs.push_back(Pair{lambda, std::move(table)});
  }
  std::stable_sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
    const double ma = std::abs(a.value), mb = std::abs(b.value);
    if (ma != mb) return ma > mb;
    if (a.value != b.value) return a.value > b.value;
    return table_less(a.table, b.table);
  });

  const double group_tol = 1e-9 * std::max(1.0, max_abs);
  std::vector<EigenSpace> out;
  for (auto& pr : pairs) {
    if (!out.empty() && std::abs(out.back().eigenvalue - pr.value) <= group_tol) {
      out.back().functions.push_back(GroupFunction{k.group, std::move(pr.table)});
    } else {
      EigenSpace space;
      space.eigenvalue = pr.value;
      space.functions.push_back(GroupFunction{k.group, std::move(pr.table)});
      out.push_back(std::move(space));
    }
  }
  for (EigenSpace& space : out) {
    std::stable_sort(space.functions.begin(), space.functions.end(),
                     [](const GroupFunction& a, const GroupFunction& b) {
                       return table_less(a.values, b.values);
                     });
  }
  return out;
}

std::vector<PolynomialPhase> planted_phase_recovery(const Kernel& k, int level,
                                                    std::int64_t dictionary_cap) {
  validate(k);
  require_zpn(k.group, level, "planted_phase_recovery");
  const PhaseDictionary dict = make_phase_dictionary(k.group, level, dictionary_cap);
  std::vector<PolynomialPhase> out;
  for (const EigenSpace& space : spectral_decomposition(k)) {
    for (const GroupFunction& f : space.functions) {
      const auto spectrum = correlation_spectrum(f, dict);
      out.push_back(spectrum.front().first);
    }
  }
  return out;
}

}  // namespace hofa
