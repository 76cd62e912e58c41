#include "hofa/phase.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace hofa {

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const {
  const auto da = std::accumulate(a.begin(), a.end(), std::int64_t{0});
  const auto db = std::accumulate(b.begin(), b.end(), std::int64_t{0});
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool is_odd_prime(std::int64_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

PolynomialPhase make_phase(std::int64_t p, int n,
                           std::map<Monomial, std::int64_t, MonomialLess> coeffs) {
  if (!is_odd_prime(p)) throw std::invalid_argument("phase: p must be an odd prime");
  if (n < 1) throw std::invalid_argument("phase: n must be >= 1");
  PolynomialPhase phi;
  phi.p = p;
  phi.n = n;
  for (auto& [mono, c] : coeffs) {
    if (static_cast<int>(mono.size()) != n)
      throw std::invalid_argument("phase: monomial arity mismatch");
    for (std::int32_t e : mono) {
      if (e < 0 || e > p - 1)
        throw std::invalid_argument("phase: exponent must lie in [0, p-1]");
    }
    const std::int64_t r = ((c % p) + p) % p;
    if (r != 0) phi.coeffs[mono] = r;
  }
  return phi;
}

int phase_degree(const PolynomialPhase& phi) {
  int deg = 0;
  for (const auto& [mono, c] : phi.coeffs) {
    (void)c;
    deg = std::max(deg, static_cast<int>(std::accumulate(mono.begin(), mono.end(), 0)));
  }
  return deg;
}

PolynomialPhase phase_mul(const PolynomialPhase& a, const PolynomialPhase& b) {
  if (a.p != b.p || a.n != b.n) throw std::invalid_argument("phase_mul: (p, n) mismatch");
  auto coeffs = a.coeffs;
  for (const auto& [mono, c] : b.coeffs) coeffs[mono] += c;
  return make_phase(a.p, a.n, std::move(coeffs));
}

bool phase_less(const PolynomialPhase& a, const PolynomialPhase& b) {
  if (a.p != b.p) return a.p < b.p;
  if (a.n != b.n) return a.n < b.n;
  auto ia = a.coeffs.begin();
  auto ib = b.coeffs.begin();
  MonomialLess less;
  for (; ia != a.coeffs.end() && ib != b.coeffs.end(); ++ia, ++ib) {
    if (less(ia->first, ib->first)) return true;
    if (less(ib->first, ia->first)) return false;
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return ia == a.coeffs.end() && ib != b.coeffs.end();
}

bool phase_equal(const PolynomialPhase& a, const PolynomialPhase& b) {
  return a.p == b.p && a.n == b.n && a.coeffs == b.coeffs;
}

std::optional<std::pair<std::int64_t, int>> as_prime_power_group(const FiniteAbelianGroup& g) {
  const std::int64_t p = g.factors().front();
  if (!is_odd_prime(p)) return std::nullopt;
  for (std::int64_t f : g.factors()) {
    if (f != p) return std::nullopt;
  }
  return std::make_pair(p, static_cast<int>(g.rank()));
}

namespace {

void require_group(const PolynomialPhase& phi, const FiniteAbelianGroup& g) {
  const auto pn = as_prime_power_group(g);
  if (!pn || pn->first != phi.p || pn->second != phi.n)
    throw std::invalid_argument("phase: group is not Z_p^n for the phase's (p, n)");
}

// Pascal triangle mod p for exponents < p.
std::vector<std::vector<std::int64_t>> binomials_mod(std::int64_t p) {
  std::vector<std::vector<std::int64_t>> c(static_cast<std::size_t>(p));
  for (std::size_t e = 0; e < c.size(); ++e) {
    c[e].assign(e + 1, 1);
    for (std::size_t j = 1; j < e; ++j)
      c[e][j] = (c[e - 1][j - 1] + c[e - 1][j]) % p;
  }
  return c;
}

}  // namespace

GroupFunction phase_eval(const PolynomialPhase& phi, const FiniteAbelianGroup& g) {
  require_group(phi, g);
  const std::int64_t p = phi.p;
  // power tables pow[r][e] = r^e mod p
  std::vector<std::vector<std::int64_t>> pow(static_cast<std::size_t>(p));
  for (std::int64_t r = 0; r < p; ++r) {
    auto& row = pow[static_cast<std::size_t>(r)];
    row.assign(static_cast<std::size_t>(p), 1);
    for (std::size_t e = 1; e < row.size(); ++e) row[e] = (row[e - 1] * r) % p;
  }
  std::vector<cplx> roots(static_cast<std::size_t>(p));
  for (std::int64_t v = 0; v < p; ++v) {
    roots[static_cast<std::size_t>(v)] =
        std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(v) / static_cast<double>(p));
  }
  GroupFunction out{g, std::vector<cplx>(static_cast<std::size_t>(g.order()))};
  for (std::int64_t i = 0; i < g.order(); ++i) {
    const GroupElement x = g.element_at(i);
    std::int64_t value = 0;
    for (const auto& [mono, c] : phi.coeffs) {
      std::int64_t term = c;
      for (int j = 0; j < phi.n; ++j) {
        term = (term * pow[static_cast<std::size_t>(x.residues[static_cast<std::size_t>(j)])]
                          [static_cast<std::size_t>(mono[static_cast<std::size_t>(j)])]) %
               p;
      }
      value = (value + term) % p;
    }
    out[i] = roots[static_cast<std::size_t>(value)];
  }
  return out;
}

PolynomialPhase phase_delta(const PolynomialPhase& phi, const GroupElement& t) {
  if (static_cast<int>(t.residues.size()) != phi.n)
    throw std::invalid_argument("phase_delta: shift arity mismatch");
  const std::int64_t p = phi.p;
  const auto binom = binomials_mod(p);
  // t-residue power tables
  std::vector<std::vector<std::int64_t>> tpow(static_cast<std::size_t>(phi.n));
  for (int j = 0; j < phi.n; ++j) {
    const std::int64_t r = ((t.residues[static_cast<std::size_t>(j)] % p) + p) % p;
    auto& row = tpow[static_cast<std::size_t>(j)];
    row.assign(static_cast<std::size_t>(p), 1);
    for (std::size_t e = 1; e < row.size(); ++e) row[e] = (row[e - 1] * r) % p;
  }

  std::map<Monomial, std::int64_t, MonomialLess> out;
  for (const auto& [mono, c] : phi.coeffs) {
    // expand prod_j (x_j + t_j)^{e_j} - prod_j x_j^{e_j}
    std::vector<Monomial> partial_mono{Monomial(static_cast<std::size_t>(phi.n), 0)};
    std::vector<std::int64_t> partial_coef{c};
    for (int j = 0; j < phi.n; ++j) {
      const std::int32_t e = mono[static_cast<std::size_t>(j)];
      std::vector<Monomial> next_mono;
      std::vector<std::int64_t> next_coef;
      for (std::size_t idx = 0; idx < partial_mono.size(); ++idx) {
        for (std::int32_t a = 0; a <= e; ++a) {
          Monomial m = partial_mono[idx];
          m[static_cast<std::size_t>(j)] = a;
          const std::int64_t factor =
              (binom[static_cast<std::size_t>(e)][static_cast<std::size_t>(a)] *
               tpow[static_cast<std::size_t>(j)][static_cast<std::size_t>(e - a)]) %
              p;
          next_mono.push_back(std::move(m));
          next_coef.push_back((partial_coef[idx] * factor) % p);
        }
      }
      partial_mono = std::move(next_mono);
      partial_coef = std::move(next_coef);
    }
    for (std::size_t idx = 0; idx < partial_mono.size(); ++idx) {
      out[partial_mono[idx]] = (out[partial_mono[idx]] + partial_coef[idx]) % p;
    }
    out[mono] = ((out[mono] - c) % p + p) % p;  // subtract the original monomial
  }
  return make_phase(phi.p, phi.n, std::move(out));
}

std::vector<Monomial> monomials_up_to(int n, int max_degree, std::int64_t p) {
  if (n < 1) throw std::invalid_argument("monomials: n must be >= 1");
  if (max_degree < 0 || max_degree > p - 1)
    throw std::invalid_argument("monomials: degree bound must lie in [0, p-1]");
  std::vector<Monomial> out;
  Monomial cur(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == n) {
      out.push_back(cur);
      return;
    }
    for (std::int32_t e = 0; e <= remaining; ++e) {
      cur[static_cast<std::size_t>(var)] = e;
      self(self, var + 1, remaining - e);
    }
    cur[static_cast<std::size_t>(var)] = 0;
  };
  rec(rec, 0, max_degree);
  std::sort(out.begin(), out.end(), MonomialLess{});
  return out;
}

namespace {

std::vector<PolynomialPhase> enumerate_over(std::int64_t p, int n,
                                            const std::vector<Monomial>& monos,
                                            std::int64_t cap) {
  double count = 1.0;
  for (std::size_t i = 0; i < monos.size(); ++i) {
    count *= static_cast<double>(p);
    if (count > static_cast<double>(cap))
      throw SizeCapError("enumerate_phases: p^(#monomials) exceeds cap " + std::to_string(cap));
  }
  std::vector<PolynomialPhase> out;
  out.reserve(static_cast<std::size_t>(count));
  std::vector<std::int64_t> coef(monos.size(), 0);
  for (;;) {
    std::map<Monomial, std::int64_t, MonomialLess> coeffs;
    for (std::size_t i = 0; i < monos.size(); ++i) {
      if (coef[i] != 0) coeffs[monos[i]] = coef[i];
    }
    out.push_back(make_phase(p, n, std::move(coeffs)));
    // odometer, last monomial fastest
    std::size_t pos = monos.size();
    while (pos > 0) {
      --pos;
      if (++coef[pos] < p) break;
      coef[pos] = 0;
      if (pos == 0) return out;
    }
    if (monos.empty()) return out;
  }
}

}  // namespace

std::vector<PolynomialPhase> enumerate_phases(std::int64_t p, int n, int max_degree,
                                              std::int64_t cap) {
  if (!is_odd_prime(p)) throw std::invalid_argument("enumerate_phases: p must be an odd prime");
  return enumerate_over(p, n, monomials_up_to(n, max_degree, p), cap);
}

std::vector<PolynomialPhase> dual_representatives(std::int64_t p, int n, int k,
                                                  std::int64_t cap) {
  if (!is_odd_prime(p)) throw std::invalid_argument("dual_representatives: p must be odd prime");
  std::vector<Monomial> exact;
  for (const Monomial& m : monomials_up_to(n, k, p)) {
    if (std::accumulate(m.begin(), m.end(), 0) == k) exact.push_back(m);
  }
  return enumerate_over(p, n, exact, cap);
}

PhaseDictionary make_phase_dictionary(const FiniteAbelianGroup& g, int max_degree,
                                      std::int64_t cap) {
  const auto pn = as_prime_power_group(g);
  if (!pn) throw std::invalid_argument("phase dictionary: group is not Z_p^n, p an odd prime");
  const auto [p, n] = *pn;
  std::vector<Monomial> nonconstant;
  for (const Monomial& m : monomials_up_to(n, max_degree, p)) {
    if (std::accumulate(m.begin(), m.end(), 0) > 0) nonconstant.push_back(m);
  }
  PhaseDictionary dict;
  dict.phases = enumerate_over(p, n, nonconstant, cap);
  dict.tables.reserve(dict.phases.size());
  for (const PolynomialPhase& phi : dict.phases) dict.tables.push_back(phase_eval(phi, g));
  return dict;
}

std::vector<std::pair<PolynomialPhase, cplx>> correlation_spectrum(
    const GroupFunction& f, const PhaseDictionary& family) {
  validate(f);
  std::vector<std::pair<PolynomialPhase, cplx>> out;
  out.reserve(family.phases.size());
  for (std::size_t i = 0; i < family.phases.size(); ++i) {
    out.emplace_back(family.phases[i], inner(f, family.tables[i]));
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    const double ma = std::abs(a.second);
    const double mb = std::abs(b.second);
    if (ma != mb) return ma > mb;
    return phase_less(a.first, b.first);
  });
  return out;
}

PhaseSpan PhaseSpan::build(const FiniteAbelianGroup& g, int max_degree, std::int64_t cap) {
  PhaseSpan span;
  span.group_ = g;
  const PhaseDictionary dict = make_phase_dictionary(g, max_degree, cap);
  const double drop_tol = 1e-10;
  for (const GroupFunction& atom : dict.tables) {
    if (span.is_full()) break;
    GroupFunction v = atom;
    for (int pass = 0; pass < 2; ++pass) {  // re-orthogonalize once for stability
      for (const GroupFunction& b : span.basis_) {
        v = fn_sub(v, scale(b, inner(v, b)));
      }
    }
    const double nrm = l2_norm(v);
    if (nrm > drop_tol) span.basis_.push_back(scale(v, cplx{1.0 / nrm, 0.0}));
  }
  return span;
}

GroupFunction PhaseSpan::project(const GroupFunction& f) const {
  if (!(f.group == group_)) throw std::invalid_argument("phase span: group mismatch");
  if (is_full()) return f;
  GroupFunction out = make_zero(group_);
  for (const GroupFunction& b : basis_) out = fn_add(out, scale(b, inner(f, b)));
  return out;
}

double PhaseSpan::residual(const GroupFunction& f) const {
  if (is_full()) return 0.0;
  return l2_norm(fn_sub(f, project(f)));
}

PrecocycleReport precocycle_check(const GroupFunction& f, int k, double tol) {
  validate(f);
  const auto pn = as_prime_power_group(f.group);
  if (!pn) throw std::invalid_argument("precocycle_check: group is not Z_p^n, p an odd prime");
  if (k < 1 || k > pn->first - 1)
    throw std::invalid_argument("precocycle_check: k must lie in [1, p-1]");

  PrecocycleReport report;
  report.unimodular = is_unimodular(f);
  const PhaseDictionary dict = make_phase_dictionary(f.group, k - 1);
  for (std::int64_t t = 0; t < f.group.order(); ++t) {
    const GroupFunction g_t = delta(f, t);
    std::size_t best = 0;
    double best_mag = -1.0;
    cplx best_corr{0.0, 0.0};
    for (std::size_t i = 0; i < dict.tables.size(); ++i) {
      const cplx c = inner(g_t, dict.tables[i]);
      if (std::abs(c) > best_mag) {
        best = i;
        best_mag = std::abs(c);
        best_corr = c;
      }
    }
    // distance to the best atom's line, computed on the complement vector to
    // avoid cancellation when the match is exact
    const double res = l2_norm(fn_sub(g_t, scale(dict.tables[best], best_corr)));
    report.max_residual = std::max(report.max_residual, res);
  }
  report.ok = report.unimodular && report.max_residual <= tol;
  return report;
}

}  // namespace hofa
