#include "hofa/decompose.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "hofa/multifunction.hpp"

namespace hofa {

GroupFunction term_function(const FiniteAbelianGroup& g, const TermLabel& label) {
  if (const auto* freq = std::get_if<FrequencyLabel>(&label))
    return linear_character(g, freq->xi);
  return phase_eval(std::get<PolynomialPhase>(label), g);
}

GroupFunction reconstruct(const DecompositionResult& r) {
  GroupFunction out = r.residual;
  for (const DecompositionTerm& term : r.terms) {
    out = fn_add(out, scale(term_function(r.residual.group, term.label), term.coefficient));
  }
  return out;
}

namespace {

bool label_less(const TermLabel& a, const TermLabel& b) {
  if (a.index() != b.index()) return a.index() < b.index();
  if (const auto* fa = std::get_if<FrequencyLabel>(&a)) {
    return fa->xi.residues < std::get<FrequencyLabel>(b).xi.residues;
  }
  return phase_less(std::get<PolynomialPhase>(a), std::get<PolynomialPhase>(b));
}

void sort_terms(std::vector<DecompositionTerm>& terms) {
  std::stable_sort(terms.begin(), terms.end(),
                   [](const DecompositionTerm& a, const DecompositionTerm& b) {
                     const double ma = std::abs(a.coefficient);
                     const double mb = std::abs(b.coefficient);
                     if (ma != mb) return ma > mb;
                     return label_less(a.label, b.label);
                   });
}

}  // namespace

DecompositionResult fourier_truncate(const GroupFunction& f, double delta) {
  validate(f);
  if (!(delta > 0.0)) throw std::invalid_argument("fourier_truncate: delta must be positive");
  const GroupFunction spectrum = fourier(f);
  DecompositionResult out;
  out.residual = f;
  for (std::int64_t xi = 0; xi < spectrum.size(); ++xi) {
    if (std::abs(spectrum[xi]) >= delta) {
      const GroupElement freq = f.group.element_at(xi);
      out.terms.push_back(DecompositionTerm{FrequencyLabel{freq}, spectrum[xi]});
      out.residual =
          fn_sub(out.residual, scale(linear_character(f.group, freq), spectrum[xi]));
    }
  }
  sort_terms(out.terms);
  out.iterations = 0;
  out.residual_gowers = gowers_norm(out.residual, 2, GowersMethod::kCube);
  return out;
}

DecompositionResult matching_pursuit(const GroupFunction& f, int k, double delta, int max_iter,
                                     std::int64_t dictionary_cap) {
  validate(f);
  if (!(delta > 0.0)) throw std::invalid_argument("matching_pursuit: delta must be positive");
  if (max_iter < 0) throw std::invalid_argument("matching_pursuit: max_iter must be >= 0");
  const auto pn = as_prime_power_group(f.group);
  if (!pn) throw std::invalid_argument("matching_pursuit: group is not Z_p^n, p odd prime");
  if (k < 1 || k - 1 >= pn->first)
    throw std::invalid_argument("matching_pursuit: need 1 <= k and k-1 < p");

  const PhaseDictionary dict = make_phase_dictionary(f.group, k - 1, dictionary_cap);
  const std::size_t atoms = dict.phases.size();

  DecompositionResult out;
  out.residual = f;
  std::vector<cplx> accumulated(atoms, cplx{0.0, 0.0});
  std::vector<char> selected(atoms, 0);

  for (;;) {
    if (out.iterations >= max_iter) {
      out.max_iter_exhausted = true;
      break;
    }
    std::size_t best = atoms;
    double best_mag = -1.0;
    cplx best_corr{0.0, 0.0};
    for (std::size_t i = 0; i < atoms; ++i) {
      const cplx c = inner(out.residual, dict.tables[i]);
      const double mag = std::abs(c);
      if (mag > best_mag ||
          (mag == best_mag && best < atoms && phase_less(dict.phases[i], dict.phases[best]))) {
        best = i;
        best_mag = mag;
        best_corr = c;
      }
    }
    if (best == atoms || best_mag < delta) break;
    out.residual = fn_sub(out.residual, scale(dict.tables[best], best_corr));
    accumulated[best] += best_corr;
    selected[best] = 1;
    ++out.iterations;
  }

  for (std::size_t i = 0; i < atoms; ++i) {
    if (selected[i]) out.terms.push_back(DecompositionTerm{dict.phases[i], accumulated[i]});
  }
  sort_terms(out.terms);
  out.residual_gowers = gowers_norm(out.residual, k, GowersMethod::kCube);
  return out;
}

RelativeGramSchmidtResult relative_gram_schmidt(std::span<const GroupFunction> fs,
                                                std::span<const GroupElement> shifts,
                                                const Partition& p) {
  const int d = static_cast<int>(fs.size());
  if (d == 0) throw std::invalid_argument("relative_gram_schmidt: empty input list");
  if (shifts.size() != fs.size())
    throw std::invalid_argument("relative_gram_schmidt: shifts/functions length mismatch");
  for (const GroupFunction& f : fs) {
    validate(f);
    if (!(f.group == p.group()))
      throw std::invalid_argument("relative_gram_schmidt: group mismatch");
  }
  const FiniteAbelianGroup& g = p.group();

  std::vector<GroupFunction> shifted;
  shifted.reserve(fs.size());
  for (int j = 0; j < d; ++j) shifted.push_back(shift(fs[static_cast<std::size_t>(j)], shifts[static_cast<std::size_t>(j)]));

  const auto cells = p.cells();
  RelativeGramSchmidtResult out;
  out.cell_in_domain.assign(cells.size(), 0);
  out.domain_indicator = make_zero(g);
  out.lambda.assign(static_cast<std::size_t>(d),
                    std::vector<GroupFunction>(static_cast<std::size_t>(d), make_zero(g)));
  out.outputs.assign(static_cast<std::size_t>(d), make_zero(g));

  for (std::size_t c = 0; c < cells.size(); ++c) {
    const auto& cell = cells[c];
    Eigen::MatrixXcd w(d, d);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j <= i; ++j) {
        const cplx s = tree_reduce<cplx>(static_cast<std::int64_t>(cell.size()), [&](std::int64_t m) {
          const std::int64_t y = cell[static_cast<std::size_t>(m)];
          return shifted[static_cast<std::size_t>(i)][y] *
                 std::conj(shifted[static_cast<std::size_t>(j)][y]);
        });
        const cplx v = s / static_cast<double>(cell.size());
        w(i, j) = v;
        w(j, i) = std::conj(v);
      }
    }
    if (std::abs(w.determinant()) <= 1e-9) continue;
    Eigen::LLT<Eigen::MatrixXcd> llt(w);
    if (llt.info() != Eigen::Success) continue;
    // lambda = L^{-1}, lower triangular, so that lambda W lambda* = I
    const Eigen::MatrixXcd lam =
        llt.matrixL().solve(Eigen::MatrixXcd::Identity(d, d));

    out.cell_in_domain[c] = 1;
    for (std::int64_t y : cell) out.domain_indicator[y] = cplx{1.0, 0.0};
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j <= i; ++j) {
        for (std::int64_t y : cell) out.lambda[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][y] = lam(i, j);
      }
      for (std::int64_t y : cell) {
        cplx acc{0.0, 0.0};
        for (int j = 0; j <= i; ++j)
          acc += lam(i, j) * shifted[static_cast<std::size_t>(j)][y];
        out.outputs[static_cast<std::size_t>(i)][y] = acc;
      }
    }
  }
  return out;
}

}  // namespace hofa
