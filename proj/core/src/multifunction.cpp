#include "hofa/multifunction.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <bit>
#include <cmath>

namespace hofa {

namespace {

std::int64_t checked_pow(std::int64_t base, int e, std::int64_t cap, const char* what) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > cap / base)
      throw SizeCapError(std::string(what) + ": " + std::to_string(base) + "^" +
                         std::to_string(e) + " exceeds cap " + std::to_string(cap));
    r *= base;
  }
  return r;
}

// 2^k-th root of the real part; tiny negative accumulation error clamps to
// zero, anything larger is an internal-consistency failure.
double root_pow2(cplx value, int k) {
  double re = value.real();
  if (re < 0.0) {
    if (re >= -1e-12 * std::max(1.0, std::abs(re))) {
      re = 0.0;
    } else {
      throw std::runtime_error("octahedral norm: norm power is negative beyond tolerance");
    }
  }
  if (re == 0.0) return 0.0;
  return std::pow(re, 1.0 / static_cast<double>(std::int64_t{1} << k));
}

}  // namespace

void validate(const MultiFunction& f) {
  if (f.arity < 1) throw std::invalid_argument("multifunction: arity must be >= 1");
  std::int64_t expected = 1;
  for (int i = 0; i < f.arity; ++i) expected *= f.group.order();
  if (f.size() != expected)
    throw std::invalid_argument("multifunction: value table length != order^arity");
}

MultiFunction sum_lift(const GroupFunction& f, int k, std::int64_t size_cap) {
  validate(f);
  if (k < 1) throw std::invalid_argument("sum_lift: k must be >= 1");
  const std::int64_t n = f.group.order();
  const std::int64_t total = checked_pow(n, k, size_cap, "sum_lift: order^k");

  MultiFunction out{f.group, k, std::vector<cplx>(static_cast<std::size_t>(total))};
  // odometer over (x_1, ..., x_k) with a running partial-sum stack
  std::vector<std::int64_t> coord(static_cast<std::size_t>(k), 0);
  std::vector<std::int64_t> prefix(static_cast<std::size_t>(k) + 1, 0);  // prefix[i] = x_1+...+x_i
  for (std::int64_t flat = 0; flat < total; ++flat) {
    out[flat] = f[prefix[static_cast<std::size_t>(k)]];
    // increment odometer, last coordinate fastest
    int pos = k - 1;
    while (pos >= 0) {
      coord[static_cast<std::size_t>(pos)]++;
      if (coord[static_cast<std::size_t>(pos)] < n) break;
      coord[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    for (int i = pos; i < k; ++i) {
      prefix[static_cast<std::size_t>(i) + 1] =
          f.group.add_index(prefix[static_cast<std::size_t>(i)],
                            coord[static_cast<std::size_t>(i)]);
    }
  }
  return out;
}

namespace {

double octahedral_brute(const MultiFunction& f, std::int64_t cap) {
  const std::int64_t n = f.group.order();
  const int k = f.arity;
  const std::int64_t total = checked_pow(n, 2 * k, cap, "octahedral norm: order^(2k)");
  const std::int64_t patterns = std::int64_t{1} << k;

  std::vector<std::int64_t> stride(static_cast<std::size_t>(k));
  stride[static_cast<std::size_t>(k - 1)] = 1;
  for (int i = k - 2; i >= 0; --i)
    stride[static_cast<std::size_t>(i)] = stride[static_cast<std::size_t>(i) + 1] * n;

  const cplx sum = tree_reduce<cplx>(total, [&](std::int64_t flat) {
    // decode x_{i, j}: direction-major, j fastest
    std::array<std::int64_t, 48> x{};
    std::int64_t rest = flat;
    for (int i = 2 * k - 1; i >= 0; --i) {
      x[static_cast<std::size_t>(i)] = rest % n;
      rest /= n;
    }
    cplx prod{1.0, 0.0};
    for (std::int64_t c = 0; c < patterns; ++c) {
      std::int64_t idx = 0;
      for (int i = 0; i < k; ++i) {
        const std::int64_t j = (c >> i) & 1;
        idx += x[static_cast<std::size_t>(2 * i + j)] * stride[static_cast<std::size_t>(i)];
      }
      const cplx v = f[idx];
      prod *= (std::popcount(static_cast<std::uint64_t>(c)) & 1) ? std::conj(v) : v;
    }
    return prod;
  });
  return root_pow2(sum / static_cast<double>(total), k);
}

// Multiplicative derivative in one direction: out(x) = G(x + t e_dir) conj(G(x)).
void direction_delta(const FiniteAbelianGroup& g, const std::vector<cplx>& in, int arity,
                     int dir, std::int64_t t, std::vector<cplx>& out) {
  const std::int64_t n = g.order();
  std::int64_t stride = 1;
  for (int i = arity - 1; i > dir; --i) stride *= n;
  const std::int64_t total = static_cast<std::int64_t>(in.size());
  for (std::int64_t idx = 0; idx < total; ++idx) {
    const std::int64_t xd = (idx / stride) % n;
    const std::int64_t shifted = idx + (g.add_index(xd, t) - xd) * stride;
    out[static_cast<std::size_t>(idx)] =
        in[static_cast<std::size_t>(shifted)] * std::conj(in[static_cast<std::size_t>(idx)]);
  }
}

// Folds directions 1..k-1 through multiplicative derivatives and closes the
// last direction with |mean|^2, so the accumulated quantity is a sum of
// squared magnitudes.
double octahedral_fold(const MultiFunction& f) {
  const std::int64_t n = f.group.order();
  const int k = f.arity;
  if (k == 1) {
    const cplx mean =
        tree_reduce<cplx>(n, [&](std::int64_t i) { return f[i]; }) / static_cast<double>(n);
    return std::abs(mean);
  }

  std::vector<std::vector<cplx>> scratch(static_cast<std::size_t>(k - 1));
  for (auto& buf : scratch) buf.resize(f.values.size());

  const std::int64_t prefixes = f.size() / n;
  double acc = 0.0;

  // recursion over shift tuples (t_1, ..., t_{k-1}) in lexicographic order
  auto inner = [&](const std::vector<cplx>& g_buf) {
    return tree_reduce<double>(prefixes, [&](std::int64_t p) {
      const cplx block =
          detail::tree_sum_range<cplx>(p * n, (p + 1) * n,
                                       [&](std::int64_t i) { return g_buf[static_cast<std::size_t>(i)]; });
      return std::norm(block / static_cast<double>(n));
    });
  };

  auto recurse = [&](auto&& self, int level, const std::vector<cplx>& current) -> void {
    if (level == k - 1) {
      acc += inner(current);
      return;
    }
    auto& buf = scratch[static_cast<std::size_t>(level)];
    for (std::int64_t t = 0; t < n; ++t) {
      direction_delta(f.group, current, k, level, t, buf);
      self(self, level + 1, buf);
    }
  };
  recurse(recurse, 0, f.values);

  double shift_tuples = 1.0;
  for (int i = 0; i < k - 1; ++i) shift_tuples *= static_cast<double>(n);
  const double mean = acc / (shift_tuples * static_cast<double>(prefixes));
  return root_pow2(cplx{mean, 0.0}, k);
}

}  // namespace

double octahedral_norm(const MultiFunction& f, OctahedralMethod method, std::int64_t brute_cap) {
  validate(f);
  switch (method) {
    case OctahedralMethod::kBruteForce:
      return octahedral_brute(f, brute_cap);
    case OctahedralMethod::kFold:
      return octahedral_fold(f);
  }
  throw std::invalid_argument("octahedral_norm: unknown method");
}

double gowers_norm(const GroupFunction& f, int k, GowersMethod method,
                   std::int64_t definition_cap) {
  validate(f);
  if (k < 1) throw std::invalid_argument("gowers_norm: k must be >= 1");
  if (method == GowersMethod::kDefinition) {
    checked_pow(f.group.order(), 2 * k, definition_cap, "gowers_norm definition path: order^(2k)");
    return octahedral_norm(sum_lift(f, k), OctahedralMethod::kBruteForce, definition_cap);
  }
  const std::int64_t vertices = std::int64_t{1} << k;
  const GroupFunction f_conj = conjugate(f);
  std::vector<GroupFunction> tuple;
  tuple.reserve(static_cast<std::size_t>(vertices));
  for (std::int64_t v = 0; v < vertices; ++v) {
    tuple.push_back((std::popcount(static_cast<std::uint64_t>(v)) & 1) ? f_conj : f);
  }
  return root_pow2(tilde_form(tuple, k), k);
}

bool quasirandom_test(const MultiFunction& f, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("quasirandom_test: eps must be positive");
  return octahedral_norm(f, OctahedralMethod::kFold) <= eps;
}

MultiFunction slice(const MultiFunction& f, std::int64_t x_index) {
  validate(f);
  if (f.arity < 2) throw std::invalid_argument("slice: arity must be >= 2");
  if (x_index < 0 || x_index >= f.group.order())
    throw std::invalid_argument("slice: element index out of range");
  const std::int64_t n = f.group.order();
  MultiFunction out{f.group, f.arity - 1,
                    std::vector<cplx>(static_cast<std::size_t>(f.size() / n))};
  for (std::int64_t p = 0; p < out.size(); ++p) out[p] = f[p * n + x_index];
  return out;
}

MultiFunction slice(const MultiFunction& f, const GroupElement& x) {
  return slice(f, f.group.index_of(x));
}

int slice_span_dim(const MultiFunction& f) {
  validate(f);
  if (f.arity < 2) throw std::invalid_argument("slice_span_dim: arity must be >= 2");
  const std::int64_t n = f.group.order();
  const std::int64_t cols = f.size() / n;
  Eigen::MatrixXcd m(n, cols);
  for (std::int64_t x = 0; x < n; ++x) {
    for (std::int64_t p = 0; p < cols; ++p) m(x, p) = f[p * n + x];
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  int rank = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
    if (svd.singularValues()(i) > 1e-9) ++rank;
  }
  return rank;
}

}  // namespace hofa
