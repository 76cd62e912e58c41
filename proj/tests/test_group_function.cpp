#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>

#include "hofa/partition.hpp"
#include "test_util.hpp"

using namespace hofa;

namespace {

GroupFunction quadratic_phase_z5() {
  const auto z5 = FiniteAbelianGroup::make({5});
  GroupFunction f = make_zero(z5);
  for (std::int64_t x = 0; x < 5; ++x) {
    f[x] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>((x * x) % 5) / 5.0);
  }
  return f;
}

}  // namespace

TEST_CASE("inner product") {
  const auto z5 = FiniteAbelianGroup::make({5});
  const GroupFunction c1 = linear_character(z5, 1);
  CHECK(std::abs(inner(c1, c1) - cplx{1, 0}) < 1e-12);
  CHECK(std::abs(inner(c1, linear_character(z5, 2))) < 1e-12);

  const auto z2 = FiniteAbelianGroup::make({2});
  const std::int64_t zero_set[] = {0};
  const GroupFunction ind = make_indicator(z2, zero_set);
  CHECK(std::abs(inner(ind, ind) - cplx{0.5, 0}) < 1e-15);

  CHECK_THROWS_AS(inner(c1, ind), std::invalid_argument);
}

TEST_CASE("shift and delta") {
  const auto z5 = FiniteAbelianGroup::make({5});
  const GroupFunction f = testutil::random_function(z5, 7);
  CHECK(sup_distance(shift(f, z5.zero()), f) == 0.0);

  // delta of a character is the constant chi(t)
  const GroupFunction chi = linear_character(z5, 3);
  for (std::int64_t t = 0; t < 5; ++t) {
    const GroupFunction d = delta(chi, t);
    for (const cplx& v : d.values) CHECK(std::abs(v - chi[t]) < 1e-12);
  }

  // delta(f, 0) = |f|^2
  const GroupFunction d0 = delta(f, 0);
  for (std::int64_t i = 0; i < f.size(); ++i)
    CHECK(std::abs(d0[i] - cplx{std::norm(f[i]), 0}) < 1e-12);

  // quadratic phase: delta(e(x^2/5), 1)(x) = e((2x+1)/5)
  const GroupFunction q = quadratic_phase_z5();
  const GroupFunction d = delta(q, 1);
  for (std::int64_t x = 0; x < 5; ++x) {
    const double expected = 2.0 * std::numbers::pi * static_cast<double>((2 * x + 1) % 5) / 5.0;
    CHECK(std::abs(d[x] - std::polar(1.0, expected)) < 1e-12);
  }
}

TEST_CASE("delta is multiplicative for unimodular inputs (exhaustive small)") {
  const auto g = FiniteAbelianGroup::make({2, 3});
  const GroupFunction f = testutil::random_unimodular(g, 3);
  const GroupFunction h = testutil::random_unimodular(g, 4);
  for (std::int64_t t = 0; t < g.order(); ++t) {
    const GroupFunction lhs = delta(pointwise_mul(f, h), t);
    const GroupFunction rhs = pointwise_mul(delta(f, t), delta(h, t));
    CHECK(sup_distance(lhs, rhs) < 1e-12);
  }
}

TEST_CASE("shift invariance of the pairing (exhaustive, order <= 16)") {
  for (const auto& factors : {std::vector<std::int64_t>{16}, {2, 8}, {4, 4}}) {
    const auto g = FiniteAbelianGroup::make(factors);
    const GroupFunction f = testutil::random_function(g, 21);
    const GroupFunction h = testutil::random_function(g, 22);
    const cplx base = inner(f, h);
    for (std::int64_t t = 0; t < g.order(); ++t) {
      CHECK(std::abs(inner(shift(f, t), shift(h, t)) - base) < 1e-12);
    }
  }
}

TEST_CASE("fourier transform") {
  const auto z2 = FiniteAbelianGroup::make({2});
  const std::int64_t zero_set[] = {0};
  const GroupFunction ind = make_indicator(z2, zero_set);
  const GroupFunction spec = fourier(ind);
  CHECK(std::abs(spec[0] - cplx{0.5, 0}) < 1e-12);
  CHECK(std::abs(spec[1] - cplx{0.5, 0}) < 1e-12);

  const auto z7 = FiniteAbelianGroup::make({7});
  const GroupFunction chi = linear_character(z7, 4);
  const GroupFunction chi_spec = fourier(chi);
  for (std::int64_t xi = 0; xi < 7; ++xi) {
    CHECK(std::abs(chi_spec[xi] - (xi == 4 ? cplx{1, 0} : cplx{0, 0})) < 1e-12);
  }
}

TEST_CASE("parseval and inversion on random input") {
  const auto z12 = FiniteAbelianGroup::make({12});
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const GroupFunction f = testutil::random_function(z12, seed);
    const GroupFunction spec = fourier(f);

    // Parseval, both sides brute force
    double lhs = 0.0;
    for (const cplx& v : spec.values) lhs += std::norm(v);
    double rhs = 0.0;
    for (const cplx& v : f.values) rhs += std::norm(v);
    rhs /= static_cast<double>(f.size());
    CHECK(std::abs(lhs - rhs) < 1e-9);

    CHECK(sup_distance(inverse_fourier(spec), f) < 1e-9);
  }
}

TEST_CASE("conditional expectation") {
  const auto z4 = FiniteAbelianGroup::make({4});
  const std::int64_t zero_set[] = {0};
  const GroupFunction ind = make_indicator(z4, zero_set);

  const GroupFunction mean = conditional_expectation(ind, Partition::trivial(z4));
  for (const cplx& v : mean.values) CHECK(std::abs(v - cplx{0.25, 0}) < 1e-15);

  CHECK(sup_distance(conditional_expectation(ind, Partition::discrete(z4)), ind) == 0.0);

  const std::int64_t sub[] = {0, 2};
  const GroupFunction proj = conditional_expectation(ind, Partition::cosets(z4, sub));
  CHECK(std::abs(proj[0] - cplx{0.5, 0}) < 1e-15);
  CHECK(std::abs(proj[1]) < 1e-15);
  CHECK(std::abs(proj[2] - cplx{0.5, 0}) < 1e-15);
  CHECK(std::abs(proj[3]) < 1e-15);
}

TEST_CASE("conditional expectation is an idempotent self-adjoint contraction") {
  const auto g = FiniteAbelianGroup::make({3, 4});
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Partition p = testutil::random_partition(g, seed, 5);
    const GroupFunction f = testutil::random_function(g, seed + 100);
    const GroupFunction h = testutil::random_function(g, seed + 200);

    const GroupFunction ef = conditional_expectation(f, p);
    CHECK(sup_distance(conditional_expectation(ef, p), ef) < 1e-12);
    CHECK(std::abs(inner(ef, h) - inner(f, conditional_expectation(h, p))) < 1e-12);
    CHECK(l2_norm(ef) <= l2_norm(f) + 1e-12);
    // fixes cell-constant functions
    CHECK(sup_distance(conditional_expectation(ef, p), ef) < 1e-12);
  }
}
