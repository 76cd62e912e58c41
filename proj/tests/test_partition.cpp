#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hofa/partition.hpp"
#include "test_util.hpp"

using namespace hofa;

namespace {

// All cyclic subgroups of Z_n, one per divisor.
std::vector<std::vector<std::int64_t>> cyclic_subgroups(const FiniteAbelianGroup& g) {
  std::vector<std::vector<std::int64_t>> out;
  for (std::int64_t d = 0; d < g.order(); ++d) {
    const GroupElement gen = g.element_at(d);
    const GroupElement gens[] = {gen};
    auto sub = subgroup_closure(g, gens);
    if (std::find(out.begin(), out.end(), sub) == out.end()) out.push_back(std::move(sub));
  }
  return out;
}

}  // namespace

TEST_CASE("join") {
  const auto g = FiniteAbelianGroup::make({2, 2});
  const std::int32_t first_coord[] = {0, 0, 1, 1};
  const std::int32_t second_coord[] = {0, 1, 0, 1};
  const Partition p1 = Partition::from_labels(g, first_coord);
  const Partition p2 = Partition::from_labels(g, second_coord);

  CHECK(join(Partition::trivial(g), p1) == p1);
  CHECK(join(p1, p2) == Partition::discrete(g));
  CHECK(join(p1, Partition::discrete(g)) == Partition::discrete(g));
  CHECK(join(p1, p1) == p1);

  // commutative and associative up to canonical relabeling
  const auto g2 = FiniteAbelianGroup::make({12});
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const Partition a = testutil::random_partition(g2, seed, 4);
    const Partition b = testutil::random_partition(g2, seed + 50, 3);
    const Partition c = testutil::random_partition(g2, seed + 90, 5);
    CHECK(join(a, b) == join(b, a));
    CHECK(join(join(a, b), c) == join(a, join(b, c)));
    CHECK(join(a, b).cell_count() >= a.cell_count());
  }
}

TEST_CASE("coset projection") {
  const auto z4 = FiniteAbelianGroup::make({4});
  const std::int64_t zero_set[] = {0};
  const GroupFunction ind = make_indicator(z4, zero_set);

  const std::int64_t h[] = {0, 2};
  const GroupFunction t = coset_projection(ind, h);
  CHECK(std::abs(t[0] - cplx{0.5, 0}) < 1e-15);
  CHECK(std::abs(t[1]) < 1e-15);
  CHECK(std::abs(t[2] - cplx{0.5, 0}) < 1e-15);
  CHECK(std::abs(t[3]) < 1e-15);

  const std::int64_t whole[] = {0, 1, 2, 3};
  const GroupFunction avg = coset_projection(ind, whole);
  for (const cplx& v : avg.values) CHECK(std::abs(v - cplx{0.25, 0}) < 1e-15);

  const std::int64_t trivial[] = {0};
  CHECK(sup_distance(coset_projection(ind, trivial), ind) == 0.0);

  const std::int64_t not_closed[] = {0, 1};
  CHECK_THROWS_AS(coset_projection(ind, not_closed), std::invalid_argument);
}

TEST_CASE("T(f) equals conditional expectation onto the coset partition (Z_12)") {
  const auto z12 = FiniteAbelianGroup::make({12});
  const GroupFunction f = testutil::random_function(z12, 5);
  for (const auto& sub : cyclic_subgroups(z12)) {
    const GroupFunction via_avg = coset_projection(f, sub);
    const GroupFunction via_ce = conditional_expectation(f, Partition::cosets(z12, sub));
    CHECK(sup_distance(via_avg, via_ce) < 1e-12);
  }
}

TEST_CASE("coset projection is idempotent, self-adjoint, fixes coset-measurable functions") {
  const auto g = FiniteAbelianGroup::make({2, 6});
  const GroupElement gens[] = {g.element_at(3)};
  const auto sub = subgroup_closure(g, gens);
  const Partition cp = Partition::cosets(g, sub);

  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const GroupFunction f = testutil::random_function(g, seed);
    const GroupFunction h = testutil::random_function(g, seed + 40);
    const GroupFunction tf = coset_projection(f, sub);
    CHECK(sup_distance(coset_projection(tf, sub), tf) < 1e-12);
    CHECK(std::abs(inner(tf, h) - inner(f, coset_projection(h, sub))) < 1e-12);

    // fixed space = coset-partition-measurable functions
    const GroupFunction measurable = conditional_expectation(f, cp);
    CHECK(sup_distance(coset_projection(measurable, sub), measurable) < 1e-12);
    if (sup_distance(tf, f) > 1e-9) {
      CHECK(l2_norm(tf) < l2_norm(f));
    }
  }
}

TEST_CASE("weak orthogonality") {
  const auto z4 = FiniteAbelianGroup::make({4});

  // {{0},{1,2,3}} vs {{0,1},{2,3}}: E(1_{0} | P2) = (1/2, 1/2, 0, 0) is not
  // P1-measurable.
  const std::int32_t l1[] = {0, 1, 1, 1};
  const std::int32_t l2[] = {0, 0, 1, 1};
  const Partition p1 = Partition::from_labels(z4, l1);
  const Partition p2 = Partition::from_labels(z4, l2);
  const std::int64_t zero_set[] = {0};
  const GroupFunction e = conditional_expectation(make_indicator(z4, zero_set), p2);
  CHECK(std::abs(e[0] - cplx{0.5, 0}) < 1e-15);
  CHECK(std::abs(e[1] - cplx{0.5, 0}) < 1e-15);
  CHECK(std::abs(e[2]) < 1e-15);
  CHECK(std::abs(e[3]) < 1e-15);
  CHECK_FALSE(weak_orthogonality_check(p1, p2));

  CHECK(weak_orthogonality_check(p1, p1));

  // coset vs coset: true for every subgroup pair of Z_12
  const auto z12 = FiniteAbelianGroup::make({12});
  std::vector<Partition> coset_partitions;
  for (std::int64_t d = 0; d < 12; ++d) {
    const GroupElement gens[] = {z12.element_at(d)};
    coset_partitions.push_back(Partition::cosets(z12, subgroup_closure(z12, gens)));
  }
  for (const Partition& a : coset_partitions) {
    for (const Partition& b : coset_partitions) {
      CHECK(weak_orthogonality_check(a, b));
    }
  }
}

TEST_CASE("weak orthogonality is symmetric on random pairs") {
  const auto g = FiniteAbelianGroup::make({6});
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const Partition a = testutil::random_partition(g, seed, 4);
    const Partition b = testutil::random_partition(g, seed + 1000, 4);
    CHECK(weak_orthogonality_check(a, b) == weak_orthogonality_check(b, a));
  }
}

TEST_CASE("independence") {
  const auto g = FiniteAbelianGroup::make({2, 2});
  const std::int32_t first_coord[] = {0, 0, 1, 1};
  const std::int32_t second_coord[] = {0, 1, 0, 1};
  const Partition p1 = Partition::from_labels(g, first_coord);
  const Partition p2 = Partition::from_labels(g, second_coord);
  CHECK(independence_check(p1, p2));
  CHECK_FALSE(independence_check(p1, p1));
  CHECK(independence_check(p1, Partition::trivial(g)));
  CHECK(independence_check(Partition::trivial(g), Partition::trivial(g)));
}

TEST_CASE("relative orthonormal systems") {
  const auto z3 = FiniteAbelianGroup::make({3});
  std::vector<GroupFunction> chars;
  for (std::int64_t xi = 0; xi < 3; ++xi) chars.push_back(linear_character(z3, xi));
  CHECK(relative_orthonormal_check(chars, Partition::trivial(z3)));

  const std::vector<GroupFunction> duplicated{chars[1], chars[1]};
  CHECK_FALSE(relative_orthonormal_check(duplicated, Partition::trivial(z3)));

  const std::vector<GroupFunction> single{testutil::random_unimodular(z3, 9)};
  CHECK(relative_orthonormal_check(single, testutil::random_partition(z3, 4, 2)));
}

TEST_CASE("conditional expectation contraction with equality iff measurable") {
  const auto g = FiniteAbelianGroup::make({8});
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Partition p = testutil::random_partition(g, seed, 3);
    const GroupFunction f = testutil::random_function(g, seed + 7);
    const GroupFunction ef = conditional_expectation(f, p);
    CHECK(l2_norm(ef) <= l2_norm(f) + 1e-12);
    const bool measurable = sup_distance(f, ef) < 1e-9;
    const bool norm_equal = std::abs(l2_norm(ef) - l2_norm(f)) < 1e-9;
    CHECK(measurable == norm_equal);
  }
}
