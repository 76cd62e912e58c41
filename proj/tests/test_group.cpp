#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hofa/group.hpp"
#include "hofa/group_function.hpp"
#include "test_util.hpp"

using namespace hofa;

TEST_CASE("make_group basics") {
  CHECK(FiniteAbelianGroup::make({2}).order() == 2);
  CHECK(FiniteAbelianGroup::make({2, 3}).order() == 6);

  const auto g = FiniteAbelianGroup::make({5, 1});
  CHECK(g.order() == 5);
  for (std::int64_t i = 0; i < g.order(); ++i) {
    CHECK(g.element_at(i).residues[1] == 0);
  }

  CHECK_THROWS_AS(FiniteAbelianGroup::make({}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteAbelianGroup::make({0, 3}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteAbelianGroup::make({-2}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteAbelianGroup::make({100000, 101}), std::invalid_argument);
  CHECK_NOTHROW(FiniteAbelianGroup::make({100000, 101}, std::int64_t{1} << 40));
}

TEST_CASE("index <-> residue bijection") {
  for (const auto& factors :
       {std::vector<std::int64_t>{7}, {2, 3}, {1, 5, 1}, {2, 2, 2}, {4, 9}}) {
    const auto g = FiniteAbelianGroup::make(factors);
    for (std::int64_t i = 0; i < g.order(); ++i) {
      CHECK(g.index_of(g.element_at(i)) == i);
    }
  }
}

TEST_CASE("add, zero, neg") {
  const auto z5 = FiniteAbelianGroup::make({5});
  CHECK(z5.add(z5.element_at(3), z5.element_at(4)) == z5.element_at(2));
  CHECK(z5.add(z5.element_at(3), z5.zero()) == z5.element_at(3));

  const auto g = FiniteAbelianGroup::make({2, 3});
  const GroupElement x{{1, 2}};
  CHECK(g.add(x, x) == GroupElement{{0, 1}});

  for (std::int64_t i = 0; i < g.order(); ++i) {
    CHECK(g.add(g.neg(g.element_at(i)), g.element_at(i)) == g.zero());
  }

  const GroupElement wrong_arity{{1}};
  CHECK_THROWS_AS(g.add(x, wrong_arity), std::invalid_argument);
  CHECK_THROWS_AS(g.add(x, GroupElement{{1, 7}}), std::invalid_argument);
}

TEST_CASE("add is commutative and associative (exhaustive, order <= 64)") {
  for (const auto& factors : {std::vector<std::int64_t>{8}, {3, 4}, {2, 2, 3}}) {
    const auto g = FiniteAbelianGroup::make(factors);
    const std::int64_t n = g.order();
    for (std::int64_t a = 0; a < n; ++a) {
      for (std::int64_t b = 0; b < n; ++b) {
        CHECK(g.add_index(a, b) == g.add_index(b, a));
        for (std::int64_t c = 0; c < n; ++c) {
          CHECK(g.add_index(g.add_index(a, b), c) == g.add_index(a, g.add_index(b, c)));
        }
      }
    }
  }
}

TEST_CASE("sum_map") {
  const auto z7 = FiniteAbelianGroup::make({7});
  const std::vector<GroupElement> xs{z7.element_at(1), z7.element_at(2), z7.element_at(3)};
  CHECK(sum_map(z7, xs) == z7.element_at(6));

  const std::vector<GroupElement> zero_sum{z7.element_at(1), z7.element_at(2), z7.element_at(4)};
  CHECK(sum_map(z7, zero_sum) == z7.zero());

  const std::vector<GroupElement> zeros(4, z7.zero());
  CHECK(sum_map(z7, zeros) == z7.zero());

  CHECK_THROWS_AS(sum_map(z7, std::span<const GroupElement>{}), std::invalid_argument);
}

TEST_CASE("subgroup cosets") {
  const auto z4 = FiniteAbelianGroup::make({4});

  const std::vector<GroupElement> gen2{z4.element_at(2)};
  const auto cosets = subgroup_cosets(z4, gen2);
  REQUIRE(cosets.size() == 2);
  CHECK(cosets[0].subgroup == std::vector<std::int64_t>{0, 2});
  CHECK(cosets[0].representative == z4.element_at(0));
  CHECK(cosets[1].representative == z4.element_at(1));

  const std::vector<GroupElement> gen1{z4.element_at(1)};
  CHECK(subgroup_cosets(z4, gen1).size() == 1);

  const auto singletons = subgroup_cosets(z4, std::span<const GroupElement>{});
  CHECK(singletons.size() == 4);
  for (const Coset& c : singletons) CHECK(c.subgroup == std::vector<std::int64_t>{0});
}

TEST_CASE("coset partition property over random generators") {
  auto r = testutil::rng(11);
  for (const auto& factors : {std::vector<std::int64_t>{12}, {2, 8}, {3, 3, 2}}) {
    const auto g = FiniteAbelianGroup::make(factors);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<GroupElement> gens;
      const int count = static_cast<int>(r() % 3);
      for (int i = 0; i < count; ++i)
        gens.push_back(g.element_at(static_cast<std::int64_t>(r() % static_cast<std::uint64_t>(g.order()))));
      const auto cosets = subgroup_cosets(g, gens);
      REQUIRE(!cosets.empty());
      const std::size_t h = cosets[0].subgroup.size();
      CHECK(static_cast<std::int64_t>(h * cosets.size()) == g.order());
      std::vector<char> covered(static_cast<std::size_t>(g.order()), 0);
      for (const Coset& c : cosets) {
        CHECK(c.subgroup.size() == h);
        CHECK(is_subgroup(g, c.subgroup));
        const std::int64_t rep = g.index_of(c.representative);
        for (std::int64_t s : c.subgroup) {
          const std::int64_t e = g.add_index(rep, s);
          CHECK(!covered[static_cast<std::size_t>(e)]);
          covered[static_cast<std::size_t>(e)] = 1;
          CHECK(e >= rep);  // representative is the minimal index in its coset
        }
      }
      for (char cov : covered) CHECK(cov == 1);
    }
  }
}

TEST_CASE("linear characters") {
  const auto z4 = FiniteAbelianGroup::make({4});
  const GroupFunction chi = linear_character(z4, 1);
  CHECK(std::abs(chi[0] - cplx{1, 0}) < 1e-12);
  CHECK(std::abs(chi[1] - cplx{0, 1}) < 1e-12);
  CHECK(std::abs(chi[2] - cplx{-1, 0}) < 1e-12);
  CHECK(std::abs(chi[3] - cplx{0, -1}) < 1e-12);

  const GroupFunction trivial = linear_character(z4, 0);
  for (const cplx& v : trivial.values) CHECK(std::abs(v - cplx{1, 0}) < 1e-12);

  // <chi_1, chi_2> on Z_3 by a direct three-term sum
  const auto z3 = FiniteAbelianGroup::make({3});
  const GroupFunction c1 = linear_character(z3, 1);
  const GroupFunction c2 = linear_character(z3, 2);
  cplx direct{0, 0};
  for (int x = 0; x < 3; ++x) direct += c1[x] * std::conj(c2[x]);
  direct /= 3.0;
  CHECK(std::abs(direct) < 1e-12);
  CHECK(std::abs(inner(c1, c2) - direct) < 1e-15);
}

TEST_CASE("character group law and orthonormality (exhaustive, order <= 36)") {
  for (const auto& factors : {std::vector<std::int64_t>{36}, {6, 6}, {2, 3, 5}}) {
    const auto g = FiniteAbelianGroup::make(factors);
    std::vector<GroupFunction> chars;
    for (std::int64_t xi = 0; xi < g.order(); ++xi) chars.push_back(linear_character(g, xi));

    for (std::int64_t xi = 0; xi < g.order(); ++xi) {
      for (std::int64_t eta = 0; eta < g.order(); ++eta) {
        const GroupFunction prod = pointwise_mul(chars[static_cast<std::size_t>(xi)],
                                                 chars[static_cast<std::size_t>(eta)]);
        const GroupFunction& sum_char = chars[static_cast<std::size_t>(g.add_index(xi, eta))];
        CHECK(sup_distance(prod, sum_char) < 1e-9);

        const cplx ip = inner(chars[static_cast<std::size_t>(xi)], chars[static_cast<std::size_t>(eta)]);
        CHECK(std::abs(ip - (xi == eta ? cplx{1, 0} : cplx{0, 0})) < 1e-12);
      }
    }
  }
}
