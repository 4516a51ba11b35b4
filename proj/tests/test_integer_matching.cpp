#include <gtest/gtest.h>

#include "hypermatch/constructions.hpp"
#include "hypermatch/error.hpp"
#include "hypermatch/fractional_lp.hpp"
#include "hypermatch/integer_matching.hpp"
#include "support/oracles.hpp"

namespace hm = hypermatch;
using hm::Rational;

TEST(MaxMatching, Examples) {
  const auto k63 = hm::max_matching(hm::complete(6, 3));
  EXPECT_EQ(k63.matching.size(), 2U);
  EXPECT_TRUE(k63.optimal);
  EXPECT_EQ(hm::max_matching(hm::fixed_set_construction(9, 3, 3)).matching.size(), 2U);
  EXPECT_EQ(hm::max_matching(hm::parity_construction(6, 3).graph).matching.size(), 1U);
  EXPECT_EQ(hm::max_matching(hm::Hypergraph(5, 2)).matching.size(), 0U);
}

TEST(MaxMatching, Deterministic) {
  hm::testing::Rng rng(3);
  const auto g = hm::testing::random_hypergraph(rng, 9, 3, 0.4);
  const auto a = hm::max_matching(g);
  const auto b = hm::max_matching(g);
  EXPECT_EQ(a.matching.edges, b.matching.edges);
  EXPECT_TRUE(hm::is_matching(g, a.matching));
}

TEST(MaxMatching, AgreesWithExhaustiveSearch) {
  hm::testing::Rng rng(99);
  for (int trial = 0; trial < 80; ++trial) {
    const int k = hm::testing::uniform_int(rng, 2, 4);
    const int n = hm::testing::uniform_int(rng, k, 12);
    const auto g = hm::testing::random_hypergraph_with_edges(
        rng, n, k, static_cast<std::size_t>(hm::testing::uniform_int(rng, 0, 20)));
    const auto oracle = hm::testing::brute_max_matching(g);
    for (bool lp : {true, false}) {
      const auto found = hm::max_matching(g, {lp});
      EXPECT_TRUE(hm::is_matching(g, found.matching));
      EXPECT_EQ(found.matching.size(), oracle) << hm::serialize(g);
    }
    EXPECT_LE(Rational(oracle), hm::max_fractional_matching(g).size);
  }
}

TEST(MaxMatching, MonotoneUnderEdgeInsertion) {
  hm::testing::Rng rng(1234);
  for (int trial = 0; trial < 20; ++trial) {
    const int k = hm::testing::uniform_int(rng, 2, 3);
    const int n = hm::testing::uniform_int(rng, k + 2, 10);
    auto all = hm::combinations(n, k);
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<hm::Edge> edges;
    std::size_t previous = 0;
    for (std::size_t i = 0; i < std::min<std::size_t>(all.size(), 25); ++i) {
      edges.push_back(all[i]);
      const auto now = hm::max_matching(hm::Hypergraph::build(n, k, edges)).matching.size();
      EXPECT_GE(now, previous);
      previous = now;
    }
  }
}

TEST(FindMatching, Examples) {
  const auto g = hm::complete(6, 2);
  const auto zero = hm::find_matching_of_size(g, 0);
  ASSERT_TRUE(zero.has_value());
  EXPECT_EQ(zero->size(), 0U);

  for (int k = 2; k <= 3; ++k) {
    for (int s = 2; s <= 3; ++s) {
      const int n = k * s;
      const auto h = hm::fixed_set_construction(n, k, s);
      EXPECT_FALSE(hm::find_matching_of_size(h, static_cast<std::size_t>(s)).has_value());
      const auto hit = hm::find_matching_of_size(h, static_cast<std::size_t>(s - 1));
      ASSERT_TRUE(hit.has_value());
      EXPECT_EQ(hit->size(), static_cast<std::size_t>(s - 1));
      EXPECT_TRUE(hm::is_matching(h, *hit));
    }
  }
  EXPECT_FALSE(hm::find_matching_of_size(g, 4).has_value());
}

TEST(Rounding, Examples) {
  const auto g = hm::complete(6, 3);
  std::vector<Rational> indicator(g.edge_count(), 0);
  indicator[*g.find_edge(std::vector<int>{0, 1, 2})] = 1;
  indicator[*g.find_edge(std::vector<int>{3, 4, 5})] = 1;
  const auto exact = hm::round_fractional(g, hm::make_matching(indicator), 1);
  EXPECT_EQ(exact.matching.size(), 2U);
  EXPECT_EQ(exact.scaled_size, 2);

  const auto uniform = hm::round_fractional(
      g, hm::make_matching(std::vector<Rational>(g.edge_count(), hm::make_rational(1, 10))), hm::make_rational(1, 2));
  EXPECT_EQ(uniform.matching.size(), 2U);
  EXPECT_EQ(uniform.scaled_size, 1);

  const auto cycle = hm::Hypergraph::build(5, 2, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  const auto r = hm::round_fractional(cycle, hm::make_matching(std::vector<Rational>(5, hm::make_rational(1, 2))), 1);
  EXPECT_EQ(r.matching.size(), 2U);
  EXPECT_EQ(r.scaled_size, hm::make_rational(5, 2));

  EXPECT_THROW(hm::round_fractional(cycle, hm::make_matching(std::vector<Rational>(5, 1)), 1), hm::Error);
  EXPECT_THROW(hm::round_fractional(cycle, hm::make_matching(std::vector<Rational>(5, 0)), 0), hm::Error);
  EXPECT_THROW(hm::round_fractional(cycle, hm::make_matching(std::vector<Rational>(5, 0)), 2), hm::Error);
}

TEST(Rounding, NeverBeatsOptimum) {
  hm::testing::Rng rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const int k = hm::testing::uniform_int(rng, 2, 4);
    const int n = hm::testing::uniform_int(rng, k, 10);
    const auto g = hm::testing::random_hypergraph(rng, n, k, 0.4);
    const auto f = hm::max_fractional_matching(g);
    const auto r = hm::round_fractional(g, f, hm::make_rational(9, 10));
    EXPECT_TRUE(hm::is_matching(g, r.matching));
    EXPECT_LE(r.matching.size(), hm::max_matching(g).matching.size());
    EXPECT_EQ(r.scaled_size, f.size * hm::make_rational(9, 10));
  }
}
