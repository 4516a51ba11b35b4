#include <gtest/gtest.h>

#include <set>

#include "hypermatch/baranyai.hpp"
#include "hypermatch/combinatorics.hpp"
#include "hypermatch/error.hpp"

namespace hm = hypermatch;
using hm::Rational;

namespace {

// Independent check: every l-set exactly once, every matching a partition.
void expect_partition(const hm::Decomposition& d) {
  const int n = d.n;
  const int l = d.part_size;
  std::set<hm::Edge> seen;
  for (const auto& m : d.matchings) {
    std::vector<int> hit(static_cast<std::size_t>(n), 0);
    for (const auto& e : m) {
      ASSERT_EQ(static_cast<int>(e.size()), l);
      ASSERT_TRUE(std::is_sorted(e.begin(), e.end()));
      for (int v : e) ++hit[static_cast<std::size_t>(v)];
      EXPECT_TRUE(seen.insert(e).second);
    }
    for (int h : hit) EXPECT_EQ(h, 1);
  }
  EXPECT_EQ(seen.size(), hm::binomial(n, l));
  EXPECT_EQ(d.matchings.size(), hm::binomial(n - 1, l - 1));
}

}  // namespace

TEST(Decompose, Examples) {
  const auto a = hm::decompose(4, 2);
  EXPECT_EQ(a.matchings.size(), 3U);
  for (const auto& m : a.matchings) EXPECT_EQ(m.size(), 2U);
  const auto b = hm::decompose(6, 3);
  EXPECT_EQ(b.matchings.size(), 10U);
  const auto c = hm::decompose(6, 2);
  EXPECT_EQ(c.matchings.size(), 5U);
  for (const auto& m : c.matchings) EXPECT_EQ(m.size(), 3U);
  EXPECT_THROW(hm::decompose(7, 2), hm::Error);
  EXPECT_THROW(hm::decompose(4, 0), hm::Error);
}

TEST(Decompose, AllSmallCases) {
  int cases = 0;
  for (int l = 1; l <= 12; ++l) {
    for (int n = l; hm::binomial(n, l) <= 500; n += l) {
      const auto d = hm::decompose(n, l);
      EXPECT_TRUE(hm::is_valid_decomposition(d));
      expect_partition(d);
      ++cases;
    }
  }
  EXPECT_GT(cases, 20);
}

TEST(Decompose, ValidatorRejectsBrokenInput) {
  auto d = hm::decompose(6, 2);
  ASSERT_TRUE(hm::is_valid_decomposition(d));
  std::swap(d.matchings[0][0], d.matchings[1][0]);
  EXPECT_FALSE(hm::is_valid_decomposition(d));
  auto e = hm::decompose(4, 2);
  e.matchings.pop_back();
  EXPECT_FALSE(hm::is_valid_decomposition(e));
}

TEST(CrossEdges, Examples) {
  const auto empty = hm::uniform_cross_edges(8, 3, 2, hm::VertexSet::range(0, 4), 0);
  EXPECT_TRUE(empty.edges.empty());
  EXPECT_EQ(empty.target, 0U);

  const auto half = hm::uniform_cross_edges(8, 3, 2, hm::VertexSet::range(0, 4), hm::make_rational(1, 2));
  EXPECT_EQ(half.target, 8U);
  EXPECT_EQ(half.edges.size(), 16U);

  // l = 1: floor(eta * C(n - |S|, k - 1)) per vertex.
  const auto single = hm::uniform_cross_edges(9, 3, 1, hm::VertexSet::range(0, 3), hm::make_rational(1, 2));
  EXPECT_EQ(single.target, 7U);
}

TEST(CrossEdges, Preconditions) {
  const auto s = hm::VertexSet::range(0, 4);
  EXPECT_THROW(hm::uniform_cross_edges(8, 3, 3, s, hm::make_rational(1, 2)), hm::Error);  // |S| not in 3N
  EXPECT_THROW(hm::uniform_cross_edges(8, 3, 4, s, hm::make_rational(1, 2)), hm::Error);  // l > k
  EXPECT_THROW(hm::uniform_cross_edges(8, 3, 2, s, Rational(1)), hm::Error);
  EXPECT_THROW(hm::uniform_cross_edges(8, 3, 2, s, hm::make_rational(-1, 2)), hm::Error);
  EXPECT_THROW(hm::uniform_cross_edges(4, 4, 2, s, hm::make_rational(1, 2)), hm::Error);  // n - |S| < k - l
  // Target above the C(|S| - 1, l - 1) C(n - |S|, k - l) edges through a vertex.
  EXPECT_EQ(hm::cross_edge_target(8, 3, 2, 4, hm::make_rational(9, 10)), 14U);
  EXPECT_EQ(hm::cross_edge_capacity(8, 3, 2, 4), 12U);
  EXPECT_THROW(hm::uniform_cross_edges(8, 3, 2, s, hm::make_rational(9, 10)), hm::Error);
}

TEST(CrossEdges, GridWhereRealizable) {
  const std::vector<Rational> etas{0, hm::make_rational(1, 4), hm::make_rational(1, 2), hm::make_rational(3, 4), hm::make_rational(9, 10)};
  int built = 0;
  for (int n = 1; n <= 10; ++n) {
    for (int k = 1; k <= 4; ++k) {
      for (int l = 1; l <= k; ++l) {
        for (int s = l; s <= n; s += l) {
          if (n - s < k - l) continue;
          for (const auto& eta : etas) {
            if (hm::cross_edge_target(n, k, l, s, eta) > hm::cross_edge_capacity(n, k, l, s)) continue;
            const auto set = hm::uniform_cross_edges(n, k, l, hm::VertexSet::range(0, s), eta);
            std::vector<std::uint64_t> through(static_cast<std::size_t>(n), 0);
            std::set<hm::Edge> distinct;
            for (const auto& e : set.edges) {
              ASSERT_EQ(static_cast<int>(e.size()), k);
              EXPECT_EQ(std::count_if(e.begin(), e.end(), [&](int v) { return v < s; }), l);
              for (int v : e) ++through[static_cast<std::size_t>(v)];
              EXPECT_TRUE(distinct.insert(e).second);
            }
            for (int v = 0; v < s; ++v) EXPECT_EQ(through[static_cast<std::size_t>(v)], set.target);
            ++built;
          }
        }
      }
    }
  }
  EXPECT_GT(built, 300);
}
