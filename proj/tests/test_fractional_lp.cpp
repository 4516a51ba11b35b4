#include <gtest/gtest.h>

#include "hypermatch/constructions.hpp"
#include "hypermatch/error.hpp"
#include "hypermatch/fractional_lp.hpp"
#include "hypermatch/integer_matching.hpp"
#include "hypermatch/simplex.hpp"
#include "support/oracles.hpp"

namespace hm = hypermatch;
using hm::Rational;

namespace {

hm::Hypergraph five_cycle() { return hm::Hypergraph::build(5, 2, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}); }

Rational q(long p, long d = 1) { return hm::make_rational(p, d); }

}  // namespace

TEST(Simplex, SmallProgram) {
  // max x + y, x + 2y <= 4, 3x + y <= 6.
  hm::PackingSimplex lp({{q(1), q(2)}, {q(3), q(1)}}, {q(4), q(6)}, {q(1), q(1)});
  const auto r = lp.solve();
  ASSERT_TRUE(r.bounded);
  EXPECT_EQ(r.value, q(14, 5));
  EXPECT_EQ(r.primal[0], q(8, 5));
  EXPECT_EQ(r.primal[1], q(6, 5));
  EXPECT_EQ(r.dual[0] * 4 + r.dual[1] * 6, r.value);
}

TEST(Simplex, Unbounded) {
  hm::PackingSimplex lp({{q(-1)}}, {q(1)}, {q(1)});
  EXPECT_FALSE(lp.solve().bounded);
}

TEST(Fractional, Examples) {
  const auto single = hm::Hypergraph::build(3, 3, {{0, 1, 2}});
  EXPECT_EQ(hm::max_fractional_matching(single).size, 1);
  EXPECT_EQ(hm::min_fractional_cover(single).size, 1);

  const auto cycle = hm::max_fractional_matching(five_cycle());
  EXPECT_EQ(cycle.size, q(5, 2));
  EXPECT_EQ(hm::testing::graph_fractional_number(5, five_cycle().edges()), q(5, 2));
  const auto cover = hm::min_fractional_cover(five_cycle());
  EXPECT_EQ(cover.size, q(5, 2));
  for (const auto& w : cover.weights) EXPECT_EQ(w, q(1, 2));

  EXPECT_EQ(hm::max_fractional_matching(hm::fixed_set_construction(9, 3, 3)).size, 2);
  const auto k63 = hm::min_fractional_cover(hm::complete(6, 3));
  EXPECT_EQ(k63.size, 2);

  const hm::Hypergraph empty(4, 2);
  EXPECT_EQ(hm::max_fractional_matching(empty).size, 0);
  EXPECT_EQ(hm::min_fractional_cover(empty).size, 0);
}

TEST(Fractional, FeasibilityPredicates) {
  const auto g = five_cycle();
  EXPECT_TRUE(hm::is_fractional_matching(g, hm::make_matching(std::vector<Rational>(5, q(1, 2)))));
  EXPECT_FALSE(hm::is_fractional_matching(g, hm::make_matching({q(1), q(1), q(0), q(0), q(0)})));
  EXPECT_FALSE(hm::is_fractional_matching(g, hm::make_matching({q(1)})));
  EXPECT_TRUE(hm::is_fractional_cover(g, hm::make_cover({q(1), q(0), q(1), q(1), q(0)})));
  EXPECT_FALSE(hm::is_fractional_cover(g, hm::make_cover({q(1), q(0), q(1), q(0), q(0)})));
  EXPECT_FALSE(hm::is_fractional_cover(g, hm::make_cover({q(2), q(2), q(2), q(2), q(-1)})));
}

TEST(Duality, Examples) {
  const auto empty = hm::check_duality(hm::Hypergraph(0, 2));
  EXPECT_TRUE(empty.equal);
  EXPECT_EQ(empty.primal, 0);
  const auto cycle = hm::check_duality(five_cycle());
  EXPECT_TRUE(cycle.equal);
  EXPECT_EQ(cycle.dual, q(5, 2));
}

TEST(Duality, RandomInstances) {
  hm::testing::Rng rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    const int k = hm::testing::uniform_int(rng, 2, 4);
    const int n = hm::testing::uniform_int(rng, k, 9);
    const auto g = hm::testing::random_hypergraph(rng, n, k, 0.3 + 0.4 * (trial % 5) / 4.0);
    const auto report = hm::check_duality(g);
    ASSERT_TRUE(report.equal) << hm::serialize(g);
    const auto sol = hm::solve_fractional(g);
    EXPECT_TRUE(hm::is_fractional_matching(g, sol.matching));
    EXPECT_TRUE(hm::is_fractional_cover(g, sol.cover));
    EXPECT_EQ(sol.matching.size, report.primal);
    // nu <= nu* <= min(n/k, e).
    EXPECT_LE(Rational(hm::max_matching(g).matching.size()), sol.matching.size);
    EXPECT_LE(sol.matching.size, hm::make_rational(n, k));
    EXPECT_LE(sol.matching.size, Rational(g.edge_count()));
    if (k == 2) EXPECT_EQ(sol.matching.size, hm::testing::graph_fractional_number(n, g.edges()));
    // Scaling a cover up keeps it feasible once clamped to [0, 1].
    std::vector<Rational> scaled;
    for (const auto& w : sol.cover.weights) scaled.push_back(std::min(Rational(1), Rational(w * q(3, 2))));
    EXPECT_TRUE(hm::is_fractional_cover(g, hm::make_cover(scaled)));
  }
}

TEST(Transform, IdentityWhenLinkWeightIsZero) {
  // Cover with weight 1 on vertex 0 of the fixed-set construction; L = {5}.
  const auto g = hm::fixed_set_construction(6, 3, 2);
  const auto w = hm::min_fractional_cover(g);
  ASSERT_EQ(w.weights[5], 0);
  const auto t = hm::transform_cover(g, w, {5});
  EXPECT_EQ(t.link_weight, 0);
  ASSERT_EQ(t.original, (std::vector<hm::Vertex>{0, 1, 2, 3, 4}));
  for (std::size_t i = 0; i < t.original.size(); ++i) {
    EXPECT_EQ(t.cover.weights[i], w.weights[static_cast<std::size_t>(t.original[i])]);
  }
}

TEST(Transform, FormulaValues) {
  // k = 3, L = {0} with weight 1/4: w = 1/2 -> 1, w = 1/4 -> 0, w = 0 -> -1/3 clamped to 0.
  const auto g = hm::Hypergraph::build(4, 3, {{0, 1, 2}, {0, 1, 3}});
  const auto w = hm::make_cover({q(1, 4), q(1, 2), q(1, 4), q(0)});
  // Not a cover of g: {0, 1, 3} has weight 3/4.
  EXPECT_THROW(hm::transform_cover(g, w, {0}), hm::Error);

  const auto g2 = hm::Hypergraph::build(5, 3, {{0, 1, 2}});
  const auto w2 = hm::make_cover({q(1, 4), q(1, 2), q(1, 4), q(0), q(1)});
  const auto t = hm::transform_cover(g2, w2, {0});
  EXPECT_EQ(t.link_weight, q(1, 4));
  EXPECT_EQ(t.cover.weights, (std::vector<Rational>{q(1), q(0), q(0), q(1)}));
}

TEST(Transform, AveragesTheSet) {
  const auto g = hm::complete(8, 4);
  const auto w = hm::make_cover(std::vector<Rational>{q(0), q(1, 5), q(2, 5), q(2, 5), q(2, 5), q(2, 5), q(2, 5),
                                                      q(2, 5)});
  ASSERT_TRUE(hm::is_fractional_cover(g, w));
  const auto t = hm::transform_cover(g, w, {0, 1});
  EXPECT_EQ(t.link_weight, q(1, 10));
}

TEST(Transform, Rejections) {
  const auto g = hm::complete(6, 3);
  const auto w = hm::min_fractional_cover(g);
  EXPECT_THROW(hm::transform_cover(g, w, {0}), hm::Error);  // w(L) = 1/3 = 1/k
  EXPECT_THROW(hm::transform_cover(g, w, {}), hm::Error);
  EXPECT_THROW(hm::transform_cover(g, w, {0, 1}), hm::Error);  // |L| > k - 2
  EXPECT_THROW(hm::transform_cover(g, w, {7}), hm::Error);
}

TEST(Transform, ContractOnRandomCovers) {
  // With U the t + d lightest vertices, L inside U and W < (n - t)/k, the
  // image has size below (n - t)/k.
  hm::testing::Rng rng(77);
  int exercised = 0;
  for (int trial = 0; trial < 200 && exercised < 40; ++trial) {
    const int k = hm::testing::uniform_int(rng, 3, 4);
    const int n = hm::testing::uniform_int(rng, k + 2, 9);
    const auto g = hm::testing::random_hypergraph(rng, n, k, 0.2);
    const auto w = hm::min_fractional_cover(g);
    const int d = hm::testing::uniform_int(rng, 1, k - 2);
    std::vector<hm::Vertex> order(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return w.weights[static_cast<std::size_t>(a)] < w.weights[static_cast<std::size_t>(b)];
    });
    for (int t = 0; t + d <= n; ++t) {
      if (w.size >= hm::make_rational(n - t, k)) continue;
      std::vector<hm::Vertex> u(order.begin(), order.begin() + t + d);
      std::shuffle(u.begin(), u.end(), rng);
      const hm::VertexSet l(std::vector<hm::Vertex>(u.begin(), u.begin() + d));
      Rational avg = 0;
      for (hm::Vertex v : l) avg += w.weights[static_cast<std::size_t>(v)];
      avg /= d;
      if (avg >= hm::make_rational(1, k)) continue;
      const auto out = hm::transform_cover(g, w, l);
      EXPECT_LT(out.cover.size, hm::make_rational(n - t, k));
      ++exercised;
      break;
    }
  }
  EXPECT_GE(exercised, 20);
}

TEST(CoverEdgeBound, Examples) {
  const auto g = five_cycle();
  const auto w = hm::min_fractional_cover(g);
  const auto all = hm::cover_edge_bound(g, w, g.edges(), {});
  EXPECT_EQ(all.lhs, 5U);
  EXPECT_EQ(all.rhs, 5);
  EXPECT_TRUE(all.holds);
  const auto none = hm::cover_edge_bound(g, w, {}, {0, 1, 2, 3, 4});
  EXPECT_EQ(none.rhs, 5);
  EXPECT_TRUE(none.holds);
  const std::vector<hm::Edge> stranger{{0, 2}};
  EXPECT_THROW(hm::cover_edge_bound(g, w, stranger, {}), hm::Error);
}

TEST(CoverEdgeBound, RandomHarness) {
  hm::testing::Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const int k = hm::testing::uniform_int(rng, 2, 4);
    const int n = hm::testing::uniform_int(rng, k, 8);
    const auto g = hm::testing::random_hypergraph(rng, n, k, 0.5);
    const auto w = hm::min_fractional_cover(g);
    std::vector<hm::Edge> subset;
    std::bernoulli_distribution coin(0.5);
    for (const auto& e : g.edges()) {
      if (coin(rng)) subset.push_back(e);
    }
    std::vector<hm::Vertex> s;
    for (int v = 0; v < n; ++v) {
      if (coin(rng)) s.push_back(v);
    }
    const auto r = hm::cover_edge_bound(g, w, subset, hm::VertexSet(s));
    EXPECT_EQ(r.lhs, g.edge_count());
    EXPECT_TRUE(r.holds);
    EXPECT_LE(Rational(r.lhs), r.rhs);
  }
}
