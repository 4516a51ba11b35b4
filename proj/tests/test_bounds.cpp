#include <gtest/gtest.h>

#include "hypermatch/bounds.hpp"
#include "hypermatch/error.hpp"

namespace hm = hypermatch;
using hm::Formula;
using hm::Rational;

namespace {

Rational coef(std::string_view id, int k, int d) {
  hm::BoundParams p;
  p.k = k;
  p.d = d;
  return hm::eval_bound(hm::parse_formula(id), p).coefficient;
}

hm::BoundValue edge_formula(std::string_view id, int k, int n, int s) {
  hm::BoundParams p;
  p.k = k;
  p.n = n;
  p.s = s;
  return hm::eval_bound(hm::parse_formula(id), p);
}

}  // namespace

TEST(Formulas, IdsRoundTrip) {
  for (Formula f : hm::all_formulas()) EXPECT_EQ(hm::parse_formula(hm::formula_id(f)), f);
  EXPECT_EQ(hm::all_formulas().size(), 12U);
  EXPECT_THROW(hm::parse_formula("thm99"), hm::Error);
}

TEST(Formulas, DegreeExamples) {
  EXPECT_EQ(coef("conj11", 3, 1), hm::make_rational(5, 9));
  EXPECT_EQ(coef("thm12", 4, 1), hm::make_rational(23, 32));
  EXPECT_EQ(coef("mr", 4, 1), hm::make_rational(47, 64));
  EXPECT_LT(coef("thm12", 4, 1), coef("mr", 4, 1));
  EXPECT_EQ(coef("hps", 4, 1), hm::make_rational(3, 4));
  EXPECT_EQ(coef("xi", 3, 1), hm::make_rational(3, 4));
  EXPECT_EQ(coef("thm18", 2, 1), hm::make_rational(5, 9));
  // For k = 3, d = 1 all three perfect-matching coefficients coincide.
  EXPECT_EQ(coef("thm12", 3, 1), hm::make_rational(5, 9));
  EXPECT_EQ(coef("mr", 3, 1), hm::make_rational(5, 9));
}

TEST(Formulas, ExactEdgeCounts) {
  const auto frankl = edge_formula("thm14_m0", 3, 10, 2);
  ASSERT_TRUE(frankl.absolute);
  EXPECT_EQ(*frankl.absolute, 37);
  const auto erdos = edge_formula("conj15_m0", 3, 6, 2);
  ASSERT_TRUE(erdos.absolute);
  EXPECT_EQ(*erdos.absolute, 11);
  EXPECT_EQ(erdos.coefficient, hm::make_rational(1, 2));
  EXPECT_EQ(*edge_formula("conj15_m0", 2, 5, 2).absolute, 5);
  EXPECT_THROW(edge_formula("thm14_m0", 3, 7, 2), hm::Error);
  EXPECT_NO_THROW(edge_formula("thm14_m0", 3, 8, 2));
}

TEST(Formulas, AbsoluteScaling) {
  hm::BoundParams p;
  p.k = 4;
  p.d = 1;
  p.n = 12;
  const auto v = hm::eval_bound(Formula::improved_perfect, p);
  ASSERT_TRUE(v.absolute);
  EXPECT_EQ(*v.absolute, hm::make_rational(23, 32) * 165);
  p = {};
  p.k = 3;
  p.d = 1;
  p.n = 9;
  EXPECT_EQ(*hm::eval_bound(Formula::xi_constant, p).absolute, hm::make_rational(3, 4) * 28);
}

TEST(Formulas, DomainErrors) {
  EXPECT_THROW(coef("thm12", 4, 2), hm::Error);
  EXPECT_THROW(coef("mr", 2, 1), hm::Error);
  EXPECT_THROW(coef("thm19", 4, 3), hm::Error);
  EXPECT_THROW(coef("base_k2", 3, 0), hm::Error);
  EXPECT_THROW(coef("xi", 2, 1), hm::Error);
  hm::BoundParams p;
  p.k = 3;
  p.d = 1;
  p.a = hm::make_rational(1, 2);
  EXPECT_THROW(hm::eval_bound(Formula::partial_conjecture, p), hm::Error);
  try {
    coef("thm12", 4, 2);
  } catch (const hm::Error& e) {
    EXPECT_EQ(e.code(), hm::ErrorCode::domain);
  }
}

TEST(Formulas, ConstructionMatchesPartialConjecture) {
  for (int k = 2; k <= 8; ++k) {
    for (int d = 1; d < k; ++d) {
      hm::BoundParams p;
      p.k = k;
      p.d = d;
      p.n = 4 * k;
      p.s = 4;
      const auto lower = hm::eval_bound(Formula::construction_lower, p);
      p.n.reset();
      p.s.reset();
      p.a = hm::make_rational(1, k);
      EXPECT_EQ(lower.coefficient, hm::eval_bound(Formula::partial_conjecture, p).coefficient);
    }
  }
}

TEST(Formulas, MonotoneInMatchingFraction) {
  for (int k = 3; k <= 6; ++k) {
    Rational previous = -1;
    for (int i = 0; i <= 12; ++i) {
      hm::BoundParams p;
      p.k = k;
      p.d = 1;
      p.a = hm::make_rational(i, 12 * k);
      const auto v = hm::eval_bound(Formula::construction_lower, p).coefficient;
      EXPECT_GT(v, previous);
      EXPECT_GE(v, 0);
      EXPECT_LE(v, 1);
      previous = v;
    }
  }
}

TEST(Formulas, CoefficientsInUnitInterval) {
  for (int k = 3; k <= 9; ++k) {
    for (int d = 1; 2 * d < k; ++d) {
      for (const char* id : {"conj11", "thm12", "mr", "hps", "thm19", "thm18", "xi"}) {
        const auto c = coef(id, k, d);
        EXPECT_GE(c, 0) << id;
        EXPECT_LE(c, 1) << id;
      }
    }
  }
}

TEST(Formulas, SubstitutionIdentity) {
  for (int k = 3; k <= 8; ++k) {
    for (int d = 1; d <= k - 2; ++d) EXPECT_EQ(coef("thm19", k, d), coef("thm18", k - d, d));
  }
}

TEST(Formulas, BaseCase) {
  for (int d = 1; d <= 6; ++d) {
    hm::BoundParams p;
    p.k = 2;
    p.a = hm::make_rational(1, 2 + d);
    EXPECT_EQ(hm::eval_bound(Formula::graph_edge_density, p).coefficient, coef("thm18", 2, d));
  }
}

TEST(Compare, Ordering) {
  const auto three = hm::compare_bounds(3, 1);
  EXPECT_TRUE(three.ordered);
  EXPECT_FALSE(three.improvement_strict);
  EXPECT_EQ(three.improved_perfect, hm::make_rational(5, 9));
  const auto five = hm::compare_bounds(5, 1);
  EXPECT_TRUE(five.ordered);
  EXPECT_TRUE(five.improvement_strict);
  EXPECT_THROW(hm::compare_bounds(4, 2), hm::Error);
}

TEST(Root, Values) {
  const Rational tol(1, 1000000000);
  const auto four = hm::erdos_range_root(4, tol);
  EXPECT_NEAR(4 * four.root.get_d(), 0.567, 1e-3);
  EXPECT_LT(four.root, hm::make_rational(1, 5));
  EXPECT_LE(abs(four.residual), tol);
  EXPECT_LE(four.upper - four.lower, tol);
  EXPECT_EQ(hm::erdos_range_residual(4, four.root), four.residual);
  const auto three = hm::erdos_range_root(3, tol);
  EXPECT_NEAR(3 * three.root.get_d(), 0.6, 1e-6);
  for (int k : {50, 100}) {
    const double ka = k * hm::erdos_range_root(k, tol).root.get_d();
    EXPECT_GT(ka, 0.46);
    EXPECT_LT(ka, 0.50);
  }
  EXPECT_THROW(hm::erdos_range_root(2, tol), hm::Error);
  EXPECT_THROW(hm::erdos_range_root(4, 0), hm::Error);
}

TEST(Root, ResidualSigns) {
  for (int k = 3; k <= 12; ++k) {
    EXPECT_LT(hm::erdos_range_residual(k, hm::make_rational(1, 1000 * k)), 0);
    EXPECT_GT(hm::erdos_range_residual(k, hm::make_rational(1, k + 1)), 0);
  }
}
