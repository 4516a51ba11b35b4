#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "hypermatch/rational.hpp"

namespace hypermatch {

/// Threshold formulas. The CLI identifier of each is given by formula_id().
enum class Formula {
  perfect_conjecture,         // conj11: max{1/2, 1 - ((k-1)/k)^(k-d)}
  improved_perfect,           // thm12:  (k-d)/k - (k-d-1)/k^(k-d)
  markstrom_rucinski,         // mr:     (k-d)/k - 1/k^(k-d)
  han_person_schacht,         // hps:    (k-d)/k
  construction_lower,         // eq1:    1 - (1-a)^(k-d)
  erdos_conjecture,           // conj15_m0: max{C(ks-1,k), C(n,k) - C(n-s+1,k)} + 1
  frankl_exact,               // thm14_m0:  C(n,k) - C(n-s+1,k) + 1
  partial_conjecture,         // conj12: 1 - (1 - s/n)^(k-d)
  edge_density_perfect,       // thm18:  k/(k+d) - (k-1)/(k+d)^k
  degree_perfect_fractional,  // thm19:  (k-d)/k - (k-d-1)/k^(k-d)
  graph_edge_density,         // base_k2: 1 - (1-x)^2
  xi_constant,                // xi
};

std::string_view formula_id(Formula f) noexcept;
/// Throws Error(invalid_argument) on an unknown identifier.
Formula parse_formula(std::string_view id);
const std::vector<Formula>& all_formulas();

/// Exactly one of s (with n) or a is expected by the formulas that take a
/// matching size; the others ignore both.
struct BoundParams {
  int k = 2;
  int d = 0;
  std::optional<int> n;
  std::optional<int> s;
  std::optional<Rational> a;
};

/// coefficient multiplies C(n-d, k-d) for degree formulas, C(n, k) for edge
/// formulas and C(n-1, k-1) for xi. o(1) terms are dropped. absolute is the
/// coefficient times that binomial when n is known; for the two exact
/// edge-count statements it is the exact integer including the +1.
struct BoundValue {
  Formula formula;
  Rational coefficient;
  std::optional<Rational> absolute;
};

/// Throws Error(domain) naming the violated condition when params fall
/// outside the formula's range.
BoundValue eval_bound(Formula formula, const BoundParams& params);

struct BoundComparison {
  int k = 0;
  int d = 0;
  Rational perfect_conjecture;
  Rational improved_perfect;
  Rational markstrom_rucinski;
  Rational han_person_schacht;
  bool ordered = false;  // conjecture <= improved <= MR <= HPS
  bool conjecture_strict = false;
  bool improvement_strict = false;  // improved < MR
  bool mr_strict = false;           // MR < HPS
};

/// Requires 1 <= d < k/2.
BoundComparison compare_bounds(int k, int d);

struct RootResult {
  Rational root;
  Rational residual;  // g(root)
  Rational lower;     // final bracket
  Rational upper;
  int iterations = 0;
};

/// Root in (0, 1/(k+1)) of g(a) = 1 - (1-2a)^(k-1) - (1-a)^(k-1), the ratio
/// s/n up to which the edge-density method reaches. Bisection with exact
/// rational evaluation; stops once the bracket is no wider than tol and
/// |g(root)| <= tol. Requires k >= 3 and tol > 0.
RootResult erdos_range_root(int k, const Rational& tol);

/// g(a) above, exactly.
Rational erdos_range_residual(int k, const Rational& a);

}  // namespace hypermatch
