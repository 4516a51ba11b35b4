#include "hypermatch/bounds.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "hypermatch/combinatorics.hpp"
#include "hypermatch/error.hpp"

namespace hypermatch {

namespace {

struct FormulaName {
  Formula formula;
  std::string_view id;
};

constexpr std::array<FormulaName, 12> kNames{{
    {Formula::perfect_conjecture, "conj11"},
    {Formula::improved_perfect, "thm12"},
    {Formula::markstrom_rucinski, "mr"},
    {Formula::han_person_schacht, "hps"},
    {Formula::construction_lower, "eq1"},
    {Formula::erdos_conjecture, "conj15_m0"},
    {Formula::frankl_exact, "thm14_m0"},
    {Formula::partial_conjecture, "conj12"},
    {Formula::edge_density_perfect, "thm18"},
    {Formula::degree_perfect_fractional, "thm19"},
    {Formula::graph_edge_density, "base_k2"},
    {Formula::xi_constant, "xi"},
}};

[[noreturn]] void domain(Formula f, const std::string& what) {
  throw Error(ErrorCode::domain, std::string(formula_id(f)) + ": " + what);
}

Rational ratio(long p, long q) { return make_rational(p, q); }

Rational big(const BigInt& x) { return Rational(x); }

/// (k-d)/k - m/k^(k-d)
Rational degree_perfect(int k, int d, long m) {
  return ratio(k - d, k) - Rational(m) / pow(Rational(k), static_cast<unsigned>(k - d));
}

/// Matching fraction a from either a or s/n; checks 0 <= a <= cap.
Rational matching_fraction(Formula f, const BoundParams& p, const Rational& cap, const std::string& cap_text) {
  if (p.a && p.s) domain(f, "give either a or s, not both");
  Rational a;
  if (p.a) {
    a = *p.a;
  } else if (p.s) {
    if (!p.n || *p.n <= 0) domain(f, "s requires n >= 1");
    a = ratio(*p.s, *p.n);
  } else {
    domain(f, "needs a matching size (s with n, or a)");
  }
  if (sgn(a) < 0 || a > cap) domain(f, "matching fraction must lie in [0, " + cap_text + "]");
  return a;
}

void require_degree_range(Formula f, const BoundParams& p, int lo, int hi, const std::string& text) {
  if (p.d < lo || p.d > hi) domain(f, "requires " + text + " (got k = " + std::to_string(p.k) +
                                          ", d = " + std::to_string(p.d) + ")");
}

void require_small_degree(Formula f, const BoundParams& p) {
  if (p.k < 3 || p.d < 1 || 2 * p.d >= p.k) {
    domain(f, "requires k >= 3 and 1 <= d < k/2 (got k = " + std::to_string(p.k) +
                  ", d = " + std::to_string(p.d) + ")");
  }
}

std::pair<int, int> edge_size_params(Formula f, const BoundParams& p) {
  if (p.k < 2) domain(f, "requires k >= 2");
  if (p.d != 0) domain(f, "is an edge-count statement; requires d = 0");
  if (!p.n || !p.s) domain(f, "requires n and s");
  if (p.a) domain(f, "takes s, not a");
  const int n = *p.n;
  const int s = *p.s;
  if (s < 1 || static_cast<long>(s) * p.k > n) domain(f, "requires 1 <= s <= n/k");
  return {n, s};
}

}  // namespace

std::string_view formula_id(Formula f) noexcept {
  for (const auto& entry : kNames) {
    if (entry.formula == f) return entry.id;
  }
  return "unknown";
}

Formula parse_formula(std::string_view id) {
  for (const auto& entry : kNames) {
    if (entry.id == id) return entry.formula;
  }
  throw Error(ErrorCode::invalid_argument, "unknown formula id '" + std::string(id) + "'");
}

const std::vector<Formula>& all_formulas() {
  static const std::vector<Formula> all = [] {
    std::vector<Formula> out;
    for (const auto& entry : kNames) out.push_back(entry.formula);
    return out;
  }();
  return all;
}

BoundValue eval_bound(Formula f, const BoundParams& p) {
  const int k = p.k;
  const int d = p.d;
  BoundValue out{f, Rational(0), std::nullopt};
  // Binomial the coefficient scales, once n is known.
  std::optional<BigInt> scale;

  switch (f) {
    case Formula::perfect_conjecture: {
      if (k < 2) domain(f, "requires k >= 2");
      require_degree_range(f, p, 1, k - 1, "1 <= d <= k - 1");
      out.coefficient = std::max(ratio(1, 2), Rational(1 - pow(ratio(k - 1, k), static_cast<unsigned>(k - d))));
      if (p.n) scale = binomial_big(*p.n - d, k - d);
      break;
    }
    case Formula::improved_perfect:
      require_small_degree(f, p);
      out.coefficient = degree_perfect(k, d, k - d - 1);
      if (p.n) scale = binomial_big(*p.n - d, k - d);
      break;
    case Formula::markstrom_rucinski:
      require_small_degree(f, p);
      out.coefficient = degree_perfect(k, d, 1);
      if (p.n) scale = binomial_big(*p.n - d, k - d);
      break;
    case Formula::han_person_schacht:
      require_small_degree(f, p);
      out.coefficient = ratio(k - d, k);
      if (p.n) scale = binomial_big(*p.n - d, k - d);
      break;
    case Formula::construction_lower: {
      if (k < 2) domain(f, "requires k >= 2");
      require_degree_range(f, p, 0, k - 1, "0 <= d <= k - 1");
      const Rational a = matching_fraction(f, p, ratio(1, k), "1/k");
      out.coefficient = 1 - pow(1 - a, static_cast<unsigned>(k - d));
      if (p.n) scale = binomial_big(*p.n - d, k - d);
      break;
    }
    case Formula::partial_conjecture: {
      if (k < 2) domain(f, "requires k >= 2");
      require_degree_range(f, p, 1, k - 1, "1 <= d <= k - 1");
      const Rational a = matching_fraction(f, p, ratio(1, k), "1/k");
      out.coefficient = 1 - pow(1 - a, static_cast<unsigned>(k - d));
      if (p.n) scale = binomial_big(*p.n - d, k - d);
      break;
    }
    case Formula::erdos_conjecture: {
      const auto [n, s] = edge_size_params(f, p);
      const BigInt clique = binomial_big(static_cast<long>(k) * s - 1, k);
      const BigInt cover = binomial_big(n, k) - binomial_big(n - s + 1, k);
      const BigInt extremal = std::max(clique, cover);
      out.coefficient = big(extremal) / big(binomial_big(n, k));
      out.absolute = big(extremal + 1);
      return out;
    }
    case Formula::frankl_exact: {
      const auto [n, s] = edge_size_params(f, p);
      if (static_cast<long>(n) < static_cast<long>(2 * s - 1) * k - s + 1) {
        domain(f, "requires n >= (2s - 1)k - s + 1");
      }
      const BigInt cover = binomial_big(n, k) - binomial_big(n - s + 1, k);
      out.coefficient = big(cover) / big(binomial_big(n, k));
      out.absolute = big(cover + 1);
      return out;
    }
    case Formula::edge_density_perfect: {
      // Here d is the offset in the matching size n/(k+d), not a degree order.
      if (k < 2 || d < 1) domain(f, "requires k >= 2 and d >= 1");
      out.coefficient = ratio(k, k + d) - Rational(k - 1) / pow(Rational(k + d), static_cast<unsigned>(k));
      if (p.n) scale = binomial_big(*p.n, k);
      break;
    }
    case Formula::degree_perfect_fractional:
      if (k < 3 || d < 1 || d > k - 2) domain(f, "requires k >= 3 and 1 <= d <= k - 2");
      out.coefficient = degree_perfect(k, d, k - d - 1);
      if (p.n) scale = binomial_big(*p.n - d, k - d);
      break;
    case Formula::graph_edge_density: {
      if (k != 2 || d != 0) domain(f, "requires k = 2 and d = 0");
      const Rational x = matching_fraction(f, p, ratio(1, 3), "1/3");
      out.coefficient = 1 - pow(1 - x, 2);
      if (p.n) scale = binomial_big(*p.n, 2);
      break;
    }
    case Formula::xi_constant: {
      if (k < 3 || d < 1) domain(f, "requires k >= 3 and d >= 1");
      const Rational shrink = pow(ratio(k + d - 1, k + d), static_cast<unsigned>(k - 1));
      const Rational lower = ratio(k - 1, k + d - 1) -
                             Rational(k - 2) / pow(Rational(k + d - 1), static_cast<unsigned>(k - 1));
      out.coefficient = lower * shrink + (1 - shrink);
      if (p.n) scale = binomial_big(*p.n - 1, k - 1);
      break;
    }
  }
  if (scale) out.absolute = out.coefficient * big(*scale);
  return out;
}

BoundComparison compare_bounds(int k, int d) {
  BoundParams p{k, d, std::nullopt, std::nullopt, std::nullopt};
  BoundComparison c;
  c.k = k;
  c.d = d;
  c.improved_perfect = eval_bound(Formula::improved_perfect, p).coefficient;  // validates the range
  c.perfect_conjecture = eval_bound(Formula::perfect_conjecture, p).coefficient;
  c.markstrom_rucinski = eval_bound(Formula::markstrom_rucinski, p).coefficient;
  c.han_person_schacht = eval_bound(Formula::han_person_schacht, p).coefficient;
  c.ordered = c.perfect_conjecture <= c.improved_perfect && c.improved_perfect <= c.markstrom_rucinski &&
              c.markstrom_rucinski <= c.han_person_schacht;
  c.conjecture_strict = c.perfect_conjecture < c.improved_perfect;
  c.improvement_strict = c.improved_perfect < c.markstrom_rucinski;
  c.mr_strict = c.markstrom_rucinski < c.han_person_schacht;
  return c;
}

Rational erdos_range_residual(int k, const Rational& a) {
  const auto e = static_cast<unsigned>(k - 1);
  return 1 - pow(1 - 2 * a, e) - pow(1 - a, e);
}

RootResult erdos_range_root(int k, const Rational& tol) {
  if (k < 3) {
    throw Error(ErrorCode::domain, "k = " + std::to_string(k) +
                                       ": the equation has no root inside (0, 1/(k+1)) for k < 3");
  }
  if (sgn(tol) <= 0) throw Error(ErrorCode::domain, "tolerance must be positive");
  RootResult r;
  r.lower = 0;
  r.upper = ratio(1, k + 1);
  const int lo_sign = sgn(erdos_range_residual(k, r.lower));
  const int hi_sign = sgn(erdos_range_residual(k, r.upper));
  if (lo_sign == 0 || hi_sign == 0 || lo_sign == hi_sign) {
    throw Error(ErrorCode::no_sign_change, "g has no sign change on (0, 1/(k+1)) for k = " + std::to_string(k));
  }
  while (true) {
    r.root = (r.lower + r.upper) / 2;
    r.residual = erdos_range_residual(k, r.root);
    ++r.iterations;
    const int s = sgn(r.residual);
    if (s == 0) {
      r.lower = r.upper = r.root;
      break;
    }
    if (s == lo_sign) {
      r.lower = r.root;
    } else {
      r.upper = r.root;
    }
    if (r.upper - r.lower <= tol && abs(r.residual) <= tol) break;
  }
  return r;
}

}  // namespace hypermatch
