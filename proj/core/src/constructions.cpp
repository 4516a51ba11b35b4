#include "hypermatch/constructions.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "hypermatch/combinatorics.hpp"
#include "hypermatch/error.hpp"

namespace hypermatch {

Hypergraph fixed_set_construction(int n, int k, int s) {
  if (k < 2 || n < 0) throw Error(ErrorCode::domain, "fixed-set construction needs k >= 2, n >= 0");
  if (s < 1 || static_cast<long>(s - 1) * k > n) {
    throw Error(ErrorCode::domain, "fixed-set construction needs 1 <= s <= n/k + 1, got s = " +
                                       std::to_string(s));
  }
  const int fixed = s - 1;
  std::vector<Edge> edges;
  for_each_combination(n, k, [&](std::span<const int> c) {
    if (c.front() < fixed) edges.emplace_back(c.begin(), c.end());
  });
  return Hypergraph::build(n, k, std::move(edges));
}

int parity_part_size(int n, int k) {
  if (k < 2 || n < 0 || n % k != 0) {
    throw Error(ErrorCode::domain, "parity construction needs k >= 2 and n divisible by k");
  }
  const int parts_parity = (n / k) % 2;
  int best = -1;
  // Candidates with |2|A| - n| <= 2, scanned upward so ties keep the smaller.
  for (int a = std::max(0, (n - 2 + 1) / 2); a <= std::min(n, (n + 2) / 2); ++a) {
    if (std::abs(2 * a - n) > 2 || a % 2 == parts_parity) continue;
    if (best < 0 || std::abs(2 * a - n) < std::abs(2 * best - n)) best = a;
  }
  if (best < 0) throw Error(ErrorCode::domain, "no admissible part size for n = " + std::to_string(n));
  return best;
}

ParityConstruction parity_construction(int n, int k) {
  const int a_size = parity_part_size(n, k);
  std::vector<Edge> edges;
  for_each_combination(n, k, [&](std::span<const int> c) {
    const auto in_a = std::count_if(c.begin(), c.end(), [&](int v) { return v < a_size; });
    if (in_a % 2 == 1) edges.emplace_back(c.begin(), c.end());
  });
  return {Hypergraph::build(n, k, std::move(edges)), a_size};
}

Certificate fixed_set_certificate(int n, int k, int d, int s) {
  if (d < 0 || d > k - 1) throw Error(ErrorCode::domain, "certificate needs 0 <= d <= k - 1");
  if (s < 1 || static_cast<long>(s) * k > n) {
    throw Error(ErrorCode::domain, "certificate needs 1 <= s <= n/k");
  }
  Certificate cert{fixed_set_construction(n, k, s), d, 0, static_cast<std::size_t>(s - 1), {}, {}};
  cert.min_degree = min_degree(cert.hypergraph, d);

  std::vector<Rational> weights(static_cast<std::size_t>(n), Rational(0));
  for (int v = 0; v < s - 1; ++v) weights[static_cast<std::size_t>(v)] = 1;
  cert.witness_cover = make_cover(std::move(weights));
  if (!is_fractional_cover(cert.hypergraph, cert.witness_cover)) {
    throw Error(ErrorCode::solver_failure, "fixed-set cover is not feasible");
  }

  auto solved = solve_fractional(cert.hypergraph);
  if (solved.matching.size != Rational(s - 1) || cert.witness_cover.size != solved.matching.size) {
    throw Error(ErrorCode::solver_failure,
                "fractional optimum " + to_string(solved.matching.size) + " differs from s - 1");
  }
  cert.witness_matching = std::move(solved.matching);
  return cert;
}

}  // namespace hypermatch
