#pragma once

#include <cstdint>
#include <optional>

#include "hypermatch/hypergraph.hpp"
#include "hypermatch/rational.hpp"

namespace hypermatch {

enum class MatchingKind { integer, fractional };

/// m_d^s(k, n) for integer matchings, f_d^s(k, n) for fractional ones: the
/// least m such that every k-graph on n vertices with minimum d-degree at
/// least m has a matching of size `target`.
struct ThresholdQuery {
  int k = 2;
  int n = 0;
  int d = 0;
  MatchingKind kind = MatchingKind::integer;
  Rational target;  // integral for integer queries
  std::uint64_t edge_cap = 24;
  unsigned workers = 1;
};

struct ThresholdResult {
  std::uint64_t value = 0;
  /// A hypergraph with minimum d-degree value - 1 and no matching of the
  /// target size. Absent when every hypergraph has one (target 0).
  std::optional<Hypergraph> witness;
  std::uint64_t checked = 0;  // search nodes visited
};

/// Exhaustive search over edge subsets of K_n^(k). Only target-free
/// hypergraphs are visited (the family is closed under deleting edges), and a
/// branch is cut once even keeping every undecided edge cannot beat the best
/// minimum degree found. Refuses with Error(infeasible_size) when
/// C(n, k) > edge_cap. A target above what K_n^(k) achieves yields
/// C(n - d, k - d) + 1. The witness is revalidated before returning.
ThresholdResult threshold_exact(const ThresholdQuery& query);

struct LowerBoundReport {
  std::uint64_t construction_degree = 0;  // minimum d-degree of the fixed-set construction
  std::uint64_t lower_bound = 0;          // construction_degree + 1
  std::optional<std::uint64_t> exact_integer;
  std::optional<std::uint64_t> exact_fractional;
  bool consistent = true;  // lower_bound <= f <= m wherever computed
  bool tight = false;      // exact_integer == lower_bound
};

/// Compares the fixed-set construction bound against exact thresholds when
/// C(n, k) <= edge_cap.
LowerBoundReport verify_lower_bound(int n, int k, int d, int s, std::uint64_t edge_cap = 24);

struct SmoothnessReport {
  std::uint64_t at_s = 0;       // f_0^s(k, n)
  std::uint64_t at_next = 0;    // f_0^{s+1}(k, n)
  std::uint64_t allowance = 0;  // k C(n-1, k-1) + 1
  bool holds = false;
};

/// f_0^{s+1}(k, n) <= f_0^s(k, n) + k C(n-1, k-1) + 1: deleting all edges
/// at the vertices of one edge costs at most k C(n-1, k-1) edges and that
/// edge then extends any fractional matching of the remainder by one.
SmoothnessReport smoothness_check(int k, int n, int s, std::uint64_t edge_cap = 24);

}  // namespace hypermatch
