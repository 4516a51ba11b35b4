#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hypermatch/fractional_lp.hpp"
#include "hypermatch/hypergraph.hpp"
#include "hypermatch/rational.hpp"

namespace hypermatch {

/// Strictly increasing indices into the hypergraph's canonical edge list.
struct Matching {
  std::vector<std::size_t> edges;

  std::size_t size() const noexcept { return edges.size(); }
};

bool is_matching(const Hypergraph& g, const Matching& m);

struct SearchOptions {
  /// Bound subtrees by the fractional matching number of the residual
  /// hypergraph. Without it only the counting bound min(|V|/k, e) is used.
  bool lp_bound = true;
};

struct SearchStats {
  std::size_t nodes = 0;
  std::size_t lp_solves = 0;
};

struct MatchingSearch {
  Matching matching;
  bool optimal = false;
  SearchStats stats;
};

/// Maximum matching by branch and bound. Deterministic for a given input.
/// Supports up to 64 vertices.
MatchingSearch max_matching(const Hypergraph& g, SearchOptions options = {});

/// A matching of exactly `size` edges if nu(g) >= size. Stops at the first hit.
std::optional<Matching> find_matching_of_size(const Hypergraph& g, std::size_t size,
                                              SearchOptions options = {});

struct RoundedMatching {
  Matching matching;
  Rational scaled_size;  // size(F) * shrink, reported for comparison only
};

/// Greedy rounding of a fractional matching: edges of positive weight are
/// scanned by decreasing weight (ties in canonical order) and kept when
/// disjoint from those already kept. Only validity is guaranteed, not size.
/// Requires F feasible for g and shrink in (0, 1].
RoundedMatching round_fractional(const Hypergraph& g, const FractionalMatching& f,
                                 const Rational& shrink);

}  // namespace hypermatch
