#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hypermatch/hypergraph.hpp"
#include "hypermatch/rational.hpp"

namespace hypermatch {

/// Edge weights indexed like Hypergraph::edges(); size is their sum.
struct FractionalMatching {
  std::vector<Rational> weights;
  Rational size;
};

/// Vertex weights indexed by vertex; size is their sum.
struct FractionalCover {
  std::vector<Rational> weights;
  Rational size;
};

FractionalMatching make_matching(std::vector<Rational> weights);
FractionalCover make_cover(std::vector<Rational> weights);

/// Weights in [0, 1], one per edge, and load at most 1 on every vertex.
bool is_fractional_matching(const Hypergraph& g, const FractionalMatching& m);
/// Weights in [0, 1], one per vertex, and every edge carries weight at least 1.
bool is_fractional_cover(const Hypergraph& g, const FractionalCover& c);

/// Optimal primal/dual pair from one simplex run. Both objects are checked
/// for feasibility and equal size with exact arithmetic before returning;
/// a failed check throws Error(solver_failure).
struct FractionalSolution {
  FractionalMatching matching;
  FractionalCover cover;
  std::size_t pivots = 0;
};

FractionalSolution solve_fractional(const Hypergraph& g);

/// LP optimum for an edge list that has not been wrapped into a Hypergraph.
/// Used by the search code on residual instances.
Rational fractional_matching_number(int n, std::span<const Edge> edges,
                                    std::vector<Rational>* edge_weights = nullptr);

FractionalMatching max_fractional_matching(const Hypergraph& g);
FractionalCover min_fractional_cover(const Hypergraph& g);

struct DualityReport {
  Rational primal;
  Rational dual;
  bool equal = false;
};

/// Solves the matching LP and the cover LP as two separate programs and
/// compares their optima exactly.
DualityReport check_duality(const Hypergraph& g);

/// Result of lowering a cover onto the link of a vertex set L.
struct TransformedCover {
  FractionalCover cover;            // on V \ L, reindexed like neighbourhood(g, L)
  std::vector<Vertex> original;     // original[i] is the parent label of vertex i
  Rational link_weight;             // the averaged weight w(L)
  std::size_t closure_link_edges = 0;
};

/// Replaces the weights on L by their average w(L) (which must be below 1/k)
/// and maps every other vertex to min{max{0, (w(v) - w(L)) / (1 - k w(L))}, 1}.
/// The result is checked to cover every (k - |L|)-set T with
/// T ∪ L in the cover-closure of w, i.e. with total w-weight at least 1.
/// Requires w to cover g and 1 <= |L| <= k - 2.
TransformedCover transform_cover(const Hypergraph& g, const FractionalCover& w, const VertexSet& l);

/// Link of L in the cover-closure {k-sets e : sum of w over e >= 1}, as
/// (k - |L|)-sets in the parent's labels.
std::vector<Edge> closure_link(int n, int k, std::span<const Rational> w, const VertexSet& l);

struct CoverEdgeBound {
  std::size_t lhs = 0;
  Rational rhs;
  bool holds = false;
};

/// Evaluates e(G) <= sum_{e in E} w(e \ S) + sum_{e in E'} w(e ∩ S) + |E \ E'|
/// for a cover w of g and an edge subset E' of E(g).
CoverEdgeBound cover_edge_bound(const Hypergraph& g, const FractionalCover& w,
                                std::span<const Edge> subset, const VertexSet& s);

}  // namespace hypermatch
