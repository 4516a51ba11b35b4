#pragma once

#include <cstdint>
#include <vector>

#include "hypermatch/hypergraph.hpp"
#include "hypermatch/rational.hpp"

namespace hypermatch {

/// Partition of all l-subsets of {0..n-1} into C(n-1, l-1) perfect matchings.
struct Decomposition {
  int n = 0;
  int part_size = 0;
  std::vector<std::vector<Edge>> matchings;
};

/// Baranyai decomposition of K_n^(l), n divisible by l.
///
/// Built one vertex at a time. Before vertex j is placed, row i of an
/// C(n-1, l-1) x (n/l) array holds a partition of {0..j-1} into n/l parts
/// (some empty), and every T subset of {0..j-1} occurs as a part exactly
/// C(n-j, l-|T|) times over the whole array. Vertex j must join exactly one
/// part per row so that C(n-j-1, l-|T|-1) of the copies of each T receive it.
/// Sending (l-|T|)/(n-j) units from row i to each of its parts T is a
/// fractional solution of that transportation problem, so an integral max
/// flow exists and saturates every row; it tells each row which part grows.
/// After vertex n-1 every part is an l-set and each l-set occurs once.
Decomposition decompose(int n, int l);

/// Checks the partition, perfect-matching and count properties.
bool is_valid_decomposition(const Decomposition& d);

/// k-sets meeting S in exactly l vertices with the same count through every
/// vertex of S.
struct CrossEdgeSet {
  std::vector<Edge> edges;
  std::uint64_t target = 0;
};

/// floor(eta * C(|S|, l-1) * C(n-|S|, k-l)), the per-vertex count requested.
std::uint64_t cross_edge_target(int n, int k, int l, int s_size, const Rational& eta);

/// Edges through one vertex of S available in the stratum |e ∩ S| = l:
/// C(|S|-1, l-1) * C(n-|S|, k-l).
std::uint64_t cross_edge_capacity(int n, int k, int l, int s_size);

/// Uses the decomposition of the l-subsets of S: inside one perfect matching
/// every vertex of S gains extensions in lockstep. The first q matchings are
/// extended by every (k-l)-subset of V \ S, and matching q+1 by the first r
/// such subsets in lexicographic order, where T = q C(n-|S|, k-l) + r.
/// Requires 1 <= l <= k, |S| a positive multiple of l,
/// n - |S| >= k - l and eta in [0, 1). Throws Error(domain) when T exceeds
/// cross_edge_capacity, since no such edge set exists then.
CrossEdgeSet uniform_cross_edges(int n, int k, int l, const VertexSet& s, const Rational& eta);

}  // namespace hypermatch
