#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hypermatch {

using Vertex = int;

/// A sorted list of distinct vertices. Hypergraph edges use the same shape.
using Edge = std::vector<Vertex>;

/// Sorted, duplicate-free set of vertex indices.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members);
  explicit VertexSet(std::vector<Vertex> members);

  /// {first, ..., last - 1}
  static VertexSet range(Vertex first, Vertex last);

  std::span<const Vertex> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(Vertex v) const;
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

/// Immutable k-uniform hypergraph on {0..n-1}. Edges are sorted and the edge
/// list is strictly increasing in lexicographic order, so two hypergraphs are
/// equal exactly when their edge sets are.
class Hypergraph {
 public:
  Hypergraph(int n, int k);

  /// Validates and canonicalizes. Input order is irrelevant; an edge of the
  /// wrong size, an out-of-range vertex, or a repeated edge throws an Error
  /// naming the offending edge.
  static Hypergraph build(int n, int k, std::vector<Edge> edges);

  int vertex_count() const noexcept { return n_; }
  int uniformity() const noexcept { return k_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_.at(i); }

  /// Index of `e` (sorted) in the canonical edge list, if present.
  std::optional<std::size_t> find_edge(std::span<const Vertex> e) const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  struct Trusted {};
  Hypergraph(Trusted, int n, int k, std::vector<Edge> edges);

  int n_ = 0;
  int k_ = 1;
  std::vector<Edge> edges_;

  friend Hypergraph complete(int n, int k);
};

/// A hypergraph on a vertex subset, reindexed to 0..m-1.
/// original[i] is the label of new vertex i in the parent hypergraph.
struct SubHypergraph {
  Hypergraph graph;
  std::vector<Vertex> original;
};

/// K_n^(k): all C(n, k) edges.
Hypergraph complete(int n, int k);

/// Number of edges containing S. degree(g, {}) == e(g).
std::size_t degree(const Hypergraph& g, const VertexSet& s);

/// Minimum of degree(g, S) over all d-subsets S; d = 0 gives e(g).
std::size_t min_degree(const Hypergraph& g, int d);

/// Degree of every single vertex.
std::vector<std::size_t> vertex_degrees(const Hypergraph& g);

/// Link of S: the (k - |S|)-uniform hypergraph on V \ S whose edges e satisfy
/// e ∪ S ∈ E(g). Requires |S| < k.
SubHypergraph neighbourhood(const Hypergraph& g, const VertexSet& s);

/// g[U]: edges contained in U, reindexed onto U.
SubHypergraph induced(const Hypergraph& g, const VertexSet& u);

/// Image of g under the vertex map v -> perm[v]; perm must be a permutation.
Hypergraph relabel(const Hypergraph& g, std::span<const Vertex> perm);

/// Text format: "n k" header, then one edge per line. Lines starting with
/// '#' and blank lines are ignored.
std::string serialize(const Hypergraph& g);
Hypergraph parse_hypergraph(std::string_view text);

std::string edge_to_string(std::span<const Vertex> e);

}  // namespace hypermatch
