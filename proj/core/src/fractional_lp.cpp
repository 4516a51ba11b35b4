#include "hypermatch/fractional_lp.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "hypermatch/combinatorics.hpp"
#include "hypermatch/error.hpp"
#include "hypermatch/simplex.hpp"

namespace hypermatch {

namespace {

Rational sum(std::span<const Rational> xs) {
  Rational total = 0;
  for (const auto& x : xs) total += x;
  return total;
}

bool in_unit_interval(const Rational& x) { return sgn(x) >= 0 && x <= 1; }

/// max 1.x  s.t.  incidence x <= 1, x >= 0.
PackingSimplex::Result solve_matching_lp(int n, std::span<const Edge> edges) {
  std::vector<std::vector<Rational>> a(static_cast<std::size_t>(n),
                                       std::vector<Rational>(edges.size(), Rational(0)));
  for (std::size_t j = 0; j < edges.size(); ++j) {
    for (Vertex v : edges[j]) a[static_cast<std::size_t>(v)][j] = 1;
  }
  PackingSimplex lp(std::move(a), std::vector<Rational>(static_cast<std::size_t>(n), Rational(1)),
                    std::vector<Rational>(edges.size(), Rational(1)));
  auto result = lp.solve();
  if (!result.bounded) throw Error(ErrorCode::solver_failure, "matching LP reported unbounded");
  return result;
}

/// The cover LP  min 1.y  s.t.  sum_{v in e} y_v >= 1, 0 <= y <= 1, solved as a
/// program of its own. Substituting y = 1 - z turns it into the packing form
///   max 1.z  s.t.  sum_{v in e} z_v <= k - 1,  z <= 1,  z >= 0
/// whose optimum is n - tau*. Restricting y <= 1 loses nothing: capping any
/// cover weight at 1 keeps it a cover.
FractionalCover solve_cover_lp(const Hypergraph& g) {
  const std::size_t n = static_cast<std::size_t>(g.vertex_count());
  const std::size_t m = g.edge_count();
  std::vector<std::vector<Rational>> a(m + n, std::vector<Rational>(n, Rational(0)));
  std::vector<Rational> b(m + n, Rational(1));
  for (std::size_t j = 0; j < m; ++j) {
    for (Vertex v : g.edge(j)) a[j][static_cast<std::size_t>(v)] = 1;
    b[j] = g.uniformity() - 1;
  }
  for (std::size_t v = 0; v < n; ++v) a[m + v][v] = 1;
  PackingSimplex lp(std::move(a), std::move(b), std::vector<Rational>(n, Rational(1)));
  auto result = lp.solve();
  if (!result.bounded) throw Error(ErrorCode::solver_failure, "cover LP reported unbounded");
  std::vector<Rational> y(n);
  for (std::size_t v = 0; v < n; ++v) y[v] = 1 - result.primal[v];
  return make_cover(std::move(y));
}

}  // namespace

FractionalMatching make_matching(std::vector<Rational> weights) {
  Rational size = sum(weights);
  return {std::move(weights), std::move(size)};
}

FractionalCover make_cover(std::vector<Rational> weights) {
  Rational size = sum(weights);
  return {std::move(weights), std::move(size)};
}

bool is_fractional_matching(const Hypergraph& g, const FractionalMatching& m) {
  if (m.weights.size() != g.edge_count() || m.size != sum(m.weights)) return false;
  std::vector<Rational> load(static_cast<std::size_t>(g.vertex_count()), Rational(0));
  for (std::size_t j = 0; j < g.edge_count(); ++j) {
    if (!in_unit_interval(m.weights[j])) return false;
    for (Vertex v : g.edge(j)) load[static_cast<std::size_t>(v)] += m.weights[j];
  }
  return std::all_of(load.begin(), load.end(), [](const Rational& x) { return x <= 1; });
}

bool is_fractional_cover(const Hypergraph& g, const FractionalCover& c) {
  if (c.weights.size() != static_cast<std::size_t>(g.vertex_count()) || c.size != sum(c.weights)) {
    return false;
  }
  if (!std::all_of(c.weights.begin(), c.weights.end(), in_unit_interval)) return false;
  return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
    Rational total = 0;
    for (Vertex v : e) total += c.weights[static_cast<std::size_t>(v)];
    return total >= 1;
  });
}

FractionalSolution solve_fractional(const Hypergraph& g) {
  auto lp = solve_matching_lp(g.vertex_count(), g.edges());
  FractionalSolution out{make_matching(std::move(lp.primal)), make_cover(std::move(lp.dual)), lp.pivots};
  if (!is_fractional_matching(g, out.matching)) {
    throw Error(ErrorCode::solver_failure, "simplex returned an infeasible fractional matching");
  }
  if (!is_fractional_cover(g, out.cover)) {
    throw Error(ErrorCode::solver_failure, "simplex duals are not a fractional cover");
  }
  if (out.matching.size != out.cover.size || out.matching.size != lp.value) {
    throw Error(ErrorCode::solver_failure, "primal " + to_string(out.matching.size) +
                                               " and dual " + to_string(out.cover.size) + " differ");
  }
  return out;
}

Rational fractional_matching_number(int n, std::span<const Edge> edges,
                                    std::vector<Rational>* edge_weights) {
  auto lp = solve_matching_lp(n, edges);
  if (edge_weights) *edge_weights = std::move(lp.primal);
  return lp.value;
}

FractionalMatching max_fractional_matching(const Hypergraph& g) {
  return solve_fractional(g).matching;
}

FractionalCover min_fractional_cover(const Hypergraph& g) { return solve_fractional(g).cover; }

DualityReport check_duality(const Hypergraph& g) {
  const auto primal = solve_matching_lp(g.vertex_count(), g.edges());
  FractionalMatching matching = make_matching(primal.primal);
  FractionalCover cover = solve_cover_lp(g);
  if (!is_fractional_matching(g, matching) || !is_fractional_cover(g, cover)) {
    throw Error(ErrorCode::solver_failure, "duality check produced an infeasible certificate");
  }
  return {matching.size, cover.size, matching.size == cover.size};
}

std::vector<Edge> closure_link(int n, int k, std::span<const Rational> w, const VertexSet& l) {
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < n; ++v) {
    if (!l.contains(v)) rest.push_back(v);
  }
  Rational base = 0;
  for (Vertex v : l) base += w[static_cast<std::size_t>(v)];
  std::vector<Edge> link;
  const int r = k - static_cast<int>(l.size());
  for_each_combination(static_cast<int>(rest.size()), r, [&](std::span<const int> pos) {
    Rational total = base;
    Edge t;
    for (int p : pos) {
      const Vertex v = rest[static_cast<std::size_t>(p)];
      total += w[static_cast<std::size_t>(v)];
      t.push_back(v);
    }
    if (total >= 1) link.push_back(std::move(t));
  });
  return link;
}

TransformedCover transform_cover(const Hypergraph& g, const FractionalCover& w, const VertexSet& l) {
  const int n = g.vertex_count();
  const int k = g.uniformity();
  const int d = static_cast<int>(l.size());
  if (!l.empty() && l.members().back() >= n) {
    throw Error(ErrorCode::vertex_out_of_range, "L = " + edge_to_string(l.members()) + " is outside the vertex range");
  }
  if (d < 1 || d > k - 2) {
    throw Error(ErrorCode::domain, "transform needs 1 <= |L| <= k - 2, got |L| = " + std::to_string(d));
  }
  if (!is_fractional_cover(g, w)) {
    throw Error(ErrorCode::invalid_argument, "weights are not a fractional cover of the hypergraph");
  }

  std::vector<Rational> averaged = w.weights;
  Rational link_weight = 0;
  for (Vertex v : l) link_weight += w.weights[static_cast<std::size_t>(v)];
  link_weight /= d;
  for (Vertex v : l) averaged[static_cast<std::size_t>(v)] = link_weight;
  if (link_weight * k >= 1) {
    throw Error(ErrorCode::domain, "w(L) = " + to_string(link_weight) + " is not below 1/k");
  }

  const Rational scale = 1 - link_weight * k;
  TransformedCover out;
  out.link_weight = link_weight;
  std::vector<Rational> lowered;
  std::vector<Rational> extended(static_cast<std::size_t>(n), Rational(0));
  for (Vertex v = 0; v < n; ++v) {
    if (l.contains(v)) continue;
    Rational x = (averaged[static_cast<std::size_t>(v)] - link_weight) / scale;
    if (sgn(x) < 0) x = 0;
    if (x > 1) x = 1;
    extended[static_cast<std::size_t>(v)] = x;
    lowered.push_back(std::move(x));
    out.original.push_back(v);
  }
  out.cover = make_cover(std::move(lowered));

  const auto link = closure_link(n, k, averaged, l);
  out.closure_link_edges = link.size();
  for (const Edge& t : link) {
    Rational total = 0;
    for (Vertex v : t) total += extended[static_cast<std::size_t>(v)];
    if (total < 1) {
      throw Error(ErrorCode::solver_failure,
                  "transformed weights miss closure link edge " + edge_to_string(t));
    }
  }
  return out;
}

CoverEdgeBound cover_edge_bound(const Hypergraph& g, const FractionalCover& w,
                                std::span<const Edge> subset, const VertexSet& s) {
  if (!is_fractional_cover(g, w)) {
    throw Error(ErrorCode::invalid_argument, "weights are not a fractional cover of the hypergraph");
  }
  std::vector<bool> chosen(g.edge_count(), false);
  for (const Edge& e : subset) {
    Edge sorted = e;
    std::sort(sorted.begin(), sorted.end());
    const auto idx = g.find_edge(sorted);
    if (!idx) throw Error(ErrorCode::invalid_argument, "edge " + edge_to_string(e) + " is not in E");
    chosen[*idx] = true;
  }
  CoverEdgeBound out;
  out.lhs = g.edge_count();
  out.rhs = 0;
  for (std::size_t j = 0; j < g.edge_count(); ++j) {
    for (Vertex v : g.edge(j)) {
      if (!s.contains(v) || chosen[j]) out.rhs += w.weights[static_cast<std::size_t>(v)];
    }
    if (!chosen[j]) out.rhs += 1;
  }
  out.holds = Rational(static_cast<unsigned long>(out.lhs)) <= out.rhs;
  return out;
}

}  // namespace hypermatch
