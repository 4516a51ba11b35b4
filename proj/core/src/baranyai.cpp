#include "hypermatch/baranyai.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>
#include <set>
#include <string>

#include "hypermatch/combinatorics.hpp"
#include "hypermatch/error.hpp"

namespace hypermatch {

namespace {

/// Dinic max flow with integer capacities.
class MaxFlow {
 public:
  explicit MaxFlow(std::size_t nodes) : adj_(nodes), level_(nodes), next_(nodes) {}

  std::size_t add_edge(std::size_t from, std::size_t to, std::int64_t cap) {
    adj_[from].push_back(arcs_.size());
    arcs_.push_back({to, cap});
    adj_[to].push_back(arcs_.size());
    arcs_.push_back({from, 0});
    return arcs_.size() - 2;
  }

  std::int64_t flow_on(std::size_t arc) const { return arcs_[arc ^ 1].cap; }

  std::int64_t run(std::size_t source, std::size_t sink) {
    std::int64_t total = 0;
    while (bfs(source, sink)) {
      std::fill(next_.begin(), next_.end(), 0);
      while (std::int64_t pushed = dfs(source, sink, std::numeric_limits<std::int64_t>::max())) {
        total += pushed;
      }
    }
    return total;
  }

 private:
  struct Arc {
    std::size_t to;
    std::int64_t cap;
  };

  bool bfs(std::size_t source, std::size_t sink) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<std::size_t> q;
    level_[source] = 0;
    q.push(source);
    while (!q.empty()) {
      const std::size_t u = q.front();
      q.pop();
      for (std::size_t a : adj_[u]) {
        if (arcs_[a].cap > 0 && level_[arcs_[a].to] < 0) {
          level_[arcs_[a].to] = level_[u] + 1;
          q.push(arcs_[a].to);
        }
      }
    }
    return level_[sink] >= 0;
  }

  std::int64_t dfs(std::size_t u, std::size_t sink, std::int64_t limit) {
    if (u == sink) return limit;
    for (std::size_t& i = next_[u]; i < adj_[u].size(); ++i) {
      const std::size_t a = adj_[u][i];
      const std::size_t v = arcs_[a].to;
      if (arcs_[a].cap <= 0 || level_[v] != level_[u] + 1) continue;
      if (std::int64_t pushed = dfs(v, sink, std::min(limit, arcs_[a].cap))) {
        arcs_[a].cap -= pushed;
        arcs_[a ^ 1].cap += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<Arc> arcs_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<int> level_;
  std::vector<std::size_t> next_;
};

}  // namespace

Decomposition decompose(int n, int l) {
  if (l < 1 || n < l || n % l != 0) {
    throw Error(ErrorCode::domain, "decomposition needs l >= 1 and n a positive multiple of l (n = " +
                                       std::to_string(n) + ", l = " + std::to_string(l) + ")");
  }
  const std::size_t rows = binomial(n - 1, l - 1);
  const std::size_t parts = static_cast<std::size_t>(n / l);
  std::vector<std::vector<Edge>> grid(rows, std::vector<Edge>(parts));

  for (int j = 0; j < n; ++j) {
    // Part contents seen so far; |T| = l parts cannot grow and get no node.
    std::map<Edge, std::size_t> node_of;
    for (const auto& row : grid) {
      for (const Edge& part : row) {
        if (static_cast<int>(part.size()) < l) node_of.emplace(part, 0);
      }
    }
    std::size_t next = rows + 1;
    for (auto& [part, id] : node_of) id = next++;
    const std::size_t source = 0;
    const std::size_t sink = next;
    MaxFlow flow(next + 1);

    for (std::size_t i = 0; i < rows; ++i) flow.add_edge(source, 1 + i, 1);
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> row_arcs(rows);  // (arc, node)
    for (std::size_t i = 0; i < rows; ++i) {
      std::map<std::size_t, std::int64_t> multiplicity;
      for (const Edge& part : grid[i]) {
        if (static_cast<int>(part.size()) < l) ++multiplicity[node_of.at(part)];
      }
      for (const auto& [node, count] : multiplicity) {
        row_arcs[i].emplace_back(flow.add_edge(1 + i, node, count), node);
      }
    }
    for (const auto& [part, id] : node_of) {
      const auto quota = binomial(n - j - 1, l - static_cast<int>(part.size()) - 1);
      flow.add_edge(id, sink, static_cast<std::int64_t>(quota));
    }
    if (flow.run(source, sink) != static_cast<std::int64_t>(rows)) {
      throw Error(ErrorCode::solver_failure, "integral flow did not saturate at vertex " + std::to_string(j));
    }

    std::vector<const Edge*> part_of_node(next, nullptr);
    for (const auto& [part, id] : node_of) part_of_node[id] = &part;
    for (std::size_t i = 0; i < rows; ++i) {
      const auto chosen = std::find_if(row_arcs[i].begin(), row_arcs[i].end(),
                                       [&](const auto& an) { return flow.flow_on(an.first) > 0; });
      const Edge target = *part_of_node[chosen->second];
      auto slot = std::find(grid[i].begin(), grid[i].end(), target);
      slot->push_back(j);
    }
  }

  Decomposition out{n, l, {}};
  out.matchings.reserve(rows);
  for (auto& row : grid) {
    std::sort(row.begin(), row.end());
    out.matchings.push_back(std::move(row));
  }
  if (!is_valid_decomposition(out)) {
    throw Error(ErrorCode::solver_failure, "constructed decomposition failed verification");
  }
  return out;
}

bool is_valid_decomposition(const Decomposition& d) {
  const int n = d.n;
  const int l = d.part_size;
  if (l < 1 || n < l || n % l != 0) return false;
  if (d.matchings.size() != binomial(n - 1, l - 1)) return false;
  std::set<Edge> seen;
  for (const auto& matching : d.matchings) {
    std::vector<int> hits(static_cast<std::size_t>(n), 0);
    for (const Edge& e : matching) {
      if (static_cast<int>(e.size()) != l || !std::is_sorted(e.begin(), e.end())) return false;
      if (std::adjacent_find(e.begin(), e.end()) != e.end()) return false;
      for (Vertex v : e) {
        if (v < 0 || v >= n) return false;
        ++hits[static_cast<std::size_t>(v)];
      }
      if (!seen.insert(e).second) return false;
    }
    if (std::any_of(hits.begin(), hits.end(), [](int h) { return h != 1; })) return false;
  }
  return seen.size() == binomial(n, l);
}

std::uint64_t cross_edge_target(int n, int k, int l, int s_size, const Rational& eta) {
  const Rational scaled = eta * Rational(from_big(binomial_big(s_size, l - 1) * binomial_big(n - s_size, k - l)));
  return floor(scaled).get_ui();
}

std::uint64_t cross_edge_capacity(int n, int k, int l, int s_size) {
  return binomial(s_size - 1, l - 1) * binomial(n - s_size, k - l);
}

CrossEdgeSet uniform_cross_edges(int n, int k, int l, const VertexSet& s, const Rational& eta) {
  const int s_size = static_cast<int>(s.size());
  if (l < 1 || l > k) {
    throw Error(ErrorCode::domain, "cross edges need 1 <= l <= k");
  }
  if (s_size == 0 || s_size % l != 0) {
    throw Error(ErrorCode::domain, "|S| must be a positive multiple of l");
  }
  if (s.members().back() >= n) {
    throw Error(ErrorCode::vertex_out_of_range, "S is not inside [0, n)");
  }
  if (n - s_size < k - l) throw Error(ErrorCode::domain, "need n - |S| >= k - l");
  if (sgn(eta) < 0 || eta >= 1) throw Error(ErrorCode::domain, "eta must lie in [0, 1)");

  const std::uint64_t target = cross_edge_target(n, k, l, s_size, eta);
  const std::uint64_t capacity = cross_edge_capacity(n, k, l, s_size);
  if (target > capacity) {
    throw Error(ErrorCode::domain,
                "per-vertex target " + std::to_string(target) + " exceeds the " +
                    std::to_string(capacity) + " edges of the stratum |e & S| = " + std::to_string(l) +
                    " through each vertex of S");
  }

  CrossEdgeSet out{{}, target};
  if (target == 0) return out;

  std::vector<Vertex> outside;
  for (Vertex v = 0; v < n; ++v) {
    if (!s.contains(v)) outside.push_back(v);
  }
  const auto extensions = combinations(static_cast<int>(outside.size()), k - l);
  const std::uint64_t per_matching = extensions.size();
  const std::uint64_t full = target / per_matching;
  const std::uint64_t partial = target % per_matching;

  const auto decomposition = decompose(s_size, l);
  auto emit = [&](const std::vector<Edge>& matching, std::uint64_t count) {
    for (const Edge& part : matching) {
      for (std::uint64_t x = 0; x < count; ++x) {
        Edge e;
        for (Vertex i : part) e.push_back(s.members()[static_cast<std::size_t>(i)]);
        for (int p : extensions[x]) e.push_back(outside[static_cast<std::size_t>(p)]);
        std::sort(e.begin(), e.end());
        out.edges.push_back(std::move(e));
      }
    }
  };
  for (std::uint64_t i = 0; i < full; ++i) emit(decomposition.matchings[i], per_matching);
  if (partial > 0) emit(decomposition.matchings[full], partial);
  std::sort(out.edges.begin(), out.edges.end());

  std::vector<std::uint64_t> through(static_cast<std::size_t>(n), 0);
  for (const Edge& e : out.edges) {
    for (Vertex v : e) ++through[static_cast<std::size_t>(v)];
  }
  for (Vertex v : s) {
    if (through[static_cast<std::size_t>(v)] != target) {
      throw Error(ErrorCode::solver_failure, "vertex " + std::to_string(v) + " is in " +
                                                 std::to_string(through[static_cast<std::size_t>(v)]) +
                                                 " edges, expected " + std::to_string(target));
    }
  }
  return out;
}

}  // namespace hypermatch
