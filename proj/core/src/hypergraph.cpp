#include "hypermatch/hypergraph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "hypermatch/combinatorics.hpp"
#include "hypermatch/error.hpp"

namespace hypermatch {

std::string edge_to_string(std::span<const Vertex> e) {
  std::string out = "{";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(e[i]);
  }
  return out + "}";
}

VertexSet::VertexSet(std::initializer_list<Vertex> members)
    : VertexSet(std::vector<Vertex>(members)) {}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw Error(ErrorCode::invalid_argument,
                "vertex set has a repeated member: " + edge_to_string(members_));
  }
  if (!members_.empty() && members_.front() < 0) {
    throw Error(ErrorCode::vertex_out_of_range,
                "negative vertex in set " + edge_to_string(members_));
  }
}

VertexSet VertexSet::range(Vertex first, Vertex last) {
  std::vector<Vertex> m;
  for (Vertex v = first; v < last; ++v) m.push_back(v);
  return VertexSet(std::move(m));
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

Hypergraph::Hypergraph(int n, int k) : n_(n), k_(k) {
  if (n < 0) throw Error(ErrorCode::invalid_argument, "vertex count must be >= 0");
  if (k < 1) throw Error(ErrorCode::invalid_argument, "uniformity must be >= 1");
}

Hypergraph::Hypergraph(Trusted, int n, int k, std::vector<Edge> edges)
    : n_(n), k_(k), edges_(std::move(edges)) {}

Hypergraph Hypergraph::build(int n, int k, std::vector<Edge> edges) {
  Hypergraph g(n, k);
  for (Edge& e : edges) {
    std::sort(e.begin(), e.end());
    const bool repeated = std::adjacent_find(e.begin(), e.end()) != e.end();
    if (static_cast<int>(e.size()) != k || repeated) {
      throw Error(ErrorCode::edge_arity, "edge " + edge_to_string(e) + " does not have exactly " +
                                             std::to_string(k) + " distinct vertices");
    }
    if (e.front() < 0 || e.back() >= n) {
      throw Error(ErrorCode::vertex_out_of_range,
                  "edge " + edge_to_string(e) + " has a vertex outside [0, " + std::to_string(n) + ")");
    }
  }
  std::sort(edges.begin(), edges.end());
  const auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end()) {
    throw Error(ErrorCode::duplicate_edge, "duplicate edge " + edge_to_string(*dup));
  }
  g.edges_ = std::move(edges);
  return g;
}

std::optional<std::size_t> Hypergraph::find_edge(std::span<const Vertex> e) const {
  const auto it = std::lower_bound(
      edges_.begin(), edges_.end(), e, [](const Edge& a, std::span<const Vertex> b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
      });
  if (it != edges_.end() && std::equal(it->begin(), it->end(), e.begin(), e.end())) {
    return static_cast<std::size_t>(it - edges_.begin());
  }
  return std::nullopt;
}

Hypergraph complete(int n, int k) {
  Hypergraph shape(n, k);
  std::vector<Edge> edges;
  // Lexicographic enumeration is already canonical.
  for_each_combination(n, k, [&](std::span<const int> c) { edges.emplace_back(c.begin(), c.end()); });
  return Hypergraph(Hypergraph::Trusted{}, n, k, std::move(edges));
}

namespace {

void check_in_range(const Hypergraph& g, const VertexSet& s) {
  if (!s.empty() && s.members().back() >= g.vertex_count()) {
    throw Error(ErrorCode::vertex_out_of_range,
                "vertex set " + edge_to_string(s.members()) + " exceeds [0, " +
                    std::to_string(g.vertex_count()) + ")");
  }
}

bool contains_all(const Edge& e, std::span<const Vertex> s) {
  return std::includes(e.begin(), e.end(), s.begin(), s.end());
}

}  // namespace

std::size_t degree(const Hypergraph& g, const VertexSet& s) {
  if (static_cast<int>(s.size()) > g.uniformity()) {
    throw Error(ErrorCode::domain, "degree of a set larger than the uniformity");
  }
  check_in_range(g, s);
  return static_cast<std::size_t>(std::count_if(
      g.edges().begin(), g.edges().end(), [&](const Edge& e) { return contains_all(e, s.members()); }));
}

std::size_t min_degree(const Hypergraph& g, int d) {
  if (d < 0 || d > g.uniformity()) {
    throw Error(ErrorCode::domain, "d = " + std::to_string(d) + " outside [0, k]");
  }
  if (d == 0) return g.edge_count();
  if (d > g.vertex_count()) {
    throw Error(ErrorCode::domain, "no d-subsets: d exceeds vertex count");
  }
  // Each edge contributes to C(k, d) counters indexed by colex rank.
  std::vector<std::size_t> counts(binomial(g.vertex_count(), d), 0);
  std::vector<int> picked(static_cast<std::size_t>(d));
  for (const Edge& e : g.edges()) {
    for_each_combination(g.uniformity(), d, [&](std::span<const int> pos) {
      for (std::size_t i = 0; i < pos.size(); ++i) picked[i] = e[static_cast<std::size_t>(pos[i])];
      ++counts[colex_rank(picked)];
    });
  }
  return *std::min_element(counts.begin(), counts.end());
}

std::vector<std::size_t> vertex_degrees(const Hypergraph& g) {
  std::vector<std::size_t> deg(static_cast<std::size_t>(g.vertex_count()), 0);
  for (const Edge& e : g.edges()) {
    for (Vertex v : e) ++deg[static_cast<std::size_t>(v)];
  }
  return deg;
}

namespace {

/// new index of each old vertex, -1 when dropped
std::vector<int> index_map(int n, std::span<const Vertex> kept) {
  std::vector<int> to_new(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < kept.size(); ++i) to_new[static_cast<std::size_t>(kept[i])] = static_cast<int>(i);
  return to_new;
}

}  // namespace

SubHypergraph neighbourhood(const Hypergraph& g, const VertexSet& s) {
  if (static_cast<int>(s.size()) >= g.uniformity()) {
    throw Error(ErrorCode::domain, "neighbourhood needs |S| < k");
  }
  check_in_range(g, s);
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!s.contains(v)) rest.push_back(v);
  }
  const auto to_new = index_map(g.vertex_count(), rest);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (!contains_all(e, s.members())) continue;
    Edge link;
    for (Vertex v : e) {
      if (!s.contains(v)) link.push_back(to_new[static_cast<std::size_t>(v)]);
    }
    edges.push_back(std::move(link));
  }
  const int m = static_cast<int>(rest.size());
  return {Hypergraph::build(m, g.uniformity() - static_cast<int>(s.size()), std::move(edges)),
          std::move(rest)};
}

SubHypergraph induced(const Hypergraph& g, const VertexSet& u) {
  check_in_range(g, u);
  std::vector<Vertex> kept(u.begin(), u.end());
  const auto to_new = index_map(g.vertex_count(), kept);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (!contains_all(kept, e)) continue;
    Edge mapped;
    for (Vertex v : e) mapped.push_back(to_new[static_cast<std::size_t>(v)]);
    edges.push_back(std::move(mapped));
  }
  const int m = static_cast<int>(kept.size());
  return {Hypergraph::build(m, g.uniformity(), std::move(edges)), std::move(kept)};
}

Hypergraph relabel(const Hypergraph& g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.vertex_count() ||
      !std::is_permutation(perm.begin(), perm.end(),
                           VertexSet::range(0, g.vertex_count()).begin())) {
    throw Error(ErrorCode::invalid_argument, "relabel needs a permutation of the vertex set");
  }
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    Edge mapped;
    for (Vertex v : e) mapped.push_back(perm[static_cast<std::size_t>(v)]);
    edges.push_back(std::move(mapped));
  }
  return Hypergraph::build(g.vertex_count(), g.uniformity(), std::move(edges));
}

std::string serialize(const Hypergraph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.uniformity() << '\n';
  for (const Edge& e : g.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
    out << '\n';
  }
  return out.str();
}

namespace {

std::vector<int> parse_ints(std::string_view line, std::size_t line_no) {
  std::vector<int> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    const std::string_view tok = line.substr(i, j - i);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw Error(ErrorCode::parse_error, "line " + std::to_string(line_no) +
                                              ": non-integer token '" + std::string(tok) + "'");
    }
    out.push_back(value);
    i = j;
  }
  return out;
}

}  // namespace

Hypergraph parse_hypergraph(std::string_view text) {
  std::optional<std::pair<int, int>> header;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') continue;
    auto values = parse_ints(line, line_no);
    if (!header) {
      if (values.size() != 2 || values[0] < 0 || values[1] < 1) {
        throw Error(ErrorCode::parse_error,
                    "line " + std::to_string(line_no) + ": header must be \"n k\" with n >= 0, k >= 1");
      }
      header.emplace(values[0], values[1]);
      continue;
    }
    if (static_cast<int>(values.size()) != header->second) {
      throw Error(ErrorCode::edge_arity, "line " + std::to_string(line_no) + ": edge " +
                                             edge_to_string(values) + " has " +
                                             std::to_string(values.size()) + " vertices, expected " +
                                             std::to_string(header->second));
    }
    edges.push_back(std::move(values));
  }
  if (!header) throw Error(ErrorCode::parse_error, "missing \"n k\" header");
  return Hypergraph::build(header->first, header->second, std::move(edges));
}

}  // namespace hypermatch
