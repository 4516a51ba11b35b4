#include "hypermatch/integer_matching.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>

#include "hypermatch/error.hpp"

namespace hypermatch {

bool is_matching(const Hypergraph& g, const Matching& m) {
  std::vector<bool> used(static_cast<std::size_t>(g.vertex_count()), false);
  for (std::size_t i = 0; i < m.edges.size(); ++i) {
    if (m.edges[i] >= g.edge_count()) return false;
    if (i > 0 && m.edges[i] <= m.edges[i - 1]) return false;
    for (Vertex v : g.edge(m.edges[i])) {
      if (used[static_cast<std::size_t>(v)]) return false;
      used[static_cast<std::size_t>(v)] = true;
    }
  }
  return true;
}

namespace {

using Mask = std::uint64_t;

class BranchAndBound {
 public:
  BranchAndBound(const Hypergraph& g, std::optional<std::size_t> target, SearchOptions options)
      : k_(static_cast<std::size_t>(g.uniformity())), target_(target), options_(options) {
    if (g.vertex_count() > 64) {
      throw Error(ErrorCode::infeasible_size, "matching search supports at most 64 vertices");
    }
    masks_.reserve(g.edge_count());
    for (const Edge& e : g.edges()) {
      Mask m = 0;
      for (Vertex v : e) m |= Mask{1} << v;
      masks_.push_back(m);
    }
  }

  void run(int n) {
    std::vector<std::uint32_t> all(masks_.size());
    std::iota(all.begin(), all.end(), 0u);
    const Mask active = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
    explore(active, all);
  }

  Matching best() const {
    Matching m{std::vector<std::size_t>(best_.begin(), best_.end())};
    std::sort(m.edges.begin(), m.edges.end());
    return m;
  }

  bool stopped_early() const noexcept { return done_; }
  const SearchStats& stats() const noexcept { return stats_; }

 private:
  std::size_t needed() const { return target_ ? *target_ : best_.size() + 1; }

  void explore(Mask active, const std::vector<std::uint32_t>& parent) {
    ++stats_.nodes;
    if (current_.size() > best_.size()) {
      best_ = current_;
      if (target_ && best_.size() >= *target_) {
        done_ = true;
        return;
      }
    }
    std::vector<std::uint32_t> cand;
    cand.reserve(parent.size());
    for (std::uint32_t e : parent) {
      if ((masks_[e] & ~active) == 0) cand.push_back(e);
    }
    if (cand.empty()) return;

    const std::size_t counting =
        std::min<std::size_t>(static_cast<std::size_t>(std::popcount(active)) / k_, cand.size());
    if (current_.size() + counting < needed()) return;

    // With one edge still needed the LP cannot cut: cand is non-empty.
    std::vector<Rational> weights;
    const bool use_lp = options_.lp_bound && needed() > current_.size() + 1;
    if (use_lp) {
      const Rational value = residual_lp(cand, weights);
      const BigInt whole = floor(value);
      if (current_.size() + whole.get_ui() < needed()) return;
    }

    // Branch on the vertex of largest residual degree.
    std::array<std::size_t, 64> deg{};
    for (std::uint32_t e : cand) {
      for (Mask m = masks_[e]; m; m &= m - 1) ++deg[static_cast<std::size_t>(std::countr_zero(m))];
    }
    const auto pivot = static_cast<int>(std::max_element(deg.begin(), deg.end()) - deg.begin());
    const Mask bit = Mask{1} << pivot;

    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      if (masks_[cand[i]] & bit) order.push_back(i);
    }
    if (use_lp) {
      std::stable_sort(order.begin(), order.end(),
                       [&](std::size_t a, std::size_t b) { return weights[a] > weights[b]; });
    }
    for (std::size_t i : order) {
      current_.push_back(cand[i]);
      explore(active & ~masks_[cand[i]], cand);
      current_.pop_back();
      if (done_) return;
    }
    explore(active & ~bit, cand);
  }

  Rational residual_lp(const std::vector<std::uint32_t>& cand, std::vector<Rational>& weights) {
    ++stats_.lp_solves;
    Mask touched = 0;
    for (std::uint32_t e : cand) touched |= masks_[e];
    std::array<int, 64> index{};
    int next = 0;
    for (Mask m = touched; m; m &= m - 1) index[static_cast<std::size_t>(std::countr_zero(m))] = next++;
    std::vector<Edge> edges;
    edges.reserve(cand.size());
    for (std::uint32_t e : cand) {
      Edge mapped;
      for (Mask m = masks_[e]; m; m &= m - 1) mapped.push_back(index[static_cast<std::size_t>(std::countr_zero(m))]);
      edges.push_back(std::move(mapped));
    }
    return fractional_matching_number(next, edges, &weights);
  }

  std::size_t k_;
  std::optional<std::size_t> target_;
  SearchOptions options_;
  std::vector<Mask> masks_;
  std::vector<std::uint32_t> current_;
  std::vector<std::uint32_t> best_;
  bool done_ = false;
  SearchStats stats_;
};

}  // namespace

MatchingSearch max_matching(const Hypergraph& g, SearchOptions options) {
  BranchAndBound search(g, std::nullopt, options);
  search.run(g.vertex_count());
  return {search.best(), true, search.stats()};
}

std::optional<Matching> find_matching_of_size(const Hypergraph& g, std::size_t size,
                                              SearchOptions options) {
  if (size == 0) return Matching{};
  BranchAndBound search(g, size, options);
  search.run(g.vertex_count());
  if (!search.stopped_early()) return std::nullopt;
  return search.best();
}

RoundedMatching round_fractional(const Hypergraph& g, const FractionalMatching& f,
                                 const Rational& shrink) {
  if (sgn(shrink) <= 0 || shrink > 1) {
    throw Error(ErrorCode::domain, "shrink must lie in (0, 1], got " + to_string(shrink));
  }
  if (!is_fractional_matching(g, f)) {
    throw Error(ErrorCode::invalid_argument, "weights are not a fractional matching of the hypergraph");
  }
  std::vector<std::size_t> order;
  for (std::size_t j = 0; j < g.edge_count(); ++j) {
    if (sgn(f.weights[j]) > 0) order.push_back(j);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return f.weights[a] > f.weights[b]; });

  std::vector<bool> used(static_cast<std::size_t>(g.vertex_count()), false);
  RoundedMatching out{{}, f.size * shrink};
  for (std::size_t j : order) {
    const Edge& e = g.edge(j);
    if (std::any_of(e.begin(), e.end(), [&](Vertex v) { return used[static_cast<std::size_t>(v)]; })) continue;
    for (Vertex v : e) used[static_cast<std::size_t>(v)] = true;
    out.matching.edges.push_back(j);
  }
  std::sort(out.matching.edges.begin(), out.matching.edges.end());
  return out;
}

}  // namespace hypermatch
