#include "hypermatch/thresholds.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <string>
#include <thread>

#include "hypermatch/combinatorics.hpp"
#include "hypermatch/constructions.hpp"
#include "hypermatch/error.hpp"
#include "hypermatch/fractional_lp.hpp"
#include "hypermatch/integer_matching.hpp"

namespace hypermatch {

namespace {

using Mask = std::uint64_t;

struct Universe {
  int n;
  int k;
  int d;
  std::vector<Mask> masks;
  std::vector<Edge> edges;
  std::vector<std::vector<std::uint32_t>> dsets;  // colex ranks of the d-subsets of each edge
  std::size_t dset_count;
};

Universe make_universe(int n, int k, int d) {
  Universe u{n, k, d, {}, {}, {}, binomial(n, d)};
  std::vector<int> picked(static_cast<std::size_t>(d));
  for_each_combination(n, k, [&](std::span<const int> c) {
    Mask m = 0;
    for (int v : c) m |= Mask{1} << v;
    u.masks.push_back(m);
    u.edges.emplace_back(c.begin(), c.end());
    std::vector<std::uint32_t> ranks;
    for_each_combination(k, d, [&](std::span<const int> pos) {
      for (std::size_t i = 0; i < pos.size(); ++i) picked[i] = c[static_cast<std::size_t>(pos[i])];
      ranks.push_back(static_cast<std::uint32_t>(colex_rank(picked)));
    });
    u.dsets.push_back(std::move(ranks));
  });
  return u;
}

/// True when some `need` pairwise disjoint edges among `edges[from..]` avoid `blocked`.
bool has_disjoint(const std::vector<Mask>& edges, std::size_t from, Mask blocked, std::size_t need) {
  if (need == 0) return true;
  for (std::size_t i = from; i < edges.size(); ++i) {
    if (edges.size() - i < need) return false;
    if (edges[i] & blocked) continue;
    if (has_disjoint(edges, i + 1, blocked | edges[i], need - 1)) return true;
  }
  return false;
}

struct Outcome {
  std::int64_t best = -1;
  std::vector<std::uint32_t> witness;
  std::uint64_t nodes = 0;
};

/// Depth-first walk over target-free edge subsets, include-before-exclude.
class Enumerator {
 public:
  Enumerator(const Universe& u, MatchingKind kind, const Rational& target,
             const std::atomic<std::int64_t>* shared_best)
      : u_(u), kind_(kind), target_(target), shared_best_(shared_best),
        upper_(u.dset_count, binomial(u.n - u.d, u.k - u.d)) {
    if (kind_ == MatchingKind::integer) need_ = target.get_num().get_ui();
  }

  /// Replays a fixed include/exclude prefix; false when the prefix is not
  /// reachable by the walk (an include that breaks target-freeness, or a
  /// pruned exclusion).
  bool apply_prefix(std::span<const char> includes) {
    for (std::size_t i = 0; i < includes.size(); ++i) {
      if (includes[i]) {
        if (!can_include(static_cast<std::uint32_t>(i))) return false;
        chosen_.push_back(static_cast<std::uint32_t>(i));
        chosen_masks_.push_back(u_.masks[i]);
      } else {
        exclude(static_cast<std::uint32_t>(i));
        if (!promising()) return false;
      }
    }
    return true;
  }

  void walk(std::size_t i) {
    ++out_.nodes;
    if (i == u_.masks.size()) {
      const auto value = static_cast<std::int64_t>(*std::min_element(upper_.begin(), upper_.end()));
      if (value > out_.best) {
        out_.best = value;
        out_.witness = chosen_;
      }
      return;
    }
    const auto e = static_cast<std::uint32_t>(i);
    if (can_include(e)) {
      chosen_.push_back(e);
      chosen_masks_.push_back(u_.masks[i]);
      walk(i + 1);
      chosen_.pop_back();
      chosen_masks_.pop_back();
    }
    exclude(e);
    if (promising()) walk(i + 1);
    restore(e);
  }

  const Outcome& outcome() const noexcept { return out_; }

 private:
  bool promising() const {
    const auto bound = static_cast<std::int64_t>(*std::min_element(upper_.begin(), upper_.end()));
    if (bound <= out_.best) return false;
    return !shared_best_ || bound >= shared_best_->load(std::memory_order_relaxed);
  }

  void exclude(std::uint32_t e) {
    for (std::uint32_t r : u_.dsets[e]) --upper_[r];
  }
  void restore(std::uint32_t e) {
    for (std::uint32_t r : u_.dsets[e]) ++upper_[r];
  }

  bool can_include(std::uint32_t e) const {
    if (kind_ == MatchingKind::integer) {
      return !has_disjoint(chosen_masks_, 0, u_.masks[e], need_ - 1);
    }
    std::vector<Edge> edges;
    edges.reserve(chosen_.size() + 1);
    for (std::uint32_t c : chosen_) edges.push_back(u_.edges[c]);
    edges.push_back(u_.edges[e]);
    return fractional_matching_number(u_.n, edges) < target_;
  }

  const Universe& u_;
  MatchingKind kind_;
  Rational target_;
  const std::atomic<std::int64_t>* shared_best_;
  std::size_t need_ = 0;
  std::vector<std::uint64_t> upper_;  // d-degrees if every undecided edge were kept
  std::vector<std::uint32_t> chosen_;
  std::vector<Mask> chosen_masks_;
  Outcome out_;
};

void validate(const ThresholdQuery& q) {
  if (q.k < 1 || q.n < 0) throw Error(ErrorCode::domain, "threshold needs k >= 1 and n >= 0");
  if (q.d < 0 || q.d > q.k - 1) throw Error(ErrorCode::domain, "threshold needs 0 <= d <= k - 1");
  if (q.d > q.n) throw Error(ErrorCode::domain, "threshold needs d <= n");
  if (q.n > 64) throw Error(ErrorCode::infeasible_size, "threshold enumeration supports n <= 64");
  if (sgn(q.target) < 0) throw Error(ErrorCode::domain, "matching size must be >= 0");
  if (q.kind == MatchingKind::integer && q.target.get_den() != 1) {
    throw Error(ErrorCode::domain, "integer matching size must be an integer");
  }
  const std::uint64_t edges = binomial(q.n, q.k);
  if (edges > q.edge_cap) {
    throw Error(ErrorCode::infeasible_size,
                "C(" + std::to_string(q.n) + "," + std::to_string(q.k) + ") = " + std::to_string(edges) +
                    " edges exceeds the enumeration cap of " + std::to_string(q.edge_cap));
  }
}

void check_witness(const ThresholdQuery& q, const Hypergraph& w, std::uint64_t value) {
  const bool degree_ok = min_degree(w, q.d) + 1 == value;
  bool target_free = false;
  if (q.kind == MatchingKind::integer) {
    target_free = !find_matching_of_size(w, q.target.get_num().get_ui()).has_value();
  } else {
    target_free = max_fractional_matching(w).size < q.target;
  }
  if (!degree_ok || !target_free) {
    throw Error(ErrorCode::solver_failure, "extremal witness failed revalidation");
  }
}

}  // namespace

ThresholdResult threshold_exact(const ThresholdQuery& q) {
  validate(q);
  ThresholdResult result;
  if (sgn(q.target) == 0) return result;  // the empty matching always exists

  const Universe u = make_universe(q.n, q.k, q.d);
  const std::size_t edge_count = u.masks.size();
  const unsigned workers = std::max(1u, q.workers);

  std::vector<std::uint32_t> witness;
  std::int64_t best = -1;
  if (workers == 1 || edge_count < 4) {
    Enumerator walker(u, q.kind, q.target, nullptr);
    walker.walk(0);
    best = walker.outcome().best;
    witness = walker.outcome().witness;
    result.checked = walker.outcome().nodes;
  } else {
    // Split on the first `depth` edges. Prefixes are ranked in walk order
    // (include before exclude) and merged by keeping the lowest-ranked
    // prefix among those reaching the maximum, so the witness matches the
    // single-worker walk.
    const std::size_t depth = std::min<std::size_t>(edge_count, 10);
    const std::size_t prefixes = std::size_t{1} << depth;
    std::vector<Outcome> outcomes(prefixes);
    std::atomic<std::size_t> next{0};
    std::atomic<std::int64_t> shared{-1};
    auto work = [&] {
      std::vector<char> includes(depth);
      while (true) {
        const std::size_t rank = next.fetch_add(1);
        if (rank >= prefixes) return;
        for (std::size_t b = 0; b < depth; ++b) includes[b] = ((rank >> (depth - 1 - b)) & 1) == 0;
        Enumerator walker(u, q.kind, q.target, &shared);
        if (!walker.apply_prefix(includes)) continue;
        walker.walk(depth);
        outcomes[rank] = walker.outcome();
        std::int64_t seen = shared.load();
        while (outcomes[rank].best > seen && !shared.compare_exchange_weak(seen, outcomes[rank].best)) {
        }
      }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    for (const Outcome& o : outcomes) {
      result.checked += o.nodes;
      if (o.best > best) {
        best = o.best;
        witness = o.witness;
      }
    }
  }

  if (best < 0) throw Error(ErrorCode::solver_failure, "enumeration found no target-free hypergraph");
  result.value = static_cast<std::uint64_t>(best) + 1;
  std::vector<Edge> edges;
  for (std::uint32_t e : witness) edges.push_back(u.edges[e]);
  result.witness = Hypergraph::build(q.n, q.k, std::move(edges));
  check_witness(q, *result.witness, result.value);
  return result;
}

LowerBoundReport verify_lower_bound(int n, int k, int d, int s, std::uint64_t edge_cap) {
  const Certificate cert = fixed_set_certificate(n, k, d, s);
  LowerBoundReport report;
  report.construction_degree = cert.min_degree;
  report.lower_bound = cert.min_degree + 1;
  if (binomial(n, k) <= edge_cap) {
    ThresholdQuery q{k, n, d, MatchingKind::integer, Rational(s), edge_cap, 1};
    report.exact_integer = threshold_exact(q).value;
    q.kind = MatchingKind::fractional;
    report.exact_fractional = threshold_exact(q).value;
    report.consistent = report.lower_bound <= *report.exact_fractional &&
                        *report.exact_fractional <= *report.exact_integer;
    report.tight = *report.exact_integer == report.lower_bound;
  }
  return report;
}

SmoothnessReport smoothness_check(int k, int n, int s, std::uint64_t edge_cap) {
  if (s < 0) throw Error(ErrorCode::domain, "smoothness check needs s >= 0");
  ThresholdQuery q{k, n, 0, MatchingKind::fractional, Rational(s), edge_cap, 1};
  SmoothnessReport r;
  r.at_s = threshold_exact(q).value;
  q.target = s + 1;
  r.at_next = threshold_exact(q).value;
  r.allowance = static_cast<std::uint64_t>(k) * binomial(n - 1, k - 1) + 1;
  r.holds = r.at_next <= r.at_s + r.allowance;
  return r;
}

}  // namespace hypermatch
