#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "hypermatch/baranyai.hpp"
#include "hypermatch/bounds.hpp"
#include "hypermatch/constructions.hpp"
#include "hypermatch/error.hpp"
#include "hypermatch/fractional_lp.hpp"
#include "hypermatch/integer_matching.hpp"
#include "hypermatch/thresholds.hpp"

namespace hypermatch::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kVersion = "0.1.0";

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Hypergraph read_hypergraph(const std::string& path) {
  std::stringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    buffer << in.rdbuf();
  }
  return parse_hypergraph(buffer.str());
}

Json edge_json(const Edge& e) { return Json(e); }

Json cover_json(const FractionalCover& c, const std::vector<Vertex>* labels = nullptr) {
  Json weights = Json::array();
  for (std::size_t v = 0; v < c.weights.size(); ++v) {
    weights.push_back({{"vertex", labels ? (*labels)[v] : static_cast<Vertex>(v)},
                       {"weight", to_string(c.weights[v])}});
  }
  return {{"size", to_string(c.size)}, {"weights", weights}};
}

Json matching_weights_json(const Hypergraph& g, const FractionalMatching& m) {
  Json weights = Json::array();
  for (std::size_t j = 0; j < g.edge_count(); ++j) {
    weights.push_back({{"edge", edge_json(g.edge(j))}, {"weight", to_string(m.weights[j])}});
  }
  return weights;
}

Json matching_edges_json(const Hypergraph& g, const Matching& m) {
  Json edges = Json::array();
  for (std::size_t j : m.edges) edges.push_back(edge_json(g.edge(j)));
  return edges;
}

std::vector<Vertex> parse_vertex_list(const std::string& text) {
  std::vector<Vertex> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw Error(ErrorCode::parse_error, "bad vertex '" + item + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  return out;
}

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact fractional and integer matchings in k-uniform hypergraphs", "hypermatch"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a construction as hypergraph text");
  std::string gen_kind;
  int gen_n = 0, gen_k = 0, gen_s = 1;
  gen->add_option("kind", gen_kind, "hs | hprime | complete")
      ->required()
      ->check(CLI::IsMember({"hs", "hprime", "complete"}));
  gen->add_option("--n", gen_n, "vertex count")->required();
  gen->add_option("--k", gen_k, "uniformity")->required();
  auto* gen_s_opt = gen->add_option("--s", gen_s, "matching size blocked by hs");

  // match
  auto* match = app.add_subcommand("match", "Maximum fractional or integer matching");
  std::string match_file;
  bool frac = false, integral = false;
  std::size_t target = 0;
  match->add_option("FILE", match_file, "hypergraph file, '-' for stdin")->required();
  auto* frac_flag = match->add_flag("--frac", frac, "fractional matching via exact LP");
  auto* int_flag = match->add_flag("--int", integral, "integer matching via branch and bound");
  auto* target_opt = match->add_option("--target", target, "stop once a matching of this size is found");
  frac_flag->excludes(int_flag);
  target_opt->needs(int_flag);

  // cover
  auto* cover = app.add_subcommand("cover", "Minimum fractional vertex cover");
  std::string cover_file;
  cover->add_option("FILE", cover_file, "hypergraph file, '-' for stdin")->required();

  // duality
  auto* duality = app.add_subcommand("duality", "Compare matching and cover LP optima exactly");
  std::string duality_file;
  duality->add_option("FILE", duality_file, "hypergraph file, '-' for stdin")->required();

  // transform
  auto* transform = app.add_subcommand("transform", "Lower a fractional cover onto the link of a vertex set");
  std::string transform_file, transform_set, transform_weights;
  transform->add_option("FILE", transform_file, "hypergraph file, '-' for stdin")->required();
  transform->add_option("--set", transform_set, "comma-separated vertices of L")->required();
  transform->add_option("--weights", transform_weights,
                        "comma-separated p/q cover weights (default: an optimal cover)");

  // baranyai
  auto* baranyai = app.add_subcommand("baranyai", "Decompose K_n^(l) into perfect matchings");
  int bar_n = 0, bar_l = 0;
  baranyai->add_option("--n", bar_n)->required();
  baranyai->add_option("--l", bar_l)->required();

  // crossedges
  auto* cross = app.add_subcommand("crossedges", "Uniform-degree edge set across a vertex set S");
  int cross_n = 0, cross_k = 0, cross_l = 0, cross_s = 0;
  std::string cross_eta;
  cross->add_option("--n", cross_n)->required();
  cross->add_option("--k", cross_k)->required();
  cross->add_option("--l", cross_l)->required();
  cross->add_option("--s-size", cross_s, "S = {0, ..., s-size - 1}")->required();
  cross->add_option("--eta", cross_eta, "p/q in [0, 1)")->required();

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Evaluate a threshold formula exactly");
  std::string formula;
  BoundParams params;
  int bound_n = 0, bound_s = 0;
  std::string bound_a;
  bounds->add_option("--formula", formula, "formula id")->required();
  bounds->add_option("--k", params.k)->required();
  bounds->add_option("--d", params.d)->default_val(0);
  auto* bn = bounds->add_option("--n", bound_n);
  auto* bs = bounds->add_option("--s", bound_s);
  auto* ba = bounds->add_option("--a", bound_a, "matching fraction p/q");
  ba->excludes(bs);
  bs->needs(bn);

  // ak
  auto* ak = app.add_subcommand("ak", "Root a_k of 1 = (1 - (1-2a)^(k-1)) / (1-a)^(k-1)");
  int ak_k = 0;
  std::string ak_tol = "1/1000000000000";
  ak->add_option("--k", ak_k)->required();
  ak->add_option("--tol", ak_tol, "p/q")->capture_default_str();

  // threshold
  auto* threshold = app.add_subcommand("threshold", "Exact m_d^s(k,n) or f_d^s(k,n) by enumeration");
  std::string th_kind, th_frac;
  ThresholdQuery query;
  int th_s = 0;
  threshold->add_option("kind", th_kind, "m (integer) | f (fractional)")
      ->required()
      ->check(CLI::IsMember({"m", "f"}));
  threshold->add_option("--k", query.k)->required();
  threshold->add_option("--n", query.n)->required();
  threshold->add_option("--d", query.d)->required();
  auto* th_s_opt = threshold->add_option("--s", th_s);
  auto* th_frac_opt = threshold->add_option("--frac-target", th_frac, "fractional target p/q");
  threshold->add_option("--edge-cap", query.edge_cap)->capture_default_str();
  threshold->add_option("--workers", query.workers)->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    if (match->parsed() && !frac && !integral) {
      throw CLI::RequiredError("--frac or --int");
    }
    if (threshold->parsed()) {
      if (th_kind == "m" && !th_frac_opt->empty()) {
        throw CLI::ValidationError("--frac-target", "only valid for kind f");
      }
      if (th_s_opt->empty() && th_frac_opt->empty()) {
        throw CLI::RequiredError("--s (or --frac-target for kind f)");
      }
    }
    if (gen->parsed() && gen_kind == "hs" && gen_s_opt->empty()) {
      throw CLI::RequiredError("--s");
    }
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::CallForVersion& e) {
    out << kVersion << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "hypermatch: " << e.what() << '\n';
    err << "run with --help for usage\n";
    return 2;
  }

  Json result;
  try {
    if (gen->parsed()) {
      if (gen_kind == "hs") {
        out << serialize(fixed_set_construction(gen_n, gen_k, gen_s));
      } else if (gen_kind == "hprime") {
        const auto pc = parity_construction(gen_n, gen_k);
        out << "# parity construction, A = {0.." << pc.a_size - 1 << "}\n" << serialize(pc.graph);
      } else {
        out << serialize(complete(gen_n, gen_k));
      }
      return 0;
    }
    if (match->parsed()) {
      const Hypergraph g = read_hypergraph(match_file);
      if (frac) {
        const auto sol = solve_fractional(g);
        result = {{"size", to_string(sol.matching.size)},
                  {"weights", matching_weights_json(g, sol.matching)},
                  {"cover", cover_json(sol.cover)}};
      } else if (!target_opt->empty()) {
        const auto hit = find_matching_of_size(g, target);
        if (hit) {
          result = {{"size", hit->size()}, {"edges", matching_edges_json(g, *hit)},
                    {"optimal", hit->size() * static_cast<std::size_t>(g.uniformity()) + g.uniformity() >
                                    static_cast<std::size_t>(g.vertex_count())},
                    {"target", target}, {"target_met", true}};
        } else {
          const auto best = max_matching(g);
          result = {{"size", best.matching.size()}, {"edges", matching_edges_json(g, best.matching)},
                    {"optimal", true}, {"target", target}, {"target_met", false}};
        }
      } else {
        const auto best = max_matching(g);
        result = {{"size", best.matching.size()}, {"edges", matching_edges_json(g, best.matching)},
                  {"optimal", best.optimal}};
      }
    } else if (cover->parsed()) {
      const Hypergraph g = read_hypergraph(cover_file);
      result = cover_json(min_fractional_cover(g));
    } else if (duality->parsed()) {
      const auto report = check_duality(read_hypergraph(duality_file));
      result = {{"primal", to_string(report.primal)}, {"dual", to_string(report.dual)}, {"equal", report.equal}};
    } else if (transform->parsed()) {
      const Hypergraph g = read_hypergraph(transform_file);
      const FractionalCover w = transform_weights.empty()
                                    ? min_fractional_cover(g)
                                    : make_cover(parse_rational_list(transform_weights));
      const auto t = transform_cover(g, w, VertexSet(parse_vertex_list(transform_set)));
      result = {{"input", cover_json(w)},
                {"link_weight", to_string(t.link_weight)},
                {"closure_link_edges", t.closure_link_edges},
                {"cover", cover_json(t.cover, &t.original)}};
    } else if (baranyai->parsed()) {
      const auto dec = decompose(bar_n, bar_l);
      Json matchings = Json::array();
      for (const auto& m : dec.matchings) matchings.push_back(Json(m));
      result = {{"n", bar_n}, {"l", bar_l}, {"count", dec.matchings.size()}, {"matchings", matchings}};
    } else if (cross->parsed()) {
      const auto set = uniform_cross_edges(cross_n, cross_k, cross_l, VertexSet::range(0, cross_s),
                                           parse_rational(cross_eta));
      result = {{"n", cross_n}, {"k", cross_k}, {"l", cross_l}, {"s_size", cross_s},
                {"eta", to_string(parse_rational(cross_eta))}, {"per_vertex_count", set.target},
                {"edge_count", set.edges.size()}, {"edges", Json(set.edges)}};
    } else if (bounds->parsed()) {
      if (!bn->empty()) params.n = bound_n;
      if (!bs->empty()) params.s = bound_s;
      if (!ba->empty()) params.a = parse_rational(bound_a);
      const auto value = eval_bound(parse_formula(formula), params);
      result = {{"formula", formula}, {"k", params.k}, {"d", params.d},
                {"coefficient", to_string(value.coefficient)},
                {"coefficient_decimal", to_double(value.coefficient)}};
      if (value.absolute) result["absolute"] = to_string(*value.absolute);
    } else if (ak->parsed()) {
      const auto root = erdos_range_root(ak_k, parse_rational(ak_tol));
      result = {{"k", ak_k},
                {"a_k", to_string(root.root)},
                {"a_k_decimal", to_double(root.root)},
                {"k_a_k", to_double(root.root) * ak_k},
                {"residual", to_string(root.residual)},
                {"iterations", root.iterations}};
    } else if (threshold->parsed()) {
      query.kind = th_kind == "m" ? MatchingKind::integer : MatchingKind::fractional;
      query.target = th_frac_opt->empty() ? Rational(th_s) : parse_rational(th_frac);
      const auto start = std::chrono::steady_clock::now();
      const auto r = threshold_exact(query);
      const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start).count();
      result = {{"kind", th_kind}, {"k", query.k}, {"n", query.n}, {"d", query.d},
                {"target", to_string(query.target)}, {"value", r.value},
                {"witness", r.witness ? Json(serialize(*r.witness)) : Json(nullptr)},
                {"checked_count", r.checked}, {"runtime_ms", ms}};
    }
  } catch (const Error& e) {
    out << Json{{"error", code_name(e.code())}, {"detail", e.what()}}.dump() << '\n';
    return 1;
  } catch (const IoError& e) {
    out << Json{{"error", "io_error"}, {"detail", e.what()}}.dump() << '\n';
    return 1;
  }
  out << result.dump() << '\n';
  return 0;
}

}  // namespace hypermatch::cli
