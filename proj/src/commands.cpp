#include "kemeny/commands.hpp"

#include <algorithm>
#include <map>

#include "kemeny/error.hpp"
#include "kemeny/graph.hpp"
#include "kemeny/transforms.hpp"

namespace kemeny {

namespace {

const char* route_name(RouteChoice r) {
  switch (r) {
    case RouteChoice::Auto: return "auto";
    case RouteChoice::Forest: return "forest";
    case RouteChoice::Wiener: return "wiener";
    case RouteChoice::EdgeCut: return "edgecut";
  }
  return "auto";
}

void finish_inputs(Report& r, const std::string& extra = {}) {
  std::string canon = r.command;
  for (const auto& [k, v] : r.inputs) canon += "|" + k + "=" + v;
  r.input_digest = fnv1a_hex(canon + extra);
}

std::int64_t as_int(std::size_t v) { return static_cast<std::int64_t>(v); }

void require_order(std::size_t n) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "order must be at least 2");
}

TreeFamily family_for(std::size_t n, std::optional<std::uint32_t> d, const RunOptions& options) {
  TreeFamily all = enumerate_trees(n, options.enum_config);
  return d ? filter_diameter(all, *d) : all;
}

std::vector<Cell> tree_row(const TreeFamily& fam, std::size_t k, const InvariantReport& inv) {
  return {fam.codes[k].hex(), fam.members[k].graph().edge_string(), std::int64_t{fam.members[k].diameter()},
          inv.wiener, inv.kemeny};
}

const std::vector<std::string> kTreeColumns{"code", "edges", "diameter", "wiener", "kemeny"};

}  // namespace

int exit_code_for(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ResourceLimit: return 3;
    case ErrorKind::TheoremViolation: return 4;
    default: return 2;
  }
}

Report cmd_invariants(const std::string& source_name, const std::string& edge_list_text, RouteChoice route,
                      bool omega, const RunOptions&) {
  Report r;
  r.command = "invariants";
  r.inputs = {{"file", source_name}, {"route", route_name(route)}, {"omega", omega ? "true" : "false"}};
  finish_inputs(r, edge_list_text);

  const Graph g = parse_edge_list(edge_list_text);
  const InvariantReport inv = compute_invariants(g, route);
  auto& s = r.add_section("invariants", {"n", "m", "wiener", "gutman", "kemeny", "route", "edges"});
  s.rows.push_back({as_int(inv.n), as_int(inv.m), inv.wiener, inv.gutman, inv.kemeny, std::string(to_string(inv.route)),
                    g.edge_string()});

  if (omega) {
    if (g.size() + 1 != g.order()) throw Error(ErrorKind::RouteRequiresTree, "--omega applies to trees only");
    const Tree t = tree_from_graph(g);
    auto& w = r.add_section("omega", {"u", "v", "n1", "n2", "omega"});
    const WeightedEdgeMap weights = omega_weights(t);
    for (const auto& e : weights.entries()) {
      w.rows.push_back({std::int64_t{e.edge.u}, std::int64_t{e.edge.v}, std::int64_t{e.side_u}, std::int64_t{e.side_v},
                        static_cast<std::int64_t>(e.weight())});
    }
  }
  return r;
}

Report cmd_extremal(std::size_t n, std::optional<std::uint32_t> d, Objective objective, Metric metric,
                    const RunOptions& options) {
  Report r;
  r.command = "extremal";
  r.inputs = {{"n", std::to_string(n)},
              {"diameter", d ? std::to_string(*d) : "any"},
              {"objective", objective == Objective::Min ? "min" : "max"},
              {"metric", metric == Metric::Wiener ? "wiener" : "kemeny"}};
  finish_inputs(r);
  require_order(n);

  const TreeFamily fam = family_for(n, d, options);
  const auto inv = tree_invariants(fam.members);
  if (fam.size() == 0) throw Error(ErrorKind::InvalidArgument, "empty family");

  const auto better_w = [&](const BigInt& a, const BigInt& b) { return objective == Objective::Min ? a < b : a > b; };
  const auto better_k = [&](const Rational& a, const Rational& b) { return objective == Objective::Min ? a < b : a > b; };
  BigInt best_w = inv[0].wiener;
  Rational best_k = inv[0].kemeny;
  for (const auto& x : inv) {
    if (better_w(x.wiener, best_w)) best_w = x.wiener;
    if (better_k(x.kemeny, best_k)) best_k = x.kemeny;
  }
  std::vector<std::size_t> by_w;
  std::vector<std::size_t> by_k;
  for (std::size_t k = 0; k < inv.size(); ++k) {
    if (inv[k].wiener == best_w) by_w.push_back(k);
    if (inv[k].kemeny == best_k) by_k.push_back(k);
  }
  const auto& attaining = metric == Metric::Wiener ? by_w : by_k;

  auto& s = r.add_section("summary", {"family_size", "extremal_wiener", "extremal_kemeny", "attaining", "sets_coincide"});
  s.rows.push_back({as_int(fam.size()), best_w, best_k, as_int(attaining.size()), by_w == by_k});
  auto& t = r.add_section("attaining", kTreeColumns);
  for (const auto k : attaining) t.rows.push_back(tree_row(fam, k, inv[k]));
  return r;
}

Report cmd_mates(std::size_t n, MateMode mode, const RunOptions& options) {
  Report r;
  r.command = "mates";
  r.inputs = {{"n", std::to_string(n)}, {"mode", mode == MateMode::Census ? "census" : "op1"}};
  finish_inputs(r);
  require_order(n);

  const TreeFamily fam = enumerate_trees(n, options.enum_config);
  if (mode == MateMode::Census) {
    const auto inv = tree_invariants(fam.members);
    std::map<BigInt, std::vector<std::size_t>> buckets;
    for (std::size_t k = 0; k < inv.size(); ++k) buckets[inv[k].wiener].push_back(k);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (const auto& [w, members] : buckets) {
      for (std::size_t a = 0; a < members.size(); ++a) {
        for (std::size_t b = a + 1; b < members.size(); ++b) pairs.emplace_back(members[a], members[b]);
      }
    }
    std::sort(pairs.begin(), pairs.end());
    auto& s = r.add_section("summary", {"family_size", "pairs", "distinct_wiener"});
    s.rows.push_back({as_int(fam.size()), as_int(pairs.size()), as_int(buckets.size())});
    auto& p = r.add_section("pairs", {"code_a", "code_b", "edges_a", "edges_b", "wiener", "kemeny_a", "kemeny_b"});
    for (const auto& [a, b] : pairs) {
      p.rows.push_back({fam.codes[a].hex(), fam.codes[b].hex(), fam.members[a].graph().edge_string(),
                        fam.members[b].graph().edge_string(), inv[a].wiener, inv[a].kemeny, inv[b].kemeny});
    }
    return r;
  }

  const auto mates = mates_op1(fam);
  auto& s = r.add_section("summary", {"family_size", "pairs"});
  s.rows.push_back({as_int(fam.size()), as_int(mates.size())});
  auto& p = r.add_section("pairs", {"code_a", "code_b", "edges_a", "edges_b", "wiener", "kemeny_a", "kemeny_b",
                                    "source", "i1", "i2", "t", "d"});
  for (const auto& m : mates) {
    const bool source_first = m.source_code < m.image_code;
    const auto& ga = source_first ? m.source : m.image;
    const auto& gb = source_first ? m.image : m.source;
    p.rows.push_back({std::min(m.source_code, m.image_code).hex(), std::max(m.source_code, m.image_code).hex(),
                      ga.edge_string(), gb.edge_string(), m.wiener_source,
                      source_first ? m.kemeny_source : m.kemeny_image, source_first ? m.kemeny_image : m.kemeny_source,
                      std::string(source_first ? "a" : "b"), std::int64_t{m.i1}, std::int64_t{m.i2}, as_int(m.shape.t),
                      as_int(m.shape.d)});
  }
  return r;
}

Report cmd_maximal(std::size_t n, std::uint32_t d, bool check_theorem, const RunOptions& options) {
  Report r;
  r.command = "maximal";
  r.inputs = {{"n", std::to_string(n)}, {"d", std::to_string(d)}, {"check_theorem", check_theorem ? "true" : "false"}};
  finish_inputs(r);
  require_order(n);

  const TreeFamily fam = family(n, d, options.enum_config);
  const TreeFamily filtered = theorem_leaf_filter(fam);
  const TreeFamily maximal = maximal_elements(fam);

  std::vector<std::string> violations;
  for (std::size_t k = 0; k < maximal.size(); ++k) {
    if (!filtered.find(maximal.codes[k])) violations.push_back(maximal.codes[k].hex());
  }

  const auto filter_inv = tree_invariants(filtered.members);
  const auto max_inv = tree_invariants(maximal.members);
  std::size_t argmax = 0;
  for (std::size_t k = 1; k < max_inv.size(); ++k) {
    if (max_inv[k].kemeny > max_inv[argmax].kemeny) argmax = k;
  }

  auto& s = r.add_section("summary", {"family_size", "filter_count", "maximal_count", "max_wiener", "max_kemeny",
                                      "inclusion_holds"});
  s.rows.push_back({as_int(fam.size()), as_int(filtered.size()), as_int(maximal.size()),
                    max_inv.empty() ? Cell(std::string("-")) : Cell(max_inv[argmax].wiener),
                    max_inv.empty() ? Cell(std::string("-")) : Cell(max_inv[argmax].kemeny), violations.empty()});

  auto& f = r.add_section("filter", {"code", "edges", "diameter", "wiener", "kemeny", "maximal"});
  for (std::size_t k = 0; k < filtered.size(); ++k) {
    auto row = tree_row(filtered, k, filter_inv[k]);
    row.emplace_back(maximal.find(filtered.codes[k]).has_value());
    f.rows.push_back(std::move(row));
  }
  auto& m = r.add_section("maximal", {"code", "edges", "diameter", "wiener", "kemeny", "argmax"});
  for (std::size_t k = 0; k < maximal.size(); ++k) {
    auto row = tree_row(maximal, k, max_inv[k]);
    row.emplace_back(max_inv[k].kemeny == max_inv[argmax].kemeny);
    m.rows.push_back(std::move(row));
  }

  if (check_theorem && !violations.empty()) {
    std::string list;
    for (const auto& v : violations) list += " " + v;
    throw Error(ErrorKind::TheoremViolation, "maximal elements failing the leaf condition:" + list);
  }
  return r;
}

EnumResult cmd_enum(std::size_t n, std::optional<std::uint32_t> d, const std::optional<std::string>& resume_census,
                    const RunOptions& options) {
  Report r;
  r.command = "enum";
  r.inputs = {{"n", std::to_string(n)}, {"diameter", d ? std::to_string(*d) : "any"},
              {"resume", resume_census ? "true" : "false"}};
  finish_inputs(r, resume_census.value_or(""));

  TreeFamily all = resume_census ? extend_family(import_census(*resume_census), n, options.enum_config)
                                 : enumerate_trees(n, options.enum_config);
  TreeFamily fam = d ? filter_diameter(all, *d) : std::move(all);

  auto& s = r.add_section("census", {"code", "edges", "diameter", "wiener"});
  for (std::size_t k = 0; k < fam.size(); ++k) {
    s.rows.push_back({fam.codes[k].hex(), fam.members[k].graph().edge_string(),
                      std::int64_t{fam.members[k].diameter()}, wiener_edge_cut_route(fam.members[k])});
  }
  return {std::move(fam), std::move(r)};
}

}  // namespace kemeny
