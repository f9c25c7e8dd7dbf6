#include "kemeny/invariants.hpp"

#include <algorithm>

#include "kemeny/error.hpp"
#include "kemeny/linalg.hpp"

namespace kemeny {

WeightedEdgeMap::WeightedEdgeMap(std::vector<EdgeSplit> splits) : entries_(std::move(splits)) {
  std::sort(entries_.begin(), entries_.end(), [](const EdgeSplit& a, const EdgeSplit& b) { return a.edge < b.edge; });
  for (const auto& s : entries_) total_ += s.weight();
}

std::optional<std::uint64_t> WeightedEdgeMap::weight(Vertex a, Vertex b) const {
  const Edge key(a, b);
  const auto it = std::lower_bound(entries_.begin(), entries_.end(), key,
                                   [](const EdgeSplit& s, const Edge& e) { return s.edge < e; });
  if (it == entries_.end() || it->edge != key) return std::nullopt;
  return it->weight();
}

std::vector<EdgeSplit> edge_splits(const Graph& tree) {
  const std::size_t n = tree.order();
  std::vector<EdgeSplit> out;
  if (n < 2) return out;
  out.reserve(n - 1);

  // Iterative DFS from 0 yields a preorder; walking it backwards accumulates subtree sizes.
  std::vector<Vertex> parent(n, 0);
  std::vector<Vertex> order;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (const Vertex w : tree.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = v;
        stack.push_back(w);
      }
    }
  }
  std::vector<std::uint32_t> sub(n, 1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    if (v == 0) continue;
    sub[parent[v]] += sub[v];
    const Edge e(parent[v], v);
    const std::uint32_t child = sub[v];
    const std::uint32_t rest = static_cast<std::uint32_t>(n) - child;
    out.push_back(EdgeSplit{e, e.v == v ? rest : child, e.v == v ? child : rest});
  }
  return out;
}

BigInt wiener_distance_route(const DistanceMatrix& d) {
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < d.order(); ++i) {
    for (std::size_t j = i + 1; j < d.order(); ++j) sum += d(i, j);
  }
  return BigInt(sum);
}

BigInt wiener_edge_cut_route(const Tree& t) {
  BigInt total = 0;
  for (const auto& s : edge_splits(t.graph())) total += s.weight();
  return total;
}

WeightedEdgeMap omega_weights(const Tree& t) { return WeightedEdgeMap(edge_splits(t.graph())); }

BigInt gutman_index(const Graph& g, const DistanceMatrix& d) {
  BigInt sum = 0;
  for (Vertex i = 0; i < g.order(); ++i) {
    for (Vertex j = i + 1; j < g.order(); ++j) {
      sum += BigInt(g.degree(i) * g.degree(j)) * d(i, j);
    }
  }
  return sum;
}

namespace {

void require_two_vertices(std::size_t n) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "Kemeny's constant needs at least two vertices");
}

}  // namespace

Rational kemeny_forest_route(const Graph& g) {
  const std::size_t n = g.order();
  require_two_vertices(n);
  const BigInt tau = spanning_tree_count(g);
  if (tau == 0) throw Error(ErrorKind::Disconnected, "graph is disconnected (no spanning tree)");

  const auto f = forest_matrix(g);
  BigInt quad = 0;
  for (std::size_t i = 0; i < n; ++i) {
    BigInt row = 0;
    for (std::size_t j = 0; j < n; ++j) row += f[i * n + j] * g.degree(static_cast<Vertex>(j));
    quad += row * g.degree(static_cast<Vertex>(i));
  }
  return Rational(quad, BigInt(4) * g.size() * tau);
}

Rational kemeny_wiener_route(const Tree& t) {
  const std::size_t n = t.order();
  require_two_vertices(n);
  const BigInt w = wiener_distance_route(t.distances());
  const auto nn = static_cast<long long>(n);
  return Rational(2 * w, BigInt(nn - 1)) - Rational(nn) + Rational(1, 2);
}

Rational kemeny_edge_cut_route(const Tree& t) {
  const std::size_t n = t.order();
  require_two_vertices(n);
  BigInt sum = 0;
  for (const auto& s : edge_splits(t.graph())) {
    sum += BigInt(2 * std::int64_t{s.side_u} - 1) * (2 * std::int64_t{s.side_v} - 1);
  }
  return Rational(sum, BigInt(2 * (static_cast<long long>(n) - 1)));
}

const char* to_string(KemenyRoute route) noexcept {
  switch (route) {
    case KemenyRoute::ForestCount: return "forest";
    case KemenyRoute::WienerRelation: return "wiener";
    case KemenyRoute::EdgeCut: return "edgecut";
  }
  return "unknown";
}

InvariantReport compute_invariants(const Graph& g, RouteChoice choice) {
  InvariantReport r;
  r.n = g.order();
  r.m = g.size();
  const DistanceMatrix d = all_pairs_distances(g);
  r.wiener = wiener_distance_route(d);
  r.gutman = gutman_index(g, d);

  const bool is_tree = g.size() + 1 == g.order();
  if (choice == RouteChoice::Auto) choice = is_tree ? RouteChoice::EdgeCut : RouteChoice::Forest;
  if (!is_tree && choice != RouteChoice::Forest) {
    throw Error(ErrorKind::RouteRequiresTree, "the requested Kemeny route only applies to trees");
  }
  switch (choice) {
    case RouteChoice::Forest:
      r.kemeny = kemeny_forest_route(g);
      r.route = KemenyRoute::ForestCount;
      break;
    case RouteChoice::Wiener:
      r.kemeny = kemeny_wiener_route(tree_from_graph(g));
      r.route = KemenyRoute::WienerRelation;
      break;
    case RouteChoice::EdgeCut:
    case RouteChoice::Auto:
      r.kemeny = kemeny_edge_cut_route(tree_from_graph(g));
      r.route = KemenyRoute::EdgeCut;
      break;
  }
  return r;
}

namespace {

InvariantReport tree_report(const Tree& t) {
  InvariantReport r;
  r.n = t.order();
  r.m = t.graph().size();
  r.wiener = wiener_edge_cut_route(t);
  r.gutman = gutman_index(t.graph(), t.distances());
  r.kemeny = kemeny_edge_cut_route(t);
  r.route = KemenyRoute::EdgeCut;
  return r;
}

}  // namespace

std::vector<InvariantReport> tree_invariants(const std::vector<Tree>& trees) {
  for (const auto& t : trees) require_two_vertices(t.order());
  std::vector<InvariantReport> out(trees.size());
  const auto count = static_cast<std::int64_t>(trees.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t k = 0; k < count; ++k) out[static_cast<std::size_t>(k)] = tree_report(trees[static_cast<std::size_t>(k)]);
  return out;
}

std::vector<InvariantReport> tree_invariants_serial(const std::vector<Tree>& trees) {
  std::vector<InvariantReport> out;
  out.reserve(trees.size());
  for (const auto& t : trees) out.push_back(tree_report(t));
  return out;
}

}  // namespace kemeny
