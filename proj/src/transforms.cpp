#include "kemeny/transforms.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include <omp.h>

#include "kemeny/error.hpp"
#include "kemeny/invariants.hpp"

namespace kemeny {

namespace {

void check_vertex(const Tree& t, Vertex v) {
  if (v >= t.order()) throw Error(ErrorKind::InvalidArgument, "vertex " + std::to_string(v) + " out of range");
}

/// BFS tree rooted at `root` that never enters `blocked` (pass order() for none).
struct Rooted {
  std::vector<Vertex> parent;
  std::vector<Vertex> order;         ///< BFS order, root first
  std::vector<std::uint32_t> size;   ///< subtree sizes; 0 for unreached vertices
};

Rooted root_at(const Graph& g, Vertex root, Vertex blocked) {
  const std::size_t n = g.order();
  Rooted r;
  r.parent.assign(n, static_cast<Vertex>(n));
  r.size.assign(n, 0);
  r.order.reserve(n);
  r.parent[root] = root;
  r.order.push_back(root);
  for (std::size_t head = 0; head < r.order.size(); ++head) {
    const Vertex v = r.order[head];
    for (const Vertex w : g.neighbors(v)) {
      if (w == blocked || w == r.parent[v] || r.parent[w] != n) continue;
      r.parent[w] = v;
      r.order.push_back(w);
    }
  }
  for (auto it = r.order.rbegin(); it != r.order.rend(); ++it) {
    r.size[*it] += 1;
    if (*it != root) r.size[r.parent[*it]] += r.size[*it];
  }
  return r;
}

/// Path root..target in a rooted tree, root first.
std::vector<Vertex> path_to(const Rooted& r, Vertex target) {
  std::vector<Vertex> path{target};
  while (r.parent[path.back()] != path.back()) path.push_back(r.parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

/// |C_j| along root..target from subtree sizes: |C_j| = size(l_j) - size(l_{j+1}).
std::vector<std::size_t> path_sizes(const Rooted& r, const std::vector<Vertex>& path) {
  std::vector<std::size_t> sizes(path.size());
  for (std::size_t j = 0; j + 1 < path.size(); ++j) sizes[j] = r.size[path[j]] - r.size[path[j + 1]];
  sizes.back() = r.size[path.back()];
  return sizes;
}

/// sum_j |C_j| (2j - d).
BigInt relocation_sum(const std::vector<std::size_t>& sizes) {
  const auto d = static_cast<std::int64_t>(sizes.size()) - 1;
  std::int64_t sum = 0;
  for (std::size_t j = 0; j < sizes.size(); ++j) {
    sum += static_cast<std::int64_t>(sizes[j]) * (2 * static_cast<std::int64_t>(j) - d);
  }
  return BigInt(sum);
}

Graph moved_graph(const Graph& g, const BranchMove& mv) {
  std::vector<Edge> edges = g.edges();
  const Edge old_edge(mv.from, mv.branch_root);
  for (Edge& e : edges) {
    if (e == old_edge) e = Edge(mv.to, mv.branch_root);
  }
  return Graph(g.order(), std::move(edges));
}

std::optional<UniformShape> uniform_from_sizes(const std::vector<std::size_t>& sizes) {
  const std::size_t d = sizes.size() - 1;
  if (d < 2) return std::nullopt;
  const std::size_t t = sizes[0];
  for (std::size_t j = 1; j < d; ++j) {
    if (sizes[j] != t) return std::nullopt;
  }
  return UniformShape{t, static_cast<std::int64_t>(sizes[d]) - static_cast<std::int64_t>(t), d};
}

std::pair<CanonicalCode, CanonicalCode> pair_key(const MatePair& p) {
  return std::minmax(p.source_code, p.image_code);
}

void mates_from_member(const Tree& t, const CanonicalCode& code, std::vector<MatePair>& out) {
  const std::size_t n = t.order();
  const Graph& g = t.graph();
  for (Vertex i1 = 0; i1 < n; ++i1) {
    const Rooted r = root_at(g, i1, static_cast<Vertex>(n));
    for (Vertex i2 = 0; i2 < n; ++i2) {
      if (i2 == i1 || t.distance(i1, i2) < 2) continue;
      const auto path = path_to(r, i2);
      const auto shape = uniform_from_sizes(path_sizes(r, path));
      if (!shape || shape->t < 2 || shape->m != -1) continue;

      Tree image = apply_op1(t, i1, i2);
      CanonicalCode image_code = canonical_code(image);
      if (image_code == code) continue;

      MatePair p;
      p.source_code = code;
      p.image_code = std::move(image_code);
      p.source = g;
      p.image = image.graph();
      p.i1 = i1;
      p.i2 = i2;
      p.shape = *shape;
      p.wiener_source = wiener_distance_route(t.distances());
      p.wiener_image = wiener_distance_route(image.distances());
      p.kemeny_source = kemeny_edge_cut_route(t);
      p.kemeny_image = kemeny_edge_cut_route(image);
      out.push_back(std::move(p));
    }
  }
}

std::vector<MatePair> dedupe_mates(std::vector<MatePair> all) {
  std::stable_sort(all.begin(), all.end(), [](const MatePair& a, const MatePair& b) {
    const auto ka = pair_key(a);
    const auto kb = pair_key(b);
    if (ka != kb) return ka < kb;
    if (a.source_code != b.source_code) return a.source_code < b.source_code;
    return std::pair(a.i1, a.i2) < std::pair(b.i1, b.i2);
  });
  std::vector<MatePair> out;
  for (auto& p : all) {
    if (!out.empty() && pair_key(out.back()) == pair_key(p)) continue;
    out.push_back(std::move(p));
  }
  return out;
}

void require_diameter(const TreeFamily& fam) {
  if (!fam.diameter) throw Error(ErrorKind::InvalidArgument, "family has no diameter filter");
}

TreeFamily subfamily(const TreeFamily& fam, const std::vector<char>& keep) {
  TreeFamily out;
  out.order = fam.order;
  out.diameter = fam.diameter;
  for (std::size_t k = 0; k < fam.size(); ++k) {
    if (keep[k]) {
      out.members.push_back(fam.members[k]);
      out.codes.push_back(fam.codes[k]);
    }
  }
  return out;
}

}  // namespace

std::vector<std::size_t> PathDecomposition::sizes() const {
  std::vector<std::size_t> out;
  out.reserve(components.size());
  for (const auto& c : components) out.push_back(c.size());
  return out;
}

PathDecomposition decompose_path(const Tree& t, Vertex i1, Vertex i2) {
  check_vertex(t, i1);
  check_vertex(t, i2);
  if (i1 == i2) throw Error(ErrorKind::InvalidArgument, "path endpoints must differ");
  const Graph& g = t.graph();
  const std::size_t n = g.order();

  PathDecomposition pd;
  pd.path = path_to(root_at(g, i1, static_cast<Vertex>(n)), i2);
  const std::size_t d = pd.length();

  // Label every vertex with the index of the path vertex it hangs from.
  std::vector<std::int64_t> owner(n, -1);
  for (std::size_t j = 0; j <= d; ++j) owner[pd.path[j]] = static_cast<std::int64_t>(j);
  pd.components.resize(d + 1);
  for (std::size_t j = 0; j <= d; ++j) {
    std::vector<Vertex> stack{pd.path[j]};
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      pd.components[j].push_back(v);
      for (const Vertex w : g.neighbors(v)) {
        if (owner[w] == -1) {
          owner[w] = static_cast<std::int64_t>(j);
          stack.push_back(w);
        }
      }
    }
    std::sort(pd.components[j].begin(), pd.components[j].end());
  }
  return pd;
}

BigInt op1_delta_formula(const PathDecomposition& pd) {
  const std::size_t d = pd.length();
  if (d < 2) throw Error(ErrorKind::PathTooShort, "contract-and-subdivide needs a path of length >= 2");
  const auto sizes = pd.sizes();
  BigInt n = 0;
  for (const auto s : sizes) n += s;
  const BigInt c0 = sizes.front();
  const BigInt cd = sizes.back();
  const BigInt dd = static_cast<long long>(d);

  BigInt delta = c0 * (n - c0) - (cd + 1) * (n - cd - 1) + (dd - 2) * (n + 1) - 2 * (dd - 2) * c0;
  for (std::size_t i = 1; i + 2 <= d; ++i) {
    delta -= 2 * BigInt(static_cast<long long>(d - 1 - i)) * sizes[i];
  }
  return delta;
}

Tree apply_op1(const Tree& t, Vertex i1, Vertex i2) {
  const PathDecomposition pd = decompose_path(t, i1, i2);
  const std::size_t d = pd.length();
  if (d < 2) throw Error(ErrorKind::PathTooShort, "contract-and-subdivide needs a path of length >= 2");
  const Vertex l0 = pd.path[0];
  const Vertex l1 = pd.path[1];
  const auto merged = [&](Vertex v) { return v == l1 ? l0 : v; };

  const Edge contracted(l0, l1);
  const Edge subdivided(merged(pd.path[d - 1]), pd.path[d]);
  std::vector<Edge> edges;
  edges.reserve(t.order() - 1);
  for (const Edge& e : t.graph().edges()) {
    if (e == contracted) continue;
    const Edge mapped(merged(e.u), merged(e.v));
    if (mapped == subdivided) {
      edges.emplace_back(subdivided.u, l1);
      edges.emplace_back(l1, subdivided.v);
    } else {
      edges.push_back(mapped);
    }
  }
  return tree_from_graph(Graph(t.order(), std::move(edges)));
}

std::optional<UniformShape> uniform_shape(const PathDecomposition& pd) { return uniform_from_sizes(pd.sizes()); }

BigInt uniform_op1_delta(const UniformShape& shape) {
  const BigInt t = static_cast<long long>(shape.t);
  const BigInt d = static_cast<long long>(shape.d);
  return -(t - 1) * (d - 1) * (BigInt(shape.m) + 1);
}

std::vector<MatePair> mates_op1(const TreeFamily& all) {
  std::vector<MatePair> found;
  const auto count = static_cast<std::int64_t>(all.size());
#pragma omp parallel
  {
    std::vector<MatePair> local;
#pragma omp for schedule(dynamic, 4) nowait
    for (std::int64_t k = 0; k < count; ++k) {
      const auto idx = static_cast<std::size_t>(k);
      mates_from_member(all.members[idx], all.codes[idx], local);
    }
#pragma omp critical(kemeny_mates_merge)
    std::move(local.begin(), local.end(), std::back_inserter(found));
  }
  return dedupe_mates(std::move(found));
}

std::vector<MatePair> mates_op1_serial(const TreeFamily& all) {
  std::vector<MatePair> found;
  for (std::size_t k = 0; k < all.size(); ++k) mates_from_member(all.members[k], all.codes[k], found);
  return dedupe_mates(std::move(found));
}

std::vector<MatePair> generate_mates_op1(std::size_t n_max, const EnumConfig& config) {
  std::vector<MatePair> out;
  for (std::size_t n = 2; n <= n_max; ++n) {
    auto batch = mates_op1(enumerate_trees(n, config));
    std::move(batch.begin(), batch.end(), std::back_inserter(out));
  }
  return out;
}

std::vector<Vertex> branch_vertices(const Tree& t, Vertex branch_root, Vertex from) {
  check_vertex(t, branch_root);
  check_vertex(t, from);
  if (!t.graph().adjacent(branch_root, from)) {
    throw Error(ErrorKind::InvalidArgument,
                "no edge " + std::to_string(from) + "-" + std::to_string(branch_root) + " to detach");
  }
  auto order = root_at(t.graph(), branch_root, from).order;
  std::sort(order.begin(), order.end());
  return order;
}

Tree apply_op2(const Tree& t, Vertex b_root, Vertex i1, Vertex i2) {
  const auto branch = branch_vertices(t, b_root, i1);
  check_vertex(t, i2);
  if (i2 == i1) throw Error(ErrorKind::InvalidArgument, "branch must move to a different vertex");
  if (std::binary_search(branch.begin(), branch.end(), i2)) {
    throw Error(ErrorKind::NotABridgeConfig, "target vertex " + std::to_string(i2) + " lies inside the branch");
  }
  return tree_from_graph(moved_graph(t.graph(), BranchMove{i1, b_root, i2}));
}

BigInt op2_delta_formula(const Tree& t, Vertex b_root, Vertex i1, Vertex i2) {
  const auto branch = branch_vertices(t, b_root, i1);
  check_vertex(t, i2);
  if (i2 == i1) throw Error(ErrorKind::InvalidArgument, "branch must move to a different vertex");
  if (std::binary_search(branch.begin(), branch.end(), i2)) {
    throw Error(ErrorKind::NotABridgeConfig, "target vertex " + std::to_string(i2) + " lies inside the branch");
  }
  // The branch hangs off l_0, so it sits entirely in C_0 of the full tree.
  auto sizes = decompose_path(t, i1, i2).sizes();
  sizes.front() -= branch.size();
  return BigInt(static_cast<long long>(branch.size())) * relocation_sum(sizes);
}

std::optional<CoverWitness> covers(const Tree& lower, const Tree& upper) {
  if (lower.order() != upper.order()) throw Error(ErrorKind::InvalidArgument, "covers() needs trees of equal order");
  if (lower.diameter() != upper.diameter()) return std::nullopt;
  const BigInt w_lower = wiener_distance_route(lower.distances());
  const BigInt w_upper = wiener_distance_route(upper.distances());
  if (!(w_lower < w_upper)) return std::nullopt;

  const CanonicalCode lower_code = canonical_code(lower);
  const Graph& g = upper.graph();
  const std::size_t n = g.order();
  for (const Edge& e : g.edges()) {
    for (const auto& [from, root] : {std::pair(e.u, e.v), std::pair(e.v, e.u)}) {
      const auto branch = branch_vertices(upper, root, from);
      for (Vertex to = 0; to < n; ++to) {
        if (to == from || std::binary_search(branch.begin(), branch.end(), to)) continue;
        const BranchMove mv{from, root, to};
        if (canonical_code(moved_graph(g, mv)) != lower_code) continue;
        return CoverWitness{lower_code, canonical_code(upper), mv, branch, w_lower, w_upper};
      }
    }
  }
  return std::nullopt;
}

std::optional<CoverWitness> find_cover_above(const Tree& t) {
  const Graph& g = t.graph();
  const std::size_t n = g.order();
  for (const Edge& e : g.edges()) {
    for (const auto& [from, root] : {std::pair(e.u, e.v), std::pair(e.v, e.u)}) {
      // Host = t minus the branch, rooted at the current attachment point.
      const Rooted host = root_at(g, from, root);
      const std::size_t branch_size = n - host.order.size();
      for (const Vertex to : host.order) {
        if (to == from) continue;
        const BigInt down = BigInt(static_cast<long long>(branch_size)) * relocation_sum(path_sizes(host, path_to(host, to)));
        if (down >= 0) continue;  // the move would not raise W
        const BranchMove mv{from, root, to};
        const Graph up = moved_graph(g, mv);
        if (tree_diameter(up) != t.diameter()) continue;

        const Tree upper = tree_from_graph(up);
        std::vector<Vertex> branch;
        for (Vertex v = 0; v < n; ++v) {
          if (host.parent[v] == n) branch.push_back(v);
        }
        // In the upper tree the branch hangs at `to`; moving it back to `from` gives t.
        return CoverWitness{canonical_code(t), canonical_code(upper), BranchMove{to, root, from}, std::move(branch),
                            wiener_edge_cut_route(t), wiener_edge_cut_route(upper)};
      }
    }
  }
  return std::nullopt;
}

TreeFamily maximal_elements(const TreeFamily& fam) {
  require_diameter(fam);
  std::vector<char> keep(fam.size(), 0);
  const auto count = static_cast<std::int64_t>(fam.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t k = 0; k < count; ++k) {
    keep[static_cast<std::size_t>(k)] = !find_cover_above(fam.members[static_cast<std::size_t>(k)]).has_value();
  }
  return subfamily(fam, keep);
}

TreeFamily maximal_elements_serial(const TreeFamily& fam) {
  require_diameter(fam);
  std::vector<char> keep(fam.size(), 0);
  for (std::size_t k = 0; k < fam.size(); ++k) keep[k] = !find_cover_above(fam.members[k]).has_value();
  return subfamily(fam, keep);
}

TreeFamily maximal_elements_pairwise(const TreeFamily& fam) {
  require_diameter(fam);
  std::vector<char> keep(fam.size(), 1);
  for (std::size_t lo = 0; lo < fam.size(); ++lo) {
    for (std::size_t up = 0; up < fam.size() && keep[lo]; ++up) {
      if (up != lo && covers(fam.members[lo], fam.members[up])) keep[lo] = 0;
    }
  }
  return subfamily(fam, keep);
}

bool passes_leaf_condition(const Tree& t) {
  if (t.order() < 2) return true;
  const std::uint32_t want = t.diameter() / 2;
  const auto leaves = leaf_center_distances(t);
  return std::all_of(leaves.begin(), leaves.end(), [want](const auto& p) { return p.second == want; });
}

TreeFamily theorem_leaf_filter(const TreeFamily& fam) {
  require_diameter(fam);
  std::vector<char> keep(fam.size(), 0);
  for (std::size_t k = 0; k < fam.size(); ++k) keep[k] = passes_leaf_condition(fam.members[k]);
  return subfamily(fam, keep);
}

}  // namespace kemeny
