#include "kemeny/graph.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <optional>
#include <set>

#include <omp.h>

#include "kemeny/error.hpp"

namespace kemeny {

namespace {

constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) tokens.push_back(s.substr(start, i - start));
  }
  return tokens;
}

bool parse_label(std::string_view token, std::uint64_t& out) {
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

}  // namespace

Graph::Graph(std::size_t order, std::vector<Edge> edges) : edges_(std::move(edges)), adjacency_(order) {
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const Edge& e = edges_[k];
    if (e.u == e.v) throw Error(ErrorKind::InvalidArgument, "self-loop at vertex " + std::to_string(e.u));
    if (e.v >= order) {
      throw Error(ErrorKind::InvalidArgument,
                  "edge endpoint " + std::to_string(e.v) + " out of range for order " + std::to_string(order));
    }
    if (k > 0 && edges_[k - 1] == e) {
      throw Error(ErrorKind::InvalidArgument,
                  "duplicate edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    }
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  const auto& nbrs = adjacency_[a];
  return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

std::string Graph::edge_string() const {
  std::string out;
  for (const Edge& e : edges_) {
    if (!out.empty()) out += ' ';
    out += std::to_string(e.u);
    out += '-';
    out += std::to_string(e.v);
  }
  return out;
}

Graph parse_edge_list(std::string_view text) {
  using Reason = ParseError::Reason;
  std::optional<std::uint64_t> declared;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  std::uint64_t max_label = 0;
  bool any_line = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
    ++line_no;

    const std::string_view line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    const auto tokens = split_ws(line);

    if (tokens[0] == "n") {
      if (any_line) throw ParseError(Reason::BadHeader, line_no, "header must precede edges");
      std::uint64_t count = 0;
      if (tokens.size() != 2 || !parse_label(tokens[1], count)) {
        throw ParseError(Reason::BadHeader, line_no, "expected 'n <count>'");
      }
      if (count == 0) throw ParseError(Reason::Empty, line_no, "graph must have at least one vertex");
      declared = count;
      any_line = true;
      continue;
    }
    any_line = true;

    if (tokens.size() != 2) {
      throw ParseError(Reason::BadToken, line_no, "expected two vertex labels, got '" + std::string(line) + "'");
    }
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    for (int k = 0; k < 2; ++k) {
      if (!parse_label(tokens[k], k == 0 ? a : b)) {
        throw ParseError(Reason::BadToken, line_no, "not a nonnegative integer: '" + std::string(tokens[k]) + "'");
      }
    }
    const std::uint64_t limit = declared ? *declared : std::uint64_t{std::numeric_limits<Vertex>::max()};
    if (a >= limit || b >= limit) {
      throw ParseError(Reason::LabelOutOfRange, line_no,
                       "label " + std::to_string(std::max(a, b)) + " >= declared order " + std::to_string(limit));
    }
    if (a == b) throw ParseError(Reason::SelfLoop, line_no, "self-loop at " + std::to_string(a));
    const Edge e(static_cast<Vertex>(a), static_cast<Vertex>(b));
    if (!seen.insert(e).second) {
      throw ParseError(Reason::DuplicateEdge, line_no, "edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    }
    edges.push_back(e);
    max_label = std::max({max_label, a, b});
  }

  if (!declared && edges.empty()) throw ParseError(Reason::Empty, 0, "no vertices");
  const std::size_t order = declared ? static_cast<std::size_t>(*declared) : static_cast<std::size_t>(max_label + 1);
  return Graph(order, std::move(edges));
}

Graph parse_edge_string(std::string_view text, std::size_t order) {
  std::vector<Edge> edges;
  for (const auto token : split_ws(trim(text))) {
    const auto dash = token.find('-');
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    if (dash == std::string_view::npos || !parse_label(token.substr(0, dash), a) ||
        !parse_label(token.substr(dash + 1), b)) {
      throw Error(ErrorKind::InvalidArgument, "malformed edge token '" + std::string(token) + "'");
    }
    edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  return Graph(order, std::move(edges));
}

std::vector<std::uint32_t> bfs_distances(const Graph& g, Vertex source) {
  std::vector<std::uint32_t> dist(g.order(), kUnreachable);
  std::vector<Vertex> queue;
  queue.reserve(g.order());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    for (const Vertex w : g.neighbors(v)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

namespace {

void fill_row(const Graph& g, DistanceMatrix& d, Vertex source) {
  const auto dist = bfs_distances(g, source);
  std::copy(dist.begin(), dist.end(), d.row(source).begin());
}

[[noreturn]] void throw_disconnected(const DistanceMatrix& d) {
  for (std::size_t i = 0; i < d.order(); ++i) {
    for (std::size_t j = 0; j < d.order(); ++j) {
      if (d(i, j) == kUnreachable) {
        throw Error(ErrorKind::Disconnected,
                    "vertices " + std::to_string(i) + " and " + std::to_string(j) + " are not connected");
      }
    }
  }
  throw Error(ErrorKind::Disconnected, "graph is disconnected");
}

bool any_unreachable(const DistanceMatrix& d) {
  for (std::size_t i = 0; i < d.order(); ++i) {
    const auto r = d.row(i);
    if (std::find(r.begin(), r.end(), kUnreachable) != r.end()) return true;
  }
  return false;
}

}  // namespace

DistanceMatrix all_pairs_distances(const Graph& g) {
  const auto n = static_cast<std::int64_t>(g.order());
  DistanceMatrix d(g.order());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t s = 0; s < n; ++s) fill_row(g, d, static_cast<Vertex>(s));
  if (any_unreachable(d)) throw_disconnected(d);
  return d;
}

DistanceMatrix all_pairs_distances_serial(const Graph& g) {
  DistanceMatrix d(g.order());
  for (std::size_t s = 0; s < g.order(); ++s) fill_row(g, d, static_cast<Vertex>(s));
  if (any_unreachable(d)) throw_disconnected(d);
  return d;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  const auto dist = bfs_distances(g, 0);
  return std::find(dist.begin(), dist.end(), kUnreachable) == dist.end();
}

Tree tree_from_graph(Graph g) {
  const std::size_t n = g.order();
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "a tree needs at least one vertex");
  if (g.size() >= n) {
    throw Error(ErrorKind::NotATree, "NotATree(cyclic): " + std::to_string(g.size()) + " edges on " +
                                         std::to_string(n) + " vertices");
  }
  const auto from0 = bfs_distances(g, 0);
  for (std::size_t v = 0; v < n; ++v) {
    if (from0[v] == kUnreachable) {
      throw Error(ErrorKind::NotATree, "NotATree(disconnected): vertex " + std::to_string(v) + " unreachable from 0");
    }
  }

  Tree t;
  t.dist_ = all_pairs_distances_serial(g);
  t.graph_ = std::move(g);
  t.ecc_.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    const auto r = t.dist_.row(v);
    t.ecc_[v] = *std::max_element(r.begin(), r.end());
  }
  t.diameter_ = *std::max_element(t.ecc_.begin(), t.ecc_.end());
  t.radius_ = *std::min_element(t.ecc_.begin(), t.ecc_.end());
  for (std::size_t v = 0; v < n; ++v) {
    if (t.ecc_[v] == t.radius_) t.center_.push_back(static_cast<Vertex>(v));
  }
  return t;
}

std::uint32_t tree_diameter(const Graph& tree) {
  if (tree.order() <= 1) return 0;
  const auto first = bfs_distances(tree, 0);
  const auto far = static_cast<Vertex>(std::max_element(first.begin(), first.end()) - first.begin());
  const auto second = bfs_distances(tree, far);
  return *std::max_element(second.begin(), second.end());
}

std::vector<std::pair<Vertex, std::uint32_t>> leaf_center_distances(const Tree& t) {
  if (t.order() < 2) throw Error(ErrorKind::InvalidArgument, "leaf distances need at least two vertices");
  std::vector<std::pair<Vertex, std::uint32_t>> out;
  for (Vertex v = 0; v < t.order(); ++v) {
    if (t.graph().degree(v) != 1) continue;
    std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
    for (const Vertex c : t.center()) best = std::min(best, t.distance(c, v));
    out.emplace_back(v, best);
  }
  return out;
}

}  // namespace kemeny
