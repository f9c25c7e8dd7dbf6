#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kemeny {

using Vertex = std::uint32_t;

/// Unordered edge, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
 public:
  Graph() = default;
  /// Validates the edge set: endpoints in range, no self-loops, no duplicates.
  /// Throws Error(InvalidArgument) otherwise.
  Graph(std::size_t order, std::vector<Edge> edges);

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t size() const noexcept { return edges_.size(); }

  /// Sorted lexicographically.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  /// Sorted ascending.
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  bool adjacent(Vertex a, Vertex b) const;

  /// Edge list rendered as "u-v u-v ...".
  std::string edge_string() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.edges_ == b.edges_ && a.order() == b.order(); }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// Parses "u v" lines with an optional leading "n <count>" header. Blank lines and
/// '#' comments are skipped; '\r\n' is accepted. Without a header the order is
/// 1 + the largest label. Labels are taken as dense vertex ids.
Graph parse_edge_list(std::string_view text);

/// Parses the compact "u-v u-v ..." form produced by Graph::edge_string().
Graph parse_edge_string(std::string_view text, std::size_t order);

/// Hop-count distance matrix, row-major.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t order) : order_(order), data_(order * order, 0) {}

  std::size_t order() const noexcept { return order_; }
  std::uint32_t operator()(std::size_t i, std::size_t j) const { return data_[i * order_ + j]; }
  std::uint32_t& operator()(std::size_t i, std::size_t j) { return data_[i * order_ + j]; }
  std::span<const std::uint32_t> row(std::size_t i) const { return {data_.data() + i * order_, order_}; }
  std::span<std::uint32_t> row(std::size_t i) { return {data_.data() + i * order_, order_}; }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t order_ = 0;
  std::vector<std::uint32_t> data_;
};

/// Single-source BFS hop counts; unreachable vertices get UINT32_MAX.
std::vector<std::uint32_t> bfs_distances(const Graph& g, Vertex source);

/// BFS from every vertex, one source per OpenMP task.
/// Throws Error(Disconnected) naming an unreachable pair.
DistanceMatrix all_pairs_distances(const Graph& g);
/// Reference single-threaded version of all_pairs_distances.
DistanceMatrix all_pairs_distances_serial(const Graph& g);

bool is_connected(const Graph& g);

/// A graph validated connected and acyclic, with distances, eccentricities,
/// diameter and center cached at construction.
class Tree {
 public:
  const Graph& graph() const noexcept { return graph_; }
  std::size_t order() const noexcept { return graph_.order(); }
  const DistanceMatrix& distances() const noexcept { return dist_; }
  std::uint32_t distance(Vertex a, Vertex b) const { return dist_(a, b); }
  std::span<const std::uint32_t> eccentricities() const noexcept { return ecc_; }
  std::uint32_t diameter() const noexcept { return diameter_; }
  std::uint32_t radius() const noexcept { return radius_; }
  /// One vertex for even diameter, two adjacent vertices (ascending) for odd.
  const std::vector<Vertex>& center() const noexcept { return center_; }

 private:
  friend Tree tree_from_graph(Graph g);
  Tree() = default;

  Graph graph_;
  DistanceMatrix dist_;
  std::vector<std::uint32_t> ecc_;
  std::uint32_t diameter_ = 0;
  std::uint32_t radius_ = 0;
  std::vector<Vertex> center_;
};

/// Throws Error(NotATree) for cyclic (m >= n) or disconnected input, and
/// Error(InvalidArgument) for the empty graph.
Tree tree_from_graph(Graph g);

/// Diameter of a tree by double BFS, without building a Tree.
std::uint32_t tree_diameter(const Graph& tree);

/// (leaf, distance to the nearest center) for every degree-1 vertex, ascending by leaf.
std::vector<std::pair<Vertex, std::uint32_t>> leaf_center_distances(const Tree& t);

}  // namespace kemeny
