#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "kemeny/exact.hpp"
#include "kemeny/graph.hpp"

namespace kemeny {

/// One tree edge with the vertex counts of the two sides it separates.
struct EdgeSplit {
  Edge edge;
  std::uint32_t side_u = 0;  ///< vertices on the u side of edge
  std::uint32_t side_v = 0;  ///< vertices on the v side of edge

  std::uint64_t weight() const { return std::uint64_t{side_u} * side_v; }
};

/// Per-edge weight n1(e) * n2(e): the number of vertex pairs whose tree path uses e.
class WeightedEdgeMap {
 public:
  explicit WeightedEdgeMap(std::vector<EdgeSplit> splits);

  /// Sorted by edge.
  const std::vector<EdgeSplit>& entries() const& noexcept { return entries_; }
  std::vector<EdgeSplit> entries() && { return std::move(entries_); }
  std::optional<std::uint64_t> weight(Vertex a, Vertex b) const;
  const BigInt& total() const noexcept { return total_; }

 private:
  std::vector<EdgeSplit> entries_;
  BigInt total_;
};

/// Side sizes for every edge of a tree, from one rooted DFS. Requires a tree graph.
std::vector<EdgeSplit> edge_splits(const Graph& tree);

/// Half the grand sum of D.
BigInt wiener_distance_route(const DistanceMatrix& d);
/// Sum over edges of n1(e) * n2(e).
BigInt wiener_edge_cut_route(const Tree& t);
WeightedEdgeMap omega_weights(const Tree& t);
/// Half of deg^T D deg.
BigInt gutman_index(const Graph& g, const DistanceMatrix& d);

/// deg^T F deg / (4 m tau), F the two-forest count matrix. Any connected graph, n >= 2.
Rational kemeny_forest_route(const Graph& g);
/// 2W/(n-1) - n + 1/2. Trees only, n >= 2.
Rational kemeny_wiener_route(const Tree& t);
/// (1/2) * sum_e (2 n1 - 1)(2 n2 - 1) / (n - 1). Trees only, n >= 2.
Rational kemeny_edge_cut_route(const Tree& t);

enum class KemenyRoute { ForestCount, WienerRelation, EdgeCut };
enum class RouteChoice { Auto, Forest, Wiener, EdgeCut };

const char* to_string(KemenyRoute route) noexcept;

struct InvariantReport {
  BigInt wiener;
  BigInt gutman;
  Rational kemeny;
  KemenyRoute route = KemenyRoute::ForestCount;
  std::size_t n = 0;
  std::size_t m = 0;
};

/// Auto picks EdgeCut for trees and ForestCount otherwise. Tree-only routes on a
/// non-tree throw Error(RouteRequiresTree); disconnected input throws Disconnected.
InvariantReport compute_invariants(const Graph& g, RouteChoice choice = RouteChoice::Auto);

/// Invariants of many trees (each n >= 2) at once, one tree per OpenMP task. Uses the edge-cut route.
std::vector<InvariantReport> tree_invariants(const std::vector<Tree>& trees);
/// Reference single-threaded version of tree_invariants.
std::vector<InvariantReport> tree_invariants_serial(const std::vector<Tree>& trees);

}  // namespace kemeny
