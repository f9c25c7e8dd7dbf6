#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "kemeny/exact.hpp"
#include "kemeny/graph.hpp"
#include "kemeny/tree_enum.hpp"

namespace kemeny {

/// The i1-i2 path l_0..l_d of a tree and, for each l_j, the component C_j that
/// contains l_j once every path edge is deleted.
struct PathDecomposition {
  std::vector<Vertex> path;
  std::vector<std::vector<Vertex>> components;  ///< each ascending

  std::size_t length() const noexcept { return path.size() - 1; }
  std::vector<std::size_t> sizes() const;
};

/// Throws InvalidArgument if i1 == i2 or a vertex is out of range.
PathDecomposition decompose_path(const Tree& t, Vertex i1, Vertex i2);

// --- Contract-and-subdivide --------------------------------------------------

/// W(T1) - W(T2) for the contract-and-subdivide move, from component sizes alone.
/// Throws PathTooShort when d < 2.
BigInt op1_delta_formula(const PathDecomposition& pd);

/// Contracts {l_0, l_1} and subdivides {l_{d-1}, l_d}. The freed id of l_1 becomes
/// the subdivision vertex, so the result keeps labels 0..n-1. Throws PathTooShort when d < 2.
Tree apply_op1(const Tree& t, Vertex i1, Vertex i2);

/// Sizes with |C_0| = ... = |C_{d-1}| = t and |C_d| = t + m, d >= 2.
struct UniformShape {
  std::size_t t = 0;
  std::int64_t m = 0;
  std::size_t d = 0;
};

std::optional<UniformShape> uniform_shape(const PathDecomposition& pd);
/// -(t-1)(d-1)(m+1).
BigInt uniform_op1_delta(const UniformShape& shape);

/// Two non-isomorphic trees of equal order and equal Wiener index, produced by one
/// contract-and-subdivide move on a uniform shape with m = -1.
struct MatePair {
  CanonicalCode source_code;  ///< the tree the move was applied to
  CanonicalCode image_code;
  Graph source;
  Graph image;
  Vertex i1 = 0;  ///< path endpoints in the source's labels
  Vertex i2 = 0;
  UniformShape shape;
  BigInt wiener_source;
  BigInt wiener_image;
  Rational kemeny_source;
  Rational kemeny_image;
};

/// All mate pairs obtainable from members of one full family, one pair per
/// unordered code pair, sorted by (smaller code, larger code). Parallel over members.
std::vector<MatePair> mates_op1(const TreeFamily& all);
/// Reference single-threaded version of mates_op1.
std::vector<MatePair> mates_op1_serial(const TreeFamily& all);
/// mates_op1 over every order 2..n_max.
std::vector<MatePair> generate_mates_op1(std::size_t n_max, const EnumConfig& config = {});

// --- Branch relocation ----------------------------------------------------------

/// Detach the branch rooted at branch_root from `from` and attach it to `to`.
struct BranchMove {
  Vertex from = 0;
  Vertex branch_root = 0;
  Vertex to = 0;
};

/// Vertices of the component containing branch_root after deleting {from, branch_root}.
/// Throws InvalidArgument when that edge does not exist.
std::vector<Vertex> branch_vertices(const Tree& t, Vertex branch_root, Vertex from);

/// Throws InvalidArgument for a missing edge or i1 == i2, NotABridgeConfig when i2 lies in the branch.
Tree apply_op2(const Tree& t, Vertex b_root, Vertex i1, Vertex i2);

/// W(branch at i1) - W(branch at i2) = |B| * sum_j |C_j| (2j - d), C_j taken in the host without B.
BigInt op2_delta_formula(const Tree& t, Vertex b_root, Vertex i1, Vertex i2);

/// Evidence that `upper` covers `lower`: moving the branch of `upper` described by
/// `move` (labels of `upper`) yields a tree isomorphic to `lower`.
struct CoverWitness {
  CanonicalCode lower;
  CanonicalCode upper;
  BranchMove move;
  std::vector<Vertex> branch;
  BigInt wiener_lower;
  BigInt wiener_upper;
};

/// Exhausts every single branch move of `upper`. Empty unless the diameters agree,
/// W(lower) < W(upper), and some move lands on lower's isomorphism class.
/// Throws InvalidArgument for trees of different order.
std::optional<CoverWitness> covers(const Tree& lower, const Tree& upper);

/// Some tree covering t (same diameter, strictly larger W, one branch move away), if any.
std::optional<CoverWitness> find_cover_above(const Tree& t);

/// Members of a diameter-filtered family that no tree of the family covers.
/// One member per OpenMP task. Throws InvalidArgument without a diameter filter.
TreeFamily maximal_elements(const TreeFamily& fam);
/// Reference single-threaded version of maximal_elements.
TreeFamily maximal_elements_serial(const TreeFamily& fam);
/// Independent reference: tests covers() for every ordered pair of members.
TreeFamily maximal_elements_pairwise(const TreeFamily& fam);

/// Every leaf sits at distance floor(diam/2) from the center.
bool passes_leaf_condition(const Tree& t);
/// Members satisfying passes_leaf_condition. Throws InvalidArgument without a diameter filter.
TreeFamily theorem_leaf_filter(const TreeFamily& fam);

}  // namespace kemeny
