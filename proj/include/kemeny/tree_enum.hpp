#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kemeny/graph.hpp"

namespace kemeny {

/// Isomorphism-invariant byte string for a free tree.
///
/// The first byte is '1' or '2' (size of the center). It is followed by the AHU
/// parenthesis encoding of the tree rooted at its center; for a two-vertex center
/// the central edge is cut and the two rooted halves are emitted smaller-first.
/// Two trees share a code exactly when they are isomorphic.
class CanonicalCode {
 public:
  CanonicalCode() = default;
  explicit CanonicalCode(std::string bytes) : bytes_(std::move(bytes)) {}

  const std::string& bytes() const noexcept { return bytes_; }
  std::size_t tree_order() const noexcept { return bytes_.empty() ? 0 : (bytes_.size() - 1) / 2; }

  std::string hex() const;
  /// Throws Error(InvalidArgument) on malformed hex. Does not check canonicity.
  static CanonicalCode from_hex(std::string_view hex);

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;

 private:
  std::string bytes_;
};

CanonicalCode canonical_code(const Tree& t);
/// Same as above for a graph known to be a tree; throws Error(NotATree) otherwise.
CanonicalCode canonical_code(const Graph& tree);

/// Rebuilds a tree from its code, labeling vertices in encoding (preorder) order.
/// Throws Error(InvalidArgument) on a malformed code.
Graph graph_from_code(const CanonicalCode& code);

/// Labeled tree on 0..n-1 from a Pruefer sequence of length n-2.
Graph tree_from_prufer(std::span<const Vertex> sequence, std::size_t order);

struct EnumConfig {
  std::size_t max_order = 16;
};

/// Non-isomorphic trees of one order, ascending by canonical code.
struct TreeFamily {
  std::size_t order = 0;
  std::optional<std::uint32_t> diameter;
  std::vector<Tree> members;
  std::vector<CanonicalCode> codes;

  std::size_t size() const noexcept { return members.size(); }
  std::optional<std::size_t> find(const CanonicalCode& code) const;
};

/// Every free tree of the given order, grown leaf by leaf from smaller orders with
/// dedup by canonical code; each layer is extended in parallel.
/// Throws InvalidArgument for order 0 and ResourceLimit above config.max_order.
TreeFamily enumerate_trees(std::size_t order, const EnumConfig& config = {});
/// Reference single-threaded version of enumerate_trees.
TreeFamily enumerate_trees_serial(std::size_t order, const EnumConfig& config = {});

/// Continues growth from a complete family of a smaller order.
TreeFamily extend_family(const TreeFamily& from, std::size_t order, const EnumConfig& config = {});

/// Members of diameter d. Throws InvalidArgument unless 1 <= d <= order-1.
TreeFamily filter_diameter(const TreeFamily& all, std::uint32_t d);
/// enumerate_trees(n) filtered to diameter d.
TreeFamily family(std::size_t order, std::uint32_t d, const EnumConfig& config = {});

/// Distinct canonical codes over all n^(n-2) Pruefer sequences. n <= 9 (ResourceLimit otherwise).
std::size_t prufer_oracle_count(std::size_t order);

/// "<canonical-code-hex> <edge list>" per member, newline-terminated.
std::string export_census(const TreeFamily& fam);
/// Inverse of export_census. Every line is re-verified: the edge list must be a tree
/// whose canonical code equals the stated one. Throws Error(Parse) otherwise.
TreeFamily import_census(std::string_view text);

}  // namespace kemeny
