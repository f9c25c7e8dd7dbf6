#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "kemeny/exact.hpp"
#include "kemeny/graph.hpp"

namespace kemeny {

/// Dense square matrix of arbitrary-precision integers, row-major.
class BigIntMatrix {
 public:
  BigIntMatrix() = default;
  explicit BigIntMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

  std::size_t dim() const noexcept { return dim_; }
  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

  /// Copy with the listed rows and the same-numbered columns removed.
  BigIntMatrix principal_minor(std::span<const std::size_t> removed) const;

  void swap_rows(std::size_t a, std::size_t b);

  friend bool operator==(const BigIntMatrix&, const BigIntMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<BigInt> data_;
};

/// L = diag(deg) - A.
BigIntMatrix laplacian(const Graph& g);

/// Exact determinant by fraction-free Bareiss elimination. The 0x0 matrix has determinant 1.
BigInt det_exact(BigIntMatrix m);

/// Number of spanning trees: det of the Laplacian with row/column 0 deleted.
/// Zero exactly when g is disconnected. Throws InvalidArgument for the empty graph.
BigInt spanning_tree_count(const Graph& g);

/// Number of spanning forests with two trees, one containing i and the other j:
/// det of the Laplacian with rows/columns {i, j} deleted. Throws InvalidArgument if i == j.
BigInt two_forest_count(const Graph& g, Vertex i, Vertex j);

/// Full symmetric matrix of two_forest_count with zero diagonal, row-major n*n.
/// Pairs are distributed over OpenMP threads.
std::vector<BigInt> forest_matrix(const Graph& g);
/// Reference single-threaded version of forest_matrix.
std::vector<BigInt> forest_matrix_serial(const Graph& g);

}  // namespace kemeny
