#include "kemeny/linalg.hpp"

#include <algorithm>
#include <array>
#include <cstdint>

#include "kemeny/error.hpp"

namespace kemeny {

BigIntMatrix BigIntMatrix::principal_minor(std::span<const std::size_t> removed) const {
  std::vector<std::size_t> keep;
  keep.reserve(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (std::find(removed.begin(), removed.end(), i) == removed.end()) keep.push_back(i);
  }
  BigIntMatrix out(keep.size());
  for (std::size_t a = 0; a < keep.size(); ++a) {
    for (std::size_t b = 0; b < keep.size(); ++b) out(a, b) = (*this)(keep[a], keep[b]);
  }
  return out;
}

void BigIntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(a * dim_),
                   data_.begin() + static_cast<std::ptrdiff_t>((a + 1) * dim_),
                   data_.begin() + static_cast<std::ptrdiff_t>(b * dim_));
}

BigIntMatrix laplacian(const Graph& g) {
  BigIntMatrix l(g.order());
  for (Vertex v = 0; v < g.order(); ++v) l(v, v) = static_cast<long long>(g.degree(v));
  for (const Edge& e : g.edges()) {
    l(e.u, e.v) = -1;
    l(e.v, e.u) = -1;
  }
  return l;
}

BigInt det_exact(BigIntMatrix a) {
  const std::size_t k = a.dim();
  if (k == 0) return 1;
  bool negate = false;
  BigInt prev_pivot = 1;
  for (std::size_t p = 0; p + 1 < k; ++p) {
    if (a(p, p) == 0) {
      std::size_t r = p + 1;
      while (r < k && a(r, p) == 0) ++r;
      if (r == k) return 0;
      a.swap_rows(p, r);
      negate = !negate;
    }
    for (std::size_t i = p + 1; i < k; ++i) {
      for (std::size_t j = p + 1; j < k; ++j) {
        // Exact division: Sylvester's identity guarantees divisibility.
        a(i, j) = (a(i, j) * a(p, p) - a(i, p) * a(p, j)) / prev_pivot;
      }
      a(i, p) = 0;
    }
    prev_pivot = a(p, p);
  }
  BigInt det = a(k - 1, k - 1);
  return negate ? BigInt(-det) : det;
}

BigInt spanning_tree_count(const Graph& g) {
  if (g.order() == 0) throw Error(ErrorKind::InvalidArgument, "spanning trees of the empty graph");
  const std::array<std::size_t, 1> removed{0};
  return det_exact(laplacian(g).principal_minor(removed));
}

namespace {

BigInt two_forest_from_laplacian(const BigIntMatrix& l, Vertex i, Vertex j) {
  const std::array<std::size_t, 2> removed{i, j};
  return det_exact(l.principal_minor(removed));
}

void check_pair(const Graph& g, Vertex i, Vertex j) {
  if (i == j) throw Error(ErrorKind::InvalidArgument, "two-forest count needs distinct vertices");
  if (i >= g.order() || j >= g.order()) throw Error(ErrorKind::InvalidArgument, "vertex out of range");
}

}  // namespace

BigInt two_forest_count(const Graph& g, Vertex i, Vertex j) {
  check_pair(g, i, j);
  return two_forest_from_laplacian(laplacian(g), i, j);
}

std::vector<BigInt> forest_matrix(const Graph& g) {
  const std::size_t n = g.order();
  const BigIntMatrix l = laplacian(g);
  std::vector<BigInt> f(n * n);
  const auto pairs = static_cast<std::int64_t>(n * n);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t idx = 0; idx < pairs; ++idx) {
    const auto i = static_cast<Vertex>(static_cast<std::size_t>(idx) / n);
    const auto j = static_cast<Vertex>(static_cast<std::size_t>(idx) % n);
    if (i < j) f[static_cast<std::size_t>(idx)] = two_forest_from_laplacian(l, i, j);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) f[i * n + j] = f[j * n + i];
  }
  return f;
}

std::vector<BigInt> forest_matrix_serial(const Graph& g) {
  const std::size_t n = g.order();
  const BigIntMatrix l = laplacian(g);
  std::vector<BigInt> f(n * n);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      f[i * n + j] = two_forest_from_laplacian(l, i, j);
      f[j * n + i] = f[i * n + j];
    }
  }
  return f;
}

}  // namespace kemeny
