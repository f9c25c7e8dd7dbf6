#include <catch2/catch_amalgamated.hpp>

#include "kemeny/error.hpp"
#include "kemeny/linalg.hpp"
#include "kemeny/tree_enum.hpp"
#include "oracles.hpp"

using namespace kemeny;

namespace {

std::vector<std::vector<BigInt>> rows_of(const BigIntMatrix& m) {
  std::vector<std::vector<BigInt>> out(m.dim(), std::vector<BigInt>(m.dim()));
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) out[i][j] = m(i, j);
  return out;
}

Graph cycle(std::size_t n) {
  std::vector<Edge> es;
  for (Vertex v = 0; v < n; ++v) es.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return Graph(n, es);
}

Graph complete(std::size_t n) {
  std::vector<Edge> es;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) es.emplace_back(a, b);
  return Graph(n, es);
}

Graph petersen() {
  std::vector<Edge> es;
  for (Vertex i = 0; i < 5; ++i) {
    es.emplace_back(i, (i + 1) % 5);
    es.emplace_back(i, i + 5);
    es.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return Graph(10, es);
}

}  // namespace

TEST_CASE("Laplacian entries") {
  const BigIntMatrix l = laplacian(oracle::from_parts(2, {{0, 1}}));
  CHECK(l(0, 0) == 1);
  CHECK(l(0, 1) == -1);
  CHECK(l(1, 0) == -1);
  CHECK(l(1, 1) == 1);

  const BigIntMatrix tri = laplacian(cycle(3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(tri(i, j) == (i == j ? 2 : -1));

  std::mt19937_64 rng(5);
  for (int k = 0; k < 30; ++k) {
    const BigIntMatrix m = laplacian(oracle::random_connected_graph(9, 0.4, rng));
    for (std::size_t i = 0; i < m.dim(); ++i) {
      BigInt s = 0;
      for (std::size_t j = 0; j < m.dim(); ++j) s += m(i, j);
      CHECK(s == 0);
    }
  }
}

TEST_CASE("determinants of fixed matrices") {
  BigIntMatrix m(2);
  m(0, 0) = 2;
  m(0, 1) = -1;
  m(1, 0) = -1;
  m(1, 1) = 2;
  CHECK(det_exact(m) == 3);
  for (std::size_t k = 0; k <= 6; ++k) {
    BigIntMatrix id(k);
    for (std::size_t i = 0; i < k; ++i) id(i, i) = 1;
    CHECK(det_exact(id) == 1);
  }
  BigIntMatrix singular(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) singular(i, j) = static_cast<long long>(i + j);
  CHECK(det_exact(singular) == 0);

  BigIntMatrix needs_pivot(2);
  needs_pivot(0, 1) = 1;
  needs_pivot(1, 0) = 1;
  CHECK(det_exact(needs_pivot) == -1);
}

TEST_CASE("Bareiss agrees with cofactor expansion on random matrices") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> entry(-9, 9);
  std::bernoulli_distribution zero(0.3);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t k = 1 + trial % 6;
    BigIntMatrix m(k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) m(i, j) = zero(rng) ? 0 : entry(rng);
    CHECK(det_exact(m) == oracle::cofactor_det(rows_of(m)));
  }
}

TEST_CASE("Petersen graph has 2000 spanning trees") {
  const Graph p = petersen();
  REQUIRE(p.size() == 15);
  const std::size_t removed[] = {0};
  const BigIntMatrix minor = laplacian(p).principal_minor(removed);
  CHECK(oracle::cofactor_det(rows_of(minor)) == 2000);
  CHECK(spanning_tree_count(p) == 2000);
}

TEST_CASE("spanning tree counts") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 20; ++i) CHECK(spanning_tree_count(oracle::random_tree(1 + i, rng)) == 1);
  for (std::size_t n = 3; n <= 8; ++n) {
    CHECK(spanning_tree_count(cycle(n)) == n);
    CHECK(oracle::brute_spanning_trees(cycle(n)) == n);
  }
  CHECK(spanning_tree_count(complete(4)) == 16);
  CHECK(oracle::brute_spanning_trees(complete(4)) == 16);
  CHECK(spanning_tree_count(complete(6)) == 1296);
  CHECK_THROWS_AS(spanning_tree_count(Graph()), Error);
}

TEST_CASE("spanning tree count is invariant under relabeling") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 40; ++i) {
    const Graph g = oracle::random_connected_graph(8, 0.35, rng);
    const BigInt tau = spanning_tree_count(g);
    for (int k = 0; k < 3; ++k) CHECK(spanning_tree_count(oracle::random_relabel(g, rng)) == tau);
  }
}

TEST_CASE("two-forest counts on small graphs") {
  CHECK(two_forest_count(oracle::from_parts(2, {{0, 1}}), 0, 1) == 1);
  const Graph c4 = cycle(4);
  CHECK(two_forest_count(c4, 0, 1) == oracle::brute_two_forests(c4, 0, 1));
  CHECK(two_forest_count(c4, 0, 2) == oracle::brute_two_forests(c4, 0, 2));
  CHECK(two_forest_count(c4, 0, 1) == 3);
  CHECK(two_forest_count(c4, 0, 2) == 4);
  CHECK_THROWS_AS(two_forest_count(c4, 1, 1), Error);
  CHECK_THROWS_AS(two_forest_count(c4, 0, 4), Error);
}

TEST_CASE("two-forest counts match brute force on random connected graphs") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 6;
    const Graph g = oracle::random_connected_graph(n, 0.4, rng);
    CHECK(spanning_tree_count(g) == oracle::brute_spanning_trees(g));
    const auto f = forest_matrix(g);
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = 0; j < n; ++j) {
        if (i == j) {
          CHECK(f[i * n + j] == 0);
          continue;
        }
        const BigInt want = oracle::brute_two_forests(g, i, j);
        CHECK(two_forest_count(g, i, j) == want);
        CHECK(f[i * n + j] == want);
      }
  }
}

TEST_CASE("on trees the two-forest count is the distance") {
  for (std::size_t n = 2; n <= 10; ++n) {
    for (const Tree& t : enumerate_trees(n).members) {
      const auto f = forest_matrix(t.graph());
      for (Vertex i = 0; i < n; ++i)
        for (Vertex j = 0; j < n; ++j) {
          CHECK(f[i * n + j] == t.distance(i, j));
          CHECK(f[i * n + j] == f[j * n + i]);
        }
    }
  }
}
