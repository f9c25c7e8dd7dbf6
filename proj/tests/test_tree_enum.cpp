#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "kemeny/error.hpp"
#include "kemeny/tree_enum.hpp"
#include "oracles.hpp"

using namespace kemeny;

namespace {

// Unlabeled tree counts by order (1-based), the standard free-tree sequence.
constexpr std::size_t kFreeTrees[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159};

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::TheoremViolation;
}

}  // namespace

TEST_CASE("codes are relabel invariant and separate non-isomorphic trees") {
  const Graph a = parse_edge_list("0 1\n1 2\n2 3");
  const Graph b = parse_edge_list("2 0\n0 3\n3 1");
  CHECK(canonical_code(a) == canonical_code(b));
  CHECK(canonical_code(a) != canonical_code(parse_edge_list("0 1\n0 2\n0 3")));

  const Graph t1 = oracle::fixture("six_vertex_t1.edges");
  const Graph t2 = oracle::fixture("six_vertex_t2.edges");
  CHECK_FALSE(oracle::brute_isomorphic(t1, t2));
  CHECK(canonical_code(t1) != canonical_code(t2));

  std::mt19937_64 rng(53);
  for (int i = 0; i < 200; ++i) {
    const Graph g = oracle::random_tree(1 + i % 25, rng);
    const CanonicalCode c = canonical_code(g);
    CHECK(c.tree_order() == g.order());
    CHECK(canonical_code(oracle::random_relabel(g, rng)) == c);
    CHECK(canonical_code(tree_from_graph(g)) == c);
    CHECK(CanonicalCode::from_hex(c.hex()) == c);
  }
}

TEST_CASE("code equality coincides with brute-force isomorphism") {
  std::mt19937_64 rng(59);
  for (int i = 0; i < 400; ++i) {
    const std::size_t n = 3 + i % 6;
    const Graph a = oracle::random_tree(n, rng);
    const Graph b = oracle::random_tree(n, rng);
    CHECK((canonical_code(a) == canonical_code(b)) == oracle::brute_isomorphic(a, b));
  }
}

TEST_CASE("decoding a code gives a tree with that code") {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 200; ++i) {
    const Graph g = oracle::random_tree(1 + i % 20, rng);
    const CanonicalCode c = canonical_code(g);
    const Graph back = graph_from_code(c);
    CHECK(canonical_code(back) == c);
    if (g.order() <= 8) CHECK(oracle::brute_isomorphic(g, back));
  }
}

TEST_CASE("canonical_code rejects graphs that are not trees") {
  CHECK(kind_of([] { canonical_code(parse_edge_list("0 1\n1 2\n2 0")); }) == ErrorKind::NotATree);
  CHECK_THROWS_AS(CanonicalCode::from_hex("zz"), Error);
}

TEST_CASE("Prufer decoding gives degree = 1 + multiplicity") {
  for (std::size_t n = 3; n <= 6; ++n) {
    std::vector<Vertex> seq(n - 2, 0);
    while (true) {
      const Graph g = tree_from_prufer(seq, n);
      REQUIRE(g.size() == n - 1);
      REQUIRE(is_connected(g));
      for (Vertex v = 0; v < n; ++v)
        CHECK(g.degree(v) == 1 + static_cast<std::size_t>(std::count(seq.begin(), seq.end(), v)));
      std::size_t k = 0;
      while (k < seq.size() && ++seq[k] == n) seq[k++] = 0;
      if (k == seq.size()) break;
    }
  }
}

TEST_CASE("enumeration counts") {
  for (std::size_t n = 1; n <= 14; ++n) CHECK(enumerate_trees(n).size() == kFreeTrees[n - 1]);
  CHECK(prufer_oracle_count(3) == 1);
  CHECK(prufer_oracle_count(5) == 3);
  CHECK(prufer_oracle_count(8) == 23);
  for (std::size_t n = 1; n <= 9; ++n) CHECK(prufer_oracle_count(n) == enumerate_trees(n).size());
  CHECK(kind_of([] { prufer_oracle_count(10); }) == ErrorKind::ResourceLimit);
}

TEST_CASE("enumerated members are valid, distinct, pairwise non-isomorphic and sorted") {
  for (std::size_t n = 1; n <= 12; ++n) {
    const TreeFamily fam = enumerate_trees(n);
    REQUIRE(fam.members.size() == fam.codes.size());
    CHECK(std::is_sorted(fam.codes.begin(), fam.codes.end()));
    CHECK(std::adjacent_find(fam.codes.begin(), fam.codes.end()) == fam.codes.end());
    for (std::size_t k = 0; k < fam.size(); ++k) {
      CHECK(fam.members[k].order() == n);
      CHECK(canonical_code(fam.members[k]) == fam.codes[k]);
      CHECK(fam.find(fam.codes[k]) == k);
    }
    if (n <= 7)
      for (std::size_t a = 0; a < fam.size(); ++a)
        for (std::size_t b = a + 1; b < fam.size(); ++b)
          CHECK_FALSE(oracle::brute_isomorphic(fam.members[a].graph(), fam.members[b].graph()));
  }
}

TEST_CASE("every random labeled tree is found in the family") {
  std::mt19937_64 rng(67);
  for (std::size_t n = 2; n <= 11; ++n) {
    const TreeFamily fam = enumerate_trees(n);
    for (int i = 0; i < 50; ++i) CHECK(fam.find(canonical_code(oracle::random_tree(n, rng))).has_value());
  }
}

TEST_CASE("enumeration limits") {
  CHECK(kind_of([] { enumerate_trees(0); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { enumerate_trees(17); }) == ErrorKind::ResourceLimit);
  CHECK(kind_of([] { enumerate_trees(9, EnumConfig{8}); }) == ErrorKind::ResourceLimit);
}

TEST_CASE("serial and parallel enumeration agree") {
  for (std::size_t n = 1; n <= 12; ++n) CHECK(enumerate_trees(n).codes == enumerate_trees_serial(n).codes);
}

TEST_CASE("diameter classes") {
  for (std::size_t n = 3; n <= 12; ++n) {
    const TreeFamily all = enumerate_trees(n);
    std::size_t total = 0;
    for (std::uint32_t d = 1; d < n; ++d) {
      const TreeFamily fd = family(n, d);
      CHECK(fd.diameter == d);
      for (const Tree& t : fd.members) CHECK(t.diameter() == d);
      CHECK(fd.codes == filter_diameter(all, d).codes);
      total += fd.size();
    }
    CHECK(total == all.size());
    CHECK(family(n, static_cast<std::uint32_t>(n - 1)).size() == 1);
    REQUIRE(family(n, 2).size() == 1);
    CHECK(family(n, 2).members[0].graph().degree(family(n, 2).members[0].center()[0]) == n - 1);
  }
  CHECK(kind_of([] { family(5, 0); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { family(5, 5); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("order 10 diameter 4 contains the seven centre-balanced fixtures") {
  const TreeFamily fam = family(10, 4);
  for (int k = 1; k <= 7; ++k) {
    const Graph g = oracle::fixture("n10_d4_t" + std::to_string(k) + ".edges");
    CHECK(fam.find(canonical_code(g)).has_value());
  }
}

TEST_CASE("center size matches diameter parity on all trees up to order 10") {
  for (std::size_t n = 1; n <= 10; ++n)
    for (const Tree& t : enumerate_trees(n).members) {
      CHECK(t.center().size() == (t.diameter() % 2 == 0 ? 1u : 2u));
      std::uint32_t max_ecc = 0;
      std::uint64_t ecc_sum = 0;
      for (auto e : t.eccentricities()) {
        max_ecc = std::max(max_ecc, e);
        ecc_sum += e;
      }
      CHECK(max_ecc == t.diameter());
      CHECK(ecc_sum >= n * t.radius());
      for (Vertex c : t.center()) CHECK(t.eccentricities()[c] == t.radius());
    }
}

TEST_CASE("census export, import and resume") {
  const TreeFamily f8 = enumerate_trees(8);
  const std::string text = export_census(f8);
  CHECK(text == export_census(enumerate_trees(8)));
  const TreeFamily back = import_census(text);
  CHECK(back.codes == f8.codes);
  CHECK(back.order == 8);
  CHECK(extend_family(back, 11).codes == enumerate_trees(11).codes);

  CHECK(kind_of([&] { import_census(text + text.substr(0, text.find('\n') + 1)); }) == ErrorKind::Parse);
  CHECK(kind_of([] { import_census("3128 0-1 1-2\n"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { import_census("garbage\n"); }) == ErrorKind::Parse);
  CHECK(kind_of([&] { extend_family(back, 7); }) == ErrorKind::InvalidArgument);
}
