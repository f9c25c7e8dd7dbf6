#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>
#include <sstream>

#include "kemeny/commands.hpp"
#include "kemeny/error.hpp"
#include "kemeny/linalg.hpp"
#include "oracles.hpp"

using namespace kemeny;
using nlohmann::json;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Parse;
}

std::vector<json> rows_in(const json& doc, const std::string& section) {
  std::vector<json> out;
  for (const auto& r : doc.at("rows"))
    if (r.at("section") == section) out.push_back(r);
  return out;
}

Report invariants_of(const std::string& name, RouteChoice route = RouteChoice::Auto, bool omega = false) {
  return cmd_invariants(name, oracle::read_fixture(name), route, omega);
}

// Recomputes W and Kemeny's constant of an embedded edge list with the forest route.
void check_embedded(const std::string& edges, std::size_t n, const std::string& wiener, const std::string& kemeny) {
  const Graph g = parse_edge_string(edges, n);
  CHECK(to_string(oracle::pair_sum_wiener(g)) == wiener);
  CHECK(kemeny_forest_route(g).str() == kemeny);
}

}  // namespace

TEST_CASE("invariants report") {
  const json u1 = json::parse(render(invariants_of("unicycle_u1.edges"), Format::Json));
  CHECK(u1["command"] == "invariants");
  const auto row = rows_in(u1, "invariants").at(0);
  CHECK(row["kemeny"] == "65/12");
  CHECK(row["kemeny_decimal"] == "5.4167");
  CHECK(row["wiener"] == "27");
  CHECK(row["route"] == "forest");
  CHECK(u1["runtime_ms"].is_null());

  const json t2 = json::parse(render(invariants_of("six_vertex_t2.edges", RouteChoice::Auto, true), Format::Json));
  std::multiset<std::int64_t> weights;
  for (const auto& r : rows_in(t2, "omega")) weights.insert(r["omega"].get<std::int64_t>());
  CHECK(weights == std::multiset<std::int64_t>{5, 5, 5, 5, 9});

  const Report k2 = cmd_invariants("k2", "0 1\n", RouteChoice::Auto, false);
  const json jk2 = json::parse(render(k2, Format::Json));
  CHECK(rows_in(jk2, "invariants").at(0)["wiener"] == "1");
  CHECK(rows_in(jk2, "invariants").at(0)["kemeny"] == "1/2");

  CHECK(kind_of([] { invariants_of("unicycle_u1.edges", RouteChoice::Wiener); }) == ErrorKind::RouteRequiresTree);
  CHECK(kind_of([] { invariants_of("unicycle_u1.edges", RouteChoice::Auto, true); }) == ErrorKind::RouteRequiresTree);
  CHECK(kind_of([] { cmd_invariants("x", "0 1\n0 1\n", RouteChoice::Auto, false); }) == ErrorKind::Parse);
  CHECK(kind_of([] { cmd_invariants("x", "n 4\n0 1\n2 3\n", RouteChoice::Auto, false); }) == ErrorKind::Disconnected);
}

TEST_CASE("extremal reports") {
  const json mn = json::parse(render(cmd_extremal(9, std::nullopt, Objective::Min, Metric::Kemeny), Format::Json));
  const auto summary = rows_in(mn, "summary").at(0);
  CHECK(summary["attaining"] == 1);
  CHECK(summary["sets_coincide"] == true);
  const auto star = rows_in(mn, "attaining").at(0);
  CHECK(star["diameter"] == 2);

  const json mx = json::parse(render(cmd_extremal(9, std::nullopt, Objective::Max, Metric::Wiener), Format::Json));
  CHECK(rows_in(mx, "attaining").size() == 1);
  CHECK(rows_in(mx, "attaining").at(0)["diameter"] == 8);

  const json ex = json::parse(render(cmd_extremal(10, 4, Objective::Max, Metric::Kemeny), Format::Json));
  const auto best = rows_in(ex, "attaining");
  REQUIRE(best.size() == 1);
  CHECK(best[0]["wiener"] == "117");
  CHECK(CanonicalCode::from_hex(best[0]["code"].get<std::string>()) ==
        canonical_code(oracle::fixture("n10_d4_t6.edges")));

  CHECK(kind_of([] { cmd_extremal(40, std::nullopt, Objective::Max, Metric::Kemeny); }) == ErrorKind::ResourceLimit);
}

TEST_CASE("mate census and contract-and-subdivide mates") {
  const json m4 = json::parse(render(cmd_mates(4, MateMode::Census), Format::Json));
  CHECK(rows_in(m4, "pairs").empty());

  // Smallest order with a repeated Wiener index, found by bucketing W over each family.
  std::size_t first = 0;
  for (std::size_t n = 1; n <= 10 && first == 0; ++n) {
    std::set<BigInt> seen;
    for (const Tree& t : enumerate_trees(n).members)
      if (!seen.insert(oracle::pair_sum_wiener(t.graph())).second) first = n;
  }
  REQUIRE(first > 0);
  for (std::size_t n = 2; n <= first; ++n) {
    const json doc = json::parse(render(cmd_mates(n, MateMode::Census), Format::Json));
    CHECK(rows_in(doc, "pairs").empty() == (n < first));
  }

  const json op = json::parse(render(cmd_mates(9, MateMode::Op1), Format::Json));
  const json census = json::parse(render(cmd_mates(9, MateMode::Census), Format::Json));
  std::set<std::pair<std::string, std::string>> all;
  for (const auto& r : rows_in(census, "pairs")) all.emplace(r["code_a"], r["code_b"]);
  for (const auto& r : rows_in(op, "pairs")) {
    CHECK(all.count({r["code_a"], r["code_b"]}) == 1);
    CHECK(r["kemeny_a"] == r["kemeny_b"]);
  }
}

TEST_CASE("maximal report and theorem check") {
  const json doc = json::parse(render(cmd_maximal(10, 4, true), Format::Json));
  CHECK(rows_in(doc, "filter").size() == 7);
  const auto maxi = rows_in(doc, "maximal");
  REQUIRE(maxi.size() == 3);
  std::set<std::string> ws;
  std::size_t argmax = 0;
  for (const auto& r : maxi) {
    ws.insert(r["wiener"].get<std::string>());
    if (r["argmax"] == true) {
      ++argmax;
      CHECK(r["wiener"] == "117");
    }
  }
  CHECK(ws == std::set<std::string>{"112", "114", "117"});
  CHECK(argmax == 1);

  const json line = json::parse(render(cmd_maximal(7, 6, true), Format::Json));
  CHECK(rows_in(line, "maximal").size() == 1);
  CHECK_NOTHROW(cmd_maximal(11, 4, true));
  CHECK(kind_of([] { cmd_maximal(10, 10, false); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("enum report and resume") {
  const EnumResult r = cmd_enum(9, std::nullopt, std::nullopt);
  CHECK(r.family.size() == 47);
  const EnumResult from = cmd_enum(10, std::nullopt, export_census(enumerate_trees(7)));
  CHECK(from.family.codes == enumerate_trees(10).codes);
  const EnumResult d4 = cmd_enum(10, 4, std::nullopt);
  CHECK(d4.family.size() == family(10, 4).size());
  CHECK(kind_of([] { cmd_enum(5, std::nullopt, export_census(enumerate_trees(7))); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("JSON output round-trips through the embedded edge lists") {
  const json ex = json::parse(render(cmd_extremal(8, std::nullopt, Objective::Max, Metric::Kemeny), Format::Json));
  for (const auto& r : rows_in(ex, "attaining")) check_embedded(r["edges"], 8, r["wiener"], r["kemeny"]);

  const json mates = json::parse(render(cmd_mates(9, MateMode::Census), Format::Json));
  for (const auto& r : rows_in(mates, "pairs")) {
    check_embedded(r["edges_a"], 9, r["wiener"], r["kemeny_a"]);
    check_embedded(r["edges_b"], 9, r["wiener"], r["kemeny_b"]);
  }

  const json maxi = json::parse(render(cmd_maximal(10, 4, false), Format::Json));
  for (const auto& r : rows_in(maxi, "filter")) check_embedded(r["edges"], 10, r["wiener"], r["kemeny"]);

  const json inv = json::parse(render(invariants_of("unicycle_u2.edges"), Format::Json));
  const auto row = rows_in(inv, "invariants").at(0);
  check_embedded(row["edges"], row["n"].get<std::size_t>(), row["wiener"], row["kemeny"]);
  CHECK(parse_rational(row["kemeny"]).decimal() == row["kemeny_decimal"]);
}

TEST_CASE("reports are deterministic across runs and thread counts") {
  for (Format f : {Format::Table, Format::Json, Format::Csv}) {
    const std::string a = render(cmd_maximal(10, 4, false), f);
    const std::string b = render(cmd_maximal(10, 4, false), f);
    CHECK(a == b);
    CHECK(render(cmd_mates(10, MateMode::Census), f) == render(cmd_mates(10, MateMode::Census), f));
  }
}

TEST_CASE("rendering formats") {
  Report r;
  r.command = "demo";
  r.inputs = {{"x", "1"}};
  r.input_digest = fnv1a_hex("abc");
  auto& s = r.add_section("values", {"name", "value", "flag", "count"});
  s.rows.push_back({std::string("third"), Rational(BigInt(1), BigInt(3)), true, BigInt(12)});
  s.rows.push_back({std::string("half"), Rational(BigInt(1), BigInt(2)), false, std::int64_t{-4}});

  const std::string csv = render(r, Format::Csv, 2);
  CHECK(csv.find("section,name,value,value_decimal,flag,count") != std::string::npos);
  CHECK(csv.find("values,third,1/3,0.33,true,12") != std::string::npos);

  const json j = json::parse(render(r, Format::Json, 3));
  CHECK(j["input_digest"] == fnv1a_hex("abc"));
  CHECK(j["rows"][0]["value"] == "1/3");
  CHECK(j["rows"][0]["value_decimal"] == "0.333");
  CHECK(j["rows"][1]["count"] == -4);
  CHECK(j["rows"][0]["count"] == "12");

  r.runtime_ms = 5;
  CHECK(json::parse(render(r, Format::Json))["runtime_ms"] == 5);

  const std::string table = render(r, Format::Table);
  CHECK(table.find("1/3 (0.3333)") != std::string::npos);
  CHECK(r.find_section("values") != nullptr);
  CHECK(r.find_section("missing") == nullptr);

  // 64-bit FNV-1a reference values.
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
}

TEST_CASE("exit codes") {
  CHECK(exit_code_for(ErrorKind::Parse) == 2);
  CHECK(exit_code_for(ErrorKind::NotATree) == 2);
  CHECK(exit_code_for(ErrorKind::RouteRequiresTree) == 2);
  CHECK(exit_code_for(ErrorKind::ResourceLimit) == 3);
  CHECK(exit_code_for(ErrorKind::TheoremViolation) == 4);
}
