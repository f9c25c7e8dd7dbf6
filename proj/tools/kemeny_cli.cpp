// Command-line front end: invariants, extremal, mates, maximal, enum.

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <omp.h>

#include <CLI11.hpp>

#include "kemeny/commands.hpp"
#include "kemeny/error.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw kemeny::ParseError(kemeny::ParseError::Reason::Empty, 0, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace kemeny;

  CLI::App app{"Exact Kemeny's constant and Wiener index on trees and connected graphs"};
  app.require_subcommand(1);
  app.fallthrough();

  int threads = 0;
  int precision = 4;
  bool json = false;
  bool csv = false;
  bool timing = false;
  std::size_t max_order = EnumConfig{}.max_order;
  app.add_option("--threads", threads, "Worker threads for family scans (default: all cores)")->check(CLI::PositiveNumber);
  app.add_option("--precision", precision, "Decimal places for rational values")->check(CLI::Range(0, 60));
  auto* json_flag = app.add_flag("--json", json, "Emit one JSON object");
  app.add_flag("--csv", csv, "Emit CSV")->excludes(json_flag);
  app.add_flag("--timing", timing, "Include wall-clock runtime in the report");
  app.add_option("--max-order", max_order, "Enumeration order cap")->check(CLI::Range(1, 24));

  const std::map<std::string, RouteChoice> routes{{"auto", RouteChoice::Auto},
                                                  {"forest", RouteChoice::Forest},
                                                  {"wiener", RouteChoice::Wiener},
                                                  {"edgecut", RouteChoice::EdgeCut}};
  const std::map<std::string, Objective> objectives{{"min", Objective::Min}, {"max", Objective::Max}};
  const std::map<std::string, Metric> metrics{{"wiener", Metric::Wiener}, {"kemeny", Metric::Kemeny}};
  const std::map<std::string, MateMode> modes{{"census", MateMode::Census}, {"op1", MateMode::Op1}};

  auto* inv = app.add_subcommand("invariants", "W, Gutman index and Kemeny's constant of an edge-list file");
  std::string path;
  RouteChoice route = RouteChoice::Auto;
  bool omega = false;
  inv->add_option("file", path, "Edge-list file")->required();
  inv->add_option("--route", route, "Kemeny route: auto, forest, wiener, edgecut")
      ->transform(CLI::CheckedTransformer(routes, CLI::ignore_case));
  inv->add_flag("--omega", omega, "Print the per-edge weight table (trees)");

  auto* ext = app.add_subcommand("extremal", "Extremal trees of a given order (and diameter)");
  std::size_t n = 0;
  std::optional<std::uint32_t> diameter;
  Objective objective = Objective::Max;
  Metric metric = Metric::Kemeny;
  ext->add_option("-n,--order", n, "Tree order")->required();
  ext->add_option("-d,--diameter", diameter, "Restrict to this diameter");
  ext->add_option("--objective", objective, "min or max")->transform(CLI::CheckedTransformer(objectives));
  ext->add_option("--metric", metric, "wiener or kemeny")->transform(CLI::CheckedTransformer(metrics));

  auto* mates = app.add_subcommand("mates", "Co-Kemeny mate pairs of a given order");
  MateMode mode = MateMode::Census;
  mates->add_option("-n,--order", n, "Tree order")->required();
  mates->add_option("--mode", mode, "census or op1")->transform(CLI::CheckedTransformer(modes));

  auto* maxi = app.add_subcommand("maximal", "Leaf-condition survivors and maximal elements of T(n,d)");
  std::uint32_t d = 0;
  bool check = false;
  maxi->add_option("-n,--order", n, "Tree order")->required();
  maxi->add_option("-d,--diameter", d, "Diameter")->required();
  maxi->add_flag("--check-theorem", check, "Fail (exit 4) if a maximal element fails the leaf condition");

  auto* en = app.add_subcommand("enum", "Census of non-isomorphic trees: '<code-hex> <edges>' per line");
  std::optional<std::string> resume_path;
  en->add_option("-n,--order", n, "Tree order")->required();
  en->add_option("-d,--diameter", diameter, "Restrict to this diameter");
  en->add_option("--from", resume_path, "Census file of a smaller order to continue from");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  if (threads > 0) omp_set_num_threads(threads);
  RunOptions options;
  options.enum_config.max_order = max_order;
  const Format format = json ? Format::Json : (csv ? Format::Csv : Format::Table);

  try {
    const auto start = std::chrono::steady_clock::now();
    Report report;
    std::optional<std::string> census_text;
    if (*inv) {
      report = cmd_invariants(path, read_file(path), route, omega, options);
    } else if (*ext) {
      report = cmd_extremal(n, diameter, objective, metric, options);
    } else if (*mates) {
      report = cmd_mates(n, mode, options);
    } else if (*maxi) {
      report = cmd_maximal(n, d, check, options);
    } else {
      const std::optional<std::string> resume = resume_path ? std::optional(read_file(*resume_path)) : std::nullopt;
      auto result = cmd_enum(n, diameter, resume, options);
      report = std::move(result.report);
      if (format == Format::Table) census_text = export_census(result.family);
    }
    if (timing) {
      report.runtime_ms =
          std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    }
    std::cout << (census_text ? *census_text : render(report, format, precision));
    if (census_text && timing) std::cerr << "# runtime: " << *report.runtime_ms << " ms\n";
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
