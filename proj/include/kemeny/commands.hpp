#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "kemeny/error.hpp"
#include "kemeny/invariants.hpp"
#include "kemeny/report.hpp"
#include "kemeny/tree_enum.hpp"

namespace kemeny {

struct RunOptions {
  EnumConfig enum_config;
};

enum class Objective { Min, Max };
enum class Metric { Wiener, Kemeny };
enum class MateMode { Census, Op1 };

/// W, Gut and Kemeny's constant of the graph in `edge_list_text`; with `omega`, the
/// per-edge weight table (trees only).
Report cmd_invariants(const std::string& source_name, const std::string& edge_list_text, RouteChoice route,
                      bool omega, const RunOptions& options = {});

/// Extremal value of a metric over all trees of order n (optionally of diameter d)
/// and every tree attaining it. Also checks the attaining sets for W and Kemeny agree.
Report cmd_extremal(std::size_t n, std::optional<std::uint32_t> d, Objective objective, Metric metric,
                    const RunOptions& options = {});

/// Co-Kemeny mate pairs of order n: all equal-W pairs (census) or only those made
/// by a contract-and-subdivide move (op1).
Report cmd_mates(std::size_t n, MateMode mode, const RunOptions& options = {});

/// Leaf-condition survivors and maximal elements of T(n, d) with their W and
/// Kemeny's constant. With check_theorem, a maximal element failing the leaf
/// condition raises Error(TheoremViolation).
Report cmd_maximal(std::size_t n, std::uint32_t d, bool check_theorem, const RunOptions& options = {});

struct EnumResult {
  TreeFamily family;
  Report report;
};

/// All trees of order n (optionally diameter d). When `resume_census` is given the
/// enumeration continues from that census instead of starting at order 1.
EnumResult cmd_enum(std::size_t n, std::optional<std::uint32_t> d, const std::optional<std::string>& resume_census,
                    const RunOptions& options = {});

/// CLI exit status for a library error kind.
int exit_code_for(ErrorKind kind) noexcept;

}  // namespace kemeny
