#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "kemeny/exact.hpp"

namespace kemeny {

using Cell = std::variant<std::string, std::int64_t, BigInt, Rational, bool>;

struct Section {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// Command output: exact values only. Decimal renderings of rationals are
/// produced by render() and never stored.
struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::string input_digest;
  std::vector<Section> sections;
  std::optional<std::int64_t> runtime_ms;

  Section& add_section(std::string name, std::vector<std::string> columns);
  const Section* find_section(std::string_view name) const;
};

enum class Format { Table, Json, Csv };

/// Table: aligned columns per section. Json: one object {command, inputs,
/// input_digest, rows[], runtime_ms}, each row tagged with its section; every
/// rational column c gains a sibling c_decimal. Csv: one header per section.
std::string render(const Report& report, Format format, int precision = 4);

/// 64-bit FNV-1a, as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view bytes);

}  // namespace kemeny
