#include "kemeny/report.hpp"

#include <algorithm>
#include <cstdio>

#include <json.hpp>

namespace kemeny {

namespace {

std::string cell_text(const Cell& c, int precision, bool with_decimal) {
  return std::visit(
      [&](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::string>) {
          return v;
        } else if constexpr (std::is_same_v<T, std::int64_t>) {
          return std::to_string(v);
        } else if constexpr (std::is_same_v<T, BigInt>) {
          return v.str();
        } else if constexpr (std::is_same_v<T, Rational>) {
          return with_decimal ? v.str() + " (" + v.decimal(precision) + ")" : v.str();
        } else {
          return v ? "true" : "false";
        }
      },
      c);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string render_table(const Report& r, int precision) {
  std::string out = "# command: " + r.command + "\n";
  for (const auto& [k, v] : r.inputs) out += "# " + k + ": " + v + "\n";
  out += "# input digest: " + r.input_digest + "\n";
  for (const auto& s : r.sections) {
    out += "\n[" + s.name + "]\n";
    std::vector<std::size_t> width(s.columns.size());
    std::vector<std::vector<std::string>> text;
    for (std::size_t c = 0; c < s.columns.size(); ++c) width[c] = s.columns[c].size();
    for (const auto& row : s.rows) {
      auto& line = text.emplace_back();
      for (std::size_t c = 0; c < row.size(); ++c) {
        line.push_back(cell_text(row[c], precision, true));
        width[c] = std::max(width[c], line.back().size());
      }
    }
    const auto emit = [&](const std::vector<std::string>& cells) {
      std::string line;
      for (std::size_t c = 0; c < cells.size(); ++c) {
        line += cells[c];
        if (c + 1 < cells.size()) line += std::string(width[c] - cells[c].size() + 2, ' ');
      }
      out += line + "\n";
    };
    emit(s.columns);
    for (const auto& line : text) emit(line);
  }
  if (r.runtime_ms) out += "\n# runtime: " + std::to_string(*r.runtime_ms) + " ms\n";
  return out;
}

std::string render_json(const Report& r, int precision) {
  nlohmann::ordered_json j;
  j["command"] = r.command;
  j["inputs"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.inputs) j["inputs"][k] = v;
  j["input_digest"] = r.input_digest;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& s : r.sections) {
    for (const auto& row : s.rows) {
      nlohmann::ordered_json o;
      o["section"] = s.name;
      for (std::size_t c = 0; c < row.size(); ++c) {
        const std::string& key = s.columns[c];
        std::visit(
            [&](const auto& v) {
              using T = std::decay_t<decltype(v)>;
              if constexpr (std::is_same_v<T, BigInt>) {
                o[key] = v.str();
              } else if constexpr (std::is_same_v<T, Rational>) {
                o[key] = v.str();
                o[key + "_decimal"] = v.decimal(precision);
              } else {
                o[key] = v;
              }
            },
            row[c]);
      }
      j["rows"].push_back(std::move(o));
    }
  }
  j["runtime_ms"] = r.runtime_ms ? nlohmann::ordered_json(*r.runtime_ms) : nlohmann::ordered_json(nullptr);
  return j.dump(2) + "\n";
}

std::string render_csv(const Report& r, int precision) {
  std::string out;
  for (const auto& s : r.sections) {
    if (!out.empty()) out += "\n";
    std::string header = "section";
    std::vector<bool> is_rational(s.columns.size(), false);
    if (!s.rows.empty()) {
      for (std::size_t c = 0; c < s.columns.size(); ++c) is_rational[c] = std::holds_alternative<Rational>(s.rows[0][c]);
    }
    for (std::size_t c = 0; c < s.columns.size(); ++c) {
      header += "," + csv_escape(s.columns[c]);
      if (is_rational[c]) header += "," + csv_escape(s.columns[c] + "_decimal");
    }
    out += header + "\n";
    for (const auto& row : s.rows) {
      std::string line = csv_escape(s.name);
      for (std::size_t c = 0; c < row.size(); ++c) {
        line += "," + csv_escape(cell_text(row[c], precision, false));
        if (is_rational[c]) line += "," + std::get<Rational>(row[c]).decimal(precision);
      }
      out += line + "\n";
    }
  }
  return out;
}

}  // namespace

Section& Report::add_section(std::string name, std::vector<std::string> columns) {
  return sections.emplace_back(Section{std::move(name), std::move(columns), {}});
}

const Section* Report::find_section(std::string_view name) const {
  for (const auto& s : sections) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

std::string render(const Report& report, Format format, int precision) {
  switch (format) {
    case Format::Table: return render_table(report, precision);
    case Format::Json: return render_json(report, precision);
    case Format::Csv: return render_csv(report, precision);
  }
  return {};
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const char ch : bytes) {
    h ^= static_cast<unsigned char>(ch);
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace kemeny
