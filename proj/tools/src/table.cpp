#include "smoothsum_tools/table.hpp"

#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <fmt/chrono.h>
#include <fmt/format.h>
#include <json.hpp>

namespace smoothsum::tools {

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) {
    throw std::logic_error("table " + name + ": row width does not match the columns");
  }
  rows.push_back(std::move(row));
}

std::string current_timestamp() {
  return fmt::format("{:%Y-%m-%dT%H:%M:%SZ}", fmt::gmtime(std::chrono::system_clock::now()));
}

std::string format_cell(const Cell& cell) {
  if (const auto* d = std::get_if<double>(&cell)) {
    if (std::isnan(*d)) return "nan";
    if (std::isinf(*d)) return *d > 0 ? "inf" : "-inf";
    return fmt::format("{:.17g}", *d);
  }
  if (const auto* i = std::get_if<std::int64_t>(&cell)) return fmt::format("{}", *i);
  return std::get<std::string>(cell);
}

namespace {

std::string csv_field(const Cell& cell) {
  std::string text = format_cell(cell);
  if (!std::holds_alternative<std::string>(cell) ||
      text.find_first_of(",\"\n") == std::string::npos) {
    return text;
  }
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

}  // namespace

void write_csv(std::ostream& out, const Metadata& meta, const std::vector<Table>& tables) {
  out << "# smoothsum " << meta.version << '\n'
      << "# command: " << meta.command << '\n'
      << "# config_hash: " << meta.config_hash << '\n'
      << "# timestamp: " << meta.timestamp << '\n';
  bool first = true;
  for (const auto& t : tables) {
    if (!first) out << '\n';
    first = false;
    out << "# table: " << t.name << '\n';
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
      out << (c ? "," : "") << t.columns[c].name;
    }
    out << '\n';
    for (const auto& row : t.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << csv_field(row[c]);
      out << '\n';
    }
  }
}

void write_json(std::ostream& out, const Metadata& meta, const std::vector<Table>& tables) {
  nlohmann::ordered_json doc;
  doc["meta"] = {{"version", meta.version},
                 {"command", meta.command},
                 {"config_hash", meta.config_hash},
                 {"timestamp", meta.timestamp}};
  doc["tables"] = nlohmann::ordered_json::array();
  for (const auto& t : tables) {
    nlohmann::ordered_json jt;
    jt["name"] = t.name;
    jt["columns"] = nlohmann::ordered_json::array();
    for (const auto& c : t.columns) jt["columns"].push_back(c.name);
    jt["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
      nlohmann::ordered_json jr = nlohmann::ordered_json::array();
      for (const auto& cell : row) {
        std::visit([&](const auto& v) { jr.push_back(v); }, cell);
      }
      jt["rows"].push_back(std::move(jr));
    }
    doc["tables"].push_back(std::move(jt));
  }
  out << doc.dump(2) << '\n';
}

std::string strip_metadata(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  std::string body;
  while (std::getline(in, line)) {
    if (line.rfind("# smoothsum ", 0) == 0 || line.rfind("# timestamp:", 0) == 0 ||
        line.rfind("# config_hash:", 0) == 0 || line.rfind("# command:", 0) == 0) {
      continue;
    }
    body += line;
    body += '\n';
  }
  return body;
}

}  // namespace smoothsum::tools
