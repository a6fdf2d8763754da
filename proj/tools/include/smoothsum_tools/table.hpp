#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace smoothsum::tools {

using Cell = std::variant<double, std::int64_t, std::string>;

struct Column {
  std::string name;
  std::string doc;
};

struct Table {
  std::string name;
  std::vector<Column> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

struct Metadata {
  std::string command;
  std::string version;
  std::string config_hash;
  std::string timestamp;  // UTC, ISO 8601
};

std::string current_timestamp();

/// Doubles with 17 significant digits, no locale.
std::string format_cell(const Cell& cell);

/// Metadata as '#' lines, then for each table a '# table:' line, the column
/// header and the rows. Tables are separated by a blank line.
void write_csv(std::ostream& out, const Metadata& meta, const std::vector<Table>& tables);

void write_json(std::ostream& out, const Metadata& meta, const std::vector<Table>& tables);

/// Text with the metadata lines removed, used to compare result bodies.
std::string strip_metadata(const std::string& csv);

}  // namespace smoothsum::tools
