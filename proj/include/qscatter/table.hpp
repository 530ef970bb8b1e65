#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace qscatter {

/// Numeric result table shared by all CLI subcommands.
struct Table {
  std::string command;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  void add_row(std::vector<double> row);
};

enum class OutputFormat { Csv, Json };

/// {"command", "params", "columns", "rows"}; non-finite numbers become null.
std::string to_json(const Table& table);

/// Metadata as "# key=value" lines, then an RFC-4180 header and rows.  Numbers
/// use the shortest round-trip representation.
std::string to_csv(const Table& table);

std::string render(const Table& table, OutputFormat format);

/// Writes to `path` through a temporary file in the same directory and a rename.
void write_atomically(const std::string& path, const std::string& contents);

}  // namespace qscatter
