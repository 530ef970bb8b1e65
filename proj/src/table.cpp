#include "qscatter/table.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <unistd.h>

namespace qscatter {

namespace {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string flat_value(const nlohmann::ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) return format_number(v.get<double>());
  return v.dump();
}

}  // namespace

void Table::add_row(std::vector<double> row) {
  if (row.size() != columns.size()) throw std::logic_error("row width does not match columns");
  rows.push_back(std::move(row));
}

std::string to_json(const Table& table) {
  nlohmann::ordered_json j;
  j["command"] = table.command;
  j["params"] = table.params;
  j["columns"] = table.columns;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& r : table.rows) {
    auto row = nlohmann::ordered_json::array();
    for (double v : r) {
      if (std::isfinite(v))
        row.push_back(v);
      else
        row.push_back(nullptr);
    }
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j.dump(2) + "\n";
}

std::string to_csv(const Table& table) {
  std::string out = "# command=" + table.command + "\r\n";
  for (const auto& [key, value] : table.params.items()) out += "# " + key + "=" + flat_value(value) + "\r\n";
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out += ',';
    out += csv_field(table.columns[i]);
  }
  out += "\r\n";
  for (const auto& r : table.rows) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) out += ',';
      out += format_number(r[i]);
    }
    out += "\r\n";
  }
  return out;
}

std::string render(const Table& table, OutputFormat format) {
  return format == OutputFormat::Json ? to_json(table) : to_csv(table);
}

void write_atomically(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    f << contents;
    f.flush();
    if (!f) throw std::runtime_error("write to " + tmp.string() + " failed");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw std::runtime_error("rename to " + target.string() + " failed: " + ec.message());
  }
}

}  // namespace qscatter
