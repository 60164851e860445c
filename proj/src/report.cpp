#include "bsl/report.hpp"

#include <charconv>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace bsl {

std::string format_double17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string format_cell(const Cell& cell) {
  if (const auto* i = std::get_if<std::int64_t>(&cell)) {
    return std::to_string(*i);
  }
  if (const auto* d = std::get_if<double>(&cell)) {
    return format_double17(*d);
  }
  return std::get<std::string>(cell);
}

double cell_to_double(const Cell& cell) {
  if (const auto* i = std::get_if<std::int64_t>(&cell)) {
    return static_cast<double>(*i);
  }
  if (const auto* d = std::get_if<double>(&cell)) {
    return *d;
  }
  const std::string& s = std::get<std::string>(cell);
  double value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument("cell is not numeric: '" + s + "'");
  }
  return value;
}

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) {
    throw std::invalid_argument("Table: row width does not match columns");
  }
  rows.push_back(std::move(row));
}

std::size_t Table::column_index(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == name) {
      return i;
    }
  }
  throw std::invalid_argument("Table: no column named '" + name + "'");
}

namespace {
void check_csv_safe(const std::string& s) {
  for (char c : s) {
    if (c == ',' || c == '\n' || c == '\r' || c == '"') {
      throw std::invalid_argument("CSV cell would need quoting: '" + s + "'");
    }
  }
}
}  // namespace

std::string to_csv(const Table& table) {
  std::string out;
  for (const std::string& c : table.comments) {
    out += "# ";
    out += c;
    out += '\n';
  }
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    check_csv_safe(table.columns[i]);
    if (i) {
      out += ',';
    }
    out += table.columns[i];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::string cell = format_cell(row[i]);
      check_csv_safe(cell);
      if (i) {
        out += ',';
      }
      out += cell;
    }
    out += '\n';
  }
  return out;
}

Table parse_csv(const std::string& text) {
  Table table;
  std::size_t pos = 0;
  bool header_done = false;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) {
      throw std::invalid_argument("CSV: missing trailing newline");
    }
    std::string line = text.substr(pos, eol - pos);
    pos = eol + 1;
    if (line.rfind("# ", 0) == 0) {
      if (header_done) {
        throw std::invalid_argument("CSV: comment after header");
      }
      table.comments.push_back(line.substr(2));
      continue;
    }
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      std::size_t comma = line.find(',', start);
      if (comma == std::string::npos) {
        fields.push_back(line.substr(start));
        break;
      }
      fields.push_back(line.substr(start, comma - start));
      start = comma + 1;
    }
    if (!header_done) {
      table.columns = std::move(fields);
      header_done = true;
    } else {
      std::vector<Cell> row;
      row.reserve(fields.size());
      for (std::string& f : fields) {
        row.emplace_back(std::move(f));
      }
      table.add_row(std::move(row));
    }
  }
  if (!header_done) {
    throw std::invalid_argument("CSV: no header row");
  }
  return table;
}

std::string to_json(const Table& table) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (const auto* iv = std::get_if<std::int64_t>(&row[i])) {
        obj[table.columns[i]] = *iv;
      } else if (const auto* dv = std::get_if<double>(&row[i])) {
        obj[table.columns[i]] = *dv;
      } else {
        obj[table.columns[i]] = std::get<std::string>(row[i]);
      }
    }
    doc.push_back(std::move(obj));
  }
  nlohmann::ordered_json root = nlohmann::ordered_json::object();
  root["comments"] = table.comments;
  root["rows"] = std::move(doc);
  return root.dump(2) + "\n";
}

}  // namespace bsl
