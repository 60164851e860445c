#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace bsl {

// One table cell. Formatting is pinned (ints decimal, doubles 17 significant
// digits, strings verbatim) so emitted files are byte-stable.
using Cell = std::variant<std::int64_t, double, std::string>;

std::string format_double17(double x);
std::string format_cell(const Cell& cell);
double cell_to_double(const Cell& cell);  // throws on non-numeric text

// Rows plus `# `-prefixed comment lines carrying the config echo.
struct Table {
  std::vector<std::string> comments;  // without the "# " prefix
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
  std::size_t column_index(const std::string& name) const;
};

// Header row, comma separators, LF endings. String cells must stay free of
// separators; the writer rejects anything that would need quoting.
std::string to_csv(const Table& table);

// Inverse of to_csv up to cell types: parsed cells come back as strings, so
// emit(parse(text)) == text byte for byte.
Table parse_csv(const std::string& text);

// The same rows as an array of objects, column order preserved.
std::string to_json(const Table& table);

}  // namespace bsl
