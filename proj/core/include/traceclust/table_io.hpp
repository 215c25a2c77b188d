#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace traceclust {

// Shortest decimal form that round-trips exactly; keeps artifacts
// byte-stable across reruns.
std::string format_double(double value);
double parse_double(const std::string& text, std::size_t line = 0, std::size_t column = 0);
std::int64_t parse_int(const std::string& text, std::size_t line = 0, std::size_t column = 0);

// RFC-4180-ish cells: quoted when they contain a comma, quote or newline.
std::string csv_escape(const std::string& cell);
void write_csv_row(std::ostream& out, const std::vector<std::string>& cells);

struct CsvData {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::size_t> row_lines;  // 1-based source line of each row
};

// Reads an entire delimited table. Quoted cells may embed commas, quotes
// ("") and newlines. Rows must match the header width.
CsvData read_csv_data(std::istream& in);

// Artifact files carry "# <schema>" as their first line; readers reject a
// mismatch so stale artifacts fail loudly.
void write_schema_line(std::ostream& out, const std::string& schema);
std::string read_schema_line(std::istream& in);
void require_schema(const std::string& found, const std::string& expected);

}  // namespace traceclust
