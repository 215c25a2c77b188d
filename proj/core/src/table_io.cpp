#include "traceclust/table_io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "traceclust/errors.hpp"

namespace traceclust {

std::string format_double(double value) {
    char buffer[64];
    const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, result.ptr);
}

double parse_double(const std::string& text, std::size_t line, std::size_t column) {
    double value = 0.0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    const auto result = std::from_chars(begin, end, value);
    if (result.ec != std::errc{} || result.ptr != end) {
        throw ParseError("not a number: '" + text + "'", line, column);
    }
    return value;
}

std::int64_t parse_int(const std::string& text, std::size_t line, std::size_t column) {
    std::int64_t value = 0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    const auto result = std::from_chars(begin, end, value);
    if (result.ec != std::errc{} || result.ptr != end) {
        throw ParseError("not an integer: '" + text + "'", line, column);
    }
    return value;
}

std::string csv_escape(const std::string& cell) {
    if (cell.find_first_of(",\"\n\r") == std::string::npos) return cell;
    std::string escaped = "\"";
    for (char c : cell) {
        if (c == '"') escaped += "\"\"";
        else escaped += c;
    }
    escaped += '"';
    return escaped;
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out << ',';
        out << csv_escape(cells[i]);
    }
    out << '\n';
}

CsvData read_csv_data(std::istream& in) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();

    CsvData data;
    std::vector<std::string> row;
    std::string cell;
    bool quoted = false;
    bool cell_started = false;
    std::size_t line = 1;
    std::size_t row_line = 1;

    auto end_cell = [&] {
        row.push_back(std::move(cell));
        cell.clear();
        cell_started = false;
    };
    auto end_row = [&] {
        end_cell();
        if (row.size() == 1 && row[0].empty()) {  // blank line
            row.clear();
            return;
        }
        if (data.header.empty()) {
            data.header = std::move(row);
        } else {
            if (row.size() != data.header.size()) {
                throw ParseError("row has " + std::to_string(row.size()) + " cells, header has " +
                                     std::to_string(data.header.size()),
                                 row_line, 1);
            }
            data.rows.push_back(std::move(row));
            data.row_lines.push_back(row_line);
        }
        row.clear();
    };

    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    cell.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                if (c == '\n') ++line;
                cell.push_back(c);
            }
            continue;
        }
        switch (c) {
            case '"':
                if (!cell_started && cell.empty()) {
                    quoted = true;
                    cell_started = true;
                } else {
                    throw ParseError("stray quote inside an unquoted cell", line, 1);
                }
                break;
            case ',':
                end_cell();
                break;
            case '\r':
                break;
            case '\n':
                end_row();
                ++line;
                row_line = line;
                break;
            default:
                cell.push_back(c);
                cell_started = true;
        }
    }
    if (quoted) throw ParseError("unterminated quoted cell", row_line, 1);
    if (cell_started || !cell.empty() || !row.empty()) end_row();
    return data;
}

void write_schema_line(std::ostream& out, const std::string& schema) {
    out << "# " << schema << '\n';
}

std::string read_schema_line(std::istream& in) {
    std::string first;
    if (!std::getline(in, first)) {
        throw ParseError("empty file, expected a schema line", 1, 1);
    }
    if (!first.empty() && first.back() == '\r') first.pop_back();
    if (first.rfind("# ", 0) != 0) {
        throw ParseError("missing schema line, expected \"# <schema>\"", 1, 1);
    }
    return first.substr(2);
}

void require_schema(const std::string& found, const std::string& expected) {
    if (found != expected) {
        throw ConfigError("schema version mismatch: artifact is '" + found + "', this build expects '" +
                          expected + "'");
    }
}

}  // namespace traceclust
