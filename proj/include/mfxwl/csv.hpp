#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mfxwl/errors.hpp"
#include "mfxwl/signal.hpp"

namespace mfxwl {

struct csv_options {
    char delimiter = ',';
    bool header = false;
};

/// Column selector: a non-negative integer selects by position, anything
/// else selects by header name.
struct column_ref {
    std::optional<std::size_t> index;
    std::string name;

    static column_ref parse(const std::string& text) {
        column_ref ref;
        if (!text.empty() &&
            std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); })) {
            ref.index = static_cast<std::size_t>(std::stoull(text));
        } else {
            ref.name = text;
        }
        return ref;
    }
};

namespace detail {

inline std::vector<std::string> split_row(const std::string& line, char delim) {
    std::vector<std::string> cells;
    std::string cur;
    for (char c : line) {
        if (c == delim) {
            cells.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    cells.push_back(cur);
    return cells;
}

inline std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

inline double parse_cell(const std::string& raw, std::size_t row) {
    const std::string cell = trim(raw);
    if (cell.empty())
        throw io_error("csv: blank value at row " + std::to_string(row));
    double v = 0.0;
    const char* first = cell.data();
    const char* last = cell.data() + cell.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last)
        throw io_error("csv: unparseable value \"" + cell + "\" at row " + std::to_string(row));
    if (!std::isfinite(v))
        throw io_error("csv: non-finite value at row " + std::to_string(row));
    return v;
}

}  // namespace detail

/// Load one numeric column of a delimited text file. Rows are 1-based in
/// error messages, counting the header row if present.
inline signal load_series(const std::filesystem::path& path, const column_ref& column,
                          const csv_options& options = {}) {
    std::ifstream in(path);
    if (!in)
        throw io_error("cannot open file: " + path.string());

    std::string line;
    std::size_t row = 0;
    std::size_t col = 0;

    if (!column.index && !options.header)
        throw config_error("csv: column selected by name (\"" + column.name +
                           "\") but no header row requested");

    if (options.header) {
        if (!std::getline(in, line))
            throw io_error("csv: missing header row in " + path.string());
        ++row;
        const auto cells = detail::split_row(line, options.delimiter);
        if (column.index) {
            col = *column.index;
        } else {
            bool found = false;
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (detail::trim(cells[i]) == column.name) {
                    col = i;
                    found = true;
                    break;
                }
            }
            if (!found)
                throw io_error("csv: no column named \"" + column.name + "\" in " + path.string());
        }
    } else {
        col = *column.index;
    }

    signal out;
    out.name = column.name.empty() ? path.stem().string() : column.name;
    while (std::getline(in, line)) {
        ++row;
        if (line.empty() && in.peek() == std::char_traits<char>::eof())
            break;  // trailing newline
        const auto cells = detail::split_row(line, options.delimiter);
        if (col >= cells.size())
            throw io_error("csv: row " + std::to_string(row) + " has no column " +
                           std::to_string(col));
        out.values.push_back(detail::parse_cell(cells[col], row));
    }
    if (out.values.empty())
        throw io_error("csv: empty column in " + path.string());
    return out;
}

/// Write a two-column CSV with a header row.
inline void write_pair_csv(const std::filesystem::path& path, const signal& x, const signal& y) {
    if (x.size() != y.size())
        throw config_error("write_pair_csv: length mismatch");
    std::ofstream out(path);
    if (!out)
        throw io_error("cannot write file: " + path.string());
    out << (x.name.empty() ? "x" : x.name) << ',' << (y.name.empty() ? "y" : y.name) << '\n';
    char buf[64];
    for (std::size_t i = 0; i < x.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", x.values[i], y.values[i]);
        out << buf;
    }
}

}  // namespace mfxwl
