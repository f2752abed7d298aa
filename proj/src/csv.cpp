#include "rankdep/csv.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <set>

#include "rankdep/error.hpp"

namespace rankdep {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split_line(std::string_view line, std::size_t line_no) {
    std::vector<std::string> cells;
    std::string cell;
    bool quoted = false;
    bool was_quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cell += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                cell += c;
            }
        } else if (c == '"') {
            quoted = true;
            was_quoted = true;
        } else if (c == ',') {
            cells.emplace_back(was_quoted ? cell : std::string(trim(cell)));
            cell.clear();
            was_quoted = false;
        } else {
            cell += c;
        }
    }
    if (quoted) {
        throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": unterminated quote");
    }
    cells.emplace_back(was_quoted ? cell : std::string(trim(cell)));
    return cells;
}

double require_number(const std::string& cell, std::size_t line_no, std::size_t column) {
    const auto v = parse_double(cell);
    if (!v) {
        throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ", column " +
                                               std::to_string(column) + ": '" + cell +
                                               "' is not a number");
    }
    if (!std::isfinite(*v)) {
        throw Error(ErrorCode::NonFiniteValue, "line " + std::to_string(line_no) + ", column " +
                                                   std::to_string(column) + " is not finite");
    }
    return *v;
}

}  // namespace

CsvTable read_csv(std::istream& in) {
    CsvTable table;
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
        const auto content = trim(line);
        if (content.empty() || content.front() == '#') continue;
        auto cells = split_line(line, line_no);
        if (!have_header) {
            table.header = std::move(cells);
            have_header = true;
        } else {
            table.rows.push_back(std::move(cells));
            table.line_numbers.push_back(line_no);
        }
    }
    if (!have_header) throw Error(ErrorCode::ParseError, "input is empty (header row required)");
    return table;
}

std::optional<double> parse_double(std::string_view text) {
    text = trim(text);
    if (text.empty()) return std::nullopt;
    if (text.front() == '+') text.remove_prefix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
    return value;
}

std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

PairedSample read_paired_sample(std::istream& in) {
    const CsvTable table = read_csv(in);
    if (table.header.size() < 2) {
        throw Error(ErrorCode::ParseError, "expected at least two columns (x, y)");
    }
    std::size_t x_col = 0;
    std::size_t y_col = 1;
    const auto x_it = std::find(table.header.begin(), table.header.end(), "x");
    const auto y_it = std::find(table.header.begin(), table.header.end(), "y");
    if (x_it != table.header.end() && y_it != table.header.end()) {
        x_col = static_cast<std::size_t>(x_it - table.header.begin());
        y_col = static_cast<std::size_t>(y_it - table.header.begin());
    }

    PairedSample sample;
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const auto& row = table.rows[r];
        const std::size_t line_no = table.line_numbers[r];
        if (row.size() != table.header.size()) {
            throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected " +
                                                   std::to_string(table.header.size()) +
                                                   " cells, found " + std::to_string(row.size()));
        }
        sample.x.push_back(require_number(row[x_col], line_no, x_col + 1));
        sample.y.push_back(require_number(row[y_col], line_no, y_col + 1));
    }
    sample.validate();
    return sample;
}

ScreenInput read_screen_input(std::istream& in, const std::optional<std::vector<double>>& x_override) {
    const CsvTable table = read_csv(in);
    if (table.header.size() < 3) {
        throw Error(ErrorCode::ParseError, "screening matrix needs an id column and >= 2 conditions");
    }
    const std::size_t conditions = table.header.size() - 1;

    ScreenInput input;
    if (x_override) {
        if (x_override->size() != conditions) {
            throw Error(ErrorCode::LengthMismatch,
                        "x override has " + std::to_string(x_override->size()) + " values, matrix has " +
                            std::to_string(conditions) + " conditions");
        }
        input.x = *x_override;
        input.x_from_header = false;
    } else {
        std::vector<double> header_x;
        for (std::size_t c = 1; c < table.header.size(); ++c) {
            const auto v = parse_double(table.header[c]);
            if (!v || !std::isfinite(*v)) break;
            header_x.push_back(*v);
        }
        if (header_x.size() == conditions) {
            input.x = std::move(header_x);
        } else {
            input.x.resize(conditions);
            for (std::size_t c = 0; c < conditions; ++c) input.x[c] = static_cast<double>(c + 1);
            input.x_from_header = false;
        }
    }

    if (table.rows.empty()) throw Error(ErrorCode::ParseError, "screening matrix has no rows");

    std::set<std::string> seen;
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const auto& row = table.rows[r];
        const std::size_t line_no = table.line_numbers[r];
        if (row.size() != table.header.size()) {
            throw Error(ErrorCode::ParseError,
                        "row " + std::to_string(r + 1) + " (line " + std::to_string(line_no) +
                            "): expected " + std::to_string(table.header.size()) + " cells, found " +
                            std::to_string(row.size()));
        }
        if (!seen.insert(row[0]).second) {
            throw Error(ErrorCode::ParseError, "row " + std::to_string(r + 1) + ": duplicate id '" +
                                                   row[0] + "'");
        }
        std::vector<double> values(conditions);
        for (std::size_t c = 0; c < conditions; ++c) {
            values[c] = require_number(row[c + 1], line_no, c + 2);
        }
        input.ids.push_back(row[0]);
        input.matrix.push_back(std::move(values));
    }
    return input;
}

std::vector<double> read_number_list(std::istream& in) {
    std::vector<double> values;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto content = trim(line);
        if (content.empty() || content.front() == '#') continue;
        for (const auto& cell : split_line(line, line_no)) {
            if (cell.empty()) continue;
            if (const auto v = parse_double(cell)) values.push_back(*v);
        }
    }
    return values;
}

}  // namespace rankdep
