#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rankdep/ranks.hpp"

namespace rankdep {

// Comma-separated, header row required, '.' decimal separator. Cells may
// be wrapped in double quotes ("" escapes a quote). Blank lines and lines
// starting with '#' are skipped.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::size_t> line_numbers;  // 1-based source line of each row
};

CsvTable read_csv(std::istream& in);

// Parses the whole cell as a finite or non-finite double; nullopt otherwise.
std::optional<double> parse_double(std::string_view text);

// 12 significant digits, the format every emitted CSV uses.
std::string format_double(double value);

// Two numeric columns. Uses the columns named "x" and "y" when present,
// otherwise the first two.
PairedSample read_paired_sample(std::istream& in);

struct ScreenInput {
    std::vector<std::string> ids;
    std::vector<double> x;
    std::vector<std::vector<double>> matrix;
    bool x_from_header = true;
};

// First column is the row id; remaining header cells give the x-vector when
// they are all numeric. `x_override` replaces the header x-vector; when the
// header is not numeric and no override is given, x = 1..T.
ScreenInput read_screen_input(std::istream& in,
                              const std::optional<std::vector<double>>& x_override = {});

// All numeric cells of a file, in reading order (any layout, header optional).
std::vector<double> read_number_list(std::istream& in);

}  // namespace rankdep
