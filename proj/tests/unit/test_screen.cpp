#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "rankdep/csv.hpp"
#include "rankdep/error.hpp"
#include "rankdep/rng.hpp"
#include "rankdep/screen.hpp"

using namespace rankdep;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return ErrorCode::InvalidArgument;
}

std::string error_text(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.what();
    }
    return {};
}

}  // namespace

TEST_CASE("csv basics", "[csv]") {
    std::istringstream in("\xEF\xBB\xBFx,y\n# comment\n1,2\n\n\"3\",4.5\n");
    const auto table = read_csv(in);
    REQUIRE(table.header == std::vector<std::string>{"x", "y"});
    REQUIRE(table.rows.size() == 2);
    CHECK(table.rows[1][0] == "3");
    CHECK(table.line_numbers == std::vector<std::size_t>{3, 5});

    std::istringstream quoted("a,b\n\"he said \"\"hi\"\"\",\"1,5\"\n");
    const auto q = read_csv(quoted);
    CHECK(q.rows[0][0] == "he said \"hi\"");
    CHECK(q.rows[0][1] == "1,5");

    std::istringstream empty("");
    CHECK(code_of([&] { read_csv(empty); }) == ErrorCode::ParseError);
}

TEST_CASE("number parsing and formatting", "[csv]") {
    CHECK(parse_double("1.5") == 1.5);
    CHECK(parse_double(" -2e3 ") == -2000.0);
    CHECK_FALSE(parse_double("abc").has_value());
    CHECK_FALSE(parse_double("1.5x").has_value());
    CHECK_FALSE(parse_double("").has_value());
    CHECK(format_double(0.1) == "0.1");
    for (double v : {0.123456789012, 1e-300, -3.25, 12345678.0}) {
        CHECK(std::abs(*parse_double(format_double(v)) - v) <= 1e-11 * std::abs(v));
    }
}

TEST_CASE("paired sample input", "[csv]") {
    std::istringstream named("id,y,x\na,1,10\nb,2,30\nc,3,20\n");
    const auto s = read_paired_sample(named);
    CHECK(s.x == std::vector<double>{10, 30, 20});
    CHECK(s.y == std::vector<double>{1, 2, 3});

    std::istringstream positional("u,v\n1,2\n3,4\n");
    CHECK(read_paired_sample(positional).y == std::vector<double>{2, 4});

    std::istringstream ragged("x,y\n1,2\n3\n");
    const auto msg = error_text([&] { read_paired_sample(ragged); });
    CHECK(msg.find("line 3") != std::string::npos);

    std::istringstream text("x,y\n1,two\n");
    CHECK(code_of([&] { read_paired_sample(text); }) == ErrorCode::ParseError);

    std::istringstream nan("x,y\n1,nan\n2,3\n");
    CHECK(code_of([&] { read_paired_sample(nan); }) == ErrorCode::NonFiniteValue);
}

TEST_CASE("screen input layout", "[csv]") {
    std::istringstream numeric("gene,0.5,1.5,2.5\ng1,1,2,3\ng2,3,1,2\n");
    const auto a = read_screen_input(numeric);
    CHECK(a.x_from_header);
    CHECK(a.x == std::vector<double>{0.5, 1.5, 2.5});
    CHECK(a.ids == std::vector<std::string>{"g1", "g2"});
    CHECK(a.matrix[1] == std::vector<double>{3, 1, 2});

    std::istringstream named("gene,t1,t2,t3\ng1,1,2,3\n");
    const auto b = read_screen_input(named);
    CHECK_FALSE(b.x_from_header);
    CHECK(b.x == std::vector<double>{1, 2, 3});

    std::istringstream override_in("gene,t1,t2,t3\ng1,1,2,3\n");
    const auto c = read_screen_input(override_in, std::vector<double>{9, 8, 7});
    CHECK(c.x == std::vector<double>{9, 8, 7});

    std::istringstream bad_override("gene,t1,t2,t3\ng1,1,2,3\n");
    CHECK(code_of([&] { read_screen_input(bad_override, std::vector<double>{1, 2}); }) ==
          ErrorCode::LengthMismatch);
}

TEST_CASE("screen input errors", "[csv]") {
    std::istringstream ragged("gene,1,2,3\ng1,1,2,3\ng2,1,2\n");
    const auto msg = error_text([&] { read_screen_input(ragged); });
    CHECK(msg.find("row 2") != std::string::npos);

    std::istringstream empty("gene,1,2,3\n");
    CHECK(code_of([&] { read_screen_input(empty); }) == ErrorCode::ParseError);

    std::istringstream dup("gene,1,2,3\ng1,1,2,3\ng1,3,2,1\n");
    CHECK(code_of([&] { read_screen_input(dup); }) == ErrorCode::ParseError);

    std::istringstream narrow("gene,1\ng1,1\n");
    CHECK(code_of([&] { read_screen_input(narrow); }) == ErrorCode::ParseError);
}

namespace {

ScreenInput synthetic(std::size_t rows, std::size_t t, std::uint64_t seed) {
    ScreenInput input;
    for (std::size_t j = 0; j < t; ++j) input.x.push_back(static_cast<double>(j + 1));
    Rng rng(seed);
    for (std::size_t r = 0; r < rows; ++r) {
        input.ids.push_back("r" + std::to_string(r));
        std::vector<double> row(t);
        for (std::size_t j = 0; j < t; ++j) {
            row[j] = r < rows / 2 ? rng.normal() : input.x[j];
        }
        input.matrix.push_back(std::move(row));
    }
    return input;
}

}  // namespace

TEST_CASE("screen controls the false discovery rate", "[screen]") {
    const std::size_t rows = 200, t = 40;
    double fdp_sum = 0;
    for (std::uint64_t rep = 0; rep < 50; ++rep) {
        const auto input = synthetic(rows, t, 1000 + rep);
        ScreenOptions options;
        options.q = 0.1;
        options.seed = rep;
        const auto result = screen(input, options);
        REQUIRE(result.fdr.size() == 3);
        for (std::size_t k = 0; k < 3; ++k) {
            const auto& fdr = result.fdr[k];
            std::size_t false_hits = 0;
            for (std::size_t r = 0; r < rows / 2; ++r) false_hits += fdr.rejected[r] ? 1 : 0;
            for (std::size_t r = rows / 2; r < rows; ++r) REQUIRE(fdr.rejected[r]);
            const auto total = fdr.rejected_count();
            if (k == 2) fdp_sum += total ? static_cast<double>(false_hits) / total : 0.0;
        }
    }
    CHECK(fdp_sum / 50 <= 0.10);
}

TEST_CASE("screen flags an oscillating row only with the rank-increment tests", "[screen]") {
    ScreenInput input;
    const std::size_t t = 200;
    for (std::size_t j = 0; j < t; ++j) input.x.push_back(-1.0 + 2.0 * j / (t - 1));
    input.ids = {"wave", "flat"};
    Rng rng(5);
    std::vector<double> wave(t), flat(t);
    for (std::size_t j = 0; j < t; ++j) {
        wave[j] = std::cos(2 * std::numbers::pi * input.x[j]) + 0.1 * rng.normal();
        flat[j] = rng.normal();
    }
    input.matrix = {wave, flat};
    const auto result = screen(input, {});
    CHECK_FALSE(result.fdr[0].rejected[0]);
    CHECK(result.fdr[1].rejected[0]);
    CHECK(result.fdr[2].rejected[0]);
    CHECK(result.rows[0].raw_p[2] < 1e-6);
}

TEST_CASE("a single oscillating row is rejected by the combined test", "[screen]") {
    ScreenInput input;
    const std::size_t t = 100;
    Rng rng(8);
    input.ids = {"wave"};
    input.matrix.emplace_back();
    for (std::size_t j = 0; j < t; ++j) {
        input.x.push_back(static_cast<double>(j));
        input.matrix[0].push_back(std::sin(2 * std::numbers::pi * j / 25.0) + 0.1 * rng.normal());
    }
    ScreenOptions options;
    options.methods = {Method::Combined};
    const auto result = screen(input, options);
    CHECK(result.fdr[0].rejected[0]);
}

TEST_CASE("screen output is independent of thread count", "[screen]") {
    const auto input = synthetic(60, 25, 99);
    ScreenOptions options;
    options.mode = PValueMode::Permutation;
    options.permutations = 199;
    options.seed = 4;
    options.threads = 1;
    const auto a = screen(input, options);
    options.threads = 3;
    const auto b = screen(input, options);
    for (std::size_t r = 0; r < a.rows.size(); ++r) {
        REQUIRE(a.rows[r].raw_p == b.rows[r].raw_p);
        REQUIRE(a.rows[r].id == b.rows[r].id);
    }
    for (std::size_t k = 0; k < 3; ++k) CHECK(a.fdr[k].adjusted_p == b.fdr[k].adjusted_p);
}

TEST_CASE("screen tie handling names the row", "[screen]") {
    ScreenInput input;
    input.x = {1, 2, 3, 4};
    input.ids = {"ok", "tied"};
    input.matrix = {{1, 2, 3, 4}, {1, 1, 2, 3}};
    const auto msg = error_text([&] { screen(input, {}); });
    CHECK(msg.find("TiesPresent") != std::string::npos);
    CHECK(msg.find("tied") != std::string::npos);
    CHECK(msg.find("row 2") != std::string::npos);

    ScreenOptions options;
    options.ties = TiePolicy::random_break(3);
    const auto a = screen(input, options);
    const auto b = screen(input, options);
    CHECK(a.rows[1].raw_p == b.rows[1].raw_p);
}

TEST_CASE("screen method subset and validation", "[screen]") {
    const auto input = synthetic(10, 12, 1);
    ScreenOptions options;
    options.methods = {Method::Chatterjee};
    const auto result = screen(input, options);
    CHECK(result.fdr.size() == 1);
    CHECK(result.rows[0].raw_p.size() == 1);
    options.q = 1.5;
    CHECK(code_of([&] { screen(input, options); }) == ErrorCode::InvalidLevel);
}
