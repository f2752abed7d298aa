#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "rankdep/csv.hpp"
#include "rankdep/inference.hpp"
#include "rankdep/simulation.hpp"

namespace rankdep {

struct ScreenOptions {
    std::vector<Method> methods{Method::Spearman, Method::Chatterjee, Method::Combined};
    double q = 0.05;
    PValueMode mode = PValueMode::Asymptotic;
    std::size_t permutations = 1000;
    std::uint64_t seed = 0;
    TiePolicy ties{};
    unsigned threads = 0;
};

struct ScreenRow {
    std::string id;
    Statistics stats;
    std::vector<double> raw_p;  // one per ScreenOptions::methods entry
};

struct ScreenResult {
    std::vector<Method> methods;
    std::vector<ScreenRow> rows;       // input order
    std::vector<FdrResult> fdr;        // one per method, BH over all rows
};

// Tests every row of the matrix against x and BH-adjusts each method's
// p-values across rows. Row r uses seeds derived from (seed, r), so output
// is independent of thread count. Tie errors name the offending row.
ScreenResult screen(const ScreenInput& input, const ScreenOptions& options);

}  // namespace rankdep
