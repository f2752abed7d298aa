#include "rankdep/screen.hpp"

#include <string>

#include "rankdep/error.hpp"
#include "rankdep/parallel.hpp"
#include "rankdep/rng.hpp"

namespace rankdep {

ScreenResult screen(const ScreenInput& input, const ScreenOptions& options) {
    if (input.matrix.empty()) throw Error(ErrorCode::InvalidArgument, "screening matrix has no rows");
    if (options.methods.empty()) throw Error(ErrorCode::InvalidArgument, "no methods selected");

    ScreenResult result;
    result.methods = options.methods;
    result.rows.resize(input.matrix.size());

    parallel_for(input.matrix.size(), options.threads, [&](std::size_t r) {
        const std::uint64_t row_seed = derive_seed(options.seed, r);
        TiePolicy ties = options.ties;
        if (ties.mode == TieMode::RandomBreak) ties.seed = derive_seed(ties.seed, r);

        RankSequence ranks = [&] {
            try {
                return concomitant_ranks(PairedSample{input.x, input.matrix[r]}, ties);
            } catch (const Error& e) {
                throw Error(e.code(), "row " + std::to_string(r + 1) + " ('" + input.ids[r] +
                                          "'): " + e.what());
            }
        }();

        ScreenRow& row = result.rows[r];
        row.id = input.ids[r];
        row.stats = all_statistics(ranks);
        for (std::size_t k = 0; k < options.methods.size(); ++k) {
            const Method method = options.methods[k];
            row.raw_p.push_back(
                options.mode == PValueMode::Asymptotic
                    ? asymptotic_pvalue(method, row.stats)
                    : permutation_pvalue(ranks, method, options.permutations,
                                         derive_seed(row_seed, k), 1)
                          .p_value);
        }
    });

    for (std::size_t k = 0; k < options.methods.size(); ++k) {
        std::vector<double> column;
        column.reserve(result.rows.size());
        for (const auto& row : result.rows) column.push_back(row.raw_p[k]);
        result.fdr.push_back(bh_adjust(column, options.q));
    }
    return result;
}

}  // namespace rankdep
