#include "rankdep/ranks.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "rankdep/error.hpp"
#include "rankdep/rng.hpp"

namespace rankdep {

namespace {

// Indices of `values` in ascending order. Runs of equal values keep input
// order, or are shuffled when `tie_rng` is given.
std::vector<std::size_t> ascending_order(std::span<const double> values, Rng* tie_rng) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    if (tie_rng != nullptr) {
        std::size_t run = 0;
        while (run < order.size()) {
            std::size_t end = run + 1;
            while (end < order.size() && values[order[end]] == values[order[run]]) ++end;
            if (end - run > 1) tie_rng->shuffle(std::span(order).subspan(run, end - run));
            run = end;
        }
    }
    return order;
}

}  // namespace

void PairedSample::validate() const {
    if (x.size() != y.size()) {
        throw Error(ErrorCode::LengthMismatch, "x has " + std::to_string(x.size()) +
                                                   " values, y has " + std::to_string(y.size()));
    }
    if (x.size() < 2) {
        throw Error(ErrorCode::SampleTooSmall, "need at least 2 observations, got " +
                                                   std::to_string(x.size()));
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!std::isfinite(x[i]) || !std::isfinite(y[i])) {
            throw Error(ErrorCode::NonFiniteValue,
                        "observation " + std::to_string(i + 1) + " is not finite");
        }
    }
}

RankSequence::RankSequence(std::vector<Rank> ranks) : ranks_(std::move(ranks)) {
    if (ranks_.size() < 2) {
        throw Error(ErrorCode::SampleTooSmall, "rank sequence needs n >= 2");
    }
    if (!validate_permutation(ranks_)) {
        throw Error(ErrorCode::InvalidArgument, "ranks are not a permutation of 1..n");
    }
}

bool validate_permutation(std::span<const Rank> ranks) noexcept {
    if (ranks.empty()) return false;
    std::vector<bool> seen(ranks.size(), false);
    for (const Rank r : ranks) {
        if (r < 1 || static_cast<std::size_t>(r) > ranks.size()) return false;
        if (seen[r - 1]) return false;
        seen[r - 1] = true;
    }
    return true;
}

std::size_t count_tied_groups(std::span<const double> values) {
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    std::size_t groups = 0;
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        if (sorted[i] == sorted[i - 1] && (i == 1 || sorted[i - 1] != sorted[i - 2])) ++groups;
    }
    return groups;
}

RankSequence concomitant_ranks(const PairedSample& sample, const TiePolicy& policy) {
    sample.validate();
    const std::size_t n = sample.size();

    if (policy.mode == TieMode::Reject) {
        const std::size_t x_groups = count_tied_groups(sample.x);
        const std::size_t y_groups = count_tied_groups(sample.y);
        if (x_groups + y_groups > 0) {
            throw Error(ErrorCode::TiesPresent,
                        std::to_string(x_groups) + " tied group(s) in x, " +
                            std::to_string(y_groups) + " tied group(s) in y");
        }
    }

    Rng x_ties = Rng::stream(policy.seed, 0);
    Rng y_ties = Rng::stream(policy.seed, 1);
    const bool randomize = policy.mode == TieMode::RandomBreak;

    const auto x_order = ascending_order(sample.x, randomize ? &x_ties : nullptr);
    const auto y_order = ascending_order(sample.y, randomize ? &y_ties : nullptr);

    std::vector<Rank> y_rank(n);
    for (std::size_t r = 0; r < n; ++r) y_rank[y_order[r]] = static_cast<Rank>(r + 1);

    std::vector<Rank> ranks(n);
    for (std::size_t i = 0; i < n; ++i) ranks[i] = y_rank[x_order[i]];
    return RankSequence(std::move(ranks));
}

}  // namespace rankdep
