#include "rankdep/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rankdep/error.hpp"

namespace rankdep {

std::int64_t adjacent_abs_diff_sum(std::span<const Rank> ranks) noexcept {
    std::int64_t total = 0;
    for (std::size_t i = 1; i < ranks.size(); ++i) {
        const std::int64_t d = static_cast<std::int64_t>(ranks[i]) - ranks[i - 1];
        total += d < 0 ? -d : d;
    }
    return total;
}

std::int64_t squared_displacement_sum(std::span<const Rank> ranks) noexcept {
    std::int64_t total = 0;
    for (std::size_t i = 0; i < ranks.size(); ++i) {
        const std::int64_t d = static_cast<std::int64_t>(i + 1) - ranks[i];
        total += d * d;
    }
    return total;
}

double xi_value(std::span<const Rank> ranks) noexcept {
    const auto n = static_cast<double>(ranks.size());
    return 1.0 - 3.0 * static_cast<double>(adjacent_abs_diff_sum(ranks)) / (n * n - 1.0);
}

double spearman_value(std::span<const Rank> ranks) noexcept {
    const auto n = static_cast<double>(ranks.size());
    return 1.0 - 6.0 * static_cast<double>(squared_displacement_sum(ranks)) / (n * (n * n - 1.0));
}

double combined_value(double spearman, double xi) noexcept {
    return std::max(std::abs(spearman), kXiScale * xi);
}

CorrelationValue xi(const RankSequence& ranks) {
    return {xi_value(ranks.values()), ranks.size()};
}

CorrelationValue spearman(const RankSequence& ranks) {
    return {spearman_value(ranks.values()), ranks.size()};
}

CorrelationValue combined(const CorrelationValue& s, const CorrelationValue& x) {
    if (s.n != x.n) {
        throw Error(ErrorCode::SampleSizeMismatch,
                    "Spearman from n=" + std::to_string(s.n) + ", xi from n=" + std::to_string(x.n));
    }
    return {combined_value(s.value, x.value), s.n};
}

Statistics all_statistics(const RankSequence& ranks) {
    const double s = spearman_value(ranks.values());
    const double x = xi_value(ranks.values());
    return {s, x, combined_value(s, x), ranks.size()};
}

}  // namespace rankdep
