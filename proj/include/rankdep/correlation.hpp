#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "rankdep/ranks.hpp"

namespace rankdep {

struct CorrelationValue {
    double value = 0.0;
    std::size_t n = 0;
};

// sqrt(5/2): rescales xi so both arms of the combined statistic have unit
// asymptotic null variance after sqrt(n) scaling.
inline constexpr double kXiScale = 1.5811388300841898;

// Integer numerators. Exact for n up to 2^20.
std::int64_t adjacent_abs_diff_sum(std::span<const Rank> ranks) noexcept;
std::int64_t squared_displacement_sum(std::span<const Rank> ranks) noexcept;

// Raw-span variants for hot loops; `ranks` must already be a permutation.
double xi_value(std::span<const Rank> ranks) noexcept;
double spearman_value(std::span<const Rank> ranks) noexcept;
double combined_value(double spearman, double xi) noexcept;

// Chatterjee: 1 - 3 * sum |R_{i+1} - R_i| / (n^2 - 1).
CorrelationValue xi(const RankSequence& ranks);

// Spearman: 1 - 6 * sum (i - R_i)^2 / (n (n^2 - 1)).
CorrelationValue spearman(const RankSequence& ranks);

// max(|S|, sqrt(5/2) * xi). Throws SampleSizeMismatch when n differs.
CorrelationValue combined(const CorrelationValue& s, const CorrelationValue& x);

struct Statistics {
    double spearman = 0.0;
    double xi = 0.0;
    double combined = 0.0;
    std::size_t n = 0;
};

Statistics all_statistics(const RankSequence& ranks);

}  // namespace rankdep
