#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace rankdep {

using Rank = std::int32_t;

struct PairedSample {
    std::vector<double> x;
    std::vector<double> y;

    std::size_t size() const noexcept { return x.size(); }

    // Throws LengthMismatch, SampleTooSmall or NonFiniteValue.
    void validate() const;
};

// Concomitant ranks R_1..R_n: the rank of each y after the pairs are
// sorted by ascending x. Always a permutation of {1..n}.
class RankSequence {
public:
    // Throws InvalidArgument unless `ranks` is a permutation of {1..n}, and
    // SampleTooSmall when n < 2.
    explicit RankSequence(std::vector<Rank> ranks);

    std::span<const Rank> values() const noexcept { return ranks_; }
    std::size_t size() const noexcept { return ranks_.size(); }
    Rank operator[](std::size_t i) const noexcept { return ranks_[i]; }

    bool operator==(const RankSequence&) const = default;

private:
    std::vector<Rank> ranks_;
};

enum class TieMode { Reject, RandomBreak };

struct TiePolicy {
    TieMode mode = TieMode::Reject;
    std::uint64_t seed = 0;

    static TiePolicy reject() noexcept { return {}; }
    static TiePolicy random_break(std::uint64_t seed) noexcept {
        return {TieMode::RandomBreak, seed};
    }
};

bool validate_permutation(std::span<const Rank> ranks) noexcept;

// Number of distinct values that occur more than once.
std::size_t count_tied_groups(std::span<const double> values);

RankSequence concomitant_ranks(const PairedSample& sample, const TiePolicy& policy = {});

}  // namespace rankdep
