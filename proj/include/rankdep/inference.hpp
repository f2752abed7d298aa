#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "rankdep/correlation.hpp"
#include "rankdep/ranks.hpp"

namespace rankdep {

enum class Method { Spearman, Chatterjee, Combined };
enum class PValueSource { Asymptotic, Permutation, Exact };

std::string_view to_string(Method m) noexcept;
std::string_view to_string(PValueSource s) noexcept;
// Accepts "spearman", "chatterjee"/"xi", "combined". Throws InvalidArgument.
Method parse_method(std::string_view name);

struct TestResult {
    Method method = Method::Combined;
    double statistic = 0.0;
    std::size_t n = 0;
    double p_value = 1.0;
    PValueSource p_source = PValueSource::Asymptotic;
    std::optional<std::size_t> permutations_used;
    std::optional<std::uint64_t> seed;
};

struct FdrResult {
    std::vector<double> raw_p;
    std::vector<double> adjusted_p;
    std::vector<bool> rejected;
    double q_level = 0.05;

    std::size_t rejected_count() const noexcept;
};

// Standard normal CDF, Phi(z) = erfc(-z / sqrt 2) / 2 (glibc erfc, < 1e-15
// absolute error).
double normal_cdf(double z) noexcept;

// Two-sided: 2 (1 - Phi(sqrt(n) |s|)).
double spearman_pvalue_asymptotic(double s, std::size_t n);

// Right tail: 1 - Phi(sqrt(n) x / sqrt(2/5)).
double xi_pvalue_asymptotic(double x, std::size_t n);

// P(sqrt(n) I > z) ~ 1 - Phi(z) [1 - 2 Phi(-z)], z = sqrt(n) max(I, 0).
double combined_pvalue_asymptotic(double combined, std::size_t n);

// The statistic a test compares against its null: |S|, xi or I.
double test_statistic(Method method, const Statistics& stats) noexcept;

double asymptotic_pvalue(Method method, const Statistics& stats);

TestResult asymptotic_test(const RankSequence& ranks, Method method);

// Monte Carlo permutation test with the add-one estimator
// p = (1 + #{b : T_b >= T_0}) / (R + 1). Replicate b shuffles the observed
// y-ranks with stream (seed, b), so the result does not depend on
// `threads` (0 = default worker count).
TestResult permutation_pvalue(const RankSequence& ranks, Method method, std::size_t permutations,
                              std::uint64_t seed, unsigned threads = 0);

TestResult permutation_pvalue(const PairedSample& sample, Method method,
                              std::size_t permutations, std::uint64_t seed,
                              const TiePolicy& policy = {}, unsigned threads = 0);

// Benjamini-Hochberg step-up adjustment. Throws InvalidPValue when any
// p-value is outside [0, 1] and InvalidLevel unless 0 < q < 1.
FdrResult bh_adjust(std::span<const double> pvalues, double q);

}  // namespace rankdep
