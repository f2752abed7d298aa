#include "rankdep/inference.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "rankdep/error.hpp"
#include "rankdep/parallel.hpp"
#include "rankdep/rng.hpp"

namespace rankdep {

namespace {

void require_n(std::size_t n) {
    if (n < 2) throw Error(ErrorCode::SampleTooSmall, "need n >= 2, got " + std::to_string(n));
}

double clamp_unit(double p) noexcept { return std::clamp(p, 0.0, 1.0); }

// Null-comparison score computed so that a permutation and its reversal
// produce bitwise-identical |S| (the sign flip is done on integers).
struct Scorer {
    std::int64_t denom;      // n (n^2 - 1)
    double denom_d;
    double xi_denom;         // n^2 - 1

    explicit Scorer(std::size_t n)
        : denom(static_cast<std::int64_t>(n) * (static_cast<std::int64_t>(n) * n - 1)),
          denom_d(static_cast<double>(denom)),
          xi_denom(static_cast<double>(n) * static_cast<double>(n) - 1.0) {}

    double operator()(Method method, std::span<const Rank> ranks) const noexcept {
        const auto abs_s = [&] {
            const std::int64_t num = denom - 6 * squared_displacement_sum(ranks);
            return static_cast<double>(num < 0 ? -num : num) / denom_d;
        };
        const auto xi = [&] {
            return 1.0 - 3.0 * static_cast<double>(adjacent_abs_diff_sum(ranks)) / xi_denom;
        };
        switch (method) {
            case Method::Spearman: return abs_s();
            case Method::Chatterjee: return xi();
            case Method::Combined: return std::max(abs_s(), kXiScale * xi());
        }
        return 0.0;
    }
};

}  // namespace

std::string_view to_string(Method m) noexcept {
    switch (m) {
        case Method::Spearman: return "spearman";
        case Method::Chatterjee: return "chatterjee";
        case Method::Combined: return "combined";
    }
    return "unknown";
}

std::string_view to_string(PValueSource s) noexcept {
    switch (s) {
        case PValueSource::Asymptotic: return "asymptotic";
        case PValueSource::Permutation: return "permutation";
        case PValueSource::Exact: return "exact";
    }
    return "unknown";
}

Method parse_method(std::string_view name) {
    if (name == "spearman") return Method::Spearman;
    if (name == "chatterjee" || name == "xi") return Method::Chatterjee;
    if (name == "combined") return Method::Combined;
    throw Error(ErrorCode::InvalidArgument, "unknown method '" + std::string(name) + "'");
}

std::size_t FdrResult::rejected_count() const noexcept {
    return static_cast<std::size_t>(std::count(rejected.begin(), rejected.end(), true));
}

double normal_cdf(double z) noexcept { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

double spearman_pvalue_asymptotic(double s, std::size_t n) {
    require_n(n);
    if (!(std::abs(s) <= 1.0 + 1e-12)) {
        throw Error(ErrorCode::InvalidArgument, "Spearman statistic outside [-1, 1]");
    }
    const double z = std::sqrt(static_cast<double>(n)) * std::abs(s);
    return clamp_unit(std::erfc(z / std::numbers::sqrt2));
}

double xi_pvalue_asymptotic(double x, std::size_t n) {
    require_n(n);
    const double z = std::sqrt(static_cast<double>(n)) * x / std::sqrt(0.4);
    return clamp_unit(normal_cdf(-z));
}

double combined_pvalue_asymptotic(double combined, std::size_t n) {
    require_n(n);
    const double z = std::sqrt(static_cast<double>(n)) * std::max(combined, 0.0);
    // 1 - (1 - q)(1 - 2q) with q = Phi(-z), expanded to avoid cancellation.
    const double q = normal_cdf(-z);
    return clamp_unit(q * (3.0 - 2.0 * q));
}

double test_statistic(Method method, const Statistics& stats) noexcept {
    switch (method) {
        case Method::Spearman: return std::abs(stats.spearman);
        case Method::Chatterjee: return stats.xi;
        case Method::Combined: return stats.combined;
    }
    return 0.0;
}

double asymptotic_pvalue(Method method, const Statistics& stats) {
    switch (method) {
        case Method::Spearman: return spearman_pvalue_asymptotic(stats.spearman, stats.n);
        case Method::Chatterjee: return xi_pvalue_asymptotic(stats.xi, stats.n);
        case Method::Combined: return combined_pvalue_asymptotic(stats.combined, stats.n);
    }
    return 1.0;
}

TestResult asymptotic_test(const RankSequence& ranks, Method method) {
    const Statistics stats = all_statistics(ranks);
    TestResult result;
    result.method = method;
    result.statistic = test_statistic(method, stats);
    result.n = stats.n;
    result.p_value = asymptotic_pvalue(method, stats);
    result.p_source = PValueSource::Asymptotic;
    return result;
}

TestResult permutation_pvalue(const RankSequence& ranks, Method method, std::size_t permutations,
                              std::uint64_t seed, unsigned threads) {
    if (permutations < 1) {
        throw Error(ErrorCode::InvalidArgument, "need at least one permutation");
    }
    const std::size_t n = ranks.size();
    const Scorer score(n);
    const double observed = score(method, ranks.values());

    std::vector<unsigned char> exceeds(permutations, 0);
    parallel_for(permutations, threads, [&](std::size_t b) {
        thread_local std::vector<Rank> buffer;
        buffer.assign(ranks.values().begin(), ranks.values().end());
        Rng rng = Rng::stream(seed, b);
        rng.shuffle(std::span(buffer));
        exceeds[b] = score(method, buffer) >= observed ? 1 : 0;
    });
    const auto hits = static_cast<std::size_t>(std::count(exceeds.begin(), exceeds.end(), 1));

    TestResult result;
    result.method = method;
    result.statistic = test_statistic(method, all_statistics(ranks));
    result.n = n;
    result.p_value = static_cast<double>(1 + hits) / static_cast<double>(permutations + 1);
    result.p_source = PValueSource::Permutation;
    result.permutations_used = permutations;
    result.seed = seed;
    return result;
}

TestResult permutation_pvalue(const PairedSample& sample, Method method,
                              std::size_t permutations, std::uint64_t seed,
                              const TiePolicy& policy, unsigned threads) {
    return permutation_pvalue(concomitant_ranks(sample, policy), method, permutations, seed,
                              threads);
}

FdrResult bh_adjust(std::span<const double> pvalues, double q) {
    if (!(q > 0.0 && q < 1.0)) {
        throw Error(ErrorCode::InvalidLevel, "FDR level must lie in (0, 1)");
    }
    for (std::size_t i = 0; i < pvalues.size(); ++i) {
        if (!(pvalues[i] >= 0.0 && pvalues[i] <= 1.0)) {
            throw Error(ErrorCode::InvalidPValue,
                        "p-value " + std::to_string(i + 1) + " outside [0, 1]");
        }
    }

    const std::size_t m = pvalues.size();
    FdrResult result;
    result.raw_p.assign(pvalues.begin(), pvalues.end());
    result.adjusted_p.assign(m, 1.0);
    result.rejected.assign(m, false);
    result.q_level = q;

    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return pvalues[a] < pvalues[b]; });

    double running = 1.0;
    for (std::size_t k = m; k-- > 0;) {
        const double scaled = static_cast<double>(m) * pvalues[order[k]] / static_cast<double>(k + 1);
        running = std::min(running, scaled);
        // m p / m can round below p; the adjusted value never is.
        result.adjusted_p[order[k]] = std::max(std::min(running, 1.0), pvalues[order[k]]);
    }
    for (std::size_t i = 0; i < m; ++i) result.rejected[i] = result.adjusted_p[i] <= q;
    return result;
}

}  // namespace rankdep
