#include "rankdep/simulation.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "rankdep/correlation.hpp"
#include "rankdep/error.hpp"
#include "rankdep/parallel.hpp"
#include "rankdep/rng.hpp"

namespace rankdep {

namespace {

constexpr std::array kAllMethods{Method::Spearman, Method::Chatterjee, Method::Combined};

double step_level(double x) noexcept {
    if (x <= -0.5) return 1.0;
    if (x <= 0.0) return 2.0;
    if (x <= 0.5) return 3.0;
    return 4.0;
}

void require_runs(std::size_t runs) {
    if (runs < 100) {
        throw Error(ErrorCode::InvalidArgument, "need at least 100 runs, got " + std::to_string(runs));
    }
}

// Continuous draws tie with probability zero; break any that occur anyway
// with a seed tied to the run.
RankSequence simulated_ranks(const PairedSample& sample, std::uint64_t run_seed) {
    return concomitant_ranks(sample, TiePolicy::random_break(derive_seed(run_seed, 7)));
}

double pvalue_for(const RankSequence& ranks, Method test, const PowerOptions& options,
                  std::uint64_t run_seed) {
    if (options.mode == PValueMode::Asymptotic) return asymptotic_test(ranks, test).p_value;
    return permutation_pvalue(ranks, test, options.permutations, derive_seed(run_seed, 1), 1)
        .p_value;
}

}  // namespace

std::string_view to_string(Scenario s) noexcept {
    switch (s) {
        case Scenario::Null: return "null";
        case Scenario::Linear: return "linear";
        case Scenario::Quadratic: return "quadratic";
        case Scenario::Sinusoid: return "sinusoid";
        case Scenario::Stepwise: return "stepwise";
    }
    return "unknown";
}

Scenario parse_scenario(std::string_view name) {
    for (Scenario s : {Scenario::Null, Scenario::Linear, Scenario::Quadratic, Scenario::Sinusoid,
                       Scenario::Stepwise}) {
        if (name == to_string(s)) return s;
    }
    throw Error(ErrorCode::InvalidArgument, "unknown scenario '" + std::string(name) + "'");
}

PairedSample generate(const ScenarioSpec& spec) {
    if (spec.n < 2) throw Error(ErrorCode::SampleTooSmall, "scenario needs n >= 2");
    Rng rng(spec.seed);
    PairedSample sample;
    sample.x.resize(spec.n);
    sample.y.resize(spec.n);
    for (auto& x : sample.x) x = rng.uniform(-1.0, 1.0);
    for (std::size_t i = 0; i < spec.n; ++i) {
        const double x = sample.x[i];
        const double eps = spec.noise_scale * rng.normal();
        switch (spec.scenario) {
            case Scenario::Null: sample.y[i] = eps; break;
            case Scenario::Linear: sample.y[i] = x + eps; break;
            case Scenario::Quadratic: sample.y[i] = x * x + 0.3 * eps; break;
            case Scenario::Sinusoid:
                sample.y[i] = std::cos(2.0 * std::numbers::pi * x) + 0.75 * eps;
                break;
            case Scenario::Stepwise: sample.y[i] = step_level(x) + 2.0 * eps; break;
        }
    }
    return sample;
}

std::array<PowerEstimate, 3> estimate_power_all(const ScenarioSpec& spec, double alpha,
                                                std::size_t runs, const PowerOptions& options) {
    require_runs(runs);
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw Error(ErrorCode::InvalidLevel, "alpha must lie in (0, 1)");
    }
    if (spec.n < 2) throw Error(ErrorCode::SampleTooSmall, "scenario needs n >= 2");

    // rejections[r * 3 + k] for method k in run r.
    std::vector<unsigned char> rejections(runs * kAllMethods.size(), 0);
    parallel_for(runs, options.threads, [&](std::size_t r) {
        ScenarioSpec run_spec = spec;
        run_spec.seed = derive_seed(spec.seed, r);
        const RankSequence ranks = simulated_ranks(generate(run_spec), run_spec.seed);
        for (std::size_t k = 0; k < kAllMethods.size(); ++k) {
            const double p = pvalue_for(ranks, kAllMethods[k], options, run_spec.seed);
            rejections[r * kAllMethods.size() + k] = p <= alpha ? 1 : 0;
        }
    });

    std::array<PowerEstimate, 3> out{};
    for (std::size_t k = 0; k < kAllMethods.size(); ++k) {
        std::size_t hits = 0;
        for (std::size_t r = 0; r < runs; ++r) hits += rejections[r * kAllMethods.size() + k];
        const double power = static_cast<double>(hits) / static_cast<double>(runs);
        out[k] = {spec.scenario, spec.n, kAllMethods[k], alpha, runs, power,
                  std::sqrt(power * (1.0 - power) / static_cast<double>(runs))};
    }
    return out;
}

PowerEstimate estimate_power(const ScenarioSpec& spec, Method test, double alpha,
                             std::size_t runs, const PowerOptions& options) {
    const auto all = estimate_power_all(spec, alpha, runs, options);
    for (const auto& est : all) {
        if (est.test == test) return est;
    }
    return all.back();
}

BiasRecord bias_study(std::size_t n, std::size_t runs, std::size_t permutations, Method test,
                      std::uint64_t seed, unsigned threads) {
    require_runs(runs);
    if (permutations < 1000) {
        throw Error(ErrorCode::InvalidArgument,
                    "bias study needs at least 1000 permutations, got " + std::to_string(permutations));
    }
    if (n < 2) throw Error(ErrorCode::SampleTooSmall, "bias study needs n >= 2");

    BiasRecord record;
    record.n = n;
    record.runs = runs;
    record.permutations = permutations;
    record.test = test;
    record.bias_samples.assign(runs, 0.0);
    parallel_for(runs, threads, [&](std::size_t r) {
        const std::uint64_t run_seed = derive_seed(seed, r);
        const RankSequence ranks =
            simulated_ranks(generate({Scenario::Null, n, run_seed}), run_seed);
        const double asymptotic = asymptotic_test(ranks, test).p_value;
        const double permuted =
            permutation_pvalue(ranks, test, permutations, derive_seed(run_seed, 1), 1).p_value;
        record.bias_samples[r] = asymptotic - permuted;
    });
    record.mean_bias = std::accumulate(record.bias_samples.begin(), record.bias_samples.end(), 0.0) /
                       static_cast<double>(runs);
    return record;
}

std::vector<NullJointPoint> null_joint_sample(std::size_t n, std::size_t replicates,
                                              std::uint64_t seed, unsigned threads) {
    if (n < 2) throw Error(ErrorCode::SampleTooSmall, "null sample needs n >= 2");
    if (replicates < 1) throw Error(ErrorCode::InvalidArgument, "need at least one replicate");

    const double root_n = std::sqrt(static_cast<double>(n));
    std::vector<NullJointPoint> points(replicates);
    parallel_for(replicates, threads, [&](std::size_t b) {
        thread_local std::vector<Rank> ranks;
        ranks.resize(n);
        std::iota(ranks.begin(), ranks.end(), Rank{1});
        Rng rng = Rng::stream(seed, b);
        rng.shuffle(std::span(ranks));
        points[b] = {root_n * spearman_value(ranks), root_n * xi_value(ranks)};
    });
    return points;
}

}  // namespace rankdep
