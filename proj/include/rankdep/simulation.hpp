#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "rankdep/inference.hpp"
#include "rankdep/ranks.hpp"

namespace rankdep {

// X ~ Uniform[-1, 1], eps ~ N(0, 1) independent of X, and
//   Null:      Y = eps
//   Linear:    Y = X + eps
//   Quadratic: Y = X^2 + 0.3 eps
//   Sinusoid:  Y = cos(2 pi X) + 0.75 eps
//   Stepwise:  Y = 1{-1 <= X <= -0.5} + 2 1{-0.5 < X <= 0} + 3 1{0 < X <= 0.5}
//                  + 4 1{0.5 < X <= 1} + 2 eps
enum class Scenario { Null, Linear, Quadratic, Sinusoid, Stepwise };

std::string_view to_string(Scenario s) noexcept;
Scenario parse_scenario(std::string_view name);

struct ScenarioSpec {
    Scenario scenario = Scenario::Null;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    // Multiplies eps. Only tests set this to anything but 1.
    double noise_scale = 1.0;
};

// Deterministic in spec.seed: all X values are drawn first, then all eps.
PairedSample generate(const ScenarioSpec& spec);

enum class PValueMode { Asymptotic, Permutation };

struct PowerOptions {
    PValueMode mode = PValueMode::Asymptotic;
    std::size_t permutations = 1000;
    unsigned threads = 0;
};

struct PowerEstimate {
    Scenario scenario = Scenario::Null;
    std::size_t n = 0;
    Method test = Method::Combined;
    double alpha = 0.05;
    std::size_t runs = 0;
    double power = 0.0;
    double mc_std_error = 0.0;
};

// Fraction of `runs` simulated samples whose p-value is <= alpha. Run r
// uses the sample generated with seed derive_seed(spec.seed, r), so the
// three tests below see identical data.
PowerEstimate estimate_power(const ScenarioSpec& spec, Method test, double alpha,
                             std::size_t runs, const PowerOptions& options = {});

std::array<PowerEstimate, 3> estimate_power_all(const ScenarioSpec& spec, double alpha,
                                                std::size_t runs,
                                                const PowerOptions& options = {});

struct BiasRecord {
    std::size_t n = 0;
    std::size_t runs = 0;
    std::size_t permutations = 0;
    Method test = Method::Combined;
    double mean_bias = 0.0;
    std::vector<double> bias_samples;  // asymptotic p minus permutation p, per run
};

BiasRecord bias_study(std::size_t n, std::size_t runs, std::size_t permutations, Method test,
                      std::uint64_t seed, unsigned threads = 0);

struct NullJointPoint {
    double sqrt_n_spearman = 0.0;
    double sqrt_n_xi = 0.0;
};

// Scaled (sqrt(n) S_n, sqrt(n) xi_n) for `replicates` uniform permutations.
std::vector<NullJointPoint> null_joint_sample(std::size_t n, std::size_t replicates,
                                              std::uint64_t seed, unsigned threads = 0);

}  // namespace rankdep
