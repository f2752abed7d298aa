#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <set>

#include "rankdep/correlation.hpp"
#include "rankdep/error.hpp"
#include "rankdep/exact.hpp"
#include "rankdep/simulation.hpp"

using namespace rankdep;
using Catch::Matchers::WithinAbs;

TEST_CASE("noise-free scenarios", "[simulation]") {
    const auto linear = generate({Scenario::Linear, 200, 1, 0.0});
    CHECK(linear.x == linear.y);
    CHECK(spearman(concomitant_ranks(linear)).value == 1.0);

    const auto quad = generate({Scenario::Quadratic, 2001, 2, 0.0});
    for (std::size_t i = 0; i < quad.size(); ++i) CHECK(quad.y[i] == quad.x[i] * quad.x[i]);
    const auto quad_ranks = concomitant_ranks(quad);
    CHECK(std::abs(spearman(quad_ranks).value) < 0.1);
    CHECK(xi(quad_ranks).value > 0.9);

    const auto sine = generate({Scenario::Sinusoid, 500, 3, 0.0});
    CHECK(xi(concomitant_ranks(sine)).value > 0.9);

    const auto step = generate({Scenario::Stepwise, 400, 4, 0.0});
    std::set<double> levels(step.y.begin(), step.y.end());
    CHECK(levels == std::set<double>{1, 2, 3, 4});
    for (std::size_t i = 0; i < step.size(); ++i) {
        for (std::size_t j = 0; j < step.size(); ++j) {
            if (step.x[i] < step.x[j]) REQUIRE(step.y[i] <= step.y[j]);
        }
    }
}

TEST_CASE("generated samples are seeded and well formed", "[simulation]") {
    for (auto s : {Scenario::Null, Scenario::Linear, Scenario::Quadratic, Scenario::Sinusoid,
                   Scenario::Stepwise}) {
        const auto a = generate({s, 80, 17});
        const auto b = generate({s, 80, 17});
        CHECK(a.x == b.x);
        CHECK(a.y == b.y);
        CHECK(generate({s, 80, 18}).x != a.x);
        for (double x : a.x) REQUIRE((x >= -1.0 && x <= 1.0));
        CHECK_NOTHROW(a.validate());
    }
    CHECK_THROWS_AS(generate({Scenario::Linear, 1, 0}), Error);
    CHECK(parse_scenario("sinusoid") == Scenario::Sinusoid);
    CHECK_THROWS_AS(parse_scenario("cubic"), Error);
}

TEST_CASE("power estimates are deterministic across worker counts", "[simulation]") {
    const ScenarioSpec spec{Scenario::Sinusoid, 40, 123};
    PowerOptions one;
    one.threads = 1;
    PowerOptions many;
    many.threads = 4;
    const auto a = estimate_power_all(spec, 0.05, 400, one);
    const auto b = estimate_power_all(spec, 0.05, 400, many);
    for (std::size_t k = 0; k < 3; ++k) {
        CHECK(a[k].power == b[k].power);
        CHECK(a[k].mc_std_error ==
              std::sqrt(a[k].power * (1 - a[k].power) / static_cast<double>(a[k].runs)));
    }
    CHECK(estimate_power(spec, Method::Chatterjee, 0.05, 400, one).power == a[1].power);
}

TEST_CASE("power input validation", "[simulation]") {
    const ScenarioSpec spec{Scenario::Linear, 20, 1};
    CHECK_THROWS_AS(estimate_power(spec, Method::Combined, 0.05, 99), Error);
    CHECK_THROWS_AS(estimate_power(spec, Method::Combined, 0.0, 200), Error);
    CHECK_THROWS_AS(estimate_power(spec, Method::Combined, 1.0, 200), Error);
}

TEST_CASE("power grows with n", "[simulation]") {
    for (auto s : {Scenario::Linear, Scenario::Quadratic, Scenario::Sinusoid, Scenario::Stepwise}) {
        const auto small = estimate_power_all({s, 20, 55}, 0.05, 1000);
        const auto large = estimate_power_all({s, 100, 56}, 0.05, 1000);
        for (std::size_t k = 0; k < 3; ++k) {
            INFO(to_string(s) << " " << to_string(small[k].test));
            CHECK(large[k].power >= small[k].power - 2 * large[k].mc_std_error);
        }
    }
}

TEST_CASE("the combined test is competitive in every scenario", "[simulation]") {
    // Quadratic and sinusoid are caught by xi, linear and stepwise by S.
    const auto quad = estimate_power_all({Scenario::Quadratic, 100, 9}, 0.05, 500);
    CHECK(quad[1].power > quad[0].power);
    CHECK(quad[2].power > quad[0].power);
    const auto step = estimate_power_all({Scenario::Stepwise, 100, 10}, 0.05, 500);
    CHECK(step[0].power > step[1].power);
    CHECK(step[2].power > step[1].power);
}

TEST_CASE("permutation-mode power under the null holds its level", "[simulation]") {
    PowerOptions options;
    options.mode = PValueMode::Permutation;
    options.permutations = 199;
    const auto est = estimate_power_all({Scenario::Null, 15, 31}, 0.1, 400, options);
    for (const auto& e : est) CHECK(std::abs(e.power - 0.1) < 4 * std::sqrt(0.09 / 400));
}

TEST_CASE("bias study bookkeeping and determinism", "[simulation]") {
    const auto a = bias_study(20, 100, 1000, Method::Combined, 8, 1);
    const auto b = bias_study(20, 100, 1000, Method::Combined, 8, 3);
    CHECK(a.bias_samples == b.bias_samples);
    CHECK(a.bias_samples.size() == 100);
    double sum = 0;
    for (double v : a.bias_samples) sum += v;
    CHECK_THAT(a.mean_bias, WithinAbs(sum / 100, 1e-15));
    for (double v : a.bias_samples) REQUIRE(std::abs(v) <= 1.0);
    CHECK_THROWS_AS(bias_study(20, 100, 999, Method::Combined, 1), Error);
    CHECK_THROWS_AS(bias_study(20, 50, 1000, Method::Combined, 1), Error);
}

TEST_CASE("null joint sample", "[simulation]") {
    const auto a = null_joint_sample(30, 5000, 4, 1);
    const auto b = null_joint_sample(30, 5000, 4, 5);
    REQUIRE(a.size() == 5000);
    for (std::size_t i = 0; i < a.size(); ++i) {
        REQUIRE(a[i].sqrt_n_spearman == b[i].sqrt_n_spearman);
        REQUIRE(a[i].sqrt_n_xi == b[i].sqrt_n_xi);
    }
    CHECK_THROWS_AS(null_joint_sample(1, 10, 0), Error);
    CHECK_THROWS_AS(null_joint_sample(10, 0, 0), Error);
}

TEST_CASE("null moments converge to the exact enumeration values", "[simulation]") {
    // Monte Carlo mean and covariance of (S, xi) at n = 6 against the exact
    // rational values, within 4 standard errors.
    const std::size_t n = 6, reps = 200000;
    const auto pts = null_joint_sample(n, reps, 77);
    const double root_n = std::sqrt(static_cast<double>(n));
    double ms = 0, mx = 0;
    for (const auto& p : pts) {
        ms += p.sqrt_n_spearman / root_n;
        mx += p.sqrt_n_xi / root_n;
    }
    ms /= reps;
    mx /= reps;
    double vs = 0, vx = 0, cov = 0;
    for (const auto& p : pts) {
        const double s = p.sqrt_n_spearman / root_n - ms;
        const double x = p.sqrt_n_xi / root_n - mx;
        vs += s * s;
        vx += x * x;
        cov += s * x;
    }
    vs /= reps - 1;
    vx /= reps - 1;
    cov /= reps - 1;

    const double exact_var_s = to_double(exact_rank_moment(n, RankMoment::VarSqrtnS)) / n;
    CHECK(std::abs(ms) < 4 * std::sqrt(exact_var_s / reps));
    CHECK(std::abs(vs - exact_var_s) < 0.01 * exact_var_s);
    CHECK(std::abs(cov - to_double(exact_covariance(n, CovarianceKind::SpearmanXi))) <
          4 * std::sqrt(vs * vx / reps));
}

TEST_CASE("combined asymptotic p-values are uniform under the null at n = 500", "[simulation]") {
    const std::size_t n = 500, reps = 5000;
    const auto pts = null_joint_sample(n, reps, 2718);
    std::vector<double> p;
    p.reserve(reps);
    const double root_n = std::sqrt(static_cast<double>(n));
    for (const auto& pt : pts) {
        const double s = pt.sqrt_n_spearman / root_n;
        const double x = pt.sqrt_n_xi / root_n;
        p.push_back(combined_pvalue_asymptotic(combined_value(s, x), n));
    }
    std::sort(p.begin(), p.end());
    double ks = 0;
    for (std::size_t i = 0; i < reps; ++i) {
        ks = std::max({ks, std::abs(p[i] - static_cast<double>(i) / reps),
                       std::abs(p[i] - static_cast<double>(i + 1) / reps)});
    }
    CHECK(ks <= 0.03);
}
