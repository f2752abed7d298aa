#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rankdep/correlation.hpp"
#include "rankdep/csv.hpp"
#include "rankdep/error.hpp"
#include "rankdep/exact.hpp"
#include "rankdep/extremal.hpp"
#include "rankdep/inference.hpp"
#include "rankdep/ranks.hpp"
#include "rankdep/screen.hpp"
#include "rankdep/simulation.hpp"

namespace rankdep::cli {

namespace {

using nlohmann::json;

// Raised for bad flag combinations discovered after parsing.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GlobalOptions {
    unsigned threads = 0;
    std::string out_path;
};

struct Sink {
    std::ostream* stream = nullptr;
    std::unique_ptr<std::ofstream> file;

    Sink(const std::string& path, std::ostream& fallback) {
        if (path.empty() || path == "-") {
            stream = &fallback;
            return;
        }
        file = std::make_unique<std::ofstream>(path);
        if (!*file) throw UsageError("cannot open output file '" + path + "'");
        stream = file.get();
    }
    std::ostream& operator*() { return *stream; }
};

std::unique_ptr<std::istream> open_input(const std::string& path) {
    if (path == "-") {
        auto buffer = std::make_unique<std::stringstream>();
        *buffer << std::cin.rdbuf();
        return buffer;
    }
    auto file = std::make_unique<std::ifstream>(path);
    if (!*file) throw UsageError("cannot open input file '" + path + "'");
    return file;
}

std::vector<Method> parse_methods(const std::string& name) {
    if (name == "all") return {Method::Spearman, Method::Chatterjee, Method::Combined};
    return {parse_method(name)};
}

TiePolicy parse_ties(const std::string& mode, std::uint64_t seed) {
    if (mode == "reject") return TiePolicy::reject();
    if (mode == "random") return TiePolicy::random_break(seed);
    throw UsageError("--ties must be 'reject' or 'random'");
}

PValueMode parse_pvalue_mode(const std::string& mode) {
    if (mode == "asymptotic") return PValueMode::Asymptotic;
    if (mode == "permutation") return PValueMode::Permutation;
    throw UsageError("--pvalue must be 'asymptotic' or 'permutation'");
}

json result_json(const TestResult& r) {
    json j = {{"method", to_string(r.method)},
              {"statistic", r.statistic},
              {"n", r.n},
              {"p_value", r.p_value},
              {"p_source", to_string(r.p_source)}};
    if (r.permutations_used) j["permutations_used"] = *r.permutations_used;
    if (r.seed) j["seed"] = *r.seed;
    return j;
}

// ---------------------------------------------------------------- test

struct TestArgs {
    std::string input;
    std::string method = "combined";
    std::string pvalue = "asymptotic";
    std::size_t permutations = 5000;
    std::uint64_t seed = 0;
    std::string ties = "reject";
};

int cmd_test(const TestArgs& a, const GlobalOptions& g, std::ostream& out, std::ostream& err) {
    const auto methods = parse_methods(a.method);
    const TiePolicy ties = parse_ties(a.ties, a.seed);
    if (a.pvalue != "asymptotic" && a.pvalue != "permutation" && a.pvalue != "exact") {
        throw UsageError("--pvalue must be 'asymptotic', 'permutation' or 'exact'");
    }
    if (a.pvalue == "permutation" && a.permutations < 1) {
        throw UsageError("--permutations must be at least 1");
    }

    const auto in = open_input(a.input);
    const PairedSample sample = read_paired_sample(*in);
    const RankSequence ranks = concomitant_ranks(sample, ties);
    const Statistics stats = all_statistics(ranks);

    if (a.pvalue == "asymptotic" && stats.n < 30) {
        err << "warning: n = " << stats.n
            << " is small; asymptotic p-values are conservative here, consider --pvalue "
               "permutation\n";
    }

    json report = {{"n", stats.n},
                   {"spearman", stats.spearman},
                   {"xi", stats.xi},
                   {"combined", stats.combined},
                   {"ties", a.ties},
                   {"results", json::array()}};
    for (const Method m : methods) {
        if (a.pvalue == "asymptotic") {
            report["results"].push_back(result_json(asymptotic_test(ranks, m)));
        } else if (a.pvalue == "permutation") {
            report["results"].push_back(
                result_json(permutation_pvalue(ranks, m, a.permutations, a.seed, g.threads)));
        } else {
            const ExactTestResult exact = exact_test(ranks, m);
            json j = result_json(exact.result);
            j["exact_p"] = to_string(exact.p);
            report["results"].push_back(j);
        }
    }
    Sink sink(g.out_path, out);
    *sink << report.dump(2) << '\n';
    return kExitOk;
}

// -------------------------------------------------------------- screen

struct ScreenArgs {
    std::string input;
    std::string method = "all";
    double q = 0.05;
    std::string pvalue = "asymptotic";
    std::size_t permutations = 1000;
    std::uint64_t seed = 0;
    std::string ties = "reject";
    std::string x_file;
};

int cmd_screen(const ScreenArgs& a, const GlobalOptions& g, std::ostream& out, std::ostream& err) {
    ScreenOptions options;
    options.methods = parse_methods(a.method);
    options.q = a.q;
    options.mode = parse_pvalue_mode(a.pvalue);
    options.permutations = a.permutations;
    options.seed = a.seed;
    options.ties = parse_ties(a.ties, a.seed);
    options.threads = g.threads;

    std::optional<std::vector<double>> x_override;
    if (!a.x_file.empty()) {
        const auto xin = open_input(a.x_file);
        x_override = read_number_list(*xin);
    }
    const auto in = open_input(a.input);
    const ScreenInput input = read_screen_input(*in, x_override);
    if (!input.x_from_header && !x_override) {
        err << "warning: header cells are not numeric; using x = 1.." << input.x.size() << '\n';
    }
    if (options.mode == PValueMode::Asymptotic && input.x.size() < 30) {
        err << "warning: n = " << input.x.size()
            << " is small; asymptotic p-values are conservative here, consider --pvalue "
               "permutation\n";
    }

    const ScreenResult result = screen(input, options);

    Sink sink(g.out_path, out);
    std::ostream& os = *sink;
    os << "id,n,spearman,xi,combined";
    for (const Method m : result.methods) {
        os << ",p_" << to_string(m) << ",padj_" << to_string(m) << ",rejected_" << to_string(m);
    }
    os << '\n';
    for (std::size_t r = 0; r < result.rows.size(); ++r) {
        const ScreenRow& row = result.rows[r];
        os << row.id << ',' << row.stats.n << ',' << format_double(row.stats.spearman) << ','
           << format_double(row.stats.xi) << ',' << format_double(row.stats.combined);
        for (std::size_t k = 0; k < result.methods.size(); ++k) {
            os << ',' << format_double(result.fdr[k].raw_p[r]) << ','
               << format_double(result.fdr[k].adjusted_p[r]) << ','
               << (result.fdr[k].rejected[r] ? 1 : 0);
        }
        os << '\n';
    }

    err << "summary: rows=" << result.rows.size() << " q=" << format_double(a.q);
    for (std::size_t k = 0; k < result.methods.size(); ++k) {
        err << ' ' << to_string(result.methods[k]) << '=' << result.fdr[k].rejected_count();
    }
    err << '\n';
    return kExitOk;
}

// ------------------------------------------------------------ power

struct PowerArgs {
    std::string scenario = "linear";
    std::vector<std::size_t> n{60};
    std::string test = "all";
    double alpha = 0.05;
    std::size_t runs = 5000;
    std::uint64_t seed = 0;
    std::string pvalue = "asymptotic";
    std::size_t permutations = 1000;
};

int cmd_power(const PowerArgs& a, const GlobalOptions& g, std::ostream& out) {
    const Scenario scenario = parse_scenario(a.scenario);
    const auto tests = parse_methods(a.test);
    PowerOptions options;
    options.mode = parse_pvalue_mode(a.pvalue);
    options.permutations = a.permutations;
    options.threads = g.threads;

    Sink sink(g.out_path, out);
    std::ostream& os = *sink;
    os << "scenario,n,test,alpha,runs,power,se\n";
    for (const std::size_t n : a.n) {
        const auto all = estimate_power_all({scenario, n, a.seed}, a.alpha, a.runs, options);
        for (const auto& est : all) {
            if (std::find(tests.begin(), tests.end(), est.test) == tests.end()) continue;
            os << to_string(est.scenario) << ',' << est.n << ',' << to_string(est.test) << ','
               << format_double(est.alpha) << ',' << est.runs << ',' << format_double(est.power)
               << ',' << format_double(est.mc_std_error) << '\n';
        }
    }
    return kExitOk;
}

// ------------------------------------------------------------- bias

struct BiasArgs {
    std::vector<std::size_t> n{20};
    std::size_t runs = 1000;
    std::size_t permutations = 5000;
    std::string test = "combined";
    std::uint64_t seed = 0;
    std::string samples_path;
};

int cmd_bias(const BiasArgs& a, const GlobalOptions& g, std::ostream& out) {
    const Method test = parse_method(a.test);
    std::vector<BiasRecord> records;
    for (const std::size_t n : a.n) {
        records.push_back(bias_study(n, a.runs, a.permutations, test, a.seed, g.threads));
    }

    Sink sink(g.out_path, out);
    std::ostream& os = *sink;
    os << "n,runs,permutations,mean_bias\n";
    for (const auto& rec : records) {
        os << rec.n << ',' << rec.runs << ',' << rec.permutations << ','
           << format_double(rec.mean_bias) << '\n';
    }

    if (!a.samples_path.empty()) {
        std::ofstream samples(a.samples_path);
        if (!samples) throw UsageError("cannot open samples file '" + a.samples_path + "'");
        samples << "n,run,bias\n";
        for (const auto& rec : records) {
            for (std::size_t r = 0; r < rec.bias_samples.size(); ++r) {
                samples << rec.n << ',' << r << ',' << format_double(rec.bias_samples[r]) << '\n';
            }
        }
    }
    return kExitOk;
}

// -------------------------------------------------------- nulljoint

struct NullJointArgs {
    std::size_t n = 100;
    std::size_t replicates = 1000;
    std::uint64_t seed = 0;
};

int cmd_nulljoint(const NullJointArgs& a, const GlobalOptions& g, std::ostream& out) {
    const auto points = null_joint_sample(a.n, a.replicates, a.seed, g.threads);
    Sink sink(g.out_path, out);
    std::ostream& os = *sink;
    os << "replicate,sqrt_n_S,sqrt_n_xi\n";
    for (std::size_t b = 0; b < points.size(); ++b) {
        os << b << ',' << format_double(points[b].sqrt_n_spearman) << ','
           << format_double(points[b].sqrt_n_xi) << '\n';
    }
    return kExitOk;
}

// --------------------------------------------------------- extremal

struct ExtremalArgs {
    int which = 1;
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t p = 0;
    std::string format = "json";
};

int cmd_extremal(const ExtremalArgs& a, const GlobalOptions& g, std::ostream& out) {
    if (a.which != 1 && a.which != 2) throw UsageError("--case must be 1 or 2");
    if (a.format != "json" && a.format != "csv") throw UsageError("--format must be json or csv");

    json report;
    std::vector<Rank> ranks;
    if (a.which == 1) {
        if (a.n == 0) throw UsageError("case 1 needs --n");
        const RankSequence seq = case1_ranks(a.n);
        ranks.assign(seq.values().begin(), seq.values().end());
        const Rational xi = exact_xi(seq.values());
        const Rational s = exact_spearman(seq.values());
        const Rational abs_s = s < 0 ? Rational(-s) : s;
        const ExtremalValues closed = case1_closed_forms(a.n);
        report = {{"case", 1},
                  {"n", a.n},
                  {"xi", to_double(xi)},
                  {"abs_s", to_double(abs_s)},
                  {"xi_exact", to_string(xi)},
                  {"abs_s_exact", to_string(abs_s)},
                  {"closed_form",
                   {{"xi", to_double(closed.xi)},
                    {"abs_s", to_double(closed.abs_spearman)},
                    {"xi_exact", to_string(closed.xi)},
                    {"abs_s_exact", to_string(closed.abs_spearman)}}}};
    } else {
        if (a.m == 0) throw UsageError("case 2 needs --m (and optionally --p)");
        const Case2Evaluation eval = case2_evaluate(a.m, a.p);
        const RankSequence seq = case2_ranks(a.m, a.p);
        ranks.assign(seq.values().begin(), seq.values().end());
        report = {{"case", 2},
                  {"n", 2 * a.m + a.p},
                  {"m", a.m},
                  {"p", a.p},
                  {"xi", to_double(eval.xi_direct)},
                  {"abs_s", to_double(eval.abs_spearman)},
                  {"xi_exact", to_string(eval.xi_direct)},
                  {"abs_s_exact", to_string(eval.abs_spearman)},
                  {"closed_form",
                   {{"xi", to_double(eval.xi_formula)}, {"xi_exact", to_string(eval.xi_formula)}}},
                  {"limit", {{"xi", eval.xi_limit}, {"abs_s", eval.abs_s_limit}}}};
    }
    report["ranks"] = ranks;

    Sink sink(g.out_path, out);
    std::ostream& os = *sink;
    if (a.format == "json") {
        os << report.dump(2) << '\n';
        return kExitOk;
    }
    os << "case,n,xi,abs_s,xi_exact,abs_s_exact,ranks\n";
    os << report["case"].get<int>() << ',' << report["n"].get<std::size_t>() << ','
       << format_double(report["xi"].get<double>()) << ','
       << format_double(report["abs_s"].get<double>()) << ','
       << report["xi_exact"].get<std::string>() << ',' << report["abs_s_exact"].get<std::string>()
       << ",\"";
    for (std::size_t i = 0; i < ranks.size(); ++i) os << (i ? " " : "") << ranks[i];
    os << "\"\n";
    return kExitOk;
}

// ----------------------------------------------------------- oracle

struct OracleArgs {
    std::size_t n = 3;
    std::string check = "table1";
    std::string epsilon = "1/10";
};

struct Report {
    std::ostream& os;
    bool all_pass = true;

    void line(const std::string& label, const std::string& value, const std::string& expected,
              bool pass) {
        all_pass = all_pass && pass;
        os << label << "  value=" << value << "  expected=" << expected << "  "
           << (pass ? "PASS" : "FAIL") << '\n';
    }
};

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(boost::multiprecision::cpp_int(text));
        return Rational(boost::multiprecision::cpp_int(text.substr(0, slash)),
                        boost::multiprecision::cpp_int(text.substr(slash + 1)));
    } catch (const std::exception&) {
        throw UsageError("'" + text + "' is not a rational number (expected num/den)");
    }
}

int cmd_oracle(const OracleArgs& a, const GlobalOptions& g, std::ostream& out) {
    if (a.n > kMaxExactN) {
        throw Error(ErrorCode::NTooLarge, "oracle supports n <= " + std::to_string(kMaxExactN));
    }
    Sink sink(g.out_path, out);
    Report report{*sink};
    std::ostream& os = *sink;
    const std::size_t n = a.n;

    if (a.check == "table1") {
        if (n != 3) throw UsageError("table1 is defined for --n 3");
        // (R1, R2, R3) -> xi, S as tabulated for n = 3.
        const std::map<std::vector<Rank>, std::pair<Rational, Rational>> table = {
            {{1, 2, 3}, {Rational(1, 4), Rational(1)}},
            {{1, 3, 2}, {Rational(-1, 8), Rational(1, 2)}},
            {{2, 1, 3}, {Rational(-1, 8), Rational(1, 2)}},
            {{2, 3, 1}, {Rational(-1, 8), Rational(-1, 2)}},
            {{3, 1, 2}, {Rational(-1, 8), Rational(-1, 2)}},
            {{3, 2, 1}, {Rational(1, 4), Rational(-1)}},
        };
        const ExactDistribution dist = enumerate_null(3);
        for (const auto& atom : dist.atoms) {
            const auto& [xi, s] = table.at(atom.ranks);
            std::string label = "(";
            for (std::size_t i = 0; i < atom.ranks.size(); ++i) {
                label += (i ? "," : "") + std::to_string(atom.ranks[i]);
            }
            label += ")";
            report.line(label + " xi", to_string(atom.xi), to_string(xi), atom.xi == xi);
            report.line(label + " S", to_string(atom.spearman), to_string(s), atom.spearman == s);
        }
    } else if (a.check == "lemma1") {
        const Rational cov = exact_covariance(n, CovarianceKind::SpearmanXi);
        report.line("Cov[S,xi] n=" + std::to_string(n), to_string(cov), "0/1", cov == 0);
    } else if (a.check == "remark1") {
        const Rational cov = exact_covariance(n, CovarianceKind::AbsSpearmanXi);
        if (n == 3) {
            report.line("Cov[|S|,xi] n=3", to_string(cov), "1/24", cov == Rational(1, 24));
        } else {
            os << "Cov[|S|,xi] n=" << n << "  value=" << to_string(cov) << '\n';
        }
    } else if (a.check == "rank-moments" || a.check == "spearman-moments") {
        const bool ranks_only = a.check == "rank-moments";
        const std::vector<std::pair<RankMoment, std::string>> moments =
            ranks_only ? std::vector<std::pair<RankMoment, std::string>>{
                             {RankMoment::CovR1R2, "Cov[R1,R2]"},
                             {RankMoment::VarR1, "V[R1]"},
                             {RankMoment::CovR1MinR1R2, "Cov[R1,min(R1,R2)]"},
                             {RankMoment::CovR1MinR2R3, "Cov[R1,min(R2,R3)]"}}
                       : std::vector<std::pair<RankMoment, std::string>>{
                             {RankMoment::MeanSqrtnS, "E[S]"},
                             {RankMoment::VarSqrtnS, "V[sqrt(n)S]"}};
        for (const auto& [which, label] : moments) {
            const Rational value = exact_rank_moment(n, which);
            const Rational expected = rank_moment_formula(n, which);
            report.line(label + " n=" + std::to_string(n), to_string(value), to_string(expected),
                        value == expected);
        }
    } else if (a.check == "agreement") {
        const ExactDistribution dist = enumerate_null(n);
        double worst = 0.0;
        for (const auto& atom : dist.atoms) {
            const RankSequence seq(atom.ranks);
            worst = std::max({worst, std::abs(xi(seq).value - to_double(atom.xi)),
                              std::abs(spearman(seq).value - to_double(atom.spearman))});
        }
        report.line("max |float - exact| n=" + std::to_string(n), format_double(worst), "<= 1e-12",
                    worst <= 1e-12);
    } else if (a.check == "distribution") {
        const ExactDistribution dist = enumerate_null(n);
        os << "spearman,xi,multiplicity\n";
        for (const auto& atom : dist.collapsed()) {
            os << to_string(atom.spearman) << ',' << to_string(atom.xi) << ',' << atom.multiplicity
               << '\n';
        }
        report.line("total mass n=" + std::to_string(n), std::to_string(dist.total_mass()),
                    std::to_string(dist.atoms.size()), dist.total_mass() == dist.atoms.size());
    } else if (a.check == "constrained") {
        const Rational eps = parse_rational(a.epsilon);
        const ConstrainedOptimum best = max_abs_spearman_with_xi_below(n, eps);
        if (!best.feasible) {
            os << "no rank sequence of size " << n << " has xi < " << to_string(eps) << '\n';
        } else {
            os << "max |S| subject to xi < " << to_string(eps) << ": " << to_string(best.abs_spearman)
               << " at xi = " << to_string(best.xi) << ", ranks =";
            for (const Rank r : best.ranks) os << ' ' << r;
            os << '\n';
        }
    } else {
        throw UsageError("unknown --check '" + a.check + "'");
    }
    return report.all_pass ? kExitOk : kExitFailure;
}

bool is_input_error(ErrorCode code) {
    switch (code) {
        case ErrorCode::LengthMismatch:
        case ErrorCode::NonFiniteValue:
        case ErrorCode::SampleTooSmall:
        case ErrorCode::TiesPresent:
        case ErrorCode::SampleSizeMismatch:
        case ErrorCode::InvalidPValue:
        case ErrorCode::InvalidLevel:
        case ErrorCode::InvalidArgument:
        case ErrorCode::NTooLarge:
        case ErrorCode::NTooSmallForMoment:
        case ErrorCode::EvenN:
        case ErrorCode::InvalidShape:
        case ErrorCode::ParseError:
            return true;
    }
    return false;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Rank-based independence testing: Spearman, Chatterjee's xi and their max-combination"};
    app.require_subcommand(1);
    GlobalOptions global;
    app.add_option("--threads", global.threads,
                   "Worker threads (0 = $RANKDEP_THREADS or hardware concurrency)");
    app.add_option("--out", global.out_path, "Write results to FILE instead of standard output");

    TestArgs test_args;
    auto* test = app.add_subcommand("test", "Test independence of a two-column CSV sample");
    test->add_option("input", test_args.input, "CSV with header and x, y columns ('-' for stdin)")
        ->required();
    test->add_option("--method", test_args.method, "spearman | chatterjee | combined | all");
    test->add_option("--pvalue", test_args.pvalue, "asymptotic | permutation | exact (n <= 8)");
    test->add_option("--permutations,-R", test_args.permutations, "Permutation count");
    test->add_option("--seed", test_args.seed, "Seed for permutations and random tie-breaking");
    test->add_option("--ties", test_args.ties, "reject | random");

    ScreenArgs screen_args;
    auto* screen_cmd = app.add_subcommand("screen", "Test every row of a matrix CSV with BH-FDR control");
    screen_cmd->add_option("input", screen_args.input, "Matrix CSV: id column, then one column per condition")
        ->required();
    screen_cmd->add_option("--method", screen_args.method, "spearman | chatterjee | combined | all");
    screen_cmd->add_option("--q", screen_args.q, "FDR level");
    screen_cmd->add_option("--pvalue", screen_args.pvalue, "asymptotic | permutation");
    screen_cmd->add_option("--permutations,-R", screen_args.permutations, "Permutations per row");
    screen_cmd->add_option("--seed", screen_args.seed, "Seed");
    screen_cmd->add_option("--ties", screen_args.ties, "reject | random");
    screen_cmd->add_option("--x-file", screen_args.x_file, "File with the x-vector (one value per condition)");

    PowerArgs power_args;
    auto* power = app.add_subcommand("power", "Monte Carlo power under a simulated alternative");
    power->add_option("--scenario", power_args.scenario, "null | linear | quadratic | sinusoid | stepwise");
    power->add_option("--n", power_args.n, "Sample size(s)")->delimiter(',');
    power->add_option("--test", power_args.test, "spearman | chatterjee | combined | all");
    power->add_option("--alpha", power_args.alpha, "Significance level");
    power->add_option("--runs", power_args.runs, "Simulation runs");
    power->add_option("--seed", power_args.seed, "Seed");
    power->add_option("--pvalue", power_args.pvalue, "asymptotic | permutation");
    power->add_option("--permutations,-R", power_args.permutations, "Permutations per run");

    BiasArgs bias_args;
    auto* bias = app.add_subcommand("bias", "Asymptotic minus permutation p-value under the null");
    bias->add_option("--n", bias_args.n, "Sample size(s)")->delimiter(',');
    bias->add_option("--runs", bias_args.runs, "Simulation runs");
    bias->add_option("--permutations,-R", bias_args.permutations, "Permutations per run");
    bias->add_option("--test", bias_args.test, "spearman | chatterjee | combined");
    bias->add_option("--seed", bias_args.seed, "Seed");
    bias->add_option("--samples", bias_args.samples_path, "Also write per-run bias values to FILE");

    NullJointArgs null_args;
    auto* nulljoint = app.add_subcommand("nulljoint", "Scaled (S, xi) pairs under random permutations");
    nulljoint->add_option("--n", null_args.n, "Sample size");
    nulljoint->add_option("--replicates", null_args.replicates, "Number of permutations");
    nulljoint->add_option("--seed", null_args.seed, "Seed");

    ExtremalArgs extremal_args;
    auto* extremal = app.add_subcommand("extremal", "Extremal rank sequences and their statistics");
    extremal->add_option("--case", extremal_args.which, "1 (small |S|, large xi) or 2 (large |S|, small xi)")
        ->required();
    extremal->add_option("--n", extremal_args.n, "Sample size for case 1 (odd)");
    extremal->add_option("--m", extremal_args.m, "Oscillation half-length for case 2");
    extremal->add_option("--p", extremal_args.p, "Monotone tail length for case 2");
    extremal->add_option("--format", extremal_args.format, "json | csv");

    OracleArgs oracle_args;
    auto* oracle = app.add_subcommand("oracle", "Exact enumeration checks for n <= 8");
    oracle->add_option("--n", oracle_args.n, "Sample size (2..8)");
    oracle->add_option("--check", oracle_args.check,
                       "table1 | lemma1 | remark1 | rank-moments | spearman-moments | agreement | "
                       "distribution | constrained");
    oracle->add_option("--epsilon", oracle_args.epsilon, "xi bound for --check constrained (num/den)");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }

    try {
        if (*test) return cmd_test(test_args, global, out, err);
        if (*screen_cmd) return cmd_screen(screen_args, global, out, err);
        if (*power) return cmd_power(power_args, global, out);
        if (*bias) return cmd_bias(bias_args, global, out);
        if (*nulljoint) return cmd_nulljoint(null_args, global, out);
        if (*extremal) return cmd_extremal(extremal_args, global, out);
        if (*oracle) return cmd_oracle(oracle_args, global, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return is_input_error(e.code()) ? kExitInputError : kExitFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitFailure;
}

}  // namespace rankdep::cli
