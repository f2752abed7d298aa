#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <tuple>
#include <vector>

#include "rankdep/correlation.hpp"
#include "rankdep/error.hpp"
#include "rankdep/exact.hpp"
#include "rankdep/extremal.hpp"
#include "rankdep/inference.hpp"
#include "rankdep/ranks.hpp"
#include "rankdep/simulation.hpp"

namespace py = pybind11;
using namespace rankdep;

namespace {

TiePolicy make_ties(const std::string& ties, std::uint64_t seed) {
    if (ties == "reject") return TiePolicy::reject();
    if (ties == "random") return TiePolicy::random_break(seed);
    throw Error(ErrorCode::InvalidArgument, "ties must be 'reject' or 'random'");
}

RankSequence ranks_of(std::vector<double> x, std::vector<double> y, const std::string& ties,
                      std::uint64_t seed) {
    return concomitant_ranks(PairedSample{std::move(x), std::move(y)}, make_ties(ties, seed));
}

RankSequence as_ranks(const std::vector<Rank>& r) { return RankSequence(r); }

PValueMode parse_mode(const std::string& mode) {
    if (mode == "asymptotic") return PValueMode::Asymptotic;
    if (mode == "permutation") return PValueMode::Permutation;
    throw Error(ErrorCode::InvalidArgument, "mode must be 'asymptotic' or 'permutation'");
}

}  // namespace

PYBIND11_MODULE(_rankdep, m) {
    m.doc() = "Rank-based dependence measures and independence tests";

    m.attr("RankdepError") =
        py::handle(PyErr_NewException("rankdep._rankdep.RankdepError", PyExc_ValueError, nullptr));
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::gil_scoped_acquire gil;
            py::object type = py::module_::import("rankdep._rankdep").attr("RankdepError");
            py::object err = type(e.what());
            err.attr("code") = std::string(to_string(e.code()));
            PyErr_SetObject(type.ptr(), err.ptr());
        }
    });

    py::enum_<Method>(m, "Method")
        .value("SPEARMAN", Method::Spearman)
        .value("CHATTERJEE", Method::Chatterjee)
        .value("COMBINED", Method::Combined);

    py::class_<TestResult>(m, "TestResult")
        .def_readonly("method", &TestResult::method)
        .def_readonly("statistic", &TestResult::statistic)
        .def_readonly("n", &TestResult::n)
        .def_readonly("p_value", &TestResult::p_value)
        .def_property_readonly("p_source",
                               [](const TestResult& r) { return std::string(to_string(r.p_source)); })
        .def_readonly("permutations_used", &TestResult::permutations_used)
        .def_readonly("seed", &TestResult::seed)
        .def("__repr__", [](const TestResult& r) {
            return "TestResult(method=" + std::string(to_string(r.method)) +
                   ", statistic=" + std::to_string(r.statistic) +
                   ", p_value=" + std::to_string(r.p_value) + ")";
        });

    m.def("parse_method", [](const std::string& s) { return parse_method(s); });

    m.def("concomitant_ranks",
          [](std::vector<double> x, std::vector<double> y, const std::string& ties,
             std::uint64_t seed) {
              const RankSequence r = ranks_of(std::move(x), std::move(y), ties, seed);
              return std::vector<Rank>(r.values().begin(), r.values().end());
          },
          py::arg("x"), py::arg("y"), py::arg("ties") = "reject", py::arg("seed") = 0);

    m.def("xi", [](const std::vector<Rank>& r) { return xi(as_ranks(r)).value; }, py::arg("ranks"));
    m.def("spearman", [](const std::vector<Rank>& r) { return spearman(as_ranks(r)).value; },
          py::arg("ranks"));
    m.def("combined", [](const std::vector<Rank>& r) {
        const RankSequence seq = as_ranks(r);
        return combined(spearman(seq), xi(seq)).value;
    }, py::arg("ranks"));

    m.def("statistics",
          [](std::vector<double> x, std::vector<double> y, const std::string& ties,
             std::uint64_t seed) {
              const Statistics s = all_statistics(ranks_of(std::move(x), std::move(y), ties, seed));
              py::dict d;
              d["n"] = s.n;
              d["spearman"] = s.spearman;
              d["xi"] = s.xi;
              d["combined"] = s.combined;
              return d;
          },
          py::arg("x"), py::arg("y"), py::arg("ties") = "reject", py::arg("seed") = 0);

    m.def("normal_cdf", &normal_cdf, py::arg("z"));
    m.def("spearman_pvalue_asymptotic", &spearman_pvalue_asymptotic, py::arg("s"), py::arg("n"));
    m.def("xi_pvalue_asymptotic", &xi_pvalue_asymptotic, py::arg("xi"), py::arg("n"));
    m.def("combined_pvalue_asymptotic", &combined_pvalue_asymptotic, py::arg("combined"),
          py::arg("n"));

    m.def("test",
          [](std::vector<double> x, std::vector<double> y, Method method, const std::string& pvalue,
             std::size_t permutations, std::uint64_t seed, const std::string& ties,
             unsigned threads) {
              const RankSequence r = ranks_of(std::move(x), std::move(y), ties, seed);
              if (pvalue == "asymptotic") return asymptotic_test(r, method);
              if (pvalue == "permutation") {
                  return permutation_pvalue(r, method, permutations, seed, threads);
              }
              if (pvalue == "exact") return exact_test(r, method).result;
              throw Error(ErrorCode::InvalidArgument,
                          "pvalue must be 'asymptotic', 'permutation' or 'exact'");
          },
          py::arg("x"), py::arg("y"), py::arg("method") = Method::Combined,
          py::arg("pvalue") = "asymptotic", py::arg("permutations") = 5000, py::arg("seed") = 0,
          py::arg("ties") = "reject", py::arg("threads") = 0);

    m.def("bh_adjust",
          [](const std::vector<double>& p, double q) {
              const FdrResult r = bh_adjust(p, q);
              py::dict d;
              d["adjusted_p"] = r.adjusted_p;
              d["rejected"] = r.rejected;
              d["rejected_count"] = r.rejected_count();
              return d;
          },
          py::arg("pvalues"), py::arg("q") = 0.05);

    m.def("exact_pvalue",
          [](const std::vector<Rank>& r, Method method) {
              const ExactTestResult e = exact_test(as_ranks(r), method);
              return py::make_tuple(to_double(e.p), to_string(e.p));
          },
          py::arg("ranks"), py::arg("method") = Method::Combined,
          "Exact permutation p-value for n <= 8 as (float, 'num/den').");

    m.def("enumerate_null",
          [](std::size_t n) {
              std::vector<std::tuple<std::vector<Rank>, std::string, std::string>> out;
              for (const auto& a : enumerate_null(n).atoms) {
                  out.emplace_back(a.ranks, to_string(a.spearman), to_string(a.xi));
              }
              return out;
          },
          py::arg("n"), "All n! rank sequences with exact (S, xi) as 'num/den' strings.");

    m.def("exact_covariance",
          [](std::size_t n, bool absolute) {
              return to_string(exact_covariance(
                  n, absolute ? CovarianceKind::AbsSpearmanXi : CovarianceKind::SpearmanXi));
          },
          py::arg("n"), py::arg("absolute") = false);

    m.def("case1_ranks", [](std::size_t n) {
        const RankSequence r = case1_ranks(n);
        return std::vector<Rank>(r.values().begin(), r.values().end());
    }, py::arg("n"));
    m.def("case2_ranks", [](std::size_t mm, std::size_t p) {
        const RankSequence r = case2_ranks(mm, p);
        return std::vector<Rank>(r.values().begin(), r.values().end());
    }, py::arg("m"), py::arg("p"));

    m.def("generate",
          [](const std::string& scenario, std::size_t n, std::uint64_t seed) {
              const PairedSample s = generate({parse_scenario(scenario), n, seed});
              return py::make_tuple(s.x, s.y);
          },
          py::arg("scenario"), py::arg("n"), py::arg("seed") = 0);

    m.def("estimate_power",
          [](const std::string& scenario, std::size_t n, double alpha, std::size_t runs,
             std::uint64_t seed, const std::string& mode, std::size_t permutations,
             unsigned threads) {
              PowerOptions options{parse_mode(mode), permutations, threads};
              py::dict d;
              for (const auto& e : estimate_power_all({parse_scenario(scenario), n, seed}, alpha,
                                                      runs, options)) {
                  d[py::str(std::string(to_string(e.test)))] = py::make_tuple(e.power, e.mc_std_error);
              }
              return d;
          },
          py::arg("scenario"), py::arg("n"), py::arg("alpha") = 0.05, py::arg("runs") = 1000,
          py::arg("seed") = 0, py::arg("mode") = "asymptotic", py::arg("permutations") = 1000,
          py::arg("threads") = 0,
          "Power and Monte Carlo standard error per test, keyed by test name.");

    m.def("bias_study",
          [](std::size_t n, std::size_t runs, std::size_t permutations, Method test,
             std::uint64_t seed, unsigned threads) {
              const BiasRecord b = bias_study(n, runs, permutations, test, seed, threads);
              return py::make_tuple(b.mean_bias, b.bias_samples);
          },
          py::arg("n"), py::arg("runs") = 1000, py::arg("permutations") = 1000,
          py::arg("test") = Method::Combined, py::arg("seed") = 0, py::arg("threads") = 0);

    m.def("null_joint_sample",
          [](std::size_t n, std::size_t replicates, std::uint64_t seed, unsigned threads) {
              std::vector<std::pair<double, double>> out;
              for (const auto& p : null_joint_sample(n, replicates, seed, threads)) {
                  out.emplace_back(p.sqrt_n_spearman, p.sqrt_n_xi);
              }
              return out;
          },
          py::arg("n"), py::arg("replicates"), py::arg("seed") = 0, py::arg("threads") = 0);
}
