#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rankdep/inference.hpp"
#include "rankdep/ranks.hpp"

namespace rankdep {

// Arbitrary-precision rational, always kept in lowest terms with a
// positive denominator.
using Rational = boost::multiprecision::cpp_rational;

// "num/den", including "0/1" and "3/1".
std::string to_string(const Rational& r);
double to_double(const Rational& r);

inline constexpr std::size_t kMaxExactN = 8;

struct ExactAtom {
    std::vector<Rank> ranks;  // empty once collapsed
    Rational spearman;
    Rational xi;
    std::uint64_t multiplicity = 1;
};

// Exact null law of (S_n, xi_n) over all n! equally likely rank sequences.
struct ExactDistribution {
    std::size_t n = 0;
    std::vector<ExactAtom> atoms;  // one per permutation, lexicographic order

    std::uint64_t total_mass() const;
    // Atoms merged by equal (S, xi), sorted by (S, xi).
    std::vector<ExactAtom> collapsed() const;
};

// Exact statistics of one rank sequence, from integer sums.
Rational exact_spearman(std::span<const Rank> ranks);
Rational exact_xi(std::span<const Rank> ranks);

// Throws NTooLarge for n > 8 and SampleTooSmall for n < 2.
ExactDistribution enumerate_null(std::size_t n);

enum class CovarianceKind { SpearmanXi, AbsSpearmanXi };
Rational exact_covariance(std::size_t n, CovarianceKind kind);

enum class RankMoment {
    CovR1R2,        // Cov[R1, R2]
    VarR1,          // V[R1]
    CovR1MinR1R2,   // Cov[R1, min(R1, R2)]
    CovR1MinR2R3,   // Cov[R1, min(R2, R3)], needs n >= 3
    MeanSqrtnS,     // E[S_n]; the sqrt(n) factor is dropped since the mean is 0
    VarSqrtnS,      // V[sqrt(n) S_n] = n V[S_n]
};
Rational exact_rank_moment(std::size_t n, RankMoment which);

// Closed-form values the enumeration is checked against.
Rational rank_moment_formula(std::size_t n, RankMoment which);

// Exact P(T >= observed) under uniform permutations, with T = |S|, xi or
// I = max(|S|, sqrt(5/2) xi) for Spearman, Chatterjee and Combined.
Rational exact_pvalue(std::size_t n, Method method, const Rational& observed);

struct ExactTestResult {
    TestResult result;
    Rational p;
};

// Exact permutation test for an observed rank sequence with n <= 8. For the
// combined statistic the comparison T >= T_0 is decided exactly despite the
// irrational scale factor.
ExactTestResult exact_test(const RankSequence& ranks, Method method);

struct ConstrainedOptimum {
    bool feasible = false;
    Rational abs_spearman;
    Rational xi;
    std::vector<Rank> ranks;
};

// Brute force over n! sequences: maximise |S_n| subject to xi_n < epsilon.
ConstrainedOptimum max_abs_spearman_with_xi_below(std::size_t n, const Rational& epsilon);

}  // namespace rankdep
