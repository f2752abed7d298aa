#pragma once

#include <cstddef>

#include "rankdep/exact.hpp"
#include "rankdep/ranks.hpp"

namespace rankdep {

enum class ExtremalCase { Case1, Case2 };

// Case1 uses `n` (odd, >= 3). Case2 uses `m` (>= 2) and `p` (>= 0), n = 2m + p.
struct ExtremalSpec {
    ExtremalCase which = ExtremalCase::Case1;
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t p = 0;
};

struct ExtremalValues {
    Rational xi;
    Rational abs_spearman;
};

// Symmetric "V" pattern: n, n-2, ..., 1, 2, 4, ..., n-1. |S| is small while
// xi approaches 1. Throws SampleTooSmall for n < 3 and EvenN for even n.
RankSequence case1_ranks(std::size_t n);

// xi = 1 - (6n - 9)/(n^2 - 1), |S| = 3/(2n).
ExtremalValues case1_closed_forms(std::size_t n);

// Oscillating block 1, m+1, 2, m+2, ..., m, 2m followed by the increasing
// tail 2m+1..2m+p. |S| stays large while xi is small. Throws InvalidShape
// for m < 2.
RankSequence case2_ranks(std::size_t m, std::size_t p);

struct Case2Evaluation {
    Rational xi_formula;      // 1 - 3[m^2 + (m-1)^2 + p] / ((2m+p)^2 - 1)
    Rational xi_direct;       // xi of case2_ranks(m, p)
    Rational abs_spearman;    // |S| of case2_ranks(m, p)
    double xi_limit = 0.0;    // 1 - 6/(c+2)^2, c = p/m
    double abs_s_limit = 0.0; // 1 - 4/(c+2)^3
};

Case2Evaluation case2_evaluate(std::size_t m, std::size_t p);

RankSequence extremal_ranks(const ExtremalSpec& spec);

}  // namespace rankdep
