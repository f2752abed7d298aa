#include "rankdep/extremal.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "rankdep/error.hpp"

namespace rankdep {

namespace {

using boost::multiprecision::cpp_int;

void require_case1(std::size_t n) {
    if (n < 3) throw Error(ErrorCode::SampleTooSmall, "case 1 needs n >= 3");
    if (n % 2 == 0) throw Error(ErrorCode::EvenN, "case 1 needs odd n, got " + std::to_string(n));
}

void require_case2(std::size_t m) {
    if (m < 2) throw Error(ErrorCode::InvalidShape, "case 2 needs m >= 2, got " + std::to_string(m));
}

Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

}  // namespace

RankSequence case1_ranks(std::size_t n) {
    require_case1(n);
    std::vector<Rank> ranks(n);
    for (std::size_t i = 1; i <= n; ++i) {
        ranks[i - 1] = static_cast<Rank>(i <= (n + 1) / 2 ? n - 2 * (i - 1) : 2 * i - (n + 1));
    }
    return RankSequence(std::move(ranks));
}

ExtremalValues case1_closed_forms(std::size_t n) {
    require_case1(n);
    const cpp_int nn(n);
    return {Rational(1) - Rational(6 * nn - 9, nn * nn - 1), Rational(cpp_int(3), 2 * nn)};
}

RankSequence case2_ranks(std::size_t m, std::size_t p) {
    require_case2(m);
    const std::size_t n = 2 * m + p;
    std::vector<Rank> ranks(n);
    for (std::size_t i = 1; i <= n; ++i) {
        std::size_t r = i;
        if (i <= 2 * m) r = i % 2 == 1 ? (i + 1) / 2 : i / 2 + m;
        ranks[i - 1] = static_cast<Rank>(r);
    }
    return RankSequence(std::move(ranks));
}

Case2Evaluation case2_evaluate(std::size_t m, std::size_t p) {
    const RankSequence ranks = case2_ranks(m, p);
    const cpp_int mm(m), pp(p), n = 2 * mm + pp;

    Case2Evaluation out;
    out.xi_formula = Rational(1) - Rational(3 * (mm * mm + (mm - 1) * (mm - 1) + pp), n * n - 1);
    out.xi_direct = exact_xi(ranks.values());
    out.abs_spearman = abs(exact_spearman(ranks.values()));
    const double c = static_cast<double>(p) / static_cast<double>(m);
    out.xi_limit = 1.0 - 6.0 / ((c + 2.0) * (c + 2.0));
    out.abs_s_limit = 1.0 - 4.0 / std::pow(c + 2.0, 3);
    return out;
}

RankSequence extremal_ranks(const ExtremalSpec& spec) {
    return spec.which == ExtremalCase::Case1 ? case1_ranks(spec.n) : case2_ranks(spec.m, spec.p);
}

}  // namespace rankdep
