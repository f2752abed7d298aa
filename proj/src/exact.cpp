#include "rankdep/exact.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

#include "rankdep/error.hpp"

namespace rankdep {

namespace {

using boost::multiprecision::cpp_int;

void require_enumerable(std::size_t n) {
    if (n > kMaxExactN) {
        throw Error(ErrorCode::NTooLarge, "exact enumeration supports n <= " +
                                              std::to_string(kMaxExactN) + ", got " +
                                              std::to_string(n));
    }
    if (n < 2) throw Error(ErrorCode::SampleTooSmall, "exact enumeration needs n >= 2");
}

// A = sum |R_{i+1} - R_i|, B = sum (i - R_i)^2, computed here rather than
// through the floating-point path so the oracle stays independent.
std::pair<std::int64_t, std::int64_t> integer_sums(std::span<const Rank> r) {
    std::int64_t a = 0;
    std::int64_t b = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        const std::int64_t disp = static_cast<std::int64_t>(i) + 1 - r[i];
        b += disp * disp;
        if (i + 1 < r.size()) {
            const std::int64_t step = static_cast<std::int64_t>(r[i + 1]) - r[i];
            a += step < 0 ? -step : step;
        }
    }
    return {a, b};
}

Rational spearman_from_sum(std::size_t n, std::int64_t b) {
    const auto nn = static_cast<std::int64_t>(n);
    return Rational(1) - Rational(cpp_int(6 * b), cpp_int(nn * (nn * nn - 1)));
}

Rational xi_from_sum(std::size_t n, std::int64_t a) {
    const auto nn = static_cast<std::int64_t>(n);
    return Rational(1) - Rational(cpp_int(3 * a), cpp_int(nn * nn - 1));
}

Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

std::uint64_t factorial(std::size_t n) {
    std::uint64_t f = 1;
    for (std::size_t k = 2; k <= n; ++k) f *= k;
    return f;
}

template <typename Visit>
void for_each_permutation(std::size_t n, Visit&& visit) {
    std::vector<Rank> perm(n);
    std::iota(perm.begin(), perm.end(), Rank{1});
    do {
        visit(std::span<const Rank>(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
}

// Multiplicity of each (A, B) pair over all n! permutations.
std::map<std::pair<std::int64_t, std::int64_t>, std::uint64_t> sum_counts(std::size_t n) {
    std::map<std::pair<std::int64_t, std::int64_t>, std::uint64_t> counts;
    for_each_permutation(n, [&](std::span<const Rank> r) { ++counts[integer_sums(r)]; });
    return counts;
}

// sqrt(5/2) * b >= a, decided exactly for a >= 0.
bool scaled_xi_at_least(const Rational& b, const Rational& a) {
    if (a == 0) return b >= 0;
    return b > 0 && 5 * b * b >= 2 * a * a;
}

// a >= sqrt(5/2) * b, decided exactly for a >= 0.
bool at_least_scaled_xi(const Rational& a, const Rational& b) {
    if (b <= 0) return true;
    return 2 * a * a >= 5 * b * b;
}

// max(|S|, c xi) >= max(|S0|, c xi0), c = sqrt(5/2).
bool combined_at_least(const Rational& abs_s, const Rational& xi, const Rational& abs_s0,
                       const Rational& xi0) {
    const bool beats_spearman_arm = abs_s >= abs_s0 || scaled_xi_at_least(xi, abs_s0);
    const bool beats_xi_arm = xi >= xi0 || at_least_scaled_xi(abs_s, xi0);
    return beats_spearman_arm && beats_xi_arm;
}

// max(|S|, c xi) >= t for a rational threshold t.
bool combined_at_least(const Rational& abs_s, const Rational& xi, const Rational& t) {
    if (t <= 0) return true;
    return abs_s >= t || (xi > 0 && 5 * xi * xi >= 2 * t * t);
}

}  // namespace

std::string to_string(const Rational& r) {
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::uint64_t ExactDistribution::total_mass() const {
    std::uint64_t total = 0;
    for (const auto& atom : atoms) total += atom.multiplicity;
    return total;
}

std::vector<ExactAtom> ExactDistribution::collapsed() const {
    std::map<std::pair<Rational, Rational>, std::uint64_t> merged;
    for (const auto& atom : atoms) merged[{atom.spearman, atom.xi}] += atom.multiplicity;
    std::vector<ExactAtom> out;
    out.reserve(merged.size());
    for (const auto& [key, count] : merged) out.push_back({{}, key.first, key.second, count});
    return out;
}

Rational exact_spearman(std::span<const Rank> ranks) {
    return spearman_from_sum(ranks.size(), integer_sums(ranks).second);
}

Rational exact_xi(std::span<const Rank> ranks) {
    return xi_from_sum(ranks.size(), integer_sums(ranks).first);
}

ExactDistribution enumerate_null(std::size_t n) {
    require_enumerable(n);
    ExactDistribution dist;
    dist.n = n;
    dist.atoms.reserve(factorial(n));
    for_each_permutation(n, [&](std::span<const Rank> r) {
        const auto [a, b] = integer_sums(r);
        dist.atoms.push_back(
            {std::vector<Rank>(r.begin(), r.end()), spearman_from_sum(n, b), xi_from_sum(n, a), 1});
    });
    return dist;
}

Rational exact_covariance(std::size_t n, CovarianceKind kind) {
    require_enumerable(n);
    const Rational total{cpp_int(factorial(n))};
    Rational sum_s, sum_x, sum_sx;
    for (const auto& [sums, count] : sum_counts(n)) {
        Rational s = spearman_from_sum(n, sums.second);
        if (kind == CovarianceKind::AbsSpearmanXi) s = abs(s);
        const Rational x = xi_from_sum(n, sums.first);
        const Rational w{cpp_int(count)};
        sum_s += w * s;
        sum_x += w * x;
        sum_sx += w * s * x;
    }
    return sum_sx / total - (sum_s / total) * (sum_x / total);
}

Rational exact_rank_moment(std::size_t n, RankMoment which) {
    require_enumerable(n);
    if (which == RankMoment::CovR1MinR2R3 && n < 3) {
        throw Error(ErrorCode::NTooSmallForMoment, "Cov[R1, min(R2, R3)] needs n >= 3");
    }
    const Rational total{cpp_int(factorial(n))};

    if (which == RankMoment::MeanSqrtnS || which == RankMoment::VarSqrtnS) {
        Rational sum_s, sum_s2;
        for (const auto& [sums, count] : sum_counts(n)) {
            const Rational s = spearman_from_sum(n, sums.second);
            sum_s += count * s;
            sum_s2 += count * s * s;
        }
        const Rational mean = sum_s / total;
        if (which == RankMoment::MeanSqrtnS) return mean;
        return Rational{cpp_int(n)} * (sum_s2 / total - mean * mean);
    }

    // E[U], E[V], E[UV] for the pair (U, V) the requested moment is about.
    cpp_int sum_u = 0, sum_v = 0, sum_uv = 0;
    for_each_permutation(n, [&](std::span<const Rank> r) {
        const std::int64_t u = r[0];
        std::int64_t v = 0;
        switch (which) {
            case RankMoment::CovR1R2: v = r[1]; break;
            case RankMoment::VarR1: v = r[0]; break;
            case RankMoment::CovR1MinR1R2: v = std::min(r[0], r[1]); break;
            case RankMoment::CovR1MinR2R3: v = std::min(r[1], r[2]); break;
            default: break;
        }
        sum_u += u;
        sum_v += v;
        sum_uv += u * v;
    });
    return Rational(sum_uv) / total - (Rational(sum_u) / total) * (Rational(sum_v) / total);
}

Rational rank_moment_formula(std::size_t n, RankMoment which) {
    const Rational m{cpp_int(n)};
    switch (which) {
        case RankMoment::CovR1R2: return -(m + 1) / 12;
        case RankMoment::VarR1: return (m - 1) * (m + 1) / 12;
        case RankMoment::CovR1MinR1R2: return (m + 1) * (m - 2) / 24;
        case RankMoment::CovR1MinR2R3: return -(m + 1) / 12;
        case RankMoment::MeanSqrtnS: return Rational(0);
        case RankMoment::VarSqrtnS: return m / (m - 1);
    }
    return Rational(0);
}

Rational exact_pvalue(std::size_t n, Method method, const Rational& observed) {
    require_enumerable(n);
    std::uint64_t hits = 0;
    for (const auto& [sums, count] : sum_counts(n)) {
        const Rational abs_s = abs(spearman_from_sum(n, sums.second));
        const Rational x = xi_from_sum(n, sums.first);
        bool at_least = false;
        switch (method) {
            case Method::Spearman: at_least = abs_s >= observed; break;
            case Method::Chatterjee: at_least = x >= observed; break;
            case Method::Combined: at_least = combined_at_least(abs_s, x, observed); break;
        }
        if (at_least) hits += count;
    }
    return Rational(cpp_int(hits), cpp_int(factorial(n)));
}

ExactTestResult exact_test(const RankSequence& ranks, Method method) {
    const std::size_t n = ranks.size();
    require_enumerable(n);
    const Rational abs_s0 = abs(exact_spearman(ranks.values()));
    const Rational xi0 = exact_xi(ranks.values());

    std::uint64_t hits = 0;
    for (const auto& [sums, count] : sum_counts(n)) {
        const Rational abs_s = abs(spearman_from_sum(n, sums.second));
        const Rational x = xi_from_sum(n, sums.first);
        bool at_least = false;
        switch (method) {
            case Method::Spearman: at_least = abs_s >= abs_s0; break;
            case Method::Chatterjee: at_least = x >= xi0; break;
            case Method::Combined: at_least = combined_at_least(abs_s, x, abs_s0, xi0); break;
        }
        if (at_least) hits += count;
    }

    ExactTestResult out;
    out.p = Rational(cpp_int(hits), cpp_int(factorial(n)));
    out.result = asymptotic_test(ranks, method);
    out.result.p_value = to_double(out.p);
    out.result.p_source = PValueSource::Exact;
    return out;
}

ConstrainedOptimum max_abs_spearman_with_xi_below(std::size_t n, const Rational& epsilon) {
    require_enumerable(n);
    ConstrainedOptimum best;
    for_each_permutation(n, [&](std::span<const Rank> r) {
        const auto [a, b] = integer_sums(r);
        const Rational x = xi_from_sum(n, a);
        if (!(x < epsilon)) return;
        const Rational abs_s = abs(spearman_from_sum(n, b));
        if (!best.feasible || abs_s > best.abs_spearman) {
            best.feasible = true;
            best.abs_spearman = abs_s;
            best.xi = x;
            best.ranks.assign(r.begin(), r.end());
        }
    });
    return best;
}

}  // namespace rankdep
