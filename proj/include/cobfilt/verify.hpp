#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "algebra_spec.hpp"
#include "degree_codec.hpp"
#include "error.hpp"
#include "series.hpp"
#include "spectral_model.hpp"

// Brute-force oracles and the cross-checks that tie the modules together.
// The oracles here never call the code path they are checking.

namespace cobfilt {

/// First point of disagreement, by degree.
struct Discrepancy {
    degree_t degree = 0;
    std::string expected;
    std::string actual;
    std::string detail;
};

struct CheckReport {
    CheckReport(std::string name, degree_t cap) : check_name(std::move(name)), bound(cap) {}

    std::string check_name;
    degree_t bound = 0;
    bool passed = true;
    std::optional<Discrepancy> first_discrepancy;
    std::optional<TruncatedSeries> series;

    void fail(Discrepancy d)
    {
        if (passed) {
            passed = false;
            first_discrepancy = std::move(d);
        }
    }
};

/// Number of multisets of parts from allowed summing to each t <= cap.
///
/// Adds one part at a time and sums explicitly over its multiplicity, so it
/// shares nothing with series_of.
inline TruncatedSeries partition_dp(const std::vector<degree_t>& allowed, degree_t cap)
{
    std::vector<coeff_t> ways(cap + 1, 0);
    ways[0] = 1;
    for (degree_t part : allowed) {
        if (part == 0)
            throw error(errc::invalid_argument, "partition parts must be positive");
        std::vector<coeff_t> next(cap + 1, 0);
        for (degree_t t = 0; t <= cap; ++t)
            for (degree_t used = 0; used <= t; used += part)
                next[t] = detail::checked_add(next[t], ways[t - used]);
        ways = std::move(next);
    }
    return TruncatedSeries(std::move(ways));
}

/// Every (degree, triple) with ((4n-2) 2^j - 1) 2^i - 1 <= bound, by nested loops.
inline std::vector<std::pair<degree_t, StageTriple>> enumerate_triples(degree_t bound)
{
    std::vector<std::pair<degree_t, StageTriple>> out;
    for (std::uint64_t n = 1;; ++n) {
        // (4n-2) - 2 is the smallest degree n can reach, except n = 1 which starts at j = 1.
        if (n > 1 && 4 * n - 4 > bound)
            break;
        for (std::uint64_t j = (n == 1 ? 1 : 0); j < 62; ++j) {
            const std::uint64_t odd = (4 * n - 2) * (std::uint64_t{1} << j) - 1;
            if (odd - 1 > bound)
                break;
            for (std::uint64_t i = 0; i < 62; ++i) {
                const std::uint64_t d = odd * (std::uint64_t{1} << i) - 1;
                if (d > bound)
                    break;
                out.push_back({d, StageTriple{n, j, i}});
            }
        }
    }
    return out;
}

/// Checks a triple enumeration against the non-excluded degrees and against decompose.
inline CheckReport verify_bijection_with(degree_t bound,
                                         const std::vector<std::pair<degree_t, StageTriple>>& enumeration)
{
    CheckReport report("bijection", bound);
    std::map<degree_t, std::vector<StageTriple>> by_degree;
    for (const auto& [d, t] : enumeration)
        by_degree[d].push_back(t);

    std::vector<bool> power_of_two_minus_one(bound + 1, false);
    for (degree_t p = 1; p - 1 <= bound; p *= 2) {
        power_of_two_minus_one[p - 1] = true;
        if (p > bound)
            break;
    }

    for (degree_t d = 0; d <= bound && report.passed; ++d) {
        const auto it = by_degree.find(d);
        const std::size_t hits = it == by_degree.end() ? 0 : it->second.size();
        const std::size_t want = power_of_two_minus_one[d] ? 0 : 1;
        if (hits != want) {
            report.fail({d, std::to_string(want), std::to_string(hits), "triples with this degree"});
            break;
        }
        if (d < 2)
            continue;
        if (want == 0) {
            try {
                const auto t = decompose(d);
                report.fail({d, "EXCLUDED_DEGREE", t.str(), "decompose of excluded degree"});
            } catch (const error& e) {
                if (e.code() != errc::excluded_degree)
                    report.fail({d, "EXCLUDED_DEGREE", std::string(code_name(e.code())), "decompose error code"});
            }
            continue;
        }
        const auto& expected = it->second.front();
        try {
            const auto t = decompose(d);
            if (t != expected)
                report.fail({d, expected.str(), t.str(), "decompose disagrees with enumeration"});
        } catch (const error& e) {
            report.fail({d, expected.str(), std::string(code_name(e.code())), "decompose threw"});
        }
    }
    // Entries beyond the bound are a broken enumeration.
    for (const auto& [d, ts] : by_degree) {
        if (d > bound) {
            report.fail({d, "0", std::to_string(ts.size()), "enumerated degree above bound"});
            break;
        }
    }
    return report;
}

inline CheckReport verify_bijection(degree_t bound) { return verify_bijection_with(bound, enumerate_triples(bound)); }

namespace detail {

inline std::optional<Discrepancy> first_difference(const TruncatedSeries& expected, const TruncatedSeries& actual,
                                                   const std::string& what)
{
    if (expected.cap() != actual.cap())
        return Discrepancy{0, "cap " + std::to_string(expected.cap()), "cap " + std::to_string(actual.cap()), what};
    for (degree_t t = 0; t <= expected.cap(); ++t)
        if (expected[t] != actual[t])
            return Discrepancy{t, std::to_string(expected[t]), std::to_string(actual[t]), what};
    return std::nullopt;
}

} // namespace detail

/// Series of F_2[x_d : d <= cap, d != 2^k - 1], three ways.
///
/// Compares the Poincare series of the polynomial algebra, the partition
/// oracle, and the product built one filtration stage at a time in triple
/// order starting from the BASE stage's homotopy (which must also agree with
/// the homotopy series of the last stage).
inline CheckReport verify_main_theorem(degree_t cap)
{
    CheckReport report("product", cap);
    const auto table = stages_up_to_degree(cap);
    std::vector<degree_t> degrees;
    for (const auto& e : table.entries)
        degrees.push_back(e.degree);
    std::sort(degrees.begin(), degrees.end());

    const auto poly = series_of(AlgebraSpec::polynomial(degrees), cap);
    report.series = poly;

    const auto oracle = partition_dp(degrees, cap);
    if (auto d = detail::first_difference(oracle, poly, "polynomial series vs partition oracle")) {
        report.fail(*d);
        return report;
    }

    auto stagewise = adams_homotopy_series(BASE, cap);
    for (const auto& e : table.entries)
        stagewise = mul(stagewise, series_of(AlgebraSpec::polynomial({e.degree}), cap));
    if (auto d = detail::first_difference(oracle, stagewise, "stagewise product vs partition oracle")) {
        report.fail(*d);
        return report;
    }

    const StageTriple last = table.entries.empty() ? BASE : table.entries.back().triple;
    if (auto d = detail::first_difference(oracle, adams_homotopy_series(last, cap),
                                          "homotopy of last stage " + last.str() + " vs partition oracle"))
        report.fail(*d);
    return report;
}

/// Each step between consecutive generator-bearing stages adds exactly one polynomial generator.
inline CheckReport verify_quotient_steps(degree_t cap)
{
    CheckReport report("quotients", cap);
    auto prev_triple = BASE;
    auto prev = adams_homotopy_series(BASE, cap);
    for (const auto& e : stages_up_to_degree(cap).entries) {
        const auto next = adams_homotopy_series(e.triple, cap);
        const std::string step = prev_triple.str() + " -> " + e.triple.str();
        try {
            const auto quotient = exact_div(next, prev);
            const auto expected = series_of(AlgebraSpec::polynomial({e.degree}), cap);
            if (auto d = detail::first_difference(expected, quotient, "quotient " + step)) {
                report.fail(*d);
                return report;
            }
        } catch (const error& err) {
            report.fail({e.degree, "divisible", std::string(code_name(err.code())), "quotient " + step});
            return report;
        }
        prev = next;
        prev_triple = e.triple;
    }
    return report;
}

using SimpleSystemFn = std::function<TruncatedSeries(degree_t, degree_t)>;

/// simple_system_series(d, cap) against the polynomial series for every d <= cap.
inline CheckReport verify_simple_systems(degree_t cap, const SimpleSystemFn& simple = simple_system_series)
{
    CheckReport report("simple-system", cap);
    for (degree_t d = 1; d <= cap; ++d) {
        const auto expected = series_of(AlgebraSpec::polynomial({d}), cap);
        if (auto diff = detail::first_difference(expected, simple(d, cap), "generator degree " + std::to_string(d))) {
            report.fail(*diff);
            break;
        }
    }
    return report;
}

inline std::vector<CheckReport> verify_all(degree_t cap)
{
    return {verify_bijection(cap), verify_main_theorem(cap), verify_quotient_steps(cap), verify_simple_systems(cap)};
}

} // namespace cobfilt
