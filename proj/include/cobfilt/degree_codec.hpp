#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "error.hpp"
#include "series.hpp"

namespace cobfilt {

/// Filtration index (n, j, i), ordered lexicographically.
///
/// Valid triples have n >= 1 and, when n == 1, j >= 1. The one exception is
/// BASE = (1,0,0): it indexes the bottom stage and carries no generator.
struct StageTriple {
    std::uint64_t n = 1;
    std::uint64_t j = 0;
    std::uint64_t i = 0;

    friend constexpr auto operator<=>(const StageTriple&, const StageTriple&) = default;

    constexpr bool is_base() const noexcept { return n == 1 && j == 0 && i == 0; }

    constexpr bool is_valid() const noexcept { return n >= 1 && (n > 1 || j >= 1 || i == 0); }

    std::string str() const
    {
        return "(" + std::to_string(n) + "," + std::to_string(j) + "," + std::to_string(i) + ")";
    }

    /// Validating factory; throws errc::invalid_triple.
    static StageTriple make(std::uint64_t n, std::uint64_t j, std::uint64_t i)
    {
        StageTriple t{n, j, i};
        if (!t.is_valid())
            throw error(errc::invalid_triple, "invalid stage triple " + t.str());
        return t;
    }
};

inline constexpr StageTriple BASE{1, 0, 0};

inline std::strong_ordering cmp_triples(const StageTriple& a, const StageTriple& b) { return a <=> b; }

/// True iff d + 1 is a power of two; those degrees carry no generator.
constexpr bool is_excluded(degree_t d) noexcept { return std::has_single_bit(d + 1); }

namespace detail {

constexpr unsigned valuation2(std::uint64_t x) noexcept { return static_cast<unsigned>(std::countr_zero(x)); }

} // namespace detail

/// Writes d uniquely as ((4n-2) 2^j - 1) 2^i - 1.
///
/// i is the 2-adic valuation of d+1; with m the odd part of d+1, m+1 equals
/// (2n-1) 2^{j+1}.
inline StageTriple decompose(degree_t d)
{
    if (d < 2)
        throw error(errc::degree_too_small, "degree " + std::to_string(d) + " is below 2");
    if (is_excluded(d))
        throw error(errc::excluded_degree,
                    "degree " + std::to_string(d) + " is of the form 2^k-1 and carries no generator");
    const std::uint64_t i = detail::valuation2(d + 1);
    const std::uint64_t m = (d + 1) >> i;
    const unsigned v = detail::valuation2(m + 1);
    const std::uint64_t odd = (m + 1) >> v;
    return StageTriple{(odd + 1) / 2, v - 1u, i};
}

/// ((4n-2) 2^j - 1) 2^i - 1, with overflow checking.
inline degree_t compose(const StageTriple& t)
{
    if (t.is_base())
        throw error(errc::base_stage_has_no_generator, "BASE stage carries no generator");
    if (!t.is_valid())
        throw error(errc::invalid_triple, "invalid stage triple " + t.str());
    if (t.j >= 63 || t.i >= 63)
        throw error(errc::overflow, "degree of " + t.str() + " overflows");
    const degree_t inner = detail::checked_mul(detail::checked_mul(4, t.n) - 2, degree_t{1} << t.j) - 1;
    return detail::checked_mul(inner, degree_t{1} << t.i) - 1;
}

struct GeneratorTableEntry {
    degree_t degree;
    StageTriple triple;

    friend bool operator==(const GeneratorTableEntry&, const GeneratorTableEntry&) = default;
};

/// All generator-bearing stages with degree <= bound, in triple order.
struct GeneratorTable {
    degree_t bound = 0;
    std::vector<GeneratorTableEntry> entries;
};

inline GeneratorTable stages_up_to_degree(degree_t bound)
{
    GeneratorTable table{bound, {}};
    if (bound < 2)
        return table;
    // Lowest degree with a given n is 2 for n = 1, else 4n - 4.
    for (std::uint64_t n = 1; n == 1 || 4 * n - 4 <= bound; ++n) {
        for (std::uint64_t j = (n == 1 ? 1 : 0);; ++j) {
            if (compose({n, j, 0}) > bound)
                break;
            for (std::uint64_t i = 0;; ++i) {
                const auto d = compose({n, j, i});
                if (d > bound)
                    break;
                table.entries.push_back({d, {n, j, i}});
            }
        }
    }
    return table;
}

} // namespace cobfilt
