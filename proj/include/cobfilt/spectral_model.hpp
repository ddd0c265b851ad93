#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "algebra_spec.hpp"
#include "degree_codec.hpp"
#include "error.hpp"
#include "series.hpp"

// Graded-homology models of Sp(n), its loop spaces, looped James pieces and
// the Thom complexes of the filtration stages. Everything here is a dimension
// count; homology suspension is a degree shift by one.

namespace cobfilt {

/// H_*(Sp(n)) = E(a_3, a_7, ..., a_{4n-1}).
inline AlgebraSpec sp_homology(std::uint64_t n)
{
    if (n < 1)
        throw error(errc::invalid_argument, "Sp(n) needs n >= 1");
    std::vector<degree_t> degrees;
    for (std::uint64_t k = 1; k <= n; ++k)
        degrees.push_back(4 * k - 1);
    return AlgebraSpec::exterior(std::move(degrees));
}

/// Borel's rule: exterior generators of degree d become polynomial generators of degree d-1.
inline AlgebraSpec loop_algebra(const AlgebraSpec& spec)
{
    if (spec.has_rule())
        throw error(errc::non_exterior_input, "loop_algebra takes a finite exterior algebra");
    std::vector<degree_t> out;
    for (const auto& g : spec.explicit_generators()) {
        if (!g.is_exterior())
            throw error(errc::non_exterior_input,
                        "generator of degree " + std::to_string(g.degree) + " is not exterior");
        if (g.degree < 2)
            throw error(errc::degree_one_generator, "degree-1 generator would loop to degree 0");
        out.push_back(g.degree - 1);
    }
    return AlgebraSpec::polynomial(std::move(out));
}

/// Loops a polynomial algebra once more through its simple system.
///
/// Each polynomial generator of degree e is replaced by the simple system
/// e, 2e, 4e, ... and suspended down, giving polynomial generators
/// e 2^a - 1 for every a with e 2^a - 1 <= cap. Output is sorted ascending
/// and keeps multiplicities.
inline AlgebraSpec double_loop_algebra(const AlgebraSpec& spec, degree_t cap)
{
    if (spec.has_rule())
        throw error(errc::non_polynomial_input, "double_loop_algebra takes a finite polynomial algebra");
    std::vector<degree_t> out;
    for (const auto& g : spec.explicit_generators()) {
        if (g.kind != GeneratorKind::polynomial)
            throw error(errc::non_polynomial_input,
                        "generator of degree " + std::to_string(g.degree) + " is not polynomial");
        if (g.degree < 2)
            throw error(errc::degree_one_generator, "degree-1 generator would loop to degree 0");
        for (degree_t e = g.degree; e - 1 <= cap; e *= 2) {
            out.push_back(e - 1);
            if (e > (degree_t{1} << 62))
                break;
        }
    }
    std::sort(out.begin(), out.end());
    return AlgebraSpec::polynomial(std::move(out));
}

/// H_*(Omega J_{2^i-1}(S^m)) = F_2[m-1, 2m-1, ..., m 2^i - 1].
///
/// James pieces are indexed with J_0(S^m) = S^m, so J_k has k+1 cells.
/// Each doubling of the piece adds one generator, in degree m 2^i - 1.
inline AlgebraSpec james_loop_homology(std::uint64_t m, std::uint64_t i)
{
    if (m % 2 == 0)
        throw error(errc::even_sphere_dimension, "James piece needs an odd sphere, got S^" + std::to_string(m));
    if (m < 3)
        throw error(errc::invalid_argument, "James piece needs sphere dimension >= 3");
    if (i >= 62)
        throw error(errc::overflow, "James piece index too large");
    std::vector<degree_t> out;
    for (std::uint64_t a = 0; a <= i; ++a)
        out.push_back(detail::checked_mul(m, degree_t{1} << a) - 1);
    return AlgebraSpec::polynomial(std::move(out));
}

/// A_* = F_2[xi_1, xi_2, ...] with |xi_k| = 2^k - 1, as a generator rule.
inline AlgebraSpec dual_steenrod_spec()
{
    return AlgebraSpec(
        {},
        [](degree_t bound) {
            std::vector<Generator> out;
            for (unsigned k = 1; k < 64; ++k) {
                const degree_t d = (degree_t{1} << k) - 1;
                if (d > bound)
                    break;
                out.push_back(Generator::polynomial(d));
            }
            return out;
        },
        "xi_k, |xi_k| = 2^k - 1");
}

/// Exponent sequence of a monomial xi_1^{e_1} ... xi_k^{e_k}; no trailing zeros.
struct MilnorMonomial {
    std::vector<std::uint64_t> exponents;
    degree_t degree = 0;

    static MilnorMonomial from_exponents(std::vector<std::uint64_t> e)
    {
        while (!e.empty() && e.back() == 0)
            e.pop_back();
        degree_t d = 0;
        for (std::size_t k = 0; k < e.size(); ++k)
            d = detail::checked_add(d, detail::checked_mul(e[k], (degree_t{1} << (k + 1)) - 1));
        return {std::move(e), d};
    }

    friend bool operator==(const MilnorMonomial&, const MilnorMonomial&) = default;
};

/// Every monomial of A_* in degree t.
///
/// Sorted lexicographically descending on the zero-padded exponent
/// sequence, so xi_1^t comes first: t = 3 gives (3), (0,1).
inline std::vector<MilnorMonomial> milnor_monomials(degree_t t)
{
    std::size_t top = 0; // number of xi_k with |xi_k| <= t
    while (top < 63 && (degree_t{1} << (top + 1)) - 1 <= t)
        ++top;

    std::vector<std::vector<std::uint64_t>> found;
    std::vector<std::uint64_t> e(top, 0);
    // Fill exponents from the highest generator down; xi_1 absorbs the remainder.
    std::function<void(std::size_t, degree_t)> fill = [&](std::size_t k, degree_t rest) {
        if (k == 0) {
            e[0] = rest;
            found.push_back(e);
            e[0] = 0;
            return;
        }
        const degree_t w = (degree_t{1} << (k + 1)) - 1;
        for (std::uint64_t x = 0; x * w <= rest; ++x) {
            e[k] = x;
            fill(k - 1, rest - x * w);
        }
        e[k] = 0;
    };
    if (top == 0) {
        if (t == 0)
            return {MilnorMonomial{}};
        return {};
    }
    fill(top - 1, t);

    std::sort(found.begin(), found.end(), std::greater<>());
    std::vector<MilnorMonomial> out;
    out.reserve(found.size());
    for (auto& f : found)
        out.push_back(MilnorMonomial::from_exponents(std::move(f)));
    return out;
}

/// Degrees of the generators present at stage t, in triple order.
///
/// These are compose(s) for every generator-bearing s <= t with
/// compose(s) <= bound. Empty for BASE.
inline std::vector<degree_t> stage_generator_degrees(const StageTriple& t, degree_t bound)
{
    if (!t.is_valid())
        throw error(errc::invalid_triple, "invalid stage triple " + t.str());
    std::vector<degree_t> out;
    for (const auto& e : stages_up_to_degree(bound).entries) {
        if (e.triple > t)
            break;
        out.push_back(e.degree);
    }
    return out;
}

inline TruncatedSeries dual_steenrod_series(degree_t cap) { return series_of(dual_steenrod_spec(), cap); }

/// H_*(MF_t) = A_* (x) F_2[stage generators].
inline TruncatedSeries thom_homology_series(const StageTriple& t, degree_t cap)
{
    return mul(dual_steenrod_series(cap), series_of(AlgebraSpec::polynomial(stage_generator_degrees(t, cap)), cap));
}

/// pi_*(MF_t) from the collapsed Adams spectral sequence.
///
/// Since H_*(MF_t) is A_*-free, E_2 is concentrated on s = 0 and the
/// homotopy dimensions are the homology dimensions divided by A_*.
inline TruncatedSeries adams_homotopy_series(const StageTriple& t, degree_t cap)
{
    return exact_div(thom_homology_series(t, cap), dual_steenrod_series(cap));
}

} // namespace cobfilt
