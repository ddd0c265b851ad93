#pragma once

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "degree_codec.hpp"
#include "error.hpp"
#include "series.hpp"

namespace cobfilt {

enum class CupStep : std::uint8_t { cup1 = 1, cup2 = 2 };

/// Dimension of P(m, X) for an x-dimensional X: m + 2x.
inline degree_t cup_dimension(CupStep step, degree_t x)
{
    return detail::checked_add(detail::checked_mul(2, x), static_cast<degree_t>(step));
}

/// Recursive cup-construction certificate for a generator manifold.
///
/// Starts at RP^{base_dim} and applies steps innermost first. Recipes from
/// plan() always put every cup-2 step before every cup-1 step; hand-built
/// recipes may not, which is what indecomposable() guards against.
struct CupRecipe {
    degree_t base_dim = 2;
    std::vector<CupStep> steps;

    static CupRecipe canonical(degree_t base_dim, std::uint64_t cup2_count, std::uint64_t cup1_count)
    {
        CupRecipe r{base_dim, {}};
        r.steps.insert(r.steps.end(), cup2_count, CupStep::cup2);
        r.steps.insert(r.steps.end(), cup1_count, CupStep::cup1);
        r.check_base();
        return r;
    }

    std::uint64_t cup2_count() const { return count(CupStep::cup2); }
    std::uint64_t cup1_count() const { return count(CupStep::cup1); }

    /// Base dimension followed by the dimension after each step.
    std::vector<degree_t> intermediate_dims() const
    {
        check_base();
        std::vector<degree_t> dims{base_dim};
        for (auto s : steps)
            dims.push_back(cup_dimension(s, dims.back()));
        return dims;
    }

    void check_base() const
    {
        if (base_dim == 0 || base_dim % 2 != 0)
            throw error(errc::invalid_recipe, "base projective space must be RP^{2k}, k >= 1");
    }

    friend bool operator==(const CupRecipe&, const CupRecipe&) = default;

private:
    std::uint64_t count(CupStep k) const
    {
        std::uint64_t c = 0;
        for (auto s : steps)
            c += (s == k);
        return c;
    }
};

inline degree_t recipe_dimension(const CupRecipe& r) { return r.intermediate_dims().back(); }

/// Cup recipe for the generator of degree d.
///
/// With decompose(d) = (n, j, i): n = 1 starts at RP^2 with j-1 cup-2 steps,
/// n >= 2 starts at RP^{4(n-1)} with j cup-2 steps; both finish with i cup-1
/// steps.
inline CupRecipe plan(degree_t d)
{
    const auto t = decompose(d);
    if (t.n == 1)
        return CupRecipe::canonical(2, t.j - 1, t.i);
    return CupRecipe::canonical(4 * (t.n - 1), t.j, t.i);
}

/// Symbolic term, e.g. "P(1,P(2,RP^2))".
inline std::string expand(const CupRecipe& r)
{
    r.check_base();
    std::string term = "RP^" + std::to_string(r.base_dim);
    for (auto s : r.steps)
        term = (s == CupStep::cup1 ? "P(1," : "P(2,") + term + ")";
    return term;
}

/// Inverse of expand. Grammar: term := "RP^k" | "P(1," term ")" | "P(2," term ")".
inline CupRecipe parse_term(std::string_view text)
{
    auto fail = [&](const char* why) {
        return error(errc::parse_error, std::string("cannot parse cup term '") + std::string(text) + "': " + why);
    };
    std::vector<CupStep> outer_first;
    std::string_view rest = text;
    while (rest.starts_with("P(")) {
        if (rest.size() < 4 || rest[3] != ',' || (rest[2] != '1' && rest[2] != '2'))
            throw fail("expected P(1, or P(2,");
        outer_first.push_back(rest[2] == '1' ? CupStep::cup1 : CupStep::cup2);
        rest.remove_prefix(4);
    }
    if (!rest.starts_with("RP^"))
        throw fail("expected RP^k");
    rest.remove_prefix(3);
    degree_t k = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), k);
    if (ec != std::errc{} || ptr == rest.data())
        throw fail("bad projective space dimension");
    rest.remove_prefix(static_cast<std::size_t>(ptr - rest.data()));
    if (rest.size() != outer_first.size() || rest.find_first_not_of(')') != std::string_view::npos)
        throw fail("unbalanced parentheses");

    CupRecipe r{k, {outer_first.rbegin(), outer_first.rend()}};
    r.check_base();
    return r;
}

enum class IndecomposabilityRule { base_axiom, cup1, cup2_even };

/// One link of the indecomposability argument: input -> output dimension.
struct Justification {
    IndecomposabilityRule rule;
    degree_t input_dim;
    degree_t output_dim;

    std::string str() const
    {
        switch (rule) {
        case IndecomposabilityRule::base_axiom: return "base-axiom(RP^" + std::to_string(output_dim) + ")";
        case IndecomposabilityRule::cup1: return "cup1(" + std::to_string(input_dim) + ")";
        case IndecomposabilityRule::cup2_even: return "cup2-even(" + std::to_string(input_dim) + ")";
        }
        return {};
    }

    friend bool operator==(const Justification&, const Justification&) = default;
};

/// Chain showing the recipe's manifold is indecomposable in MO_*.
///
/// RP^{2k} is taken as indecomposable; P(1, M) is indecomposable whenever M
/// is, and P(2, M) is when M is also even-dimensional. Throws
/// errc::rule_not_applicable when a cup-2 step meets an odd dimension.
inline std::vector<Justification> indecomposable(const CupRecipe& r)
{
    r.check_base();
    std::vector<Justification> chain{{IndecomposabilityRule::base_axiom, r.base_dim, r.base_dim}};
    degree_t dim = r.base_dim;
    for (auto s : r.steps) {
        const degree_t next = cup_dimension(s, dim);
        if (s == CupStep::cup2) {
            if (dim % 2 != 0)
                throw error(errc::rule_not_applicable,
                            "cup-2 applied to odd dimension " + std::to_string(dim));
            chain.push_back({IndecomposabilityRule::cup2_even, dim, next});
        } else {
            chain.push_back({IndecomposabilityRule::cup1, dim, next});
        }
        dim = next;
    }
    return chain;
}

} // namespace cobfilt
