#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cobfilt {

enum class errc {
    overflow,
    cap_mismatch,
    not_divisible,
    invalid_divisor,
    invalid_spec,
    invalid_argument,
    excluded_degree,
    degree_too_small,
    base_stage_has_no_generator,
    invalid_triple,
    non_exterior_input,
    non_polynomial_input,
    degree_one_generator,
    even_sphere_dimension,
    rule_not_applicable,
    invalid_recipe,
    parse_error,
};

// Machine-readable code, stable across releases (also used in CLI JSON).
constexpr std::string_view code_name(errc e) noexcept
{
    switch (e) {
    case errc::overflow: return "OVERFLOW";
    case errc::cap_mismatch: return "CAP_MISMATCH";
    case errc::not_divisible: return "NOT_DIVISIBLE";
    case errc::invalid_divisor: return "INVALID_DIVISOR";
    case errc::invalid_spec: return "INVALID_SPEC";
    case errc::invalid_argument: return "INVALID_ARGUMENT";
    case errc::excluded_degree: return "EXCLUDED_DEGREE";
    case errc::degree_too_small: return "DEGREE_TOO_SMALL";
    case errc::base_stage_has_no_generator: return "BASE_STAGE_HAS_NO_GENERATOR";
    case errc::invalid_triple: return "INVALID_TRIPLE";
    case errc::non_exterior_input: return "NON_EXTERIOR_INPUT";
    case errc::non_polynomial_input: return "NON_POLYNOMIAL_INPUT";
    case errc::degree_one_generator: return "DEGREE_ONE_GENERATOR";
    case errc::even_sphere_dimension: return "EVEN_SPHERE_DIMENSION";
    case errc::rule_not_applicable: return "RULE_NOT_APPLICABLE";
    case errc::invalid_recipe: return "INVALID_RECIPE";
    case errc::parse_error: return "PARSE_ERROR";
    }
    return "UNKNOWN";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

} // namespace cobfilt
