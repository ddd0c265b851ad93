#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace cobfilt {

using degree_t = std::uint64_t;
using coeff_t = std::uint64_t;

namespace detail {

inline coeff_t checked_add(coeff_t a, coeff_t b)
{
    coeff_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw error(errc::overflow, "coefficient overflow in addition");
    return r;
}

inline coeff_t checked_mul(coeff_t a, coeff_t b)
{
    coeff_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw error(errc::overflow, "coefficient overflow in multiplication");
    return r;
}

} // namespace detail

/// Exact dimension counts in degrees 0..cap.
///
/// coeffs()[t] is the dimension of the degree-t piece of some graded vector
/// space over F_2. Every operation takes the cap explicitly; there is no
/// global precision. Arithmetic is checked and overflow throws errc::overflow.
class TruncatedSeries {
public:
    /// The zero series with the given cap.
    explicit TruncatedSeries(degree_t cap) : coeffs_(cap + 1, 0) {}

    explicit TruncatedSeries(std::vector<coeff_t> coeffs) : coeffs_(std::move(coeffs))
    {
        if (coeffs_.empty())
            throw error(errc::invalid_argument, "series needs at least one coefficient");
    }

    TruncatedSeries(std::initializer_list<coeff_t> coeffs)
        : TruncatedSeries(std::vector<coeff_t>(coeffs))
    {
    }

    /// The multiplicative unit 1 + 0t + ... + 0t^cap.
    static TruncatedSeries one(degree_t cap)
    {
        TruncatedSeries s(cap);
        s.coeffs_[0] = 1;
        return s;
    }

    degree_t cap() const noexcept { return coeffs_.size() - 1; }
    std::span<const coeff_t> coeffs() const noexcept { return coeffs_; }
    const std::vector<coeff_t>& vec() const noexcept { return coeffs_; }
    coeff_t operator[](degree_t t) const { return coeffs_.at(t); }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

    // In-place multiplication by 1/(1 - t^d).
    void mul_geometric(degree_t d)
    {
        if (d == 0)
            throw error(errc::invalid_argument, "geometric factor of degree 0 diverges");
        for (degree_t t = d; t <= cap(); ++t)
            coeffs_[t] = detail::checked_add(coeffs_[t], coeffs_[t - d]);
    }

    // In-place multiplication by 1 + t^d.
    void mul_binomial(degree_t d)
    {
        if (d == 0)
            throw error(errc::invalid_argument, "binomial factor of degree 0");
        if (d > cap())
            return;
        for (degree_t t = cap(); t >= d; --t)
            coeffs_[t] = detail::checked_add(coeffs_[t], coeffs_[t - d]);
    }

    std::string str() const
    {
        std::string s = "[";
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            if (k)
                s += ',';
            s += std::to_string(coeffs_[k]);
        }
        return s + "]";
    }

private:
    std::vector<coeff_t> coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s) { return os << s.str(); }

namespace detail {

inline void require_same_cap(const TruncatedSeries& a, const TruncatedSeries& b)
{
    if (a.cap() != b.cap())
        throw error(errc::cap_mismatch, "series caps differ: " + std::to_string(a.cap()) + " vs "
                                            + std::to_string(b.cap()));
}

} // namespace detail

/// Truncated convolution (tensor product of graded vector spaces).
inline TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b)
{
    detail::require_same_cap(a, b);
    const degree_t cap = a.cap();
    std::vector<coeff_t> out(cap + 1, 0);
    for (degree_t u = 0; u <= cap; ++u) {
        if (a[u] == 0)
            continue;
        for (degree_t v = 0; u + v <= cap; ++v)
            out[u + v] = detail::checked_add(out[u + v], detail::checked_mul(a[u], b[v]));
    }
    return TruncatedSeries(std::move(out));
}

/// The series q with mul(q, b) == a, computed degree by degree.
///
/// Requires b[0] == 1. Throws errc::not_divisible when some q[t] would be
/// negative, i.e. when a is not b times a series with natural coefficients.
inline TruncatedSeries exact_div(const TruncatedSeries& a, const TruncatedSeries& b)
{
    detail::require_same_cap(a, b);
    if (b[0] != 1)
        throw error(errc::invalid_divisor, "divisor must have constant term 1");
    const degree_t cap = a.cap();
    std::vector<coeff_t> q(cap + 1, 0);
    for (degree_t t = 0; t <= cap; ++t) {
        coeff_t known = 0;
        for (degree_t u = 0; u < t; ++u)
            if (q[u] != 0 && b[t - u] != 0)
                known = detail::checked_add(known, detail::checked_mul(q[u], b[t - u]));
        if (known > a[t])
            throw error(errc::not_divisible, "quotient coefficient in degree " + std::to_string(t)
                                                 + " would be negative");
        q[t] = a[t] - known;
    }
    return TruncatedSeries(std::move(q));
}

/// Series of the tensor product of exterior algebras on d, 2d, 4d, ...
///
/// This is the simple-system presentation of a polynomial algebra on one
/// generator of degree d, so the result equals 1/(1 - t^d) truncated. It is
/// built as a product of (1 + t^{d 2^a}) factors and never uses the
/// geometric-series path.
inline TruncatedSeries simple_system_series(degree_t d, degree_t cap)
{
    if (d == 0)
        throw error(errc::invalid_argument, "simple system degree must be positive");
    auto s = TruncatedSeries::one(cap);
    for (degree_t e = d; e <= cap; e *= 2) {
        s.mul_binomial(e);
        if (e > cap / 2)
            break;
    }
    return s;
}

} // namespace cobfilt
