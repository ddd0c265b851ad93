#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include <cobfilt/algebra_spec.hpp>
#include <cobfilt/series.hpp>

#include "oracles.hpp"

using namespace cobfilt;
using cobfilt::testing::convolve;
using cobfilt::testing::count_monomials;
using cobfilt::testing::polys;
using cobfilt::testing::random_coeffs;

namespace {

std::vector<coeff_t> v(const TruncatedSeries& s) { return s.vec(); }

errc code_of(auto&& f)
{
    try {
        f();
    } catch (const error& e) {
        return e.code();
    }
    ADD_FAILURE() << "expected cobfilt::error";
    return errc::parse_error;
}

} // namespace

TEST(SeriesOf, PolynomialOnDegreeTwo)
{
    EXPECT_EQ(v(series_of(AlgebraSpec::polynomial({2}), 6)), (std::vector<coeff_t>{1, 0, 1, 0, 1, 0, 1}));
}

TEST(SeriesOf, EmptySpecIsUnit)
{
    EXPECT_EQ(v(series_of(AlgebraSpec{}, 3)), (std::vector<coeff_t>{1, 0, 0, 0}));
}

TEST(SeriesOf, TwoPolynomialGenerators)
{
    EXPECT_EQ(v(series_of(AlgebraSpec::polynomial({2, 5}), 7)), (std::vector<coeff_t>{1, 0, 1, 0, 1, 1, 1, 1}));
}

TEST(SeriesOf, ExteriorThreeSeven)
{
    EXPECT_EQ(v(series_of(AlgebraSpec::exterior({3, 7}), 10)),
              (std::vector<coeff_t>{1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1}));
}

TEST(SeriesOf, TruncatedHeight)
{
    // F_2[x]/(x^4) with |x| = 2: basis 1, x, x^2, x^3.
    AlgebraSpec spec({Generator::truncated(2, 3)});
    EXPECT_EQ(v(series_of(spec, 9)), (std::vector<coeff_t>{1, 0, 1, 0, 1, 0, 1, 0, 0, 0}));
}

TEST(SeriesOf, ExteriorEqualsTruncatedHeightOne)
{
    const auto a = series_of(AlgebraSpec::exterior({2, 3, 5}), 20);
    const auto b = series_of(AlgebraSpec({Generator::truncated(2, 1), Generator::truncated(3, 1),
                                          Generator::truncated(5, 1)}),
                             20);
    EXPECT_EQ(a, b);
    EXPECT_EQ(Generator::exterior(4), Generator::truncated(4, 1));
}

TEST(SeriesOf, RejectsInvalidGenerators)
{
    EXPECT_EQ(code_of([] { AlgebraSpec::polynomial({0}); }), errc::invalid_spec);
    EXPECT_EQ(code_of([] { AlgebraSpec({Generator::truncated(3, 0)}); }), errc::invalid_spec);
}

TEST(SeriesOf, OverflowIsDetected)
{
    // 128 copies of a degree-1 polynomial generator: coefficient at 64 is C(191,64), far beyond 2^64.
    std::vector<degree_t> ones(128, 1);
    EXPECT_EQ(code_of([&] { series_of(AlgebraSpec::polynomial(ones), 64); }), errc::overflow);
}

TEST(SeriesOf, MatchesMonomialCountOnRandomSpecs)
{
    std::mt19937_64 rng(20261015);
    std::uniform_int_distribution<int> ngen(0, 5), deg(1, 9), kind(0, 2), height(1, 4);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Generator> gens;
        std::vector<cobfilt::testing::OracleGenerator> oracle;
        const int k = ngen(rng);
        for (int g = 0; g < k; ++g) {
            const degree_t d = deg(rng);
            switch (kind(rng)) {
            case 0:
                gens.push_back(Generator::polynomial(d));
                oracle.push_back({d, std::nullopt});
                break;
            case 1:
                gens.push_back(Generator::exterior(d));
                oracle.push_back({d, 1});
                break;
            default: {
                const auto h = static_cast<std::uint32_t>(height(rng));
                gens.push_back(Generator::truncated(d, h));
                oracle.push_back({d, h});
            }
            }
        }
        const auto s = series_of(AlgebraSpec(gens), 24);
        ASSERT_EQ(s.vec(), count_monomials(oracle, 24)) << "trial " << trial;
        ASSERT_EQ(s[0], 1u);
    }
}

TEST(SeriesOf, TensorFactorization)
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<degree_t> deg(1, 12);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<degree_t> left, right, all;
        for (int g = 0; g < 6; ++g) {
            const auto d = deg(rng);
            (g % 2 ? left : right).push_back(d);
            all.push_back(d);
        }
        EXPECT_EQ(series_of(AlgebraSpec::polynomial(all), 40),
                  mul(series_of(AlgebraSpec::polynomial(left), 40), series_of(AlgebraSpec::polynomial(right), 40)));
    }
}

TEST(SeriesOf, RuleGeneratorsEvaluatedBelowCap)
{
    AlgebraSpec spec({}, [](degree_t bound) {
        std::vector<Generator> g;
        for (degree_t d = 3; d <= bound; d += 3)
            g.push_back(Generator::polynomial(d));
        return g;
    });
    EXPECT_EQ(spec.degrees_up_to(10), (std::vector<degree_t>{3, 6, 9}));
    EXPECT_EQ(series_of(spec, 12).vec(), count_monomials(polys({3, 6, 9, 12}), 12));
}

TEST(Mul, Examples)
{
    EXPECT_EQ(v(mul(TruncatedSeries{1, 0, 1, 0, 1}, TruncatedSeries{1, 1, 1, 2, 2})),
              (std::vector<coeff_t>{1, 1, 2, 3, 4}));
    const TruncatedSeries x{3, 1, 4, 1, 5};
    EXPECT_EQ(mul(x, TruncatedSeries::one(4)), x);
    EXPECT_EQ(v(mul(TruncatedSeries{1, 1}, TruncatedSeries{1, 1})), (std::vector<coeff_t>{1, 2}));
}

TEST(Mul, CapMismatch)
{
    EXPECT_EQ(code_of([] { mul(TruncatedSeries{1, 1}, TruncatedSeries{1, 1, 1}); }), errc::cap_mismatch);
}

TEST(Mul, Overflow)
{
    const auto big = std::numeric_limits<coeff_t>::max() / 2 + 1;
    EXPECT_EQ(code_of([&] { mul(TruncatedSeries{big, 0}, TruncatedSeries{2, 0}); }), errc::overflow);
    EXPECT_EQ(code_of([&] { mul(TruncatedSeries{big, big}, TruncatedSeries{1, 1}); }), errc::overflow);
}

TEST(Mul, CommutativeAssociativeAgainstSchoolbook)
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t len = 1 + trial % 17;
        const auto a = random_coeffs(rng, len, 50), b = random_coeffs(rng, len, 50), c = random_coeffs(rng, len, 50);
        const TruncatedSeries sa(a), sb(b), sc(c);
        ASSERT_EQ(mul(sa, sb), mul(sb, sa));
        ASSERT_EQ(mul(mul(sa, sb), sc), mul(sa, mul(sb, sc)));
        ASSERT_EQ(mul(sa, sb).vec(), convolve(a, b));
    }
}

TEST(ExactDiv, Examples)
{
    EXPECT_EQ(v(exact_div(TruncatedSeries{1, 1, 2, 3, 4}, TruncatedSeries{1, 1, 1, 2, 2})),
              (std::vector<coeff_t>{1, 0, 1, 0, 1}));
    const TruncatedSeries b{1, 2, 0, 7};
    EXPECT_EQ(exact_div(b, b), TruncatedSeries::one(3));
    EXPECT_EQ(code_of([] { exact_div(TruncatedSeries{1, 0, 1}, TruncatedSeries{1, 1, 0}); }), errc::not_divisible);
}

TEST(ExactDiv, Preconditions)
{
    EXPECT_EQ(code_of([] { exact_div(TruncatedSeries{1, 0}, TruncatedSeries{2, 0}); }), errc::invalid_divisor);
    EXPECT_EQ(code_of([] { exact_div(TruncatedSeries{1, 0}, TruncatedSeries{0, 1}); }), errc::invalid_divisor);
    EXPECT_EQ(code_of([] { exact_div(TruncatedSeries{1, 0}, TruncatedSeries{1}); }), errc::cap_mismatch);
}

TEST(ExactDiv, RoundTrip)
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t len = 1 + trial % 20;
        const TruncatedSeries a(random_coeffs(rng, len, 30));
        auto bc = random_coeffs(rng, len, 30);
        bc[0] = 1;
        const TruncatedSeries b(bc);
        ASSERT_EQ(exact_div(mul(a, b), b), a);
    }
}

TEST(SimpleSystem, Examples)
{
    EXPECT_EQ(v(simple_system_series(2, 8)), (std::vector<coeff_t>{1, 0, 1, 0, 1, 0, 1, 0, 1}));
    EXPECT_EQ(v(simple_system_series(1, 4)), (std::vector<coeff_t>{1, 1, 1, 1, 1}));
    EXPECT_EQ(v(simple_system_series(5, 9)), (std::vector<coeff_t>{1, 0, 0, 0, 0, 1, 0, 0, 0, 0}));
    EXPECT_EQ(v(simple_system_series(3, 0)), (std::vector<coeff_t>{1}));
}

TEST(SimpleSystem, EqualsPolynomialSeries)
{
    for (degree_t d = 1; d <= 32; ++d)
        for (degree_t cap : {0u, 1u, 7u, 63u, 64u, 100u, 255u, 256u})
            ASSERT_EQ(simple_system_series(d, cap), series_of(AlgebraSpec::polynomial({d}), cap))
                << "d=" << d << " cap=" << cap;
}
