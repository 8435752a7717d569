#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <cstring>

#include <g2zeta/bernoulli_g2.hpp>
#include <g2zeta/errors.hpp>
#include <g2zeta/numeric.hpp>

using namespace g2zeta;

namespace
{

Wide wide(const char *text)
{
    return strtoflt128(text, nullptr);
}

SummationConfig config(long limit, int precision)
{
    SummationConfig cfg;
    cfg.limit = limit;
    cfg.working_precision = precision;
    return cfg;
}

const std::array<double, 6> kTwos{2, 2, 2, 2, 2, 2};

} // namespace

TEST(RiemannZeta, AgainstReferenceDigits)
{
    // 40-digit references from an independent arbitrary-precision library.
    const std::vector<std::pair<Wide, const char *>> cases{
        {3, "1.202056903159594285399738161511449990765"},
        {5, "1.036927755143369926331365486457034168057"},
        {7, "1.0083492773819228268397975498497967596"},
        {2.5Q, "1.341487257250917179756769693348612136623"},
        {1.5Q, "2.612375348685488343348567567924071630571"},
    };
    for (const auto &[s, ref] : cases) {
        const NumericValue z = riemann_zeta_numeric(s);
        const Wide err = fabsq(z.value - wide(ref));
        EXPECT_LE(err, z.error_bound) << to_string(s, 5);
        EXPECT_LT(z.error_bound, 1e-30Q);
    }
    const NumericValue z2 = riemann_zeta_numeric(2);
    EXPECT_LE(fabsq(z2.value - M_PIq * M_PIq / 6), z2.error_bound);
    EXPECT_THROW(riemann_zeta_numeric(-1), DomainError);
}

TEST(AlternatingZeta, ValuesAndLimit)
{
    const NumericValue p1 = phi_numeric(1);
    EXPECT_LE(fabsq(p1.value + M_LN2q), p1.error_bound);
    const NumericValue p2 = phi_numeric(2);
    EXPECT_LE(fabsq(p2.value + M_PIq * M_PIq / 12), p2.error_bound + 1e-32Q);
    // phi(3) = -(3/4) zeta(3) against a direct alternating sum with averaged partial sums.
    long double direct = 0, previous = 0;
    const int terms = 200000;
    for (int n = 1; n <= terms; ++n) {
        previous = direct;
        direct += ((n % 2) ? -1.0L : 1.0L) / (static_cast<long double>(n) * n * n);
    }
    const long double averaged = (direct + previous) / 2;
    EXPECT_NEAR(static_cast<double>(phi_numeric(3).value), static_cast<double>(averaged), 1e-15);
}

TEST(ConvergenceGate, NamesTheFailedInequality)
{
    try {
        zeta2_numeric({0, 0, 0, 0, 0, 1});
        FAIL();
    } catch (const DomainError &e) {
        EXPECT_NE(std::string(e.what()).find("s1+s3+s4+s5+s6 > 1"), std::string::npos);
    }
    try {
        zeta2_numeric({1, 0, 0, 0, 0, 1});
        FAIL();
    } catch (const DomainError &e) {
        EXPECT_NE(std::string(e.what()).find("s2+s3+s4+s5+s6 > 1"), std::string::npos);
    }
    EXPECT_THROW(zeta2_numeric({-1, 2, 2, 2, 2, 2}), DomainError);
    EXPECT_THROW(zeta2_numeric({0.5, 0.5, 0.25, 0.25, 0.25, 0.25}), DomainError);
}

TEST(Config, Validation)
{
    EXPECT_THROW(zeta2_numeric(kTwos, config(5, 25)), DomainError);
    EXPECT_THROW(zeta2_numeric(kTwos, config(100, 40)), DomainError);
    EXPECT_THROW(zeta2_numeric(kTwos, config(100, 10)), DomainError);
}

TEST(DoubleSeries, ExactBridgeInEveryPrecision)
{
    const Wide exact = wide_from_mpf(to_mpf(zeta2_exact({2, 2, 2, 2, 2, 2})));
    for (const int precision : {15, 18, 25}) {
        const NumericValue v = zeta2_numeric(kTwos, config(1000, precision));
        EXPECT_LE(fabsq(v.value - exact), v.error_bound) << precision;
        EXPECT_LT(v.error_bound / exact, 1e-8Q) << precision;
    }
}

TEST(DoubleSeries, WeightEighteenAndTwentyFourBridge)
{
    for (const IndexTuple k : {IndexTuple{2, 4, 4, 4, 2, 2}, IndexTuple{4, 2, 2, 2, 4, 4}, IndexTuple{4, 4, 4, 4, 4, 4},
                               IndexTuple{2, 6, 6, 6, 2, 2}, IndexTuple{6, 2, 2, 2, 6, 6}}) {
        const Wide exact = wide_from_mpf(to_mpf(zeta2_exact(k)));
        std::array<double, 6> s{};
        for (int j = 0; j < 6; ++j) {
            s[j] = k[j];
        }
        const NumericValue v = zeta2_numeric(s, config(400, 18));
        EXPECT_LE(fabsq(v.value - exact), v.error_bound) << to_string(k);
    }
}

TEST(DoubleSeries, TailBoundIsSound)
{
    const SummationConfig small = config(500, 18), large = config(4000, 18);
    const NumericValue a = zeta2_numeric(kTwos, small), b = zeta2_numeric(kTwos, large);
    EXPECT_LE(fabsq(a.value - b.value), a.error_bound);
    const std::array<double, 6> slow{2, 1, 1, 1, 1, 1};
    const NumericValue c = zeta2_numeric(slow, config(200, 18)), d = zeta2_numeric(slow, large);
    EXPECT_LE(fabsq(c.value - d.value), c.error_bound);
    EXPECT_GT(detail::tail_bound(slow, 200), detail::tail_bound(slow, 4000));
}

TEST(DoubleSeries, TwistMatchesDirectSum)
{
    // Independent complex-arithmetic evaluation of the first 50^2 terms.
    const long N = 50;
    const RationalPair y{make_rational(1, 2), make_rational(1, 2)};
    std::complex<long double> direct = 0;
    const long double two_pi = 2 * 3.14159265358979323846264338327950288L;
    for (long m = 1; m <= N; ++m) {
        for (long n = 1; n <= N; ++n) {
            const long double den = std::pow((long double)m, 2) * std::pow((long double)n, 2) * std::pow((long double)(m + n), 2)
                                    * std::pow((long double)(m + 2 * n), 2) * std::pow((long double)(m + 3 * n), 2)
                                    * std::pow((long double)(2 * m + 3 * n), 2);
            direct += std::polar(1.0L / den, two_pi * (m * 0.5L + n * 0.5L));
        }
    }
    SummationConfig cfg = config(N, 18);
    cfg.tail_estimation = false;
    const NumericValue v = zeta2_numeric_twisted(kTwos, y, cfg);
    EXPECT_NEAR(static_cast<double>(v.value), static_cast<double>(direct.real()), 1e-19);
    EXPECT_NEAR(static_cast<double>(v.imag), static_cast<double>(direct.imag()), 1e-19);
    // At y = (1/2, 1/2) every phase is real up to the rounding of sin(pi).
    EXPECT_LT(fabsq(v.imag), 1e-24Q);
}

TEST(DoubleSeries, TwistedThirdsMatchDirectSum)
{
    const long N = 40;
    const RationalPair y{make_rational(1, 3), make_rational(-1, 4)};
    const std::array<double, 6> s{2, 1, 1, 1, 1, 1};
    std::complex<long double> direct = 0;
    const long double two_pi = 2 * 3.14159265358979323846264338327950288L;
    for (long m = 1; m <= N; ++m) {
        for (long n = 1; n <= N; ++n) {
            const long double den = (long double)m * m * n * (m + n) * (m + 2 * n) * (m + 3 * n) * (2 * m + 3 * n);
            direct += std::polar(1.0L / den, two_pi * (m / 3.0L - n / 4.0L));
        }
    }
    SummationConfig cfg = config(N, 18);
    cfg.tail_estimation = false;
    const NumericValue v = zeta2_numeric_twisted(s, y, cfg);
    EXPECT_NEAR(static_cast<double>(v.value), static_cast<double>(direct.real()), 1e-17);
    EXPECT_NEAR(static_cast<double>(v.imag), static_cast<double>(direct.imag()), 1e-17);
}

TEST(DoubleSeries, BitIdenticalReruns)
{
    for (const int precision : {15, 18, 25}) {
        const NumericValue a = zeta2_numeric({2, 1, 1, 1, 1, 1}, config(300, precision));
        const NumericValue b = zeta2_numeric({2, 1, 1, 1, 1, 1}, config(300, precision));
        EXPECT_EQ(std::memcmp(&a.value, &b.value, sizeof(Wide)), 0);
        EXPECT_EQ(std::memcmp(&a.error_bound, &b.error_bound, sizeof(Wide)), 0);
    }
}

TEST(WeylSum, MatchesExactAtGenericY)
{
    // Fixes which Weyl image of y accompanies the permuted arguments.
    const IndexTuple k{2, 2, 4, 2, 2, 2};
    const RationalPair y{make_rational(1, 3), make_rational(1, 4)};
    const PiValue e = S_exact(k, y);
    const Wide exact = wide_from_mpf(to_mpf(e));
    const NumericValue v = S_numeric(k, y, config(600, 18));
    EXPECT_LE(fabsq(v.value - exact), v.error_bound);
    EXPECT_LE(fabsq(v.imag), v.error_bound);
    const NumericValue w = S_numeric(k, y, config(600, 18), WeylOrientation::direct_on_y);
    EXPECT_GT(fabsq(w.value - exact), w.error_bound);
}

TEST(WeylSum, RejectsNonPositiveEntries)
{
    EXPECT_THROW(S_numeric({0, 2, 2, 2, 2, 2}, {Rational(0), Rational(0)}), DomainError);
}

TEST(Witten, SpecialValues)
{
    const NumericValue w2 = witten_numeric(2, config(1000, 18));
    const Wide exact2 = wide_from_mpf(to_mpf(witten_volume_constant(1)));
    EXPECT_LE(fabsq(w2.value - exact2), w2.error_bound);
    const NumericValue w4 = witten_numeric(4, config(400, 18));
    const Wide exact4 = wide_from_mpf(to_mpf(witten_volume_constant(2)));
    EXPECT_LE(fabsq(w4.value - exact4) / exact4, 1e-8Q);
    EXPECT_GT(witten_numeric(1.5, config(200, 15)).value, 0);
}
