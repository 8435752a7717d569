#include <gtest/gtest.h>

#include <g2zeta/bernoulli_g2.hpp>
#include <g2zeta/errors.hpp>

using namespace g2zeta;

namespace
{
const RationalPair kZero{0, 0};
}

TEST(BernoulliG2, ConstantTermIsOne)
{
    EXPECT_EQ(expand_F_coefficients(kZero, {0, 0, 0, 0, 0, 0}), Rational(1));
    EXPECT_EQ(expand_F_coefficients(kZero, {0, 0, 0, 0, 0, 0}, Algorithm::common_denominator), Rational(1));
}

TEST(BernoulliG2, DegreeTwelveCoefficient)
{
    EXPECT_EQ(expand_F_coefficients(kZero, {2, 2, 2, 2, 2, 2}), parse_rational("23/1588824357120"));
}

TEST(BernoulliG2, WeightTwelveAndEighteen)
{
    EXPECT_EQ(zeta2_exact({2, 2, 2, 2, 2, 2}), PiValue(parse_rational("23/297904566960"), 12));
    EXPECT_EQ(zeta2_exact({2, 4, 4, 4, 2, 2}), PiValue(parse_rational("467/213955059990672000"), 18));
    EXPECT_EQ(zeta2_exact({4, 2, 2, 2, 4, 4}), PiValue(parse_rational("20771/106061802338575923840"), 18));
}

TEST(BernoulliG2, WittenVolumeConstant)
{
    EXPECT_EQ(witten_volume_constant(1), PiValue(Rational(14400) * parse_rational("23/297904566960"), 12));
    EXPECT_THROW(witten_volume_constant(0), DomainError);
}

TEST(BernoulliG2, RejectsInadmissibleTuples)
{
    EXPECT_THROW(zeta2_exact({1, 2, 2, 2, 1, 1}), DomainError);
    EXPECT_THROW(zeta2_exact({2, 2, 4, 2, 2, 2}), DomainError);
    EXPECT_THROW(zeta2_exact({0, 2, 2, 2, 0, 0}), DomainError);
    EXPECT_THROW(expand_F_coefficients(kZero, {-1, 0, 0, 0, 0, 0}), DomainError);
}

TEST(BernoulliG2, ExactValueOfOrbitTupleIsTwelveCopies)
{
    // S(k, 0) = 12 zeta_2(k) and the sign (2i)^w is real and positive for w = 0 mod 4.
    const PiValue s = S_exact({2, 2, 2, 2, 2, 2}, kZero);
    EXPECT_TRUE(s.coeff.is_real());
    EXPECT_EQ(s, PiValue(Rational(12) * parse_rational("23/297904566960"), 12));
}

TEST(BernoulliG2, AlgorithmsAgreeThroughDegreeEight)
{
    for (int d = 0; d <= 8; ++d) {
        EXPECT_EQ(bernoulli_layer(kZero, d, Algorithm::ordered_laurent), bernoulli_layer(kZero, d, Algorithm::common_denominator))
            << "degree " << d;
    }
}

TEST(BernoulliG2, OddDegreesVanishAtZero)
{
    for (int d : {1, 3, 5, 7}) {
        EXPECT_TRUE(bernoulli_layer(kZero, d, Algorithm::ordered_laurent).empty()) << d;
    }
    EXPECT_EQ(bernoulli_layer(kZero, 6, Algorithm::ordered_laurent).size(), 30u);
}

TEST(BernoulliG2, AlgorithmsAgreeAtTwistedY)
{
    const RationalPair y{make_rational(1, 3), make_rational(1, 4)};
    for (int d = 0; d <= 5; ++d) {
        EXPECT_EQ(bernoulli_layer(y, d, Algorithm::ordered_laurent), bernoulli_layer(y, d, Algorithm::common_denominator))
            << "degree " << d;
    }
}

TEST(BernoulliG2, IndependentOfExpansionOrdering)
{
    ExtractionOptions other;
    other.ordering = {5, 4, 3, 2, 1, 0};
    ExtractionOptions mixed;
    mixed.ordering = {2, 0, 5, 1, 4, 3};
    for (const IndexTuple k : {IndexTuple{2, 2, 2, 2, 2, 2}, IndexTuple{1, 0, 2, 0, 3, 0}, IndexTuple{0, 4, 0, 0, 2, 2}}) {
        const Rational ref = expand_F_coefficients(kZero, k);
        EXPECT_EQ(expand_F_coefficients(kZero, k, Algorithm::ordered_laurent, other), ref);
        EXPECT_EQ(expand_F_coefficients(kZero, k, Algorithm::ordered_laurent, mixed), ref);
    }
}

TEST(BernoulliG2, PrintedTableFailsToCancel)
{
    ExtractionOptions verbatim;
    verbatim.variant = TermTableVariant::verbatim;
    EXPECT_THROW(expand_F_coefficients(kZero, {2, 2, 2, 2, 2, 2}, Algorithm::ordered_laurent, verbatim), ConsistencyError);
    const auto r = laurent_cancellation_report(kZero, 4, 1, verbatim);
    EXPECT_GT(r.survivors, 0u);
}

TEST(BernoulliG2, CancellationThroughDegreeEight)
{
    const auto r = laurent_cancellation_report(kZero, 8);
    EXPECT_GT(r.negative_monomials_seen, 0u);
    EXPECT_EQ(r.survivors, 0u);
    const RationalPair y{make_rational(1, 2), make_rational(1, 5)};
    EXPECT_EQ(laurent_cancellation_report(y, 6).survivors, 0u);
}

TEST(BernoulliG2, CommonDenominatorUsesTwentyForms)
{
    CommonDenominatorExpander ex(build_term_table(kZero));
    EXPECT_EQ(ex.denominator_forms().size(), 20u);
}

TEST(BernoulliG2, ExactSumIsPeriodicInY)
{
    const IndexTuple k{1, 1, 2, 1, 1, 2};
    const RationalPair y{make_rational(1, 3), make_rational(1, 4)};
    const RationalPair y2{y[0] + 2, y[1] - 1};
    EXPECT_EQ(S_exact(k, y), S_exact(k, y2));
}
