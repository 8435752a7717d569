#include <gtest/gtest.h>

#include <set>

#include <g2zeta/generating_function.hpp>

using namespace g2zeta;

TEST(TermTable, FifteenPairsOfFreeVariables)
{
    const auto &specs = generating_term_specs();
    ASSERT_EQ(specs.size(), 15u);
    std::set<std::pair<int, int>> pairs;
    for (const auto &s : specs) {
        EXPECT_LT(s.a, s.b);
        pairs.insert({s.a, s.b});
    }
    EXPECT_EQ(pairs.size(), 15u);
}

TEST(TermTable, SummandCountIsInverseScale)
{
    for (const auto &s : generating_term_specs(TermTableVariant::restored)) {
        EXPECT_EQ(Rational(static_cast<long>(s.summands.size())) * parse_rational(s.scale), Rational(1))
            << "term (" << s.a << "," << s.b << ")";
    }
    int short_terms = 0;
    for (const auto &s : generating_term_specs(TermTableVariant::verbatim)) {
        if (Rational(static_cast<long>(s.summands.size())) * parse_rational(s.scale) != 1) {
            ++short_terms;
            EXPECT_EQ(s.a, 3);
            EXPECT_EQ(s.b, 5);
        }
    }
    EXPECT_EQ(short_terms, 1);
}

TEST(TermTable, EachFormCarriesOneNonFreeVariable)
{
    const RationalPair y{make_rational(1, 3), make_rational(2, 7)};
    for (const auto variant : {TermTableVariant::restored, TermTableVariant::verbatim}) {
        const TermTable t = build_term_table(y, variant);
        for (const auto &term : t) {
            std::set<int> own(term.own_variable.begin(), term.own_variable.end());
            EXPECT_EQ(own.size(), 4u);
            EXPECT_FALSE(own.count(term.a));
            EXPECT_FALSE(own.count(term.b));
        }
    }
}

TEST(TermTable, OffsetsLieInUnitInterval)
{
    for (const auto &y : {RationalPair{0, 0}, RationalPair{make_rational(1, 2), make_rational(1, 2)},
                          RationalPair{make_rational(-5, 3), make_rational(7, 4)}}) {
        for (const auto &term : build_term_table(y)) {
            for (const auto &g : term.summands) {
                for (const auto &x : g) {
                    EXPECT_GE(x, 0);
                    EXPECT_LE(x, 1);
                }
            }
        }
    }
}

TEST(Offsets, FractionalPartNotation)
{
    const RationalPair y{make_rational(1, 3), make_rational(3, 4)};
    EXPECT_EQ(evaluate_offset("{y1}", y), make_rational(1, 3));
    EXPECT_EQ(evaluate_offset("1-{y1-y2}", y), make_rational(5, 12));
    EXPECT_EQ(evaluate_offset("{3y1/2-y2/2+1/2}", y), make_rational(5, 8));
    EXPECT_EQ(evaluate_offset("1-{y1}", RationalPair{0, 0}), Rational(1));
    EXPECT_THROW(evaluate_offset("y1", y), std::invalid_argument);
    EXPECT_THROW(evaluate_offset("{z}", y), std::invalid_argument);
}

TEST(Offsets, PeriodicInY)
{
    const RationalPair y{make_rational(2, 5), make_rational(1, 7)};
    const RationalPair y_shift{y[0] + 1, y[1] - 2};
    const auto a = build_term_table(y), b = build_term_table(y_shift);
    // The coset representatives may come out permuted.
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::set<std::array<Rational, 2>> sa(a[i].summands.begin(), a[i].summands.end());
        std::set<std::array<Rational, 2>> sb(b[i].summands.begin(), b[i].summands.end());
        EXPECT_EQ(sa, sb) << "term " << i;
    }
}
