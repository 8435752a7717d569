// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <g2zeta/g2zeta.hpp>

using namespace g2zeta;

namespace
{

struct Outcome {
    bool pass = false;
    std::string detail;
};

int failures = 0;

void criterion(int number, const std::string &title, const std::function<Outcome()> &body)
{
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception &e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.1fs", seconds);
    std::cout << (out.pass ? "PASS" : "FAIL") << " criterion " << number << ": " << title << " [" << timing << "]";
    if (!out.detail.empty()) {
        std::cout << " -- " << out.detail;
    }
    std::cout << std::endl;
    if (!out.pass) {
        ++failures;
    }
}

Outcome exact_values(const std::vector<std::pair<IndexTuple, PiValue>> &cases)
{
    std::ostringstream detail;
    bool ok = true;
    for (const auto &[k, expected] : cases) {
        const PiValue got = zeta2_exact(k);
        if (!(got == expected)) {
            ok = false;
            detail << to_string(k) << " gave " << to_string(got.coeff.re) << " pi^" << got.pi_power << "; ";
        }
    }
    if (ok) {
        detail << cases.size() << " values exact";
    }
    return {ok, detail.str()};
}

PiValue pi_value(const char *coefficient, int power)
{
    return PiValue(parse_rational(coefficient), power);
}

Rational random_rational(std::mt19937 &rng)
{
    std::uniform_int_distribution<int> num(-20, 20), den(1, 12);
    return make_rational(num(rng), den(rng));
}

} // namespace

int main()
{
    criterion(1, "weight-12 exact value", [] {
        return exact_values({{{2, 2, 2, 2, 2, 2}, pi_value("23/297904566960", 12)}});
    });

    criterion(2, "weight-18 exact values", [] {
        return exact_values({{{2, 4, 4, 4, 2, 2}, pi_value("467/213955059990672000", 18)},
                             {{4, 2, 2, 2, 4, 4}, pi_value("20771/106061802338575923840", 18)}});
    });

    criterion(3, "weight-24 exact values", [] {
        return exact_values({{{4, 4, 4, 4, 4, 4}, pi_value("8165653/1445838676129559305994400000", 24)},
                             {{2, 6, 6, 6, 2, 2}, pi_value("91027/1449347623006311428400000", 24)},
                             {{6, 2, 2, 2, 6, 6}, pi_value("391420483/770242750118097151820324400000", 24)}});
    });

    criterion(4, "numeric sum at (2,2,2,2,2,2), N=4000, against the exact value", [] {
        const NumericValue v = zeta2_numeric({2, 2, 2, 2, 2, 2}, SummationConfig{});
        const Wide exact = wide_from_mpf(to_mpf(zeta2_exact({2, 2, 2, 2, 2, 2})));
        const Wide err = fabsq(v.value - exact);
        const Wide rel = err / exact;
        std::string d = "relative error " + to_string(rel, 3) + ", |error| " + to_string(err, 3) + " <= bound "
                        + to_string(v.error_bound, 3);
        return Outcome{rel <= 1e-8 && err <= v.error_bound, d};
    });

    criterion(5, "numeric sum at (2,1,1,1,1,1) against the zeta(7), zeta(2)zeta(5) closed form", [] {
        const NumericValue v = zeta2_numeric({2, 1, 1, 1, 1, 1}, SummationConfig{});
        const ZhaoValue z = zhao_value();
        const Wide diff = fabsq(v.value - z.decimal);
        const std::string digits = to_string(z.decimal, 12);
        const bool prefix = digits.rfind("9.95272345", 0) == 0;
        return Outcome{diff <= 1e-8 && prefix && z.zeta7_coefficient == make_rational(-109, 1296)
                           && z.zeta2_zeta5_coefficient == make_rational(1, 18),
                       "numeric " + to_string(v.value, 18) + ", closed form " + to_string(z.decimal, 18) + ", difference "
                           + to_string(diff, 3)};
    });

    criterion(6, "symbolic coefficients of the symmetric relation at p=q=r=u=v=1", [] {
        const auto c = collapsed_lhs_coefficients(build_I_tables(RelationParams{}));
        if (c.by_shift.size() != 2 || !c.by_shift.count(10) || !c.by_shift.count(8)) {
            return Outcome{false, "unexpected set of zeta arguments"};
        }
        const auto &c10 = c.by_shift.at(10);
        const auto &c8 = c.by_shift.at(8);
        // -5/1458 (2^{-s} + 5519/4) zeta(s+10) - 1/162 (2^{-s} - 466) zeta(2) zeta(s+8), zeta(2) = pi^2/6
        const Rational a = make_rational(-5, 1458), b = make_rational(-1, 162);
        const bool ok = c10.two_power == PiPolynomial(PiValue(a, 0)) && c10.constant == PiPolynomial(PiValue(a * make_rational(5519, 4), 0))
                        && c8.two_power == PiPolynomial(PiValue(b * make_rational(1, 6), 2))
                        && c8.constant == PiPolynomial(PiValue(b * Rational(-466) * make_rational(1, 6), 2));
        return Outcome{ok, ok ? "-5/1458, 5519/4, -1/162, 466 reproduced" : "coefficient mismatch"};
    });

    criterion(7, "functional relation residuals, six parameter vectors x four values of s", [] {
        SummationConfig cfg;
        cfg.limit = 4000;
        cfg.working_precision = 18;
        const std::vector<RelationParams> params{{1, 1, 1, 1, 1}, {2, 1, 1, 1, 1}, {1, 2, 1, 1, 1},
                                                 {1, 1, 2, 1, 1}, {1, 1, 1, 2, 1}, {1, 1, 1, 1, 2}};
        int passed = 0, total = 0;
        Wide worst = 0;
        std::string first_failure;
        for (const auto &p : params) {
            for (const double s : {2.0, 2.5, 3.0, 4.0}) {
                ++total;
                const RelationReport r = check_relation(p, s, cfg);
                worst = std::max(worst, r.relative_residual);
                if (r.pass && r.relative_residual <= 1e-6) {
                    ++passed;
                } else if (first_failure.empty()) {
                    first_failure = "; first failure at (" + std::to_string(p.p) + std::to_string(p.q) + std::to_string(p.r)
                                    + std::to_string(p.u) + std::to_string(p.v) + ") s=" + std::to_string(s);
                }
            }
        }
        return Outcome{passed == total, std::to_string(passed) + "/" + std::to_string(total) + " pass, worst relative residual "
                                            + to_string(worst, 3) + first_failure};
    });

    criterion(8, "Weyl-signed numeric sum at (2,2,4,2,2,2), y=0, against the exact value", [] {
        const IndexTuple k{2, 2, 4, 2, 2, 2};
        const NumericValue v = S_numeric(k, {Rational(0), Rational(0)}, SummationConfig{});
        const PiValue e = S_exact(k, {Rational(0), Rational(0)});
        const Wide exact = wide_from_mpf(to_mpf(e));
        const Wide err = fabsq(v.value - exact);
        return Outcome{err <= v.error_bound && fabsq(v.imag) <= v.error_bound && e.coeff.is_real(),
                       "exact " + to_string(e.coeff.re) + " pi^" + std::to_string(e.pi_power) + ", |error| " + to_string(err, 3)
                           + " <= bound " + to_string(v.error_bound, 3)};
    });

    criterion(9, "two expansion algorithms agree on every P(k,0) with |k| <= 10", [] {
        const RationalPair y{0, 0};
        std::size_t nonzero = 0;
        for (int d = 0; d <= 10; ++d) {
            const auto a = bernoulli_layer(y, d, Algorithm::ordered_laurent);
            const auto b = bernoulli_layer(y, d, Algorithm::common_denominator);
            if (a != b) {
                return Outcome{false, "layers differ at degree " + std::to_string(d)};
            }
            nonzero += a.size();
        }
        return Outcome{true, "degrees 0..10 identical, " + std::to_string(nonzero) + " nonzero coefficients"};
    });

    criterion(10, "negative-exponent monomials cancel through total degree 12", [] {
        const CancellationReport r = laurent_cancellation_report({Rational(0), Rational(0)}, 12);
        std::string d = std::to_string(r.negative_monomials_seen) + " negative monomials in the separate terms, "
                        + std::to_string(r.survivors) + " survive the sum";
        if (r.first_survivor) {
            d += ", first " + to_string(*r.first_survivor);
        }
        return Outcome{r.survivors == 0 && r.negative_monomials_seen > 0, d};
    });

    criterion(11, "convolution identities of phi and zeta at even arguments on random sequences", [] {
        std::mt19937 rng(20240611);
        int ok1 = 0, ok2 = 0;
        for (int trial = 0; trial < 100; ++trial) {
            const int a = std::uniform_int_distribution<int>(1, 9)(rng);
            FiniteSequence f, g;
            for (int n = 0; n <= a; ++n) {
                f[n] = random_rational(rng);
                g[n] = random_rational(rng);
            }
            ok1 += check_phi_convolution_identities(a, f, g).both() ? 1 : 0;
            const int h_max = std::uniform_int_distribution<int>(0, 6)(rng);
            FiniteSequence R;
            for (int h = 0; h <= 4; ++h) {
                R[h] = random_rational(rng);
            }
            ok2 += check_even_zeta_transform_identities(h_max, R).both() ? 1 : 0;
        }
        return Outcome{ok1 == 100 && ok2 == 100,
                       "phi convolutions " + std::to_string(ok1) + "/100, even zeta transforms " + std::to_string(ok2) + "/100"};
    });

    criterion(12, "singular locus classification on 20 rational tuples", [] {
        struct Case {
            std::array<const char *, 6> s;
            std::vector<std::pair<int, int>> hits; // (family, l); l = -1 for the third family
        };
        const std::vector<Case> table{
            {{"0", "0", "0", "0", "0", "1"}, {{1, 0}, {2, 0}}},
            {{"2", "2", "2", "2", "2", "2"}, {}},
            {{"1", "1", "0", "0", "0", "0"}, {{1, 0}, {2, 0}, {3, -1}}},
            {{"1", "5", "0", "0", "0", "0"}, {{1, 0}}},
            {{"5", "1", "0", "0", "0", "0"}, {{2, 0}}},
            {{"1/2", "3/2", "0", "0", "0", "0"}, {{3, -1}}},
            {{"-3", "-3", "0", "0", "0", "0"}, {{1, 4}, {2, 4}}},
            {{"0", "0", "-1", "0", "0", "0"}, {{1, 2}, {2, 2}}},
            {{"1/3", "1/3", "1/3", "0", "0", "0"}, {}},
            {{"1/2", "1/2", "1/2", "0", "0", "0"}, {{1, 0}, {2, 0}}},
            {{"3", "-1", "-1", "0", "0", "0"}, {{2, 3}}},
            {{"-1", "3", "-1", "0", "0", "0"}, {{1, 3}}},
            {{"1", "1", "1/2", "-1/2", "0", "0"}, {{1, 0}, {2, 0}, {3, -1}}},
            {{"1", "1", "1", "1", "1", "1"}, {}},
            {{"0", "2", "0", "0", "0", "0"}, {{1, 1}, {3, -1}}},
            {{"2", "0", "0", "0", "0", "0"}, {{2, 1}, {3, -1}}},
            {{"7/3", "-1/3", "0", "0", "0", "0"}, {{3, -1}}},
            {{"0", "0", "0", "0", "0", "-5/2"}, {}},
            {{"-2", "1/2", "0", "0", "0", "0"}, {{1, 3}}},
            {{"1", "1", "1", "1", "-2", "-1"}, {{1, 1}, {2, 1}}},
        };
        int correct = 0;
        std::string first_wrong;
        for (std::size_t i = 0; i < table.size(); ++i) {
            std::array<Rational, 6> s;
            for (int j = 0; j < 6; ++j) {
                s[j] = parse_rational(table[i].s[j]);
            }
            std::vector<std::pair<int, int>> got;
            for (const auto &h : singular_locus_check(s)) {
                got.emplace_back(h.family, h.l ? static_cast<int>(h.l->get_si()) : -1);
            }
            if (got == table[i].hits) {
                ++correct;
            } else if (first_wrong.empty()) {
                first_wrong = ", first mismatch at row " + std::to_string(i + 1);
            }
        }
        return Outcome{correct == static_cast<int>(table.size()),
                       std::to_string(correct) + "/" + std::to_string(table.size()) + " classified" + first_wrong};
    });

    std::cout << (failures == 0 ? "ALL CRITERIA PASS" : std::to_string(failures) + " criteria FAIL") << std::endl;
    return failures == 0 ? 0 : 1;
}
