#ifndef G2ZETA_GENERATING_FUNCTION_HPP
#define G2ZETA_GENERATING_FUNCTION_HPP

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <g2zeta/affine_expression.hpp>
#include <g2zeta/rational.hpp>
#include <g2zeta/root_system.hpp>
#include <g2zeta/series.hpp>

namespace g2zeta
{

// The generating function is
//
//   F(t, y) = t_1 ... t_6 * sum over 15 terms of
//       sign * scale * (sum_summands e^{g_a t_a + g_b t_b})
//       / ((e^{t_a} - 1)(e^{t_b} - 1) L_1 L_2 L_3 L_4),
//
// one term per pair (a, b) of "free" variables.  Each exponential offset is a
// fractional part "{x}" or "1-{x}" of an affine expression in y1, y2.  The
// table below is kept in the printed order and notation so that it can be
// proofread against the formula.

struct GeneratingTermSpec {
    int a;
    int b;
    int sign;
    const char *scale;
    std::vector<std::array<const char *, 2>> summands;
    std::array<const char *, 4> forms;
};

/// Which reading of the printed table to use.
enum class TermTableVariant {
    // The (3,5) term is printed with scale 1/2 but a single exponential; the
    // second coset representative is restored.  Every other term has 1/scale
    // summands.
    restored,
    // The table exactly as printed (the (3,5) term keeps one summand).
    verbatim,
};

inline const std::vector<GeneratingTermSpec> &generating_term_specs(TermTableVariant variant = TermTableVariant::restored)
{
    static const std::vector<GeneratingTermSpec> verbatim{
        {1, 2, +1, "1", {{"{y1}", "{y2}"}}, {"t1+t2-t3", "t1+2t2-t4", "t1+3t2-t5", "2t1+3t2-t6"}},
        {1, 3, +1, "1", {{"{y1-y2}", "{y2}"}}, {"t1+t2-t3", "t1-2t3+t4", "2t1-3t3+t5", "t1-3t3+t6"}},
        {1, 4, +1, "1/2",
         {{"{y1-y2/2+1/2}", "{y2/2+1/2}"}, {"{y1-y2/2}", "{y2/2}"}},
         {"t1/2+t2-t4/2", "t1/2-t3+t4/2", "t1/2-3t4/2+t5", "t1/2+3t4/2-t6"}},
        {1, 5, -1, "1/3",
         {{"{y1-y2/3+2/3}", "{y2/3+1/3}"}, {"{y1-y2/3+4/3}", "{y2/3+2/3}"}, {"{y1-y2/3}", "{y2/3}"}},
         {"t1/3-t4+2t5/3", "t1/3+t2-t5/3", "2t1/3-t3+t5/3", "t1+t5-t6"}},
        {1, 6, -1, "1/3",
         {{"{y1-2y2/3+1/3}", "{y2/3+1/3}"}, {"{y1-2y2/3+2/3}", "{y2/3+2/3}"}, {"{y1-2y2/3}", "{y2/3}"}},
         {"t1+t5-t6", "t1/3+t4-2t6/3", "2t1/3+t2-t6/3", "t1/3-t3+t6/3"}},
        {2, 3, -1, "1", {{"1-{y1-y2}", "{y1}"}}, {"t1+t2-t3", "t2+t3-t4", "2t2+t3-t5", "t2+2t3-t6"}},
        {2, 4, -1, "1", {{"1-{2y1-y2}", "{y1}"}}, {"t1+2t2-t4", "t2+t3-t4", "t2+t4-t5", "t2-2t4+t6"}},
        {2, 5, +1, "1", {{"1-{3y1-y2}", "{y1}"}}, {"t1+3t2-t5", "2t2+t3-t5", "t2+t4-t5", "3t2-2t5+t6"}},
        {2, 6, +1, "1/2",
         {{"{-3y1/2+y2+1/2}", "{y1/2+1/2}"}, {"1-{3y1/2-y2}", "{y1/2}"}},
         {"t1+3t2/2-t6/2", "t2/2+t3-t6/2", "t2/2-t4+t6/2", "3t2/2-t5+t6/2"}},
        {3, 4, -1, "1", {{"{2y1-y2}", "1-{y1-y2}"}}, {"t2+t3-t4", "t1-2t3+t4", "t3-2t4+t5", "t3+t4-t6"}},
        {3, 5, +1, "1/2",
         {{"{3y1/2-y2/2}", "1-{y1/2-y2/2}"}},
         {"t2+t3/2-t5/2", "t3/2-t4+t5/2", "t1-3t3/2+t5/2", "3t3/2+t5/2-t6"}},
        {3, 6, +1, "1", {{"{3y1-2y2}", "1-{y1-y2}"}}, {"3t3+t5-2t6", "t2+2t3-t6", "t3+t4-t6", "t1-3t3+t6"}},
        {4, 5, -1, "1", {{"{3y1-y2}", "1-{2y1-y2}"}}, {"t2+t4-t5", "t3-2t4+t5", "t1-3t4+2t5", "3t4-t5-t6"}},
        {4, 6, -1, "1", {{"1-{3y1-2y2}", "{2y1-y2}"}}, {"t1+3t4-2t6", "t3+t4-t6", "t2-2t4+t6", "3t4-t5-t6"}},
        {5, 6, +1, "1/3",
         {{"1-{y1-2y2/3}", "{y1-y2/3}"},
          {"{-y1+2y2/3+2/3}", "{y1-y2/3+2/3}"},
          {"{-y1+2y2/3+4/3}", "{y1-y2/3+4/3}"}},
         {"t1+t5-t6", "t3+t5/3-2t6/3", "t4-t5/3-t6/3", "t2-2t5/3+t6/3"}},
    };
    static const std::vector<GeneratingTermSpec> restored = [] {
        auto specs = verbatim;
        for (auto &spec : specs) {
            if (spec.a == 3 && spec.b == 5) {
                // The forms of this term have coroot determinant 2, so the
                // exponential sum runs over two coset representatives, the
                // second shifted by 1/2 in both coordinates.
                spec.summands.push_back({"{3y1/2-y2/2+1/2}", "1-{y1/2-y2/2+1/2}"});
            }
        }
        return specs;
    }();
    return variant == TermTableVariant::verbatim ? verbatim : restored;
}

/// "{x}" or "1-{x}" with x affine in y1, y2, evaluated exactly.
inline Rational evaluate_offset(std::string_view text, const RationalPair &y)
{
    bool one_minus = false;
    std::string_view body = text;
    if (body.substr(0, 2) == "1-") {
        one_minus = true;
        body.remove_prefix(2);
    }
    if (body.size() < 3 || body.front() != '{' || body.back() != '}') {
        throw std::invalid_argument("malformed offset '" + std::string(text) + "'");
    }
    const auto expr = AffineExpression::parse(body.substr(1, body.size() - 2));
    const Rational x = expr.evaluate([&](const std::string &name) -> Rational {
        if (name == "y1") {
            return y[0];
        }
        if (name == "y2") {
            return y[1];
        }
        throw std::invalid_argument("unknown symbol '" + name + "' in offset");
    });
    const Rational f = fractional_part(x);
    return one_minus ? Rational(1) - f : f;
}

/// One term specialized at a rational y (0-based variable indices).
struct GeneratingTerm {
    int a = 0;
    int b = 0;
    int sign = 1;
    Rational scale{1};
    std::vector<std::array<Rational, 2>> summands; // (g_a, g_b)
    std::array<LinearForm, 4> forms{};
    std::array<int, 4> own_variable{}; // the non-free variable each form carries
};

using TermTable = std::vector<GeneratingTerm>;

inline TermTable build_term_table(const RationalPair &y, TermTableVariant variant = TermTableVariant::restored)
{
    TermTable table;
    for (const auto &spec : generating_term_specs(variant)) {
        GeneratingTerm term;
        term.a = spec.a - 1;
        term.b = spec.b - 1;
        term.sign = spec.sign;
        term.scale = parse_rational(spec.scale);
        for (const auto &s : spec.summands) {
            term.summands.push_back({evaluate_offset(s[0], y), evaluate_offset(s[1], y)});
        }
        for (int f = 0; f < 4; ++f) {
            term.forms[f] = LinearForm::parse(spec.forms[f]);
            int own = -1;
            for (int v : term.forms[f].variables()) {
                if (v != term.a && v != term.b) {
                    if (own >= 0) {
                        throw std::logic_error("form " + std::string(spec.forms[f]) + " carries two non-free variables");
                    }
                    own = v;
                }
            }
            if (own < 0) {
                throw std::logic_error("form " + std::string(spec.forms[f]) + " carries no non-free variable");
            }
            term.own_variable[f] = own;
        }
        table.push_back(std::move(term));
    }
    return table;
}

} // namespace g2zeta

#endif
