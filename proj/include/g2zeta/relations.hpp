#ifndef G2ZETA_RELATIONS_HPP
#define G2ZETA_RELATIONS_HPP

#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <g2zeta/affine_expression.hpp>
#include <g2zeta/bernoulli.hpp>
#include <g2zeta/errors.hpp>
#include <g2zeta/numeric.hpp>
#include <g2zeta/pi_value.hpp>
#include <g2zeta/rational.hpp>

namespace g2zeta
{

struct RelationParams {
    int p = 1, q = 1, r = 1, u = 1, v = 1;

    int weight() const
    {
        return 2 * (p + q + r + u + v);
    }
    int value_of(const std::string &name) const
    {
        if (name == "p") return p;
        if (name == "q") return q;
        if (name == "r") return r;
        if (name == "u") return u;
        if (name == "v") return v;
        throw std::invalid_argument("unknown relation parameter " + name);
    }
    void validate() const
    {
        if (p < 1 || q < 1 || r < 1 || u < 1 || v < 1) {
            throw DomainError("relation parameters p, q, r, u, v must be positive integers");
        }
    }
};

// How the Riemann-zeta part of a row enters, with x = s + W0 - 2k:
//   zeta:       zeta(x)
//   zeta_plus:  zeta(x) + phi(x) = 2^{1-x} zeta(x)
//   zeta_minus: zeta(x) - phi(x) = (2 - 2^{1-x}) zeta(x)
enum class ZetaKind { zeta, zeta_plus_phi, zeta_minus_phi };

inline std::string to_string(ZetaKind k)
{
    switch (k) {
        case ZetaKind::zeta:
            return "zeta";
        case ZetaKind::zeta_plus_phi:
            return "zeta+phi";
        default:
            return "zeta-phi";
    }
}

/// Switches between the printed coefficient displays and corrected readings
/// of single bounds/exponents that look misprinted.  All false = as printed.
struct RelationVariant {
    bool i2_first_omega_bound = false;  // omega <= 2p-1-rho instead of 2p-2k-rho
    bool i4_first_binomial = false;     // binom(..., 2p-1) instead of binom(..., 2q-1)
    bool i5_third_rho_bound = false;    // rho <= 2r-1-sigma instead of 2p-1-sigma
    bool i6_three_power = false;        // 3^{-2v+2k-sigma-1} instead of 3^{-2v-sigma} (second and third blocks)

    friend bool operator==(const RelationVariant &a, const RelationVariant &b)
    {
        return a.i2_first_omega_bound == b.i2_first_omega_bound && a.i4_first_binomial == b.i4_first_binomial
               && a.i5_third_rho_bound == b.i5_third_rho_bound && a.i6_three_power == b.i6_three_power;
    }
};

/// One block of one I_j: sign * 2 * sum_{k=0}^{outer} w_k zeta(2k) * (nested sum) * Z(s + W0 - 2k).
struct RelationBlockSpec {
    int sign;
    ZetaKind kind;
    const char *outer;
    const char *sigma_max;
    const char *rho_max;
    const char *omega_max;
    std::vector<std::array<const char *, 2>> binomials; // (top, bottom)
    const char *sign_exponent;                          // (-1)^{...}
    const char *two_exponent;
    const char *three_exponent;
};

struct RelationSpec {
    int index; // 1..8
    std::array<RelationBlockSpec, 3> blocks;
};

namespace detail
{
inline RelationSpec make_relation(int index, int sign1, int sign23, RelationBlockSpec first, RelationBlockSpec later)
{
    first.sign = sign1;
    first.kind = ZetaKind::zeta;
    RelationBlockSpec plus = later;
    plus.sign = sign23;
    plus.kind = ZetaKind::zeta_plus_phi;
    RelationBlockSpec minus = later;
    minus.sign = sign23;
    minus.kind = ZetaKind::zeta_minus_phi;
    return {index, {first, plus, minus}};
}

// Helper so that the table below reads like the display: outer limit, the
// three nested upper bounds, binomials, then (-1), 2 and 3 exponents.
inline RelationBlockSpec block(const char *outer, const char *sigma_max, const char *rho_max, const char *omega_max,
                               std::vector<std::array<const char *, 2>> binomials, const char *sign_exponent, const char *two,
                               const char *three)
{
    return {0, ZetaKind::zeta, outer, sigma_max, rho_max, omega_max, std::move(binomials), sign_exponent, two, three};
}
} // namespace detail

inline std::vector<RelationSpec> relation_specs(const RelationVariant &variant = {})
{
    using detail::block;
    using detail::make_relation;
    std::vector<RelationSpec> specs;

    specs.push_back(make_relation(
        1, -1, -1,
        block("p", "2p-2k", "2p-2k-sigma", "2p-2k-sigma-rho",
              {{"sigma+2v-1", "sigma"}, {"rho+2u-1", "rho"}, {"omega+2r-1", "omega"}, {"2p+2q-1-2k-sigma-rho-omega", "2q-1"}}, "0",
              "sigma-2r-omega", "-2u-2v-sigma-rho"),
        block("v", "2p-1", "2p-1-sigma", "2p-1-sigma-rho",
              {{"sigma+2v-2k", "sigma"}, {"rho+2u-1", "rho"}, {"omega+2r-1", "omega"}, {"2p+2q-2-sigma-rho-omega", "2q-1"}}, "0",
              "sigma-2r-omega", "-2u-2v+2k-sigma-rho-1")));

    specs.push_back(make_relation(
        2, -1, -1,
        block("u", "2u-2k", "2p-1", variant.i2_first_omega_bound ? "2p-1-rho" : "2p-2k-rho",
              {{"sigma+2v-1", "sigma"}, {"rho+2u-2k-sigma", "rho"}, {"omega+2r-1", "omega"}, {"2p+2q-2-rho-omega", "2q-1"}}, "0",
              "sigma-2r-omega", "-2u-2v+2k-rho-1"),
        block("v", "2u-1", "2p-1", "2p-1-rho",
              {{"sigma+2v-2k", "sigma"}, {"rho+2u-1-sigma", "rho"}, {"omega+2r-1", "omega"}, {"2p+2q-2-rho-omega", "2q-1"}}, "0",
              "sigma-2r-omega", "-2u-2v+2k-rho-1")));

    specs.push_back(make_relation(
        3, -1, +1,
        block("q", "2q-2k", "2q-2k-sigma", "2q-2k-sigma-rho",
              {{"sigma+2v-1", "sigma"}, {"rho+2u-1", "rho"}, {"omega+2r-1", "omega"}, {"2p+2q-1-2k-sigma-rho-omega", "2p-1"}},
              "sigma+rho+omega", "sigma-2u-rho", "0"),
        block("v", "2q-1", "2q-1-sigma", "2q-1-sigma-rho",
              {{"sigma+2v-2k", "sigma"}, {"rho+2u-1", "rho"}, {"omega+2r-1", "omega"}, {"2p+2q-2-sigma-rho-omega", "2p-1"}},
              "sigma+rho+omega", "sigma-2u-rho", "0")));

    specs.push_back(make_relation(
        4, +1, +1,
        block("u", "2u-2k", "2q-1", "2q-1-rho",
              {{"sigma+2v-1", "sigma"},
               {"rho+2u-2k-sigma", "rho"},
               {"omega+2r-1", "omega"},
               {"2p+2q-2-rho-omega", variant.i4_first_binomial ? "2p-1" : "2q-1"}},
              "rho+omega", "-2u+2k+2sigma-rho-1", "-2v-sigma"),
        block("v", "2u-1", "2q-1", "2q-1-rho",
              {{"sigma+2v-2k", "sigma"}, {"rho+2u-1-sigma", "rho"}, {"omega+2r-1", "omega"}, {"2p+2q-2-rho-omega", "2p-1"}},
              "rho+omega", "-2u+2sigma-rho", "-2v+2k-sigma-1")));

    {
        RelationSpec i5 = make_relation(
            5, -1, -1,
            block("r", "2r-2k", "2r-2k-sigma", "2p-1",
                  {{"sigma+2v-1", "sigma"}, {"rho+2u-1", "rho"}, {"omega+2r-2k-sigma-rho", "omega"}, {"2p+2q-2-omega", "2q-1"}},
                  "rho", "-2r+2k+2sigma+rho-omega-1", "0"),
            block("v", "2r-1", "2r-1-sigma", "2p-1",
                  {{"sigma+2v-2k", "sigma"}, {"rho+2u-1", "rho"}, {"omega+2r-1-sigma-rho", "omega"}, {"2p+2q-2-omega", "2q-1"}},
                  "rho", "-2r+2sigma+rho-omega", "0"));
        i5.blocks[2].rho_max = variant.i5_third_rho_bound ? "2r-1-sigma" : "2p-1-sigma";
        specs.push_back(i5);
    }

    specs.push_back(make_relation(
        6, +1, +1,
        block("u", "2u-2k", "2r-1", "2p-1",
              {{"sigma+2v-1", "sigma"}, {"rho+2u-2k-sigma", "rho"}, {"omega+2r-1-rho", "omega"}, {"2p+2q-2-omega", "2q-1"}}, "rho",
              "-2r+sigma+rho-omega", "-2v-sigma"),
        block("v", "2u-1", "2r-1", "2p-1",
              {{"sigma+2v-2k", "sigma"}, {"rho+2u-1-sigma", "rho"}, {"omega+2r-1-rho", "omega"}, {"2p+2q-2-omega", "2q-1"}}, "rho",
              "-2r+sigma+rho-omega", variant.i6_three_power ? "-2v+2k-sigma-1" : "-2v-sigma")));

    specs.push_back(make_relation(
        7, +1, +1,
        block("r", "2r-2k", "2r-2k-sigma", "2q-1",
              {{"sigma+2v-1", "sigma"}, {"rho+2u-1", "rho"}, {"omega+2r-2k-sigma-rho", "omega"}, {"2p+2q-2-omega", "2p-1"}},
              "rho+omega", "sigma", "0"),
        block("v", "2r-1", "2r-1-sigma", "2q-1",
              {{"sigma+2v-2k", "sigma"}, {"rho+2u-1", "rho"}, {"omega+2r-1-sigma-rho", "omega"}, {"2p+2q-2-omega", "2p-1"}},
              "rho+omega", "sigma", "0")));

    specs.push_back(make_relation(
        8, -1, -1,
        block("u", "2u-2k", "2r-1", "2q-1",
              {{"sigma+2v-1", "sigma"}, {"rho+2u-2k-sigma", "rho"}, {"omega+2r-1-rho", "omega"}, {"2p+2q-2-omega", "2p-1"}},
              "rho+omega", "sigma", "-2v-sigma"),
        block("v", "2u-1", "2r-1", "2q-1",
              {{"sigma+2v-2k", "sigma"}, {"rho+2u-1-sigma", "rho"}, {"omega+2r-1-rho", "omega"}, {"2p+2q-2-omega", "2p-1"}},
              "rho+omega", "sigma", "-2v+2k-sigma-1")));

    return specs;
}

/// All four corrections.  Each is needed for the relation to hold
/// numerically at some parameter set; the printed reading fails.
inline RelationVariant pinned_relation_variant()
{
    return RelationVariant{true, true, true, true};
}

struct ITermRow {
    int relation = 0; // j of I_j
    int block = 0;    // 1..3
    int k = 0;
    ZetaKind kind = ZetaKind::zeta;
    Rational coeff{0}; // includes the sign, the factor 2 and the 2^{-2k} weights
    int shift = 0;     // W0 - 2k: the row multiplies Z(s + shift)

    /// coeff * zeta(2k) as an exact value.
    PiValue weight() const
    {
        return coeff * zeta_even_exact(2 * k);
    }
};

struct ITermTable {
    int weight = 0;
    std::vector<ITermRow> rows;
};

namespace detail
{
struct ParsedBlock {
    AffineExpression outer, sigma_max, rho_max, omega_max;
    std::vector<std::array<AffineExpression, 2>> binomials;
    AffineExpression sign_exponent, two_exponent, three_exponent;
};

inline ParsedBlock parse_block(const RelationBlockSpec &b)
{
    ParsedBlock out{AffineExpression::parse(b.outer),         AffineExpression::parse(b.sigma_max),
                    AffineExpression::parse(b.rho_max),       AffineExpression::parse(b.omega_max),
                    {},                                       AffineExpression::parse(b.sign_exponent),
                    AffineExpression::parse(b.two_exponent), AffineExpression::parse(b.three_exponent)};
    for (const auto &bin : b.binomials) {
        out.binomials.push_back({AffineExpression::parse(bin[0]), AffineExpression::parse(bin[1])});
    }
    return out;
}

inline long to_long(const Rational &x)
{
    if (!is_integer(x)) {
        throw std::logic_error("non-integral value in a relation coefficient expression");
    }
    return x.get_num().get_si();
}

// The nested sum over sigma, rho, omega for one k.
inline Rational nested_sum(const ParsedBlock &b, const RelationParams &params, int k)
{
    std::map<std::string, long> env;
    auto lookup = [&](const std::string &name) -> Rational {
        auto it = env.find(name);
        if (it != env.end()) {
            return Rational(it->second);
        }
        return Rational(params.value_of(name));
    };
    env["k"] = k;
    Rational total(0);
    const long smax = to_long(b.sigma_max.evaluate(lookup));
    for (long sigma = 0; sigma <= smax; ++sigma) {
        env["sigma"] = sigma;
        env.erase("rho");
        env.erase("omega");
        const long rmax = to_long(b.rho_max.evaluate(lookup));
        for (long rho = 0; rho <= rmax; ++rho) {
            env["rho"] = rho;
            env.erase("omega");
            const long omax = to_long(b.omega_max.evaluate(lookup));
            for (long omega = 0; omega <= omax; ++omega) {
                env["omega"] = omega;
                Rational term(1);
                for (const auto &bin : b.binomials) {
                    term *= binomial(bin[0].evaluate(lookup), to_long(bin[1].evaluate(lookup)));
                    if (term == 0) {
                        break;
                    }
                }
                if (term == 0) {
                    continue;
                }
                if (to_long(b.sign_exponent.evaluate(lookup)) % 2 != 0) {
                    term = -term;
                }
                term *= pow(Rational(2), to_long(b.two_exponent.evaluate(lookup)));
                term *= pow(Rational(3), to_long(b.three_exponent.evaluate(lookup)));
                total += term;
            }
        }
    }
    return total;
}
} // namespace detail

/// Every (I_j, block, k) coefficient evaluated exactly; zero rows are dropped.
inline ITermTable build_I_tables(const RelationParams &params, const RelationVariant &variant = pinned_relation_variant())
{
    params.validate();
    ITermTable table;
    table.weight = params.weight();
    for (const auto &spec : relation_specs(variant)) {
        for (int bi = 0; bi < 3; ++bi) {
            const RelationBlockSpec &b = spec.blocks[bi];
            const detail::ParsedBlock parsed = detail::parse_block(b);
            const long kmax = detail::to_long(parsed.outer.evaluate([&](const std::string &n) { return Rational(params.value_of(n)); }));
            for (int k = 0; k <= kmax; ++k) {
                Rational c = detail::nested_sum(parsed, params, k) * (2 * b.sign);
                if (b.kind == ZetaKind::zeta_plus_phi) {
                    c *= pow(Rational(2), -2 * k);
                } else if (b.kind == ZetaKind::zeta_minus_phi) {
                    c *= Rational(1) - pow(Rational(2), -2 * k);
                }
                if (c == 0) {
                    continue;
                }
                table.rows.push_back({spec.index, bi + 1, k, b.kind, c, table.weight - 2 * k});
            }
        }
    }
    return table;
}

/// Slot of "s" and the even entries of each of the six zeta_2 arguments.
struct SlotTuple {
    int s_slot = 0;                 // 0-based index carrying s
    std::array<int, 6> entries{};   // entry at s_slot is ignored

    std::array<double, 6> at(double s) const
    {
        std::array<double, 6> out{};
        for (int j = 0; j < 6; ++j) {
            out[j] = (j == s_slot) ? s : entries[j];
        }
        return out;
    }
    friend bool operator<(const SlotTuple &a, const SlotTuple &b)
    {
        return a.s_slot != b.s_slot ? a.s_slot < b.s_slot : a.entries < b.entries;
    }
    friend bool operator==(const SlotTuple &a, const SlotTuple &b)
    {
        return a.s_slot == b.s_slot && a.entries == b.entries;
    }
};

inline std::vector<SlotTuple> lhs_zeta_tuples(const RelationParams &x)
{
    const int p = 2 * x.p, q = 2 * x.q, r = 2 * x.r, u = 2 * x.u, v = 2 * x.v;
    return {
        {1, {p, 0, q, r, u, v}}, {2, {p, q, 0, r, v, u}}, {2, {u, r, 0, q, v, p}},
        {1, {u, 0, r, q, p, v}}, {3, {v, r, q, 0, u, p}}, {3, {v, q, r, 0, p, u}},
    };
}

inline std::string to_string(const SlotTuple &t)
{
    std::string out = "(";
    for (int j = 0; j < 6; ++j) {
        out += (j ? "," : "");
        out += (j == t.s_slot) ? std::string("s") : std::to_string(t.entries[j]);
    }
    return out + ")";
}

struct RelationTermValue {
    std::string label;
    Wide value = 0;
    Wide error_bound = 0;
};

struct RelationReport {
    RelationParams params;
    double s = 0;
    std::vector<SlotTuple> six_tuples;
    std::vector<RelationTermValue> tuple_values; // one per tuple, display order
    std::array<Wide, 8> i_values{};
    Wide residual = 0;
    Wide tolerance = 0;
    Wide largest_term = 0;
    Wide relative_residual = 0;
    bool pass = false;
};

/// Hyperplane families on which the continued series may be singular.
struct SingularHit {
    int family = 0;       // 1, 2 or 3
    std::optional<Integer> l; // families 1 and 2: the hyperplane parameter l >= 0
};

inline std::vector<SingularHit> singular_locus_check(const std::array<Rational, 6> &s)
{
    std::vector<SingularHit> hits;
    const Rational tail = s[2] + s[3] + s[4] + s[5];
    for (int family = 1; family <= 2; ++family) {
        const Rational sum = s[family - 1] + tail;
        if (is_integer(sum) && sum <= 1) {
            hits.push_back({family, Integer(1 - sum)});
        }
    }
    if (s[0] + s[1] + tail == 2) {
        hits.push_back({3, std::nullopt});
    }
    return hits;
}

namespace detail
{
inline Wide row_factor(ZetaKind kind, const NumericValue &z, Wide x, Wide &error)
{
    switch (kind) {
        case ZetaKind::zeta:
            error = z.error_bound;
            return z.value;
        case ZetaKind::zeta_plus_phi: {
            const Wide f = powq(2, 1 - x);
            error = f * z.error_bound + 4 * FLT128_EPSILON * fabsq(f * z.value);
            return f * z.value;
        }
        default: {
            const Wide f = 2 - powq(2, 1 - x);
            error = f * z.error_bound + 4 * FLT128_EPSILON * fabsq(f * z.value);
            return f * z.value;
        }
    }
}

inline constexpr double kPoleDistance = 1e-6;
} // namespace detail

/// Refuses arguments on or next to a singularity of either side.
inline void check_relation_singularities(const RelationParams &params, double s, const ITermTable &table)
{
    for (const auto &row : table.rows) {
        const double x = s + row.shift;
        if (std::fabs(x - 1) < detail::kPoleDistance) {
            throw SingularArgumentError("zeta pole: row I" + std::to_string(row.relation) + " block " + std::to_string(row.block)
                                        + " k=" + std::to_string(row.k) + " evaluates " + to_string(row.kind) + " at s+"
                                        + std::to_string(row.shift) + " = 1");
        }
    }
    for (const auto &t : lhs_zeta_tuples(params)) {
        const auto a = t.at(s);
        const double c = a[2] + a[3] + a[4] + a[5];
        for (const double sum : {a[0] + c, a[1] + c}) {
            const double l = 1 - sum;
            if (l > -detail::kPoleDistance && std::fabs(l - std::round(l)) < detail::kPoleDistance) {
                throw SingularArgumentError("argument tuple " + to_string(t) + " lies on a singular hyperplane (l = "
                                            + std::to_string(static_cast<long>(std::round(l))) + ")");
            }
        }
        if (std::fabs(a[0] + a[1] + c - 2) < detail::kPoleDistance) {
            throw SingularArgumentError("argument tuple " + to_string(t) + " lies on the hyperplane of total weight 2");
        }
    }
}

/// Numeric check of  sum(six zeta_2) + I_1 + ... + I_8 = 0  at real s > 1.
inline RelationReport check_relation(const RelationParams &params, double s, const SummationConfig &cfg = {},
                                     const RelationVariant &variant = pinned_relation_variant())
{
    params.validate();
    const ITermTable table = build_I_tables(params, variant);
    check_relation_singularities(params, s, table);
    if (!(s > 1)) {
        throw DomainError("relation check needs real s > 1 for the double series to converge");
    }
    RelationReport report;
    report.params = params;
    report.s = s;
    report.six_tuples = lhs_zeta_tuples(params);

    Wide total = 0, tolerance = 0, magnitude = 0, largest = 0;
    std::map<SlotTuple, NumericValue> cache;
    for (const auto &t : report.six_tuples) {
        auto it = cache.find(t);
        if (it == cache.end()) {
            it = cache.emplace(t, zeta2_numeric(t.at(s), cfg)).first;
        }
        const NumericValue &z = it->second;
        report.tuple_values.push_back({"zeta2" + to_string(t), z.value, z.error_bound});
        total += z.value;
        tolerance += z.error_bound;
        magnitude += fabsq(z.value);
        largest = std::max(largest, fabsq(z.value));
    }
    std::map<int, NumericValue> zeta_cache;
    std::array<Wide, 8> i_values{};
    for (const auto &row : table.rows) {
        const Wide x = static_cast<Wide>(s) + row.shift;
        auto it = zeta_cache.find(row.shift);
        if (it == zeta_cache.end()) {
            it = zeta_cache.emplace(row.shift, riemann_zeta_numeric(x)).first;
        }
        Wide f_err = 0;
        const Wide f = detail::row_factor(row.kind, it->second, x, f_err);
        const Wide w = wide_from_mpf(to_mpf(row.weight()));
        const Wide term = w * f;
        i_values[row.relation - 1] += term;
        total += term;
        tolerance += fabsq(w) * f_err + 4 * FLT128_EPSILON * fabsq(term);
        magnitude += fabsq(term);
        largest = std::max(largest, fabsq(term));
    }
    tolerance += 16 * FLT128_EPSILON * magnitude;
    report.i_values = i_values;
    report.residual = fabsq(total);
    report.tolerance = tolerance;
    report.largest_term = largest;
    report.relative_residual = largest > 0 ? report.residual / largest : report.residual;
    report.pass = report.residual <= report.tolerance;
    return report;
}

/// Exact value of Z_kind at the even integer x.
inline PiValue zeta_kind_exact(ZetaKind kind, int x)
{
    const PiValue z = zeta_even_exact(x);
    switch (kind) {
        case ZetaKind::zeta:
            return z;
        case ZetaKind::zeta_plus_phi:
            return pow(Rational(2), 1 - x) * z;
        default:
            return Rational(Rational(2) - pow(Rational(2), 1 - x)) * z;
    }
}

struct EvenReduction {
    std::vector<SlotTuple> tuples;
    int m = 0;
    PiValue value; // sum of the six zeta_2 values at s = 2m
};

/// -(I_1 + ... + I_8) at s = 2m, exactly.
inline EvenReduction reduce_even(const RelationParams &params, int m, const RelationVariant &variant = pinned_relation_variant())
{
    if (m < 1) {
        throw DomainError("reduce_even needs m >= 1");
    }
    const ITermTable table = build_I_tables(params, variant);
    PiPolynomial sum;
    for (const auto &row : table.rows) {
        const int x = 2 * m + row.shift;
        if (x < 2 || x % 2 != 0) {
            throw DomainError("reduce_even reached a zeta argument that is not an even integer >= 2");
        }
        sum.add(row.weight() * zeta_kind_exact(row.kind, x));
    }
    EvenReduction out;
    out.tuples = lhs_zeta_tuples(params);
    out.m = m;
    out.value = (Rational(-1) * sum).as_monomial();
    return out;
}

/// Sum of the I_j as  sum_shift (A + B * 2^{-s}) zeta(s + shift)  with A, B
/// exact multiples of powers of pi.
struct SymbolicISum {
    struct Coefficients {
        PiPolynomial constant;
        PiPolynomial two_power; // coefficient of 2^{-s}
    };
    std::map<int, Coefficients> by_shift;
};

inline SymbolicISum symbolic_I_sum(const ITermTable &table)
{
    SymbolicISum out;
    for (const auto &row : table.rows) {
        auto &c = out.by_shift[row.shift];
        const PiValue w = row.weight();
        // 2^{1-s-shift} = 2^{1-shift} * 2^{-s}
        const Rational f = pow(Rational(2), 1 - row.shift);
        switch (row.kind) {
            case ZetaKind::zeta:
                c.constant.add(w);
                break;
            case ZetaKind::zeta_plus_phi:
                c.two_power.add(f * w);
                break;
            case ZetaKind::zeta_minus_phi:
                c.constant.add(Rational(2) * w);
                c.two_power.add(Rational(-1) * f * w);
                break;
        }
    }
    return out;
}

/// When the six tuples pair up, as for p = q = r = u = v, the relation reads
/// (sum of the three distinct zeta_2 terms) = -(I_1 + ... + I_8) / 2.
inline SymbolicISum collapsed_lhs_coefficients(const ITermTable &table)
{
    SymbolicISum out = symbolic_I_sum(table);
    const Rational half(make_rational(-1, 2));
    for (auto &[shift, c] : out.by_shift) {
        c.constant = half * c.constant;
        c.two_power = half * c.two_power;
    }
    return out;
}

struct ZhaoValue {
    Rational zeta7_coefficient;      // times zeta(7)
    Rational zeta2_zeta5_coefficient; // times zeta(2) zeta(5)
    Wide decimal = 0;
    Wide error_bound = 0;
};

inline ZhaoValue zhao_value()
{
    ZhaoValue out{make_rational(-109, 1296), make_rational(1, 18)};
    const NumericValue z7 = riemann_zeta_numeric(7), z5 = riemann_zeta_numeric(5);
    const Wide z2 = M_PIq * M_PIq / 6;
    const Wide a = wide_from_rational(out.zeta7_coefficient), b = wide_from_rational(out.zeta2_zeta5_coefficient);
    out.decimal = a * z7.value + b * z2 * z5.value;
    out.error_bound = fabsq(a) * z7.error_bound + fabsq(b * z2) * z5.error_bound + 16 * FLT128_EPSILON;
    return out;
}

// Exact identity checks used as oracles.  Sequences are finitely supported
// maps index -> rational; missing indices are zero.

using FiniteSequence = std::map<int, Rational>;

inline Rational at(const FiniteSequence &f, int n)
{
    auto it = f.find(n);
    return it == f.end() ? Rational(0) : it->second;
}

/// (i pi)^{2mu} / d  as an exact value.
inline PiValue i_pi_even_power(int mu, const Integer &denominator)
{
    Rational c = make_rational(Integer(mu % 2 == 0 ? 1 : -1), denominator);
    return PiValue(c, 2 * mu);
}

struct PhiConvolutionCheck {
    bool first = false;  // convolution with f against sum zeta(2 xi) f(a - 2 xi)
    bool second = false; // convolution with g against -g(a)/2
    bool both() const
    {
        return first && second;
    }
};

/// Convolutions of phi at even arguments with the cosine and sine-type
/// coefficients (i pi)^{2mu}/(2mu)! and (i pi)^{2mu}/(2mu+1)!.
inline PhiConvolutionCheck check_phi_convolution_identities(int a, const FiniteSequence &f, const FiniteSequence &g)
{
    if (a < 1) {
        throw DomainError("identity check needs a >= 1");
    }
    auto phi_lambda = [](int n) {
        // phi(n) lambda_n: zero for odd n
        return (n % 2 == 0) ? PiPolynomial(phi_even_exact(n)) : PiPolynomial();
    };
    PiPolynomial lhs1, rhs1, lhs2;
    for (int k = 0; k <= a; ++k) {
        PiPolynomial inner;
        for (int mu = 0; mu <= k / 2; ++mu) {
            inner.add(at(f, k - 2 * mu) * i_pi_even_power(mu, factorial(static_cast<unsigned long>(2 * mu))));
        }
        lhs1 += phi_lambda(a - k) * inner;
    }
    for (int xi = 0; xi <= a / 2; ++xi) {
        rhs1.add(at(f, a - 2 * xi) * zeta_even_exact(2 * xi));
    }
    for (int k = 1; k <= a; ++k) {
        PiPolynomial inner;
        for (int mu = 0; mu <= (k - 1) / 2; ++mu) {
            inner.add(at(g, k - 2 * mu) * i_pi_even_power(mu, factorial(static_cast<unsigned long>(2 * mu + 1))));
        }
        lhs2 += phi_lambda(a - k) * inner;
    }
    const PiPolynomial rhs2 = PiPolynomial(PiValue(make_rational(-1, 2) * at(g, a), 0));
    return {lhs1 == rhs1, lhs2 == rhs2};
}

struct EvenTransformCheck {
    bool p_identity = false; // P_{2h} = -2 sum zeta(2h-2tau) Q_{2tau}
    bool q_identity = false; // pi^2 Q_{2h} = 2 sum (2^{2h-2tau+2}-1) zeta(2h-2tau+2) P_{2tau}
    bool both() const
    {
        return p_identity && q_identity;
    }
};

/// With P_{2h} = sum_j R_{2h-2j} (i pi)^{2j}/(2j)! and Q_{2h} the same with
/// (2j+1)!, checks both inversion formulas for every h <= h_max.  R is
/// indexed by h (R[h] stands for R_{2h}).
inline EvenTransformCheck check_even_zeta_transform_identities(int h_max, const FiniteSequence &R)
{
    if (h_max < 0) {
        throw DomainError("identity check needs h_max >= 0");
    }
    std::vector<PiPolynomial> P(h_max + 1), Q(h_max + 1);
    for (int h = 0; h <= h_max; ++h) {
        for (int j = 0; j <= h; ++j) {
            P[h].add(at(R, h - j) * i_pi_even_power(j, factorial(static_cast<unsigned long>(2 * j))));
            Q[h].add(at(R, h - j) * i_pi_even_power(j, factorial(static_cast<unsigned long>(2 * j + 1))));
        }
    }
    EvenTransformCheck out{true, true};
    const PiPolynomial pi2(PiValue(Rational(1), 2));
    for (int h = 0; h <= h_max; ++h) {
        PiPolynomial p_rhs, q_rhs;
        for (int tau = 0; tau <= h; ++tau) {
            p_rhs += PiPolynomial(Rational(-2) * zeta_even_exact(2 * h - 2 * tau)) * Q[tau];
            q_rhs += PiPolynomial(Rational(2 * (pow(Rational(2), 2 * h - 2 * tau + 2) - 1)) * zeta_even_exact(2 * h - 2 * tau + 2)) * P[tau];
        }
        if (!(P[h] == p_rhs)) {
            out.p_identity = false;
        }
        if (!(pi2 * Q[h] == q_rhs)) {
            out.q_identity = false;
        }
    }
    return out;
}

} // namespace g2zeta

#endif
