#ifndef G2ZETA_BERNOULLI_G2_HPP
#define G2ZETA_BERNOULLI_G2_HPP

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <g2zeta/errors.hpp>
#include <g2zeta/generating_function.hpp>
#include <g2zeta/pi_value.hpp>
#include <g2zeta/rational.hpp>
#include <g2zeta/root_system.hpp>
#include <g2zeta/series.hpp>

namespace g2zeta
{

using IndexTuple = std::array<int, kVariableCount>;

enum class Algorithm { ordered_laurent, common_denominator };

inline std::string to_string(Algorithm a)
{
    return a == Algorithm::ordered_laurent ? "A" : "B";
}

struct ExtractionOptions {
    VariableOrdering ordering = kNaturalOrdering;
    TermTableVariant variant = TermTableVariant::restored;
    // Also expand a window of negative exponents around the target and demand
    // that all of it cancels.
    bool verify_cancellation = true;
};

inline std::array<ExponentRange, kVariableCount> exponent_hull(const SparseLaurentSeries &s)
{
    std::array<ExponentRange, kVariableCount> hull;
    hull.fill(ExponentRange{1, 0});
    bool first = true;
    s.for_each_term([&](const ExponentVector &e, const Rational &) {
        for (int i = 0; i < kVariableCount; ++i) {
            if (first) {
                hull[i] = {e[i], e[i]};
            } else {
                hull[i].min = std::min(hull[i].min, e[i]);
                hull[i].max = std::max(hull[i].max, e[i]);
            }
        }
        first = false;
    });
    return hull;
}

/// Throws ConsistencyError for the first (lexicographically) stored monomial
/// with a negative exponent.
inline void require_no_negative_monomials(const SparseLaurentSeries &s, const std::string &context = "")
{
    for (const auto &[e, c] : s.terms()) {
        if (std::any_of(e.begin(), e.end(), [](int x) { return x < 0; })) {
            throw ConsistencyError("negative-exponent monomial " + to_string(e) + " with coefficient " + to_string(c)
                                   + " survives in the generating function" + (context.empty() ? "" : " (" + context + ")"));
        }
    }
}

namespace detail
{
// Integer intervals with saturating infinities.
inline constexpr long long kInf = 1LL << 40;

struct Interval {
    long long lo;
    long long hi;
};

inline long long sat(long long x)
{
    return std::clamp(x, -kInf, kInf);
}

inline long long add(long long a, long long b)
{
    if (a >= kInf || b >= kInf) {
        return (a <= -kInf || b <= -kInf) ? 0 : kInf;
    }
    if (a <= -kInf || b <= -kInf) {
        return -kInf;
    }
    return sat(a + b);
}

// Exponent constraints of one factor of a term: per-variable intervals and
// an interval for the total degree.
struct FactorShape {
    std::array<Interval, kVariableCount> e;
    Interval degree;
};

// Propagates the per-variable target window and each factor's degree
// constraint to a fixpoint.  Returns false if some interval becomes empty.
inline bool propagate(std::vector<FactorShape> &factors, const SeriesCaps &target)
{
    auto tighten = [](Interval &x, long long lo, long long hi, bool &changed) {
        if (lo > x.lo) {
            x.lo = lo;
            changed = true;
        }
        if (hi < x.hi) {
            x.hi = hi;
            changed = true;
        }
        return x.lo <= x.hi;
    };
    for (int round = 0; round < 1000; ++round) {
        bool changed = false;
        for (auto &f : factors) {
            for (int v = 0; v < kVariableCount; ++v) {
                long long sum_hi = 0, sum_lo = 0;
                for (int u = 0; u < kVariableCount; ++u) {
                    if (u != v) {
                        sum_hi = add(sum_hi, f.e[u].hi);
                        sum_lo = add(sum_lo, f.e[u].lo);
                    }
                }
                if (!tighten(f.e[v], add(f.degree.lo, -sum_hi), add(f.degree.hi, -sum_lo), changed)) {
                    return false;
                }
            }
        }
        for (int v = 0; v < kVariableCount; ++v) {
            for (std::size_t i = 0; i < factors.size(); ++i) {
                long long sum_hi = 0, sum_lo = 0;
                for (std::size_t j = 0; j < factors.size(); ++j) {
                    if (j != i) {
                        sum_hi = add(sum_hi, factors[j].e[v].hi);
                        sum_lo = add(sum_lo, factors[j].e[v].lo);
                    }
                }
                if (!tighten(factors[i].e[v], add(target.bounds[v].min, -sum_hi), add(target.bounds[v].max, -sum_lo), changed)) {
                    return false;
                }
            }
        }
        if (!changed) {
            return true;
        }
    }
    throw std::logic_error("exponent window propagation did not converge");
}

inline SeriesCaps to_caps(const FactorShape &f)
{
    std::array<ExponentRange, kVariableCount> b{};
    for (int v = 0; v < kVariableCount; ++v) {
        if (f.e[v].lo <= -kInf || f.e[v].hi >= kInf || f.e[v].lo < SeriesCaps::kMinExponent
            || f.e[v].hi > SeriesCaps::kMaxExponent) {
            throw std::logic_error("unbounded or oversized exponent window for a factor");
        }
        b[v] = {static_cast<int>(f.e[v].lo), static_cast<int>(f.e[v].hi)};
    }
    return SeriesCaps::box(b, static_cast<int>(f.degree.lo), static_cast<int>(f.degree.hi));
}

inline SeriesCaps shift_caps(SeriesCaps caps, int variable, int delta)
{
    caps.bounds[variable].min += delta;
    caps.bounds[variable].max += delta;
    caps.min_total_degree += delta;
    caps.max_total_degree += delta;
    return caps;
}

// sign * scale * B(t_a) B(t_b) * sum_summands e^{g_a t_a + g_b t_b}, exact
// inside `caps` (a power series in t_a, t_b only).
inline SparseLaurentSeries exponential_part(const GeneratingTerm &term, const SeriesCaps &caps)
{
    SeriesCaps work = caps;
    work.min_total_degree = 0; // lower windows are applied only at the end
    for (auto &b : work.bounds) {
        b.min = 0;
    }
    work = work.clamped();
    if (work.empty()) {
        return SparseLaurentSeries(caps);
    }
    SparseLaurentSeries sum(work);
    for (const auto &g : term.summands) {
        sum += series_mul(series_exp_linear(g[0], term.a, work), series_exp_linear(g[1], term.b, work), work);
    }
    SparseLaurentSeries out = series_mul(series_mul(series_t_over_expm1(term.a, work), series_t_over_expm1(term.b, work), work), sum, work);
    out *= term.scale * term.sign;
    return out.with_caps(caps);
}

// t_c / L in the ordered Laurent region, restricted to caps.
inline SparseLaurentSeries form_factor(const LinearForm &L, int own, const VariableOrdering &ordering, const SeriesCaps &caps)
{
    SparseLaurentSeries inv = laurent_inverse_linear_form(L, ordering, shift_caps(caps, own, -1));
    SparseLaurentSeries out(caps);
    inv.for_each_term([&](ExponentVector e, const Rational &c) {
        e[own] += 1;
        out.add_term(e, c);
    });
    return out;
}
} // namespace detail

/// Expansion of one term of F in the ordered Laurent region, exact for every
/// monomial inside `target`.
inline SparseLaurentSeries expand_term_in_box(const GeneratingTerm &term, const SeriesCaps &target,
                                              const VariableOrdering &ordering = kNaturalOrdering)
{
    using detail::Interval;
    using detail::kInf;

    std::vector<detail::FactorShape> shapes(5);
    for (auto &s : shapes) {
        s.e.fill(Interval{0, 0});
    }
    shapes[0].e[term.a] = {0, kInf};
    shapes[0].e[term.b] = {0, kInf};
    shapes[0].degree = {target.min_total_degree, target.max_total_degree};
    for (int f = 0; f < 4; ++f) {
        auto &s = shapes[f + 1];
        const LinearForm &L = term.forms[f];
        const int h = leading_variable(L, ordering);
        for (int v : L.variables()) {
            s.e[v] = (v == h) ? Interval{-kInf, -1} : Interval{0, kInf};
        }
        const int own = term.own_variable[f];
        s.e[own].lo = detail::add(s.e[own].lo, 1);
        s.e[own].hi = detail::add(s.e[own].hi, 1);
        s.degree = {0, 0};
    }
    if (!detail::propagate(shapes, target)) {
        return SparseLaurentSeries(target);
    }

    std::vector<SparseLaurentSeries> factors;
    factors.push_back(detail::exponential_part(term, detail::to_caps(shapes[0])));
    for (int f = 0; f < 4; ++f) {
        factors.push_back(detail::form_factor(term.forms[f], term.own_variable[f], ordering, detail::to_caps(shapes[f + 1])));
    }
    for (const auto &f : factors) {
        if (f.is_zero()) {
            return SparseLaurentSeries(target);
        }
    }

    // Multiply in order, pruning each partial product to the window that can
    // still reach the target given the actual supports of the factors left.
    std::vector<std::array<ExponentRange, kVariableCount>> hulls;
    for (const auto &f : factors) {
        hulls.push_back(exponent_hull(f));
    }
    SparseLaurentSeries partial = factors[0];
    for (std::size_t i = 1; i < factors.size(); ++i) {
        std::array<ExponentRange, kVariableCount> window{};
        for (int v = 0; v < kVariableCount; ++v) {
            int rest_lo = 0, rest_hi = 0;
            for (std::size_t j = i + 1; j < factors.size(); ++j) {
                rest_lo += hulls[j][v].min;
                rest_hi += hulls[j][v].max;
            }
            window[v] = {target.bounds[v].min - rest_hi, target.bounds[v].max - rest_lo};
        }
        partial = series_mul(partial, factors[i], SeriesCaps::box(window, target.min_total_degree, target.max_total_degree));
        if (partial.is_zero()) {
            break;
        }
    }
    return partial.with_caps(target);
}

/// Sum of the 15 expansions inside `target`.
inline SparseLaurentSeries expand_F_in_box(const TermTable &table, const SeriesCaps &target,
                                           const VariableOrdering &ordering = kNaturalOrdering)
{
    SparseLaurentSeries sum(target);
    for (const auto &term : table) {
        sum += expand_term_in_box(term, target, ordering);
    }
    return sum;
}

/// Homogeneous layer of F computed through one common denominator.
///
/// All 60 denominator forms reduce to 20 distinct primitive forms.  With D
/// their product, each term becomes (polynomial of degree 20) * (power
/// series) / D, so the layer of degree d is the degree d+20 layer of
/// N = sum_T PS_T * M_T divided exactly by the 20 forms.
class CommonDenominatorExpander
{
public:
    explicit CommonDenominatorExpander(const TermTable &table) : table_(table)
    {
        std::map<LinearForm, int> index;
        std::vector<std::vector<std::pair<Rational, int>>> own_forms(table.size());
        for (std::size_t t = 0; t < table.size(); ++t) {
            for (const auto &L : table[t].forms) {
                auto [scale, primitive] = L.normalized();
                auto it = index.find(primitive);
                if (it == index.end()) {
                    it = index.emplace(primitive, static_cast<int>(forms_.size())).first;
                    forms_.push_back(primitive);
                }
                own_forms[t].emplace_back(scale, it->second);
            }
        }
        const int deg = static_cast<int>(forms_.size());
        for (std::size_t t = 0; t < table.size(); ++t) {
            Rational kappa(1);
            std::vector<bool> used(forms_.size(), false);
            ExponentVector e{};
            for (int f = 0; f < 4; ++f) {
                kappa *= own_forms[t][f].first;
                used[own_forms[t][f].second] = true;
                e[table[t].own_variable[f]] += 1;
            }
            const SeriesCaps caps = SeriesCaps::power_series(deg);
            SparseLaurentSeries m = SparseLaurentSeries::monomial(e, Rational(1) / kappa, caps);
            for (std::size_t f = 0; f < forms_.size(); ++f) {
                if (!used[f]) {
                    m = series_mul(m, forms_[f].as_series(caps), caps);
                }
            }
            multipliers_.push_back(std::move(m));
        }
    }

    const std::vector<LinearForm> &denominator_forms() const noexcept
    {
        return forms_;
    }

    SparseLaurentSeries layer(int degree) const
    {
        const int deg = static_cast<int>(forms_.size());
        const int top = degree + deg;
        std::array<ExponentRange, kVariableCount> full;
        full.fill(ExponentRange{0, top});
        SparseLaurentSeries numerator(SeriesCaps::layer(full, top));
        for (std::size_t t = 0; t < table_.size(); ++t) {
            std::array<ExponentRange, kVariableCount> box;
            box.fill(ExponentRange{0, degree});
            const auto ps = detail::exponential_part(table_[t], SeriesCaps::layer(box, degree));
            numerator += series_mul(ps, multipliers_[t], SeriesCaps::layer(full, top));
        }
        SparseLaurentSeries q = numerator;
        for (const auto &L : forms_) {
            const auto vars = L.variables();
            q = exact_divide_by_linear_form(q, L, vars.back());
        }
        std::array<ExponentRange, kVariableCount> out_box;
        out_box.fill(ExponentRange{0, degree});
        return q.with_caps(SeriesCaps::layer(out_box, degree));
    }

private:
    TermTable table_;
    std::vector<LinearForm> forms_;
    std::vector<SparseLaurentSeries> multipliers_;
};

/// prod_j k_j!
inline Integer factorial_product(const IndexTuple &k)
{
    Integer p(1);
    for (int v : k) {
        p *= factorial(static_cast<unsigned long>(v));
    }
    return p;
}

inline void require_nonnegative(const IndexTuple &k)
{
    for (int v : k) {
        if (v < 0) {
            throw DomainError("exponent tuple entries must be nonnegative");
        }
    }
}

/// Raw coefficient of t^k in F (without the factorials).
inline Rational raw_F_coefficient(const RationalPair &y, const IndexTuple &k, Algorithm algorithm,
                                  const ExtractionOptions &options = {})
{
    require_nonnegative(k);
    const int degree = std::accumulate(k.begin(), k.end(), 0);
    const TermTable table = build_term_table(y, options.variant);
    if (algorithm == Algorithm::common_denominator) {
        return CommonDenominatorExpander(table).layer(degree).coefficient(k);
    }
    std::array<ExponentRange, kVariableCount> box{};
    for (int v = 0; v < kVariableCount; ++v) {
        box[v] = options.verify_cancellation ? ExponentRange{-1, k[v] + 1} : ExponentRange{k[v], k[v]};
    }
    const SparseLaurentSeries s = expand_F_in_box(table, SeriesCaps::layer(box, degree), options.ordering);
    if (options.verify_cancellation) {
        require_no_negative_monomials(s, "coefficient extraction at " + to_string(k));
    }
    return s.coefficient(k);
}

/// P(k, y): Taylor coefficient of prod t^k / k!.
inline Rational expand_F_coefficients(const RationalPair &y, const IndexTuple &k, Algorithm algorithm = Algorithm::ordered_laurent,
                                      const ExtractionOptions &options = {})
{
    const Rational raw = raw_F_coefficient(y, k, algorithm, options);
    return raw * Rational(factorial_product(k));
}

/// Every P(k, y) with |k| = degree, keyed by k.
inline std::map<IndexTuple, Rational> bernoulli_layer(const RationalPair &y, int degree, Algorithm algorithm,
                                                      const ExtractionOptions &options = {})
{
    const TermTable table = build_term_table(y, options.variant);
    SparseLaurentSeries layer;
    if (algorithm == Algorithm::common_denominator) {
        layer = CommonDenominatorExpander(table).layer(degree);
    } else {
        std::array<ExponentRange, kVariableCount> box;
        box.fill(ExponentRange{0, degree});
        layer = expand_F_in_box(table, SeriesCaps::layer(box, degree), options.ordering);
    }
    std::map<IndexTuple, Rational> out;
    for (const auto &[e, c] : layer.terms()) {
        out.emplace(e, c * Rational(factorial_product(e)));
    }
    return out;
}

struct CancellationReport {
    int max_degree = 0;
    int margin = -1; // -1: the window [-(d+1), d+1]
    std::size_t negative_monomials_seen = 0; // distinct, over the 15 separate expansions
    std::size_t survivors = 0;
    std::optional<ExponentVector> first_survivor;
};

/// Expands every layer of degree d <= max_degree in a box of exponents and
/// counts negative-exponent monomials before and after summing the 15 terms.
/// The box is [-(d+1), d+1] per variable, or [-margin, d+margin] when
/// margin >= 0 is given.
inline CancellationReport laurent_cancellation_report(const RationalPair &y, int max_degree, int margin = -1,
                                                      const ExtractionOptions &options = {})
{
    const TermTable table = build_term_table(y, options.variant);
    CancellationReport report;
    report.max_degree = max_degree;
    report.margin = margin;
    for (int d = 0; d <= max_degree; ++d) {
        std::array<ExponentRange, kVariableCount> box;
        box.fill(margin < 0 ? ExponentRange{-(d + 1), d + 1} : ExponentRange{-margin, d + margin});
        const SeriesCaps caps = SeriesCaps::layer(box, d);
        SparseLaurentSeries sum(caps);
        std::set<ExponentVector> seen;
        for (const auto &term : table) {
            const auto part = expand_term_in_box(term, caps, options.ordering);
            part.for_each_term([&](const ExponentVector &e, const Rational &) {
                if (std::any_of(e.begin(), e.end(), [](int x) { return x < 0; })) {
                    seen.insert(e);
                }
            });
            sum += part;
        }
        report.negative_monomials_seen += seen.size();
        for (const auto &[e, c] : sum.terms()) {
            if (std::any_of(e.begin(), e.end(), [](int x) { return x < 0; })) {
                ++report.survivors;
                if (!report.first_survivor) {
                    report.first_survivor = e;
                }
            }
        }
    }
    return report;
}

/// S(k, y) = prod (2 pi i)^{k_j} / k_j!  *  P(k, y).
inline PiValue S_exact(const IndexTuple &k, const RationalPair &y, Algorithm algorithm = Algorithm::ordered_laurent,
                       const ExtractionOptions &options = {})
{
    const Rational raw = raw_F_coefficient(y, k, algorithm, options);
    const int w = std::accumulate(k.begin(), k.end(), 0);
    // P * prod (2 pi i)^k / k! = raw * (2i)^w pi^w
    const GaussianRational c = GaussianRational(raw * pow(Rational(2), w)) * GaussianRational::i_power(w);
    return PiValue(c, w);
}

/// zeta_2(k) for k of shape (2p, 2q, 2q, 2q, 2p, 2p) via S(k, 0) = 12 zeta_2(k).
inline PiValue zeta2_exact(const IndexTuple &k, Algorithm algorithm = Algorithm::ordered_laurent,
                           const ExtractionOptions &options = {})
{
    if (!admissible_orbit_tuple(k)) {
        throw DomainError("exact evaluation needs k = (2p,2q,2q,2q,2p,2p) with p,q >= 1: entries k1,k5,k6 (short roots) "
                          "must agree, entries k2,k3,k4 (long roots) must agree, and all must be positive and even");
    }
    const PiValue s = S_exact(k, RationalPair{0, 0}, algorithm, options);
    return make_rational(1, 12) * s;
}

/// zeta_W(2kk) = K^{2kk} zeta_2(2kk, ..., 2kk).
inline PiValue witten_volume_constant(int kk, Algorithm algorithm = Algorithm::ordered_laurent, const ExtractionOptions &options = {})
{
    if (kk < 1) {
        throw DomainError("witten_volume_constant needs kk >= 1");
    }
    const int e = 2 * kk;
    const PiValue z = zeta2_exact(IndexTuple{e, e, e, e, e, e}, algorithm, options);
    return pow(Rational(k_constant()), e) * z;
}

} // namespace g2zeta

#endif
