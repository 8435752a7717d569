#ifndef G2ZETA_SERIES_HPP
#define G2ZETA_SERIES_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <g2zeta/affine_expression.hpp>
#include <g2zeta/bernoulli.hpp>
#include <g2zeta/errors.hpp>
#include <g2zeta/rational.hpp>

namespace g2zeta
{

inline constexpr int kVariableCount = 6;

/// Laurent exponent of t_1..t_6 (stored 0-based: e[0] is the exponent of t_1).
using ExponentVector = std::array<int, kVariableCount>;

inline int total_degree(const ExponentVector &e)
{
    return std::accumulate(e.begin(), e.end(), 0);
}

inline std::string to_string(const ExponentVector &e)
{
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < kVariableCount; ++i) {
        os << (i ? "," : "") << e[i];
    }
    os << ')';
    return os.str();
}

struct ExponentRange {
    int min = 0;
    int max = 0;

    bool contains(int e) const noexcept
    {
        return min <= e && e <= max;
    }
    bool empty() const noexcept
    {
        return min > max;
    }
};

/// Region in which a truncated series is stored: a total-degree window plus
/// a box of per-variable exponent bounds.
struct SeriesCaps {
    // Exponents are packed into 10-bit fields.
    static constexpr int kMinExponent = -512;
    static constexpr int kMaxExponent = 511;

    int min_total_degree = 0;
    int max_total_degree = 0;
    std::array<ExponentRange, kVariableCount> bounds{};

    static SeriesCaps power_series(int max_degree)
    {
        SeriesCaps caps;
        caps.min_total_degree = 0;
        caps.max_total_degree = max_degree;
        caps.bounds.fill(ExponentRange{0, std::min(max_degree, kMaxExponent)});
        return caps.clamped();
    }

    static SeriesCaps box(const std::array<ExponentRange, kVariableCount> &bounds, int min_degree, int max_degree)
    {
        SeriesCaps caps;
        caps.min_total_degree = min_degree;
        caps.max_total_degree = max_degree;
        caps.bounds = bounds;
        return caps.clamped();
    }

    /// Homogeneous window [degree, degree] inside the given box.
    static SeriesCaps layer(const std::array<ExponentRange, kVariableCount> &bounds, int degree)
    {
        return box(bounds, degree, degree);
    }

    SeriesCaps clamped() const
    {
        SeriesCaps out = *this;
        for (auto &b : out.bounds) {
            b.min = std::clamp(b.min, kMinExponent, kMaxExponent + 1);
            b.max = std::clamp(b.max, kMinExponent - 1, kMaxExponent);
        }
        return out;
    }

    bool contains(const ExponentVector &e) const noexcept
    {
        int d = 0;
        for (int i = 0; i < kVariableCount; ++i) {
            if (!bounds[i].contains(e[i])) {
                return false;
            }
            d += e[i];
        }
        return min_total_degree <= d && d <= max_total_degree;
    }

    bool empty() const noexcept
    {
        if (min_total_degree > max_total_degree) {
            return true;
        }
        int lo = 0, hi = 0;
        for (const auto &b : bounds) {
            if (b.empty()) {
                return true;
            }
            lo += b.min;
            hi += b.max;
        }
        return hi < min_total_degree || lo > max_total_degree;
    }

    SeriesCaps intersect(const SeriesCaps &o) const
    {
        SeriesCaps out;
        out.min_total_degree = std::max(min_total_degree, o.min_total_degree);
        out.max_total_degree = std::min(max_total_degree, o.max_total_degree);
        for (int i = 0; i < kVariableCount; ++i) {
            out.bounds[i] = {std::max(bounds[i].min, o.bounds[i].min), std::min(bounds[i].max, o.bounds[i].max)};
        }
        return out;
    }

    friend bool operator==(const SeriesCaps &a, const SeriesCaps &b)
    {
        if (a.min_total_degree != b.min_total_degree || a.max_total_degree != b.max_total_degree) {
            return false;
        }
        for (int i = 0; i < kVariableCount; ++i) {
            if (a.bounds[i].min != b.bounds[i].min || a.bounds[i].max != b.bounds[i].max) {
                return false;
            }
        }
        return true;
    }
};

namespace detail
{
inline constexpr int kFieldBits = 10;
inline constexpr std::uint64_t kFieldMask = (std::uint64_t{1} << kFieldBits) - 1;

inline std::uint64_t pack(const ExponentVector &e) noexcept
{
    std::uint64_t key = 0;
    for (int i = 0; i < kVariableCount; ++i) {
        key |= static_cast<std::uint64_t>(e[i] - SeriesCaps::kMinExponent) << (kFieldBits * i);
    }
    return key;
}

inline ExponentVector unpack(std::uint64_t key) noexcept
{
    ExponentVector e{};
    for (int i = 0; i < kVariableCount; ++i) {
        e[i] = static_cast<int>((key >> (kFieldBits * i)) & kFieldMask) + SeriesCaps::kMinExponent;
    }
    return e;
}
} // namespace detail

/// Truncated multivariate Laurent series in t_1..t_6 over the rationals.
///
/// Terms are stored per homogeneous layer (total degree).  Terms that fall
/// outside the caps are dropped and the drop is remembered in truncated();
/// truncation is never an error by itself.
class SparseLaurentSeries
{
public:
    using Layer = std::unordered_map<std::uint64_t, Rational>;

    explicit SparseLaurentSeries(SeriesCaps caps = SeriesCaps::power_series(0)) : caps_(caps.clamped()) {}

    static SparseLaurentSeries constant(const Rational &c, const SeriesCaps &caps)
    {
        SparseLaurentSeries s(caps);
        s.add_term(ExponentVector{}, c);
        return s;
    }

    static SparseLaurentSeries monomial(const ExponentVector &e, const Rational &c, const SeriesCaps &caps)
    {
        SparseLaurentSeries s(caps);
        s.add_term(e, c);
        return s;
    }

    const SeriesCaps &caps() const noexcept
    {
        return caps_;
    }
    bool truncated() const noexcept
    {
        return truncated_;
    }
    void mark_truncated() noexcept
    {
        truncated_ = true;
    }

    void add_term(const ExponentVector &e, const Rational &c)
    {
        if (c == 0) {
            return;
        }
        if (!caps_.contains(e)) {
            truncated_ = true;
            return;
        }
        const int d = total_degree(e);
        auto &layer = layers_[d];
        auto [it, inserted] = layer.try_emplace(detail::pack(e), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) {
                layer.erase(it);
                if (layer.empty()) {
                    layers_.erase(d);
                }
            }
        }
    }

    Rational coefficient(const ExponentVector &e) const
    {
        auto layer = layers_.find(total_degree(e));
        if (layer == layers_.end()) {
            return 0;
        }
        auto it = layer->second.find(detail::pack(e));
        return it == layer->second.end() ? Rational(0) : it->second;
    }

    std::size_t size() const noexcept
    {
        std::size_t n = 0;
        for (const auto &[d, layer] : layers_) {
            n += layer.size();
        }
        return n;
    }

    bool is_zero() const noexcept
    {
        return layers_.empty();
    }

    const std::map<int, Layer> &layers() const noexcept
    {
        return layers_;
    }

    /// Visits every stored term in unspecified order.
    template <typename Visitor>
    void for_each_term(Visitor &&visit) const
    {
        for (const auto &[d, layer] : layers_) {
            for (const auto &[key, c] : layer) {
                visit(detail::unpack(key), c);
            }
        }
    }

    /// All terms sorted lexicographically by exponent (deterministic order).
    std::vector<std::pair<ExponentVector, Rational>> terms() const
    {
        std::vector<std::pair<ExponentVector, Rational>> out;
        out.reserve(size());
        for_each_term([&](const ExponentVector &e, const Rational &c) { out.emplace_back(e, c); });
        std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
        return out;
    }

    /// Copy restricted to the intersection of the current caps with `caps`.
    SparseLaurentSeries restricted(const SeriesCaps &caps) const
    {
        SparseLaurentSeries out(caps_.intersect(caps));
        out.truncated_ = truncated_;
        for_each_term([&](const ExponentVector &e, const Rational &c) { out.add_term(e, c); });
        return out;
    }

    /// Same terms, new caps; terms outside the new caps are dropped.
    SparseLaurentSeries with_caps(const SeriesCaps &caps) const
    {
        SparseLaurentSeries out(caps);
        out.truncated_ = truncated_;
        for_each_term([&](const ExponentVector &e, const Rational &c) { out.add_term(e, c); });
        return out;
    }

    SparseLaurentSeries &operator+=(const SparseLaurentSeries &o)
    {
        truncated_ = truncated_ || o.truncated_;
        o.for_each_term([&](const ExponentVector &e, const Rational &c) { add_term(e, c); });
        return *this;
    }

    SparseLaurentSeries &operator-=(const SparseLaurentSeries &o)
    {
        truncated_ = truncated_ || o.truncated_;
        o.for_each_term([&](const ExponentVector &e, const Rational &c) { add_term(e, -c); });
        return *this;
    }

    SparseLaurentSeries &operator*=(const Rational &s)
    {
        if (s == 0) {
            layers_.clear();
            return *this;
        }
        for (auto &[d, layer] : layers_) {
            for (auto &[key, c] : layer) {
                c *= s;
            }
        }
        return *this;
    }

    /// Equality of stored terms (caps and truncation flags are not compared).
    friend bool operator==(const SparseLaurentSeries &a, const SparseLaurentSeries &b)
    {
        if (a.size() != b.size()) {
            return false;
        }
        bool equal = true;
        a.for_each_term([&](const ExponentVector &e, const Rational &c) {
            if (equal && b.coefficient(e) != c) {
                equal = false;
            }
        });
        return equal;
    }

private:
    SeriesCaps caps_;
    std::map<int, Layer> layers_;
    bool truncated_ = false;
};

/// Sum restricted to the intersection of both validity regions.
inline SparseLaurentSeries series_add(const SparseLaurentSeries &a, const SparseLaurentSeries &b)
{
    SparseLaurentSeries out = a.restricted(b.caps());
    SparseLaurentSeries rb = b.restricted(a.caps());
    out += rb;
    return out;
}

/// Product with every term outside `caps` pruned.  The caller chooses caps
/// inside which the product is exact.
inline SparseLaurentSeries series_mul(const SparseLaurentSeries &a, const SparseLaurentSeries &b, const SeriesCaps &caps)
{
    SparseLaurentSeries out(caps);
    if (a.truncated() || b.truncated()) {
        out.mark_truncated();
    }
    struct Entry {
        ExponentVector e;
        const Rational *c;
    };
    auto flatten = [](const SparseLaurentSeries::Layer &layer) {
        std::vector<Entry> v;
        v.reserve(layer.size());
        for (const auto &[key, c] : layer) {
            v.push_back({detail::unpack(key), &c});
        }
        return v;
    };

    const SeriesCaps &rc = out.caps();
    std::map<int, SparseLaurentSeries::Layer> result;
    mpq_class product;
    bool pruned = false;
    std::vector<std::pair<int, std::vector<Entry>>> b_layers;
    for (const auto &[db, layer] : b.layers()) {
        b_layers.emplace_back(db, flatten(layer));
    }
    for (const auto &[da, layer_a] : a.layers()) {
        const auto entries_a = flatten(layer_a);
        for (const auto &[db, entries_b] : b_layers) {
            const int d = da + db;
            if (d < rc.min_total_degree || d > rc.max_total_degree) {
                pruned = true;
                continue;
            }
            auto &target = result[d];
            for (const auto &ea : entries_a) {
                for (const auto &eb : entries_b) {
                    ExponentVector e;
                    bool inside = true;
                    for (int i = 0; i < kVariableCount; ++i) {
                        e[i] = ea.e[i] + eb.e[i];
                        if (!rc.bounds[i].contains(e[i])) {
                            inside = false;
                            break;
                        }
                    }
                    if (!inside) {
                        pruned = true;
                        continue;
                    }
                    mpq_mul(product.get_mpq_t(), ea.c->get_mpq_t(), eb.c->get_mpq_t());
                    auto [it, inserted] = target.try_emplace(detail::pack(e), product);
                    if (!inserted) {
                        mpq_add(it->second.get_mpq_t(), it->second.get_mpq_t(), product.get_mpq_t());
                    }
                }
            }
        }
    }
    for (auto &[d, layer] : result) {
        for (const auto &[key, c] : layer) {
            out.add_term(detail::unpack(key), c);
        }
    }
    if (pruned) {
        out.mark_truncated();
    }
    return out;
}

/// Product valid on the intersection of both operands' caps.
inline SparseLaurentSeries series_mul(const SparseLaurentSeries &a, const SparseLaurentSeries &b)
{
    return series_mul(a, b, a.caps().intersect(b.caps()));
}

inline SparseLaurentSeries operator+(const SparseLaurentSeries &a, const SparseLaurentSeries &b)
{
    return series_add(a, b);
}

inline SparseLaurentSeries operator*(const SparseLaurentSeries &a, const SparseLaurentSeries &b)
{
    return series_mul(a, b);
}

/// sum_{n <= d} c^n t_j^n / n!   (j is 0-based).
inline SparseLaurentSeries series_exp_linear(const Rational &c, int variable, const SeriesCaps &caps)
{
    SparseLaurentSeries out(caps);
    Rational term(1);
    const int d = std::min(caps.max_total_degree, caps.bounds[variable].max);
    for (int n = 0; n <= d; ++n) {
        ExponentVector e{};
        e[variable] = n;
        out.add_term(e, term);
        term *= c;
        term /= n + 1;
    }
    if (c != 0) {
        out.mark_truncated();
    }
    return out;
}

inline SparseLaurentSeries series_exp_linear(const Rational &c, int variable, int max_degree)
{
    return series_exp_linear(c, variable, SeriesCaps::power_series(max_degree));
}

/// sum_{n <= d} B_n t_j^n / n!, the expansion of t_j / (e^{t_j} - 1).
inline SparseLaurentSeries series_t_over_expm1(int variable, const SeriesCaps &caps)
{
    SparseLaurentSeries out(caps);
    const int d = std::min(caps.max_total_degree, caps.bounds[variable].max);
    for (int n = 0; n <= d; ++n) {
        ExponentVector e{};
        e[variable] = n;
        out.add_term(e, bernoulli_number(static_cast<unsigned>(n)) / Rational(factorial(static_cast<unsigned long>(n))));
    }
    out.mark_truncated();
    return out;
}

inline SparseLaurentSeries series_t_over_expm1(int variable, int max_degree)
{
    return series_t_over_expm1(variable, SeriesCaps::power_series(max_degree));
}

/// Homogeneous degree-one form  a_1 t_1 + ... + a_6 t_6.
class LinearForm
{
public:
    LinearForm() = default;
    explicit LinearForm(std::array<Rational, kVariableCount> coefficients) : coefficients_(std::move(coefficients)) {}

    /// Parses expressions such as "t1/2 - 3t4/2 + t5".
    static LinearForm parse(std::string_view text)
    {
        const auto expr = AffineExpression::parse(text);
        if (expr.constant() != 0) {
            throw std::invalid_argument("linear form has a constant term: " + std::string(text));
        }
        std::array<Rational, kVariableCount> c{};
        for (const auto &[name, value] : expr.coefficients()) {
            if (name.size() != 2 || name[0] != 't' || name[1] < '1' || name[1] > '6') {
                throw std::invalid_argument("unknown variable '" + name + "' in linear form");
            }
            c[name[1] - '1'] = value;
        }
        return LinearForm(c);
    }

    const Rational &operator[](int i) const
    {
        return coefficients_[i];
    }
    const std::array<Rational, kVariableCount> &coefficients() const noexcept
    {
        return coefficients_;
    }

    bool is_zero() const
    {
        return std::all_of(coefficients_.begin(), coefficients_.end(), [](const Rational &c) { return c == 0; });
    }

    std::vector<int> variables() const
    {
        std::vector<int> v;
        for (int i = 0; i < kVariableCount; ++i) {
            if (coefficients_[i] != 0) {
                v.push_back(i);
            }
        }
        return v;
    }

    /// (scale, primitive) with *this == scale * primitive, where primitive has
    /// coprime integer coefficients and a positive first nonzero coefficient.
    std::pair<Rational, LinearForm> normalized() const
    {
        if (is_zero()) {
            throw DomainError("cannot normalize the zero linear form");
        }
        Integer den_lcm(1), num_gcd(0);
        for (const auto &c : coefficients_) {
            if (c != 0) {
                mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
            }
        }
        std::array<Rational, kVariableCount> ints{};
        for (int i = 0; i < kVariableCount; ++i) {
            ints[i] = coefficients_[i] * Rational(den_lcm);
            if (ints[i] != 0) {
                mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), ints[i].get_num_mpz_t());
            }
        }
        Rational scale = make_rational(num_gcd, den_lcm);
        const auto first = std::find_if(coefficients_.begin(), coefficients_.end(), [](const Rational &c) { return c != 0; });
        if (*first < 0) {
            scale = -scale;
        }
        std::array<Rational, kVariableCount> prim{};
        for (int i = 0; i < kVariableCount; ++i) {
            prim[i] = coefficients_[i] / scale;
        }
        return {scale, LinearForm(prim)};
    }

    SparseLaurentSeries as_series(const SeriesCaps &caps) const
    {
        SparseLaurentSeries out(caps);
        for (int i = 0; i < kVariableCount; ++i) {
            ExponentVector e{};
            e[i] = 1;
            out.add_term(e, coefficients_[i]);
        }
        return out;
    }

    std::string to_string() const
    {
        std::string s;
        for (int i = 0; i < kVariableCount; ++i) {
            if (coefficients_[i] == 0) {
                continue;
            }
            const Rational &c = coefficients_[i];
            s += (c < 0) ? "-" : (s.empty() ? "" : "+");
            Rational a = abs(c);
            if (a != 1) {
                s += a.get_str();
                s += "*";
            }
            s += "t" + std::to_string(i + 1);
        }
        return s.empty() ? "0" : s;
    }

    friend bool operator==(const LinearForm &a, const LinearForm &b)
    {
        return a.coefficients_ == b.coefficients_;
    }
    friend bool operator<(const LinearForm &a, const LinearForm &b)
    {
        for (int i = 0; i < kVariableCount; ++i) {
            if (a.coefficients_[i] != b.coefficients_[i]) {
                return a.coefficients_[i] < b.coefficients_[i];
            }
        }
        return false;
    }

private:
    std::array<Rational, kVariableCount> coefficients_{};
};

/// ordering[0] << ordering[1] << ... << ordering[5]  (0-based variables).
using VariableOrdering = std::array<int, kVariableCount>;

inline constexpr VariableOrdering kNaturalOrdering{0, 1, 2, 3, 4, 5};

inline std::array<int, kVariableCount> ordering_ranks(const VariableOrdering &ordering)
{
    std::array<int, kVariableCount> rank{};
    std::array<bool, kVariableCount> seen{};
    for (int r = 0; r < kVariableCount; ++r) {
        const int v = ordering[r];
        if (v < 0 || v >= kVariableCount || seen[v]) {
            throw std::invalid_argument("variable ordering must be a permutation of 0..5");
        }
        seen[v] = true;
        rank[v] = r;
    }
    return rank;
}

/// The variable of L that is largest in the ordering.
inline int leading_variable(const LinearForm &L, const VariableOrdering &ordering)
{
    const auto rank = ordering_ranks(ordering);
    int best = -1;
    for (int v : L.variables()) {
        if (best < 0 || rank[v] > rank[best]) {
            best = v;
        }
    }
    if (best < 0) {
        throw DomainError("the zero linear form has no inverse");
    }
    return best;
}

/// Expansion of 1/L in the iterated region |t_{o(1)}| << ... << |t_{o(6)}|.
///
/// With t_h the leading variable and c its coefficient,
///   1/L = (1/(c t_h)) * sum_j (-R)^j,   R = (L - c t_h) / (c t_h),
/// so every monomial has total degree -1, a nonpositive exponent of t_h and
/// nonnegative exponents elsewhere.  Powers of R are pruned as soon as they
/// leave the caps, which is exact because exponents of t_h only decrease and
/// all others only increase with j.
inline SparseLaurentSeries laurent_inverse_linear_form(const LinearForm &L, const VariableOrdering &ordering, const SeriesCaps &caps)
{
    const int h = leading_variable(L, ordering);
    const Rational &ch = L[h];
    SparseLaurentSeries out(caps);
    const SeriesCaps &c = out.caps();
    if (c.min_total_degree > -1 || c.max_total_degree < -1) {
        out.mark_truncated();
        return out;
    }

    struct Piece {
        int variable;
        Rational coefficient; // coefficient of t_i / t_h in -R
    };
    std::vector<Piece> minus_r;
    int j_max = -1 - c.bounds[h].min;
    int other_room = 0;
    for (int v : L.variables()) {
        if (v == h) {
            continue;
        }
        minus_r.push_back({v, -L[v] / ch});
        other_room += std::max(0, c.bounds[v].max);
    }
    if (minus_r.empty()) {
        ExponentVector e{};
        e[h] = -1;
        out.add_term(e, Rational(1) / ch);
        return out;
    }
    j_max = std::min(j_max, other_room);

    // Box for the running power: bounded above in the non-leading variables
    // and below in the leading one; unrelated variables stay at zero.
    SeriesCaps running;
    running.min_total_degree = -1;
    running.max_total_degree = -1;
    for (int i = 0; i < kVariableCount; ++i) {
        running.bounds[i] = {0, 0};
    }
    running.bounds[h] = {c.bounds[h].min, -1};
    for (const auto &p : minus_r) {
        running.bounds[p.variable] = {0, c.bounds[p.variable].max};
    }
    running = running.clamped();

    ExponentVector e0{};
    e0[h] = -1;
    SparseLaurentSeries power = SparseLaurentSeries::monomial(e0, Rational(1) / ch, running);
    SparseLaurentSeries step(SeriesCaps::box({}, 0, 0));
    {
        std::array<ExponentRange, kVariableCount> b{};
        for (auto &r : b) {
            r = {0, 0};
        }
        b[h] = {-1, 0};
        for (const auto &p : minus_r) {
            b[p.variable] = {0, 1};
        }
        step = SparseLaurentSeries(SeriesCaps::box(b, 0, 0));
        for (const auto &p : minus_r) {
            ExponentVector e{};
            e[p.variable] = 1;
            e[h] = -1;
            step.add_term(e, p.coefficient);
        }
    }
    for (int j = 0; j <= j_max && !power.is_zero(); ++j) {
        power.for_each_term([&](const ExponentVector &e, const Rational &v) { out.add_term(e, v); });
        power = series_mul(power, step, running);
    }
    out.mark_truncated();
    return out;
}

/// Quotient q with q * L = n, by long division in the pivot variable.
///
/// Each homogeneous layer is divided separately.  Monomials are consumed from
/// the highest pivot exponent downward; whatever remains at the lowest pivot
/// exponent allowed by the caps must vanish, otherwise n is not a multiple of L
/// and a ConsistencyError naming the offending monomial is thrown.  The result
/// is exact when n carries no per-variable truncation (complete layers).
inline SparseLaurentSeries exact_divide_by_linear_form(const SparseLaurentSeries &n, const LinearForm &L, int pivot)
{
    if (pivot < 0 || pivot >= kVariableCount || L[pivot] == 0) {
        throw DomainError("pivot coefficient of the divisor is zero");
    }
    const Rational &cp = L[pivot];
    std::vector<std::pair<int, Rational>> others;
    for (int v : L.variables()) {
        if (v != pivot) {
            others.emplace_back(v, L[v]);
        }
    }
    SeriesCaps qcaps = n.caps();
    qcaps.min_total_degree -= 1;
    qcaps.max_total_degree -= 1;
    SparseLaurentSeries quotient(qcaps);
    if (n.truncated()) {
        quotient.mark_truncated();
    }
    const int bottom = n.caps().bounds[pivot].min;

    for (const auto &[degree, layer] : n.layers()) {
        std::map<int, SparseLaurentSeries::Layer, std::greater<int>> levels;
        for (const auto &[key, c] : layer) {
            levels[detail::unpack(key)[pivot]].emplace(key, c);
        }
        while (!levels.empty()) {
            auto top = levels.begin();
            const int level = top->first;
            SparseLaurentSeries::Layer current = std::move(top->second);
            levels.erase(top);
            if (level <= bottom) {
                for (const auto &[key, c] : current) {
                    if (c != 0) {
                        throw ConsistencyError("series is not divisible by " + L.to_string() + ": remainder at monomial "
                                               + to_string(detail::unpack(key)));
                    }
                }
                continue;
            }
            auto &below = levels[level - 1];
            for (const auto &[key, c] : current) {
                if (c == 0) {
                    continue;
                }
                ExponentVector e = detail::unpack(key);
                e[pivot] -= 1;
                const Rational qc = c / cp;
                quotient.add_term(e, qc);
                for (const auto &[v, cv] : others) {
                    ExponentVector f = e;
                    f[v] += 1;
                    below[detail::pack(f)] -= qc * cv;
                }
            }
        }
    }
    return quotient;
}

} // namespace g2zeta

#endif
