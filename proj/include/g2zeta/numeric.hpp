#ifndef G2ZETA_NUMERIC_HPP
#define G2ZETA_NUMERIC_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include <quadmath.h>

#include <g2zeta/bernoulli.hpp>
#include <g2zeta/errors.hpp>
#include <g2zeta/rational.hpp>
#include <g2zeta/root_system.hpp>

namespace g2zeta
{

using Wide = __float128;

struct SummationConfig {
    long limit = 4000;         // N: the rectangle 1 <= m, n <= N
    int working_precision = 25; // significant decimal digits
    bool tail_estimation = true;
};

struct NumericValue {
    Wide value = 0;
    Wide imag = 0;
    Wide error_bound = 0; // bounds the error of each component
};

inline std::string to_string(Wide x, int significant_digits = 30)
{
    char buffer[128];
    quadmath_snprintf(buffer, sizeof buffer, "%.*Qe", significant_digits - 1, x);
    return buffer;
}

inline Wide wide_from_rational(const Rational &q)
{
    // 40 significant digits are beyond __float128 resolution.
    mpf_class x(q, 256);
    char *text = nullptr;
    gmp_asprintf(&text, "%.40Fe", x.get_mpf_t());
    const Wide out = strtoflt128(text, nullptr);
    void (*free_fn)(void *, size_t);
    mp_get_memory_functions(nullptr, nullptr, &free_fn);
    free_fn(text, std::char_traits<char>::length(text) + 1);
    return out;
}

inline Wide wide_from_mpf(const mpf_class &x)
{
    char *text = nullptr;
    gmp_asprintf(&text, "%.40Fe", x.get_mpf_t());
    const Wide out = strtoflt128(text, nullptr);
    void (*free_fn)(void *, size_t);
    mp_get_memory_functions(nullptr, nullptr, &free_fn);
    free_fn(text, std::char_traits<char>::length(text) + 1);
    return out;
}

namespace detail
{
/// Elementary functions for each supported working type.
template <typename Real>
struct RealOps;

template <>
struct RealOps<double> {
    static double exp(double x) { return std::exp(x); }
    static double log(double x) { return std::log(x); }
    static double cos(double x) { return std::cos(x); }
    static double sin(double x) { return std::sin(x); }
    static double pi() { return 3.14159265358979323846; }
    static constexpr double epsilon = std::numeric_limits<double>::epsilon();
};

template <>
struct RealOps<long double> {
    static long double exp(long double x) { return std::exp(x); }
    static long double log(long double x) { return std::log(x); }
    static long double cos(long double x) { return std::cos(x); }
    static long double sin(long double x) { return std::sin(x); }
    static long double pi() { return 3.141592653589793238462643383279502884L; }
    static constexpr long double epsilon = std::numeric_limits<long double>::epsilon();
};

template <>
struct RealOps<Wide> {
    static Wide exp(Wide x) { return expq(x); }
    static Wide log(Wide x) { return logq(x); }
    static Wide cos(Wide x) { return cosq(x); }
    static Wide sin(Wide x) { return sinq(x); }
    static Wide pi() { return M_PIq; }
    static constexpr Wide epsilon = FLT128_EPSILON;
};

/// Deterministic pairwise summation: fixed blocks of 32 summed left to right,
/// block sums merged through a binary counter.
template <typename Real>
class PairwiseSum
{
public:
    static constexpr int kBlock = 32;

    void add(Real x)
    {
        block_ += x;
        if (++in_block_ == kBlock) {
            push(block_);
            block_ = 0;
            in_block_ = 0;
        }
        ++count_;
    }

    Real total() const
    {
        Real acc = block_;
        for (std::size_t i = 0; i < levels_.size(); ++i) {
            if (occupied_[i]) {
                acc += levels_[i];
            }
        }
        return acc;
    }

    /// Bound on the number of roundings any single summand passes through.
    double depth() const
    {
        return kBlock + static_cast<double>(levels_.size()) + 2;
    }

    long long count() const
    {
        return count_;
    }

private:
    void push(Real v)
    {
        for (std::size_t i = 0;; ++i) {
            if (i == levels_.size()) {
                levels_.push_back(v);
                occupied_.push_back(true);
                return;
            }
            if (!occupied_[i]) {
                levels_[i] = v;
                occupied_[i] = true;
                return;
            }
            v += levels_[i];
            occupied_[i] = false;
        }
    }

    Real block_ = 0;
    int in_block_ = 0;
    long long count_ = 0;
    std::vector<Real> levels_;
    std::vector<bool> occupied_;
};

inline bool is_integral(double x)
{
    return x == std::floor(x) && std::fabs(x) < 1e9;
}

/// L^{-s} for L = 0..size-1 (entry 0 unused), with a bound on the relative
/// error of each entry in units of epsilon.
template <typename Real>
std::vector<Real> power_table(double s, long size, double &relative_ulps)
{
    using Ops = RealOps<Real>;
    std::vector<Real> t(static_cast<std::size_t>(size), Real(1));
    if (s == 0) {
        relative_ulps = 0;
        return t;
    }
    if (is_integral(s) && s > 0 && s <= 64) {
        const int k = static_cast<int>(s);
        for (long L = 1; L < size; ++L) {
            Real p = 1;
            const Real base = static_cast<Real>(L);
            for (int i = 0; i < k; ++i) {
                p *= base;
            }
            t[static_cast<std::size_t>(L)] = Real(1) / p;
        }
        relative_ulps = k + 1;
        return t;
    }
    const Real rs = static_cast<Real>(s);
    for (long L = 1; L < size; ++L) {
        t[static_cast<std::size_t>(L)] = Ops::exp(-rs * Ops::log(static_cast<Real>(L)));
    }
    relative_ulps = 4 + std::fabs(s) * std::log(static_cast<double>(size)) * 2;
    return t;
}

struct ConvergenceGate {
    // Checked in this order; the first failing inequality is reported.
    static void check(const std::array<double, 6> &s)
    {
        for (int j = 0; j < 6; ++j) {
            if (!(s[j] >= 0)) {
                throw DomainError("convergence gate: s" + std::to_string(j + 1) + " >= 0 fails");
            }
        }
        const double c = s[2] + s[3] + s[4] + s[5];
        if (!(s[0] + c > 1)) {
            throw DomainError("convergence gate: s1+s3+s4+s5+s6 > 1 fails");
        }
        if (!(s[1] + c > 1)) {
            throw DomainError("convergence gate: s2+s3+s4+s5+s6 > 1 fails");
        }
        if (!(s[0] + s[1] + c > 2)) {
            throw DomainError("convergence gate: s1+s2+s3+s4+s5+s6 > 2 fails");
        }
    }
};

/// Rigorous bound for the part of the double series outside 1 <= m, n <= N.
///
/// With c = s3+s4+s5+s6, every summand is at most m^{-s1} n^{-s2} (m+n)^{-c}
/// and (m+n)^{-c} <= m^{-a} n^{-(c-a)} for 0 <= a <= c.  For the region
/// m > N this gives  N^{1-A}/(A-1) * B/(B-1)  with A = s1+a, B = s2+c-a
/// (integral comparison and zeta(B) <= B/(B-1)); n > N, m <= N is the mirror.
/// The split a is optimized on a grid for each region.
inline double tail_bound(const std::array<double, 6> &s, long N)
{
    const double c = s[2] + s[3] + s[4] + s[5];
    auto region = [&](double first, double second) {
        // exponent first+a on the sum over (N, inf), second+c-a on the full sum
        double best = std::numeric_limits<double>::infinity();
        const double lo = std::max(0.0, 1 - first);
        const double hi = std::min(c, second + c - 1);
        if (!(hi > lo)) {
            return best;
        }
        constexpr int kSteps = 400;
        for (int i = 1; i < kSteps; ++i) {
            const double a = lo + (hi - lo) * i / kSteps;
            const double A = first + a;
            const double B = second + c - a;
            const double b = std::exp((1 - A) * std::log(static_cast<double>(N))) / (A - 1) * (B / (B - 1));
            best = std::min(best, b);
        }
        return best;
    };
    return region(s[0], s[1]) + region(s[1], s[0]);
}

template <typename Real>
struct RectangleSum {
    Real re = 0;
    Real im = 0;
    Real abs_sum = 0; // sum of |term| with the phase ignored
    double ulps = 0;  // per-term relative error bound in units of epsilon
};

// Sum over 1 <= m, n <= N of the summand, with the phase e^{2 pi i (m y1 + n y2)}
// when y is given as integers (a1, a2) over a common denominator D > 1.
template <typename Real>
RectangleSum<Real> rectangle_sum(const std::array<double, 6> &s, long N, long a1, long a2, long D)
{
    using Ops = RealOps<Real>;
    const long size = 5 * N + 1;
    std::array<std::vector<Real>, 6> tables;
    double ulps = 6;
    for (int j = 0; j < 6; ++j) {
        double r = 0;
        tables[j] = power_table<Real>(s[j], size, r);
        ulps += r;
    }
    std::vector<Real> cos_t, sin_t;
    const bool twisted = D > 1;
    if (twisted) {
        cos_t.resize(static_cast<std::size_t>(D));
        sin_t.resize(static_cast<std::size_t>(D));
        for (long j = 0; j < D; ++j) {
            const Real angle = 2 * Ops::pi() * static_cast<Real>(j) / static_cast<Real>(D);
            cos_t[static_cast<std::size_t>(j)] = Ops::cos(angle);
            sin_t[static_cast<std::size_t>(j)] = Ops::sin(angle);
        }
        ulps += 8;
    }
    const Real *T1 = tables[0].data();
    const Real *T2 = tables[1].data();
    const Real *T3 = tables[2].data();
    const Real *T4 = tables[3].data();
    const Real *T5 = tables[4].data();
    const Real *T6 = tables[5].data();

    PairwiseSum<Real> re, im, mag;
    for (long m = 1; m <= N; ++m) {
        const Real row = T1[m];
        long phase = twisted ? ((a1 * m) % D + D) % D : 0;
        const long step = twisted ? ((a2 % D) + D) % D : 0;
        for (long n = 1; n <= N; ++n) {
            const Real term = row * T2[n] * T3[m + n] * T4[m + 2 * n] * T5[m + 3 * n] * T6[2 * m + 3 * n];
            if (twisted) {
                phase += step;
                if (phase >= D) {
                    phase -= D;
                }
                re.add(term * cos_t[static_cast<std::size_t>(phase)]);
                im.add(term * sin_t[static_cast<std::size_t>(phase)]);
                mag.add(term);
            } else {
                re.add(term);
            }
        }
    }
    RectangleSum<Real> out;
    out.re = re.total();
    out.im = twisted ? im.total() : Real(0);
    out.abs_sum = twisted ? mag.total() : out.re;
    out.ulps = ulps + re.depth();
    return out;
}

inline long lcm_denominator(const RationalPair &y)
{
    Integer l;
    mpz_lcm(l.get_mpz_t(), y[0].get_den_mpz_t(), y[1].get_den_mpz_t());
    if (!l.fits_slong_p() || l > 100000000) {
        throw DomainError("denominator of y too large for the phase table");
    }
    return l.get_si();
}

template <typename Real>
NumericValue zeta2_numeric_typed(const std::array<double, 6> &s, const RationalPair &y, const SummationConfig &cfg)
{
    ConvergenceGate::check(s);
    long D = 1, a1 = 0, a2 = 0;
    const RationalPair frac{fractional_part(y[0]), fractional_part(y[1])};
    if (frac[0] != 0 || frac[1] != 0) {
        D = lcm_denominator(frac);
        a1 = Integer(frac[0] * Rational(D)).get_si();
        a2 = Integer(frac[1] * Rational(D)).get_si();
    }
    const auto r = rectangle_sum<Real>(s, cfg.limit, a1, a2, D);
    NumericValue out;
    out.value = static_cast<Wide>(r.re);
    out.imag = static_cast<Wide>(r.im);
    const Wide eps = static_cast<Wide>(RealOps<Real>::epsilon);
    // Twice the first-order rounding estimate covers higher-order terms.
    Wide bound = 2 * static_cast<Wide>(r.ulps) * eps * static_cast<Wide>(r.abs_sum);
    if (cfg.tail_estimation) {
        bound += static_cast<Wide>(tail_bound(s, cfg.limit));
    }
    out.error_bound = bound;
    return out;
}
} // namespace detail

inline void validate(const SummationConfig &cfg)
{
    if (cfg.limit < 16) {
        throw DomainError("summation limit must be at least 16");
    }
    if (cfg.limit > 200000) {
        throw DomainError("summation limit above 200000 is not supported");
    }
    if (cfg.working_precision < 15 || cfg.working_precision > 33) {
        throw DomainError("working precision must be between 15 and 33 significant digits");
    }
}

/// Phase-twisted double series sum_{m,n} e^{2 pi i (m y1 + n y2)} / (...).
inline NumericValue zeta2_numeric_twisted(const std::array<double, 6> &s, const RationalPair &y, const SummationConfig &cfg = {})
{
    validate(cfg);
    if (cfg.working_precision <= 15) {
        return detail::zeta2_numeric_typed<double>(s, y, cfg);
    }
    if (cfg.working_precision <= 18) {
        return detail::zeta2_numeric_typed<long double>(s, y, cfg);
    }
    return detail::zeta2_numeric_typed<Wide>(s, y, cfg);
}

inline NumericValue zeta2_numeric(const std::array<double, 6> &s, const SummationConfig &cfg = {})
{
    return zeta2_numeric_twisted(s, RationalPair{0, 0}, cfg);
}

/// zeta(s) for real s > 0, s != 1, by Euler-Maclaurin summation.
inline NumericValue riemann_zeta_numeric(Wide s, int cutoff = 40, int corrections = 30)
{
    if (!(s > 0)) {
        throw DomainError("riemann_zeta_numeric needs s > 0");
    }
    if (s == 1) {
        throw SingularArgumentError("zeta has a pole at s = 1");
    }
    const Wide N = cutoff;
    Wide head = 0;
    for (int n = cutoff - 1; n >= 1; --n) {
        head += powq(static_cast<Wide>(n), -s);
    }
    const Wide Ns = powq(N, -s);
    Wide sum = head + N * Ns / (s - 1) + Ns / 2;
    // B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1}
    Wide rising = s;               // s(s+1)...(s+2k-2)
    Wide power = Ns / N;           // N^{-s-2k+1}
    Wide last = 0;
    for (int k = 1; k <= corrections + 1; ++k) {
        const Rational bk = bernoulli_number(static_cast<unsigned>(2 * k)) / Rational(factorial(static_cast<unsigned long>(2 * k)));
        const Wide term = wide_from_rational(bk) * rising * power;
        if (k <= corrections) {
            sum += term;
        } else {
            last = term;
        }
        rising *= (s + 2 * k - 1) * (s + 2 * k);
        power /= N * N;
    }
    NumericValue out;
    out.value = sum;
    out.error_bound = 2 * fabsq(last) + 64 * FLT128_EPSILON * fabsq(sum);
    return out;
}

/// phi(s) = (2^{1-s} - 1) zeta(s); the removable point s = 1 gives -log 2.
inline NumericValue phi_numeric(Wide s)
{
    if (!(s > 0)) {
        throw DomainError("phi_numeric needs s > 0");
    }
    NumericValue out;
    if (s == 1) {
        out.value = -M_LN2q;
        out.error_bound = 4 * FLT128_EPSILON;
        return out;
    }
    const NumericValue z = riemann_zeta_numeric(s);
    const Wide f = powq(2, 1 - s) - 1;
    out.value = f * z.value;
    out.error_bound = fabsq(f) * z.error_bound + 8 * FLT128_EPSILON * fabsq(out.value);
    return out;
}

/// Which Weyl image of y pairs with the permuted argument tuple.
enum class WeylOrientation {
    inverse_on_y, // zeta_2(w^{-1} s, w^{-1} y) with (w^{-1} s)_j = s_{perm_w(j)}
    direct_on_y,  // same tuple, y moved by w instead
};

/// Signed sum over the Weyl group of twisted series at integer k >= 1.
inline NumericValue S_numeric(const std::array<int, 6> &k, const RationalPair &y, const SummationConfig &cfg = {},
                              WeylOrientation orientation = WeylOrientation::inverse_on_y)
{
    for (int v : k) {
        if (v < 1) {
            throw DomainError("S_numeric needs integer entries >= 1");
        }
    }
    NumericValue out;
    for (const auto &w : weyl_group()) {
        const auto t = induced_argument_permutation(w, k);
        int parity = 0;
        for (int j : delta_w(w)) {
            parity += t[j];
        }
        const RationalPair yw = weyl_action_on_y(orientation == WeylOrientation::inverse_on_y ? inverse(w) : w, y);
        std::array<double, 6> sd{};
        for (int j = 0; j < 6; ++j) {
            sd[j] = t[j];
        }
        const NumericValue z = zeta2_numeric_twisted(sd, yw, cfg);
        const int sign = (parity % 2 == 0) ? 1 : -1;
        out.value += sign * z.value;
        out.imag += sign * z.imag;
        out.error_bound += z.error_bound;
    }
    return out;
}

/// zeta_W(s) = K^s zeta_2(s, ..., s).
inline NumericValue witten_numeric(double s, const SummationConfig &cfg = {})
{
    const NumericValue z = zeta2_numeric({s, s, s, s, s, s}, cfg);
    const Wide K = powq(static_cast<Wide>(k_constant()), s);
    NumericValue out;
    out.value = K * z.value;
    out.error_bound = K * z.error_bound + 8 * FLT128_EPSILON * fabsq(out.value);
    return out;
}

} // namespace g2zeta

#endif
