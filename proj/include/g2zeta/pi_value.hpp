#ifndef G2ZETA_PI_VALUE_HPP
#define G2ZETA_PI_VALUE_HPP

#include <cstdio>
#include <map>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

#include <g2zeta/rational.hpp>

namespace g2zeta
{

struct GaussianRational {
    Rational re{0};
    Rational im{0};

    GaussianRational() = default;
    GaussianRational(Rational real, Rational imag = 0) : re(std::move(real)), im(std::move(imag)) {}

    static GaussianRational i_power(long n)
    {
        switch (((n % 4) + 4) % 4) {
            case 0:
                return {1, 0};
            case 1:
                return {0, 1};
            case 2:
                return {-1, 0};
            default:
                return {0, -1};
        }
    }

    bool is_zero() const
    {
        return re == 0 && im == 0;
    }
    bool is_real() const
    {
        return im == 0;
    }

    friend GaussianRational operator+(const GaussianRational &a, const GaussianRational &b)
    {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational &a, const GaussianRational &b)
    {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator-(const GaussianRational &a)
    {
        return {-a.re, -a.im};
    }
    friend GaussianRational operator*(const GaussianRational &a, const GaussianRational &b)
    {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const GaussianRational &a, const GaussianRational &b)
    {
        return a.re == b.re && a.im == b.im;
    }
};

/// (re + i*im) * pi^pi_power.
struct PiValue {
    GaussianRational coeff;
    int pi_power = 0;

    PiValue() = default;
    PiValue(GaussianRational c, int power) : coeff(std::move(c)), pi_power(power)
    {
        if (power < 0) {
            throw std::domain_error("PiValue requires a nonnegative power of pi");
        }
    }
    PiValue(Rational c, int power) : PiValue(GaussianRational(std::move(c)), power) {}

    friend PiValue operator*(const PiValue &a, const PiValue &b)
    {
        return {a.coeff * b.coeff, a.pi_power + b.pi_power};
    }
    friend PiValue operator*(const Rational &s, const PiValue &a)
    {
        return {GaussianRational(s) * a.coeff, a.pi_power};
    }
    friend bool operator==(const PiValue &a, const PiValue &b)
    {
        if (a.coeff.is_zero() && b.coeff.is_zero()) {
            return true;
        }
        return a.pi_power == b.pi_power && a.coeff == b.coeff;
    }
};

/// Finite sum of PiValues grouped by power of pi; zero groups are dropped.
class PiPolynomial
{
public:
    PiPolynomial() = default;
    PiPolynomial(const PiValue &v)
    {
        add(v);
    }

    void add(const PiValue &v)
    {
        if (v.coeff.is_zero()) {
            return;
        }
        auto &slot = terms_[v.pi_power];
        slot = slot + v.coeff;
        if (slot.is_zero()) {
            terms_.erase(v.pi_power);
        }
    }

    const std::map<int, GaussianRational> &terms() const noexcept
    {
        return terms_;
    }
    bool is_zero() const noexcept
    {
        return terms_.empty();
    }

    GaussianRational coefficient(int pi_power) const
    {
        auto it = terms_.find(pi_power);
        return it == terms_.end() ? GaussianRational{} : it->second;
    }

    /// The single PiValue this polynomial reduces to; throws if it has
    /// several distinct powers of pi.
    PiValue as_monomial() const
    {
        if (terms_.empty()) {
            return PiValue(Rational(0), 0);
        }
        if (terms_.size() != 1) {
            throw std::logic_error("PiPolynomial has more than one power of pi");
        }
        return PiValue(terms_.begin()->second, terms_.begin()->first);
    }

    PiPolynomial &operator+=(const PiPolynomial &o)
    {
        for (const auto &[w, c] : o.terms_) {
            add(PiValue(c, w));
        }
        return *this;
    }
    PiPolynomial &operator-=(const PiPolynomial &o)
    {
        for (const auto &[w, c] : o.terms_) {
            add(PiValue(-c, w));
        }
        return *this;
    }
    friend PiPolynomial operator+(PiPolynomial a, const PiPolynomial &b)
    {
        return a += b;
    }
    friend PiPolynomial operator-(PiPolynomial a, const PiPolynomial &b)
    {
        return a -= b;
    }
    friend PiPolynomial operator*(const PiPolynomial &a, const PiPolynomial &b)
    {
        PiPolynomial out;
        for (const auto &[wa, ca] : a.terms_) {
            for (const auto &[wb, cb] : b.terms_) {
                out.add(PiValue(ca * cb, wa + wb));
            }
        }
        return out;
    }
    friend PiPolynomial operator*(const Rational &s, const PiPolynomial &a)
    {
        PiPolynomial out;
        for (const auto &[w, c] : a.terms_) {
            out.add(PiValue(GaussianRational(s) * c, w));
        }
        return out;
    }
    friend bool operator==(const PiPolynomial &a, const PiPolynomial &b)
    {
        return a.terms_ == b.terms_;
    }

private:
    std::map<int, GaussianRational> terms_;
};

// Decimal evaluation of exact values.

/// Fifty digits of pi after the decimal point.
inline constexpr const char *kPiDigits = "3.14159265358979323846264338327950288419716939937510";
inline constexpr int kPiDigitsUsed = 50;

namespace detail
{
inline constexpr mp_bitcnt_t kDecimalBits = 512;

inline mpf_class pi_mpf()
{
    return mpf_class(kPiDigits, kDecimalBits);
}

inline mpf_class rational_mpf(const Rational &q)
{
    mpf_class num(q.get_num(), kDecimalBits);
    mpf_class den(q.get_den(), kDecimalBits);
    return mpf_class(num / den, kDecimalBits);
}

inline std::string format_mpf(const mpf_class &x, int significant_digits)
{
    char *buffer = nullptr;
    gmp_asprintf(&buffer, "%.*Fe", significant_digits - 1, x.get_mpf_t());
    std::string out(buffer);
    void (*free_fn)(void *, size_t);
    mp_get_memory_functions(nullptr, nullptr, &free_fn);
    free_fn(buffer, out.size() + 1);
    return out;
}
} // namespace detail

/// Real part of v evaluated with the stored pi constant, at high precision.
inline mpf_class to_mpf(const PiValue &v, bool imaginary_part = false)
{
    mpf_class c = detail::rational_mpf(imaginary_part ? v.coeff.im : v.coeff.re);
    mpf_class pi_w(1, detail::kDecimalBits);
    mpf_pow_ui(pi_w.get_mpf_t(), detail::pi_mpf().get_mpf_t(), static_cast<unsigned long>(v.pi_power));
    return mpf_class(c * pi_w, detail::kDecimalBits);
}

inline mpf_class to_mpf(const PiPolynomial &p)
{
    mpf_class acc(0, detail::kDecimalBits);
    for (const auto &[w, c] : p.terms()) {
        acc += to_mpf(PiValue(c, w));
    }
    return acc;
}

/// Scientific notation with the requested number of significant digits.
inline std::string to_decimal_string(const PiValue &v, int significant_digits = 30, bool imaginary_part = false)
{
    return detail::format_mpf(to_mpf(v, imaginary_part), significant_digits);
}

} // namespace g2zeta

#endif
