#ifndef G2ZETA_RATIONAL_HPP
#define G2ZETA_RATIONAL_HPP

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace g2zeta
{

using Integer = mpz_class;
// mpq_class keeps numerator/denominator canonical after every arithmetic
// operation; values built from raw parts must go through make_rational().
using Rational = mpq_class;

inline Rational make_rational(long numerator, long denominator = 1)
{
    if (denominator == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    Rational r(numerator, denominator);
    r.canonicalize();
    return r;
}

inline Rational make_rational(const Integer &numerator, const Integer &denominator)
{
    if (denominator == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    Rational r(numerator, denominator);
    r.canonicalize();
    return r;
}

/// Largest integer not exceeding x (rounds toward minus infinity).
inline Integer floor(const Rational &x)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

/// x - floor(x), always in [0, 1).
inline Rational fractional_part(const Rational &x)
{
    return x - Rational(floor(x));
}

inline bool is_integer(const Rational &x)
{
    return x.get_den() == 1;
}

inline Rational pow(const Rational &base, long exponent)
{
    if (exponent < 0) {
        if (base == 0) {
            throw std::domain_error("zero raised to a negative power");
        }
        return pow(Rational(1) / base, -exponent);
    }
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return make_rational(num, den);
}

inline Integer factorial(unsigned long n)
{
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

/// Generalized binomial top(top-1)...(top-k+1)/k!; zero for k < 0.
inline Rational binomial(const Rational &top, long k)
{
    if (k < 0) {
        return 0;
    }
    Rational acc(1);
    for (long i = 0; i < k; ++i) {
        acc *= top - i;
    }
    return acc / Rational(factorial(static_cast<unsigned long>(k)));
}

inline Integer binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

/// Serializes as "numerator/denominator"; integers keep an explicit "/1".
inline std::string to_string(const Rational &x)
{
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

/// Accepts "p", "p/q", with optional sign; whitespace is not allowed.
inline Rational parse_rational(std::string_view text)
{
    if (text.empty()) {
        throw std::invalid_argument("empty rational");
    }
    const auto slash = text.find('/');
    auto parse_int = [](std::string_view digits) {
        std::size_t start = (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) ? 1 : 0;
        if (start == digits.size()) {
            throw std::invalid_argument("malformed integer '" + std::string(digits) + "'");
        }
        for (std::size_t i = start; i < digits.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(digits[i]))) {
                throw std::invalid_argument("malformed integer '" + std::string(digits) + "'");
            }
        }
        std::string owned(digits[0] == '+' ? digits.substr(1) : digits);
        return Integer(owned);
    };
    if (slash == std::string_view::npos) {
        return Rational(parse_int(text));
    }
    const Integer den = parse_int(text.substr(slash + 1));
    if (den == 0) {
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    return make_rational(parse_int(text.substr(0, slash)), den);
}

} // namespace g2zeta

#endif
