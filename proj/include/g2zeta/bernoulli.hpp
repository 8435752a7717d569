#ifndef G2ZETA_BERNOULLI_HPP
#define G2ZETA_BERNOULLI_HPP

#include <mutex>
#include <stdexcept>
#include <vector>

#include <g2zeta/pi_value.hpp>
#include <g2zeta/rational.hpp>

namespace g2zeta
{

/// B_n with B_1 = -1/2, i.e. t/(e^t - 1) = sum B_n t^n / n!.
inline Rational bernoulli_number(unsigned n)
{
    static std::mutex mutex;
    static std::vector<Rational> cache{Rational(1)};
    std::lock_guard<std::mutex> lock(mutex);
    while (cache.size() <= n) {
        // sum_{j=0}^{m} C(m+1, j) B_j = 0 solved for B_m.
        const unsigned m = static_cast<unsigned>(cache.size());
        Rational acc(0);
        for (unsigned j = 0; j < m; ++j) {
            if (j > 1 && (j % 2) == 1) {
                continue; // odd Bernoulli numbers beyond B_1 vanish
            }
            acc += Rational(binomial(m + 1, j)) * cache[j];
        }
        cache.push_back(-acc / Rational(m + 1));
    }
    return cache[n];
}

/// zeta(m) for even m >= 0 as a rational multiple of pi^m; zeta(0) = -1/2.
inline PiValue zeta_even_exact(int m)
{
    if (m < 0 || (m % 2) != 0) {
        throw std::domain_error("zeta_even_exact requires a nonnegative even argument, got " + std::to_string(m));
    }
    if (m == 0) {
        return PiValue(make_rational(-1, 2), 0);
    }
    // zeta(m) = (-1)^{m/2+1} B_m (2 pi)^m / (2 m!)
    Rational c = bernoulli_number(static_cast<unsigned>(m)) * pow(Rational(2), m)
                 / (Rational(2) * Rational(factorial(static_cast<unsigned long>(m))));
    if ((m / 2) % 2 == 0) {
        c = -c;
    }
    return PiValue(c, m);
}

/// phi(m) = sum_{n>=1} (-1)^n n^{-m} = (2^{1-m} - 1) zeta(m) for even m >= 0.
inline PiValue phi_even_exact(int m)
{
    if (m < 0 || (m % 2) != 0) {
        throw std::domain_error("phi_even_exact requires a nonnegative even argument, got " + std::to_string(m));
    }
    return (pow(Rational(2), 1 - m) - 1) * zeta_even_exact(m);
}

} // namespace g2zeta

#endif
