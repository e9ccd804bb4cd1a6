#pragma once

// Independent reference computations used by the unit tests and the
// acceptance checks. They deliberately avoid the library code paths and use
// plain int64 loops or hard-coded decimal constants instead.

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace oracle {

/// Number of reduced primitive positive definite forms (a, b, c) with
/// b² − 4ac = disc, by scanning a <= sqrt(|disc|/3) and b in (−a, a].
inline std::int64_t reduced_form_count(std::int64_t disc)
{
    const std::int64_t n = -disc;
    std::int64_t count = 0;
    for (std::int64_t a = 1; 3 * a * a <= n; ++a) {
        for (std::int64_t b = -a + 1; b <= a; ++b) {
            const std::int64_t num = b * b - disc;
            if (num % (4 * a) != 0) continue;
            const std::int64_t c = num / (4 * a);
            if (c < a) continue;
            if (c == a && b < 0) continue;
            std::int64_t g = std::gcd(std::gcd(a, b < 0 ? -b : b), c);
            if (g != 1) continue;
            ++count;
        }
    }
    return count;
}

/// p + 1 − #E(F_p) for y² = x³ + a·x + b, counting solutions (x, y)
/// through a table of how many y square to each residue.
inline std::int64_t brute_force_ap(std::int64_t a, std::int64_t b, std::int64_t p)
{
    std::vector<std::int64_t> roots(static_cast<std::size_t>(p), 0);
    for (std::int64_t y = 0; y < p; ++y) ++roots[static_cast<std::size_t>(y * y % p)];
    auto reduce = [p](std::int64_t v) { return ((v % p) + p) % p; };
    std::int64_t points = 1;  // the point at infinity
    for (std::int64_t x = 0; x < p; ++x) {
        const std::int64_t rhs = reduce(reduce(x * x % p * x) + reduce(a) * x % p + reduce(b));
        points += roots[static_cast<std::size_t>(rhs)];
    }
    return p + 1 - points;
}

/// pi to 60 decimal places, truncated; the true value lies within 10^-60 above.
inline const char* kPiDecimal = "3.141592653589793238462643383279502884197169399375105820974944";

inline mpq_class pi_lower()
{
    const std::string digits = std::string(kPiDecimal).erase(1, 1);
    mpz_class num(digits);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, digits.size() - 1);
    return mpq_class(num, den);
}

inline mpq_class pi_upper()
{
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, 60);
    return pi_lower() + mpq_class(1, den);
}

/// 2^38·3^14·5^6·7^3·11^2·13·17·19, written out as a decimal product.
inline mpz_class minkowski_20()
{
    mpz_class m = 1;
    const std::vector<std::pair<unsigned long, unsigned long>> factors = {
        {2, 38}, {3, 14}, {5, 6}, {7, 3}, {11, 2}, {13, 1}, {17, 1}, {19, 1}};
    for (const auto& [p, e] : factors) {
        for (unsigned long i = 0; i < e; ++i) m *= p;
    }
    return m;
}

}  // namespace oracle
