#include "cmbrauer/certified.hpp"

#include <algorithm>

namespace cmbrauer {

namespace {

Integer power_of_ten(unsigned digits) { return ipow(Integer(10), digits); }

// Smallest B with 2^B >= 256 · 10^digits.
unsigned long dyadic_bits(unsigned digits)
{
    const Integer target = 256 * power_of_ten(digits);
    unsigned long bits = 0;
    Integer p = 1;
    while (p < target) {
        p <<= 1;
        ++bits;
    }
    return bits;
}

Rational floor_dyadic(const Rational& q, unsigned long bits)
{
    const Integer scale = Integer(1) << bits;
    Rational r(floor_of(q * scale), scale);
    r.canonicalize();
    return r;
}

Rational ceil_dyadic(const Rational& q, unsigned long bits)
{
    const Integer scale = Integer(1) << bits;
    Rational r(ceil_of(q * scale), scale);
    r.canonicalize();
    return r;
}

// sum_{k=0}^{n} (-1)^k / ((2k+1) x^(2k+1)); an upper bound on atan(1/x) for
// even n, a lower bound for odd n.
Rational arctan_inverse_partial(unsigned long x, unsigned long n)
{
    Rational sum = 0;
    const Integer x2 = Integer(x) * x;
    Integer power = x;
    for (unsigned long k = 0; k <= n; ++k) {
        Rational term(1, Integer(2 * k + 1) * power);
        if (k % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
        power *= x2;
    }
    sum.canonicalize();
    return sum;
}

// Upper bound on atanh(z) for 0 <= z < 1 using terms up to z^(2n+1) plus a
// geometric tail. Decreasing in n.
Rational atanh_upper(const Rational& z, unsigned long n)
{
    Rational sum = 0;
    const Rational z2 = z * z;
    Rational power = z;
    for (unsigned long j = 0; j <= n; ++j) {
        sum += power / Rational(Integer(2 * j + 1));
        power *= z2;
    }
    // power is now z^(2n+3)
    sum += power / (Rational(Integer(2 * n + 3)) * (Rational(1) - z2));
    sum.canonicalize();
    return sum;
}

const Rational& pi_base_upper()
{
    static const Rational value(355, 113);
    return value;
}

const Rational& pi_base_lower()
{
    static const Rational value = [] {
        Rational v = Rational(355, 113) * (Rational(1) - Rational(1, 1000000));
        v.canonicalize();
        return v;
    }();
    return value;
}

}  // namespace

Enclosure pi_enclosure(Precision precision)
{
    Enclosure e{pi_base_lower(), pi_base_upper()};
    if (precision.digits <= 6) return e;

    // Machin: pi = 16 atan(1/5) - 4 atan(1/239). Pick n with 5^(2n+3) >= 64·10^digits.
    const Integer target = 64 * power_of_ten(precision.digits);
    unsigned long n = 0;
    while (ipow(Integer(5), 2 * n + 3) < target) ++n;
    const unsigned long n_odd = n % 2 == 1 ? n : n + 1;
    const unsigned long n_even = n % 2 == 0 ? n : n + 1;

    const Rational lower = 16 * arctan_inverse_partial(5, n_odd) - 4 * arctan_inverse_partial(239, n_even);
    const Rational upper = 16 * arctan_inverse_partial(5, n_even) - 4 * arctan_inverse_partial(239, n_odd);
    const unsigned long bits = dyadic_bits(precision.digits);
    e.lower = std::max(e.lower, floor_dyadic(lower, bits));
    e.upper = std::min(e.upper, ceil_dyadic(upper, bits));
    return e;
}

Rational ln_upper(const Rational& x, Precision precision)
{
    if (x < 1) throw InvalidInput("ln_upper needs an argument >= 1, got " + to_decimal(x));
    const unsigned digits = precision.transcendental_digits();

    // 2^k <= x < 2^(k+1)
    const Integer q = floor_of(x);
    unsigned long k = mpz_sizeinbase(q.get_mpz_t(), 2) - 1;
    const Rational y = x / Rational(Integer(1) << k);

    const Integer target = 4 * Integer(k + 1) * power_of_ten(digits);
    unsigned long n = 0;
    while (ipow(Integer(9), n + 1) < target) ++n;

    Rational z = (y - 1) / (y + 1);
    z.canonicalize();
    Rational bound = 2 * atanh_upper(z, n);
    if (k > 0) bound += Rational(Integer(2 * k)) * atanh_upper(Rational(1, 3), n);
    return ceil_dyadic(bound, dyadic_bits(digits));
}

Rational sqrt_upper(const Integer& n, Precision precision)
{
    if (n < 0) throw InvalidInput("sqrt_upper of a negative number");
    if (is_square(n)) return Rational(isqrt(n));
    const unsigned long bits = dyadic_bits(precision.transcendental_digits());
    const Integer scaled = n << (2 * bits);
    Rational r(isqrt(scaled) + 1, Integer(1) << bits);
    r.canonicalize();
    return r;
}

Rational RoundingCertificate::pi_lower()
{
    const Enclosure e = pi_enclosure(precision);
    const bool seen = std::any_of(entries.begin(), entries.end(),
                                  [](const Entry& en) { return en.quantity == "pi"; });
    if (!seen) entries.push_back(Entry{"pi", e.lower, e.upper, true});
    return e.lower;
}

Rational RoundingCertificate::ln_upper(const Rational& x)
{
    const Rational u = cmbrauer::ln_upper(x, precision);
    const std::string name = "ln(" + to_decimal(x) + ")";
    const bool seen = std::any_of(entries.begin(), entries.end(),
                                  [&](const Entry& en) { return en.quantity == name; });
    if (!seen) entries.push_back(Entry{name, Rational(0), u, false});
    return u;
}

Rational RoundingCertificate::sqrt_upper(const Integer& n)
{
    const Rational u = cmbrauer::sqrt_upper(n, precision);
    const std::string name = "sqrt(" + to_decimal(n) + ")";
    const bool seen = std::any_of(entries.begin(), entries.end(),
                                  [&](const Entry& en) { return en.quantity == name; });
    if (!seen) entries.push_back(Entry{name, Rational(0), u, false});
    return u;
}

}  // namespace cmbrauer
