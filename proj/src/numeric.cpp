#include "cmbrauer/numeric.hpp"

#include <cctype>

namespace cmbrauer {

Integer parse_integer(const std::string& text)
{
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    if (i == text.size()) throw InvalidInput("not an integer: '" + text + "'");
    for (std::size_t j = i; j < text.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(text[j])))
            throw InvalidInput("not an integer: '" + text + "'");
    }
    Integer n;
    n.set_str(text[0] == '+' ? text.substr(1) : text, 10);
    return n;
}

std::string to_decimal(const Integer& n) { return n.get_str(10); }

std::string to_decimal(const Rational& q)
{
    Rational c = q;
    c.canonicalize();
    return c.get_str(10);
}

Integer ipow(const Integer& base, unsigned long exponent)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

Rational rpow(const Rational& base, unsigned long exponent)
{
    Rational r(ipow(base.get_num(), exponent), ipow(base.get_den(), exponent));
    r.canonicalize();
    return r;
}

Integer isqrt(const Integer& n)
{
    if (n < 0) throw InvalidInput("isqrt of a negative number");
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_square(const Integer& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

Integer floor_of(const Rational& q)
{
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Integer ceil_of(const Rational& q)
{
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Integer gcd(const Integer& a, const Integer& b)
{
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Integer lcm(const Integer& a, const Integer& b)
{
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Integer mod(const Integer& a, const Integer& m)
{
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

bool is_prime(const Integer& n)
{
    if (n < 2) return false;
    if (n.fits_ulong_p()) {
        const std::uint64_t v = n.get_ui();
        if (v < 4) return true;
        if (v % 2 == 0 || v % 3 == 0) return false;
        for (std::uint64_t d = 5; d * d <= v; d += 6) {
            if (v % d == 0 || v % (d + 2) == 0) return false;
        }
        return true;
    }
    if (mpz_even_p(n.get_mpz_t())) return false;
    const Integer root = isqrt(n);
    for (Integer d = 3; d <= root; d += 2) {
        if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) return false;
    }
    return true;
}

unsigned long valuation(const Integer& n, const Integer& p)
{
    if (n == 0) throw InvalidInput("valuation of zero");
    if (p < 2) throw InvalidInput("valuation base must be at least 2");
    Integer m = abs(n);
    unsigned long e = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
        m /= p;
        ++e;
    }
    return e;
}

std::vector<std::pair<Integer, unsigned long>> factorize(const Integer& n)
{
    if (n == 0) throw InvalidInput("cannot factor zero");
    std::vector<std::pair<Integer, unsigned long>> out;
    Integer m = abs(n);
    auto strip = [&](const Integer& p) {
        unsigned long e = 0;
        while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
            m /= p;
            ++e;
        }
        if (e > 0) out.emplace_back(p, e);
    };
    strip(2);
    strip(3);
    for (Integer d = 5; d * d <= m; d += 6) {
        strip(d);
        strip(d + 2);
    }
    if (m > 1) out.emplace_back(m, 1);
    return out;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n)
{
    std::vector<std::uint64_t> primes;
    if (n < 2) return primes;
    std::vector<bool> composite(n + 1, false);
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
    }
    return primes;
}

std::int64_t to_int64(const Integer& n, std::int64_t lo, std::int64_t hi, const char* what)
{
    if (n < lo || n > hi || !n.fits_slong_p()) {
        throw InvalidInput(std::string(what) + " out of range [" + std::to_string(lo) + ", " +
                           std::to_string(hi) + "]: " + to_decimal(n));
    }
    return n.get_si();
}

}  // namespace cmbrauer
