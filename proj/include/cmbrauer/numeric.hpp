#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace cmbrauer {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised for inputs that violate an operation's preconditions.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an internal consistency check fails (a bug, not bad input).
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

Integer parse_integer(const std::string& text);
std::string to_decimal(const Integer& n);
std::string to_decimal(const Rational& q);

Integer ipow(const Integer& base, unsigned long exponent);
Rational rpow(const Rational& base, unsigned long exponent);

Integer isqrt(const Integer& n);
bool is_square(const Integer& n);

Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// Non-negative residue of a modulo m (m > 0).
Integer mod(const Integer& a, const Integer& m);

/// Deterministic primality by trial division.
bool is_prime(const Integer& n);

/// Largest e with p^e | n, for n != 0 and p >= 2.
unsigned long valuation(const Integer& n, const Integer& p);

/// Prime factorisation of |n| by trial division, primes ascending.
std::vector<std::pair<Integer, unsigned long>> factorize(const Integer& n);

std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

/// Narrowing conversion that refuses values outside [lo, hi].
std::int64_t to_int64(const Integer& n, std::int64_t lo, std::int64_t hi, const char* what);

}  // namespace cmbrauer
