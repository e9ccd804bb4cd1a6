#pragma once

// Rational enclosures of pi and of the logarithms and square roots used by the bounds.
//
// Every routine here is monotone in the requested precision: raising
// `Precision::digits` never loosens an enclosure. Evaluations that only use
// these endpoints in monotone expressions therefore give upper bounds that
// can only shrink as precision grows.

#include <string>
#include <vector>

#include "cmbrauer/numeric.hpp"

namespace cmbrauer {

struct Precision {
    /// Target accuracy 10^-digits. At the default of 6, pi is taken from the
    /// fixed interval [355/113·(1 − 10^-6), 355/113].
    unsigned digits = 6;

    /// Logarithms and square roots are never resolved worse than 10^-9.
    unsigned transcendental_digits() const { return digits < 9 ? 9 : digits; }
};

struct Enclosure {
    Rational lower;
    Rational upper;
};

Enclosure pi_enclosure(Precision precision);

/// Rational upper bound on ln(x) for rational x >= 1, within 10^-transcendental_digits.
Rational ln_upper(const Rational& x, Precision precision);

/// Rational upper bound on sqrt(n) for n >= 0 (exact for perfect squares).
Rational sqrt_upper(const Integer& n, Precision precision);

/// Log of the approximations used during one evaluation.
struct RoundingCertificate {
    struct Entry {
        std::string quantity;  // e.g. "pi", "ln(12)", "sqrt(3)"
        Rational lower;
        Rational upper;
        bool has_lower = false;
    };
    Precision precision;
    std::vector<Entry> entries;

    /// Lower endpoint of pi; records the enclosure once.
    Rational pi_lower();
    Rational ln_upper(const Rational& x);
    Rational sqrt_upper(const Integer& n);
};

}  // namespace cmbrauer
