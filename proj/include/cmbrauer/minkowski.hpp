#pragma once

#include <utility>
#include <vector>

#include "cmbrauer/numeric.hpp"

namespace cmbrauer {

/// M(n): the lcm of the orders of all finite subgroups of GL_n(Z).
struct MinkowskiConstant {
    unsigned long n = 0;
    Integer value;
    std::vector<std::pair<unsigned long, unsigned long>> factorization;  // (prime, exponent)
};

/// Exponent of p in M(n) is sum_{i>=0} floor(n / (p^i (p-1))), over primes p <= n+1.
MinkowskiConstant minkowski_constant(unsigned long n);

/// M(r)^r, which the algebraic part Br_1/Br_0 of a K3 surface of Picard rank r divides.
/// Only ranks 1..20 are meaningful for K3 surfaces.
Integer algebraic_brauer_bound(unsigned long r);

}  // namespace cmbrauer
