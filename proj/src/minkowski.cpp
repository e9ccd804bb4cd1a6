#include "cmbrauer/minkowski.hpp"

#include <string>

namespace cmbrauer {

MinkowskiConstant minkowski_constant(unsigned long n)
{
    if (n == 0) throw InvalidInput("Minkowski constant needs n >= 1");
    MinkowskiConstant m;
    m.n = n;
    m.value = 1;
    for (const std::uint64_t p : primes_up_to(n + 1)) {
        unsigned long e = 0;
        for (std::uint64_t step = p - 1; step <= n; step *= p) e += n / step;
        if (e == 0) continue;
        m.factorization.emplace_back(p, e);
        m.value *= ipow(Integer(static_cast<unsigned long>(p)), e);
    }
    return m;
}

Integer algebraic_brauer_bound(unsigned long r)
{
    if (r < 1 || r > 20) {
        throw InvalidInput("Picard rank of a K3 surface lies in [1, 20], got " + std::to_string(r));
    }
    return ipow(minkowski_constant(r).value, r);
}

}  // namespace cmbrauer
