#include "cmbrauer/grossencharakter.hpp"

#include <limits>

namespace cmbrauer {

namespace {

// Residue of a mod p as a non-negative 64-bit value.
std::uint64_t residue(const Integer& a, std::uint64_t p)
{
    return mod(a, Integer(static_cast<unsigned long>(p))).get_ui();
}

FundamentalDiscriminant maximal_cm_field(const CurveOverQ& curve)
{
    const Order order = fundamental_discriminant(curve.cm_disc());
    if (order.conductor() != 1) {
        throw InvalidInput("m_l is only defined for CM by the maximal order; discriminant " +
                           to_decimal(curve.cm_disc()) + " has conductor " + to_decimal(order.conductor()));
    }
    return order.field();
}

}  // namespace

CurveOverQ::CurveOverQ(Integer a4, Integer a6, Integer cm_disc)
    : a4_(std::move(a4)), a6_(std::move(a6)), cm_disc_(std::move(cm_disc))
{
    if (discriminant() == 0) throw InvalidInput("singular curve: 4a4³ + 27a6² = 0");
    fundamental_discriminant(cm_disc_);  // validates the order discriminant
}

Integer CurveOverQ::discriminant() const { return -16 * (4 * a4_ * a4_ * a4_ + 27 * a6_ * a6_); }

bool CurveOverQ::has_good_reduction(const Integer& p) const { return p != 2 && mod(discriminant(), p) != 0; }

Integer count_points_ap(const CurveOverQ& curve, const Integer& p)
{
    if (!is_prime(p)) throw InvalidInput("point count needs a prime, got " + to_decimal(p));
    if (p > static_cast<unsigned long>(kPointCountLimit)) {
        throw InvalidInput("prime " + to_decimal(p) + " exceeds the point-count limit");
    }
    if (!curve.has_good_reduction(p)) {
        throw InvalidInput("bad reduction at " + to_decimal(p));
    }
    const std::uint64_t q = p.get_ui();
    // chi[v] = Legendre symbol (v/q)
    std::vector<signed char> chi(q, -1);
    chi[0] = 0;
    for (std::uint64_t y = 1; y <= q / 2; ++y) chi[y * y % q] = 1;

    const std::uint64_t a = residue(curve.a4(), q);
    const std::uint64_t b = residue(curve.a6(), q);
    std::int64_t sum = 0;
    for (std::uint64_t x = 0; x < q; ++x) {
        const std::uint64_t rhs = ((x * x % q) * x % q + a * x % q + b) % q;
        sum += chi[rhs];
    }
    // #E(F_q) = q + 1 + sum, hence a_q = -sum
    return Integer(static_cast<long>(-sum));
}

Integer PsiValue::norm() const
{
    const Integer& d = field_disc;
    return x * x + d * x * y + ((d * d - d) / 4) * y * y;
}

Integer PsiValue::trace() const { return 2 * x + field_disc * y; }

PsiValue psi_from_ap(const Integer& ap, const Integer& p, const FundamentalDiscriminant& field)
{
    if (!is_prime(p)) throw InvalidInput("psi needs a prime, got " + to_decimal(p));
    if (ap == 0) throw InvalidInput("a_p = 0: supersingular prime, psi(p) is not determined here");
    const Integer& d = field.value();
    const Integer diff = ap * ap - 4 * p;
    if (mod(diff, abs(d)) != 0 || !is_square(diff / d)) {
        throw InvalidInput("a_p² - 4p = " + to_decimal(diff) + " is not of the form t²·" + to_decimal(d) +
                           "; wrong CM field?");
    }
    const Integer t = isqrt(diff / d);
    PsiValue psi{(ap - t * d) / 2, t, p, d};
    if (psi.norm() != p || psi.trace() != ap) {
        throw InternalError("psi reconstruction failed norm/trace check at p = " + to_decimal(p));
    }
    return psi;
}

MEstimate estimate_m(const CurveOverQ& curve, const Integer& ell, std::uint64_t prime_budget)
{
    if (!is_prime(ell)) throw InvalidInput("l must be prime, got " + to_decimal(ell));
    if (prime_budget > kPointCountLimit) {
        throw InvalidInput("prime budget exceeds the point-count limit of " + std::to_string(kPointCountLimit));
    }
    const FundamentalDiscriminant field = maximal_cm_field(curve);
    MEstimate est{ell, std::numeric_limits<unsigned long>::max(), 0, Integer(0)};
    for (std::uint64_t q : primes_up_to(prime_budget)) {
        const Integer p(static_cast<unsigned long>(q));
        if (p == ell || !curve.has_good_reduction(p)) continue;
        const Integer ap = count_points_ap(curve, p);
        if (ap == 0) continue;
        const PsiValue psi = psi_from_ap(ap, p, field);
        const unsigned long v = valuation(psi.y, ell);
        ++est.samples;
        if (v < est.m_hat) {
            est.m_hat = v;
            est.witness_prime = p;
        }
    }
    if (est.samples == 0) {
        throw InvalidInput("no ordinary good prime below " + std::to_string(prime_budget) + " to sample");
    }
    return est;
}

MValuation estimate_m_valuation(const CurveOverQ& curve, std::uint64_t max_ell, std::uint64_t prime_budget)
{
    MValuation m;
    for (std::uint64_t ell : primes_up_to(max_ell)) {
        const MEstimate est = estimate_m(curve, Integer(static_cast<unsigned long>(ell)), prime_budget);
        if (est.m_hat > 0) m.exponents[static_cast<unsigned long>(ell)] = est.m_hat;
    }
    return m;
}

}  // namespace cmbrauer
