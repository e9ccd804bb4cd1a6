#pragma once

// Grössencharakter values of CM elliptic curves over Q, reconstructed from
// Frobenius traces, and sampled upper bounds on the exponents m_l(E).

#include <cstdint>
#include <vector>

#include "cmbrauer/brauer.hpp"
#include "cmbrauer/quadratic.hpp"

namespace cmbrauer {

/// y² = x³ + a4·x + a6 over Q with CM by the order of discriminant cm_disc.
/// The CM discriminant is asserted by the caller; it is only checked
/// indirectly when Frobenius traces fail to fit it.
class CurveOverQ {
public:
    CurveOverQ(Integer a4, Integer a6, Integer cm_disc);

    const Integer& a4() const { return a4_; }
    const Integer& a6() const { return a6_; }
    const Integer& cm_disc() const { return cm_disc_; }

    /// -16·(4a4³ + 27a6²), nonzero.
    Integer discriminant() const;

    /// Good reduction of this model at p: p odd and p ∤ discriminant.
    bool has_good_reduction(const Integer& p) const;

private:
    Integer a4_;
    Integer a6_;
    Integer cm_disc_;
};

/// Largest prime accepted by count_points_ap.
inline constexpr std::uint64_t kPointCountLimit = 1000000;

/// a_p = p + 1 - #E(F_p), counted with a table of quadratic residues.
Integer count_points_ap(const CurveOverQ& curve, const Integer& p);

/// psi = x + y·omega with omega = (Δ_K + sqrt(Δ_K))/2, so that
/// psi = (a_p + y·sqrt(Δ_K))/2. The sign of y is chosen non-negative.
struct PsiValue {
    Integer x;
    Integer y;
    Integer p;
    Integer field_disc;

    /// x² + Δ·x·y + ((Δ² − Δ)/4)·y².
    Integer norm() const;
    /// 2x + Δ·y, which equals a_p.
    Integer trace() const;
};

/// Reconstructs psi(p) from a_p. Rejects a_p = 0 and traces for which
/// a_p² - 4p is not t²·Δ_K.
PsiValue psi_from_ap(const Integer& ap, const Integer& p, const FundamentalDiscriminant& field);

struct MEstimate {
    Integer ell;
    unsigned long m_hat = 0;     // upper bound on m_l(E)
    std::uint64_t samples = 0;   // ordinary good primes used
    Integer witness_prime;       // first sampled prime attaining m_hat
};

/// min over ordinary good primes p <= prime_budget with p != l of ord_l(y)
/// where psi(p) = x + y·omega. Requires CM by the maximal order. Since m_l(E)
/// quantifies over all primes this is an upper bound, non-increasing in the
/// budget.
MEstimate estimate_m(const CurveOverQ& curve, const Integer& ell, std::uint64_t prime_budget);

/// estimate_m for every prime l <= max_ell, collected as an MValuation.
MValuation estimate_m_valuation(const CurveOverQ& curve, std::uint64_t max_ell, std::uint64_t prime_budget);

}  // namespace cmbrauer
