#pragma once

// The transcendental Brauer group Br(E x E)/Br_1(E x E) of the square of a
// CM elliptic curve. The l-primary structure is exact for CM by the maximal
// order. For other orders only the order of each l-part is bounded, which
// feeds the divisibility and uniform bounds in terms of conductor and degree.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cmbrauer/quadratic.hpp"

namespace cmbrauer {

/// Galois-theoretic facts about E over its field of definition k.
struct GaloisFlags {
    bool K_in_k = false;               // the CM field lies inside k
    bool two_torsion_rational = false; // E[2] = E[2](k)
};

/// A finite abelian group as a product of cyclic groups Z/n_i. Factors equal
/// to 1 are dropped, so the trivial group has no factors.
struct GroupShape {
    std::vector<Integer> cyclic_factors;

    Integer order() const;
    std::string to_string() const;  // e.g. "Z/4 x Z/2", "0" for the trivial group

    friend bool operator==(const GroupShape&, const GroupShape&) = default;
};

using BrauerShape = GroupShape;

/// Per-prime exponents m_l(E) with c = prod l^(m_l).
struct MValuation {
    std::map<unsigned long, unsigned long> exponents;  // l -> m_l; absent primes have m_l = 0

    Integer c() const;
};

/// The l-primary part of Br(E x E)/Br_1 for E with CM by O_K and m = m_l(E):
/// (Z/l^m)² if K ⊂ k; Z/2^m x Z/2 if K ⊄ k, l = 2 and E[2] = E[2](k);
/// Z/l^m otherwise. Rational 2-torsion forces m_2 >= 1 and, when K ⊄ k,
/// 2 | Δ_K (checked if the field is given).
BrauerShape brauer_shape_maximal(const Integer& ell, unsigned long m, const GaloisFlags& flags,
                                 const std::optional<FundamentalDiscriminant>& field = std::nullopt);

/// (End(E-bar) ⊗ Z/n)^Γ_k for E with CM by the order of conductor f:
/// (Z/n)² if K ⊂ k; Z/n x Z/2 if K ⊄ k, 2 | f·Δ_K and 2 | n; Z/n otherwise.
GroupShape fixed_endomorphisms(const Integer& conductor, const FundamentalDiscriminant& field, const Integer& n,
                               bool K_in_k);

/// Largest possible order of the l-primary part of Br(E x E)/Br_1 when E has
/// CM by the order of conductor f and E' (CM by O_K, reached by a degree-f
/// isogeny) has m_l(E') = m_prime. E_prime_two_torsion_rational is the flag
/// E'[2] = E'[2](k); leaving it empty assumes the weaker bound.
Integer brauer_order_bound_nonmaximal(const Integer& ell, const Integer& conductor, unsigned long m_prime,
                                      const GaloisFlags& flags, const FundamentalDiscriminant& field,
                                      std::optional<bool> E_prime_two_torsion_rational = std::nullopt);

/// [O_K^x : O_l^x] for any l: 3 for Q(zeta_3), 2 for Q(i), 1 otherwise.
int unit_index_prime_conductor(const FundamentalDiscriminant& field);

/// Primes l with l ∤ d and (l - (Δ_K/l)) | u·d, where u is the unit index
/// above (or 6 when use_six is set).
std::vector<Integer> exceptional_primes(const Integer& degree, const FundamentalDiscriminant& field,
                                        bool use_six = false);

/// 2·f²·d⁴·prod l² over exceptional_primes: a multiple of #Br(E x E)/Br_1.
Integer divisibility_bound(const Integer& conductor, const Integer& degree, const FundamentalDiscriminant& field,
                           bool use_six = false);

/// 2·d⁸·prod l⁴ over exceptional_primes: the same without knowing f.
Integer divisibility_bound_any_conductor(const Integer& degree, const FundamentalDiscriminant& field,
                                         bool use_six = false);

/// Upper bound on #Br(E x E)/Br_1. Over Q: 4, 8, 9 for Q(sqrt(-7)), Q(i),
/// Q(zeta_3) and 1 otherwise. For d >= 2: f²·d⁴, or d⁸ when f is unknown.
Integer uniform_bound_EE(const std::optional<Integer>& conductor, const Integer& degree,
                         const FundamentalDiscriminant& field);

/// #Br(E-bar x E-bar)^Γ_k = |Δ_K|·c² for E with CM by O_K.
Integer geometric_brauer_invariants_order(const FundamentalDiscriminant& field, const MValuation& m);

/// 9·|Δ_K|·d⁴, the degree bound on geometric_brauer_invariants_order.
Integer geometric_brauer_invariants_bound(const FundamentalDiscriminant& field, const Integer& degree);

}  // namespace cmbrauer
