#pragma once

// Discriminants of Hom(E1, E2), NS(E1 x E2) and NS(Kum(E1 x E2)) for CM
// elliptic curves with CM by orders in the same field, and the inverse map
// from a lattice discriminant back to (Δ_K, lcm(f1, f2)).

#include <string>

#include "cmbrauer/quadratic.hpp"

namespace cmbrauer {

/// Two orders of conductors f1, f2 in the same imaginary quadratic field.
struct CMPair {
    FundamentalDiscriminant field;
    Integer f1;
    Integer f2;

    CMPair(FundamentalDiscriminant field, Integer f1, Integer f2);
    Integer conductor_lcm() const { return lcm(f1, f2); }
};

/// disc Hom(E1, E2) = -lcm(f1, f2)² Δ_K / 4, exact (not always an integer).
Rational disc_hom(const CMPair& pair);

/// disc NS(E1 x E2) = lcm(f1, f2)² Δ_K.
Integer disc_ns_product(const CMPair& pair);

/// |disc NS(Kum(E1 x E2))| = 4 lcm(f1, f2)² |Δ_K|.
Integer disc_ns_kummer(const CMPair& pair);

enum class SurfaceKind { abelian, kummer };

std::string to_string(SurfaceKind kind);

/// A Néron-Severi lattice known through its rank and discriminant.
struct LatticeDescriptor {
    int rank = 0;  // 2..4 for abelian surfaces, 18..20 for K3 surfaces
    Integer disc;
};

/// What a CM lattice discriminant determines: the field and lcm(f1, f2).
/// The individual conductors are not recoverable.
struct LatticeSummary {
    FundamentalDiscriminant field;
    Integer conductor_lcm;
};

/// Inverse of disc_ns_product (abelian) or disc_ns_kummer (kummer). For a
/// Kummer lattice either sign of the discriminant is accepted. Requires the
/// CM rank (4 resp. 20) and rejects discriminants of no CM product.
LatticeSummary parse_lattice(const LatticeDescriptor& desc, SurfaceKind kind);

/// Same as parse_lattice with the CM rank filled in.
LatticeSummary parse_lattice(const Integer& disc, SurfaceKind kind);

/// For rank 3, NS(A) determines a cyclic isogeny E1 -> E2 of degree disc/2.
Integer cyclic_isogeny_degree(const LatticeDescriptor& desc);

/// Br(A-bar) of an abelian surface is (Q/Z)^(6 - rho); rho in [1, 4].
int geometric_brauer_corank(int rho);

/// The Kummer lattice inside NS(Kum A) has rank 16 and discriminant 2^6.
inline constexpr int kKummerLatticeRank = 16;
inline constexpr int kKummerLatticeDisc = 64;

}  // namespace cmbrauer
