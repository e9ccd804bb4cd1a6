#include "cmbrauer/lattices.hpp"

namespace cmbrauer {

CMPair::CMPair(FundamentalDiscriminant field_, Integer f1_, Integer f2_)
    : field(std::move(field_)), f1(std::move(f1_)), f2(std::move(f2_))
{
    if (f1 < 1 || f2 < 1) throw InvalidInput("conductors must be positive");
}

Rational disc_hom(const CMPair& pair)
{
    const Integer l = pair.conductor_lcm();
    Rational r(-(l * l * pair.field.value()), 4);
    r.canonicalize();
    return r;
}

Integer disc_ns_product(const CMPair& pair)
{
    const Integer l = pair.conductor_lcm();
    return l * l * pair.field.value();
}

Integer disc_ns_kummer(const CMPair& pair)
{
    const Integer l = pair.conductor_lcm();
    return 4 * l * l * pair.field.abs_value();
}

std::string to_string(SurfaceKind kind) { return kind == SurfaceKind::abelian ? "abelian" : "kummer"; }

LatticeSummary parse_lattice(const LatticeDescriptor& desc, SurfaceKind kind)
{
    Integer order_disc;
    if (kind == SurfaceKind::abelian) {
        if (desc.rank != 4) throw InvalidInput("an abelian CM product has Picard rank 4, got " + std::to_string(desc.rank));
        order_disc = desc.disc;
    } else {
        if (desc.rank != 20) throw InvalidInput("a singular Kummer surface has Picard rank 20, got " + std::to_string(desc.rank));
        const Integer a = abs(desc.disc);
        if (a == 0 || mod(a, 4) != 0) {
            throw InvalidInput("Kummer discriminant must be a nonzero multiple of 4: " + to_decimal(desc.disc));
        }
        order_disc = -(a / 4);
    }
    if (order_disc >= 0) throw InvalidInput("CM lattice discriminant must be negative: " + to_decimal(desc.disc));
    const Integer r = mod(order_disc, 4);
    if (r != 0 && r != 1) {
        throw InvalidInput("discriminant " + to_decimal(desc.disc) + " is not of the form lcm² Δ_K");
    }
    const Order order = fundamental_discriminant(order_disc);
    return LatticeSummary{order.field(), order.conductor()};
}

LatticeSummary parse_lattice(const Integer& disc, SurfaceKind kind)
{
    return parse_lattice(LatticeDescriptor{kind == SurfaceKind::abelian ? 4 : 20, disc}, kind);
}

Integer cyclic_isogeny_degree(const LatticeDescriptor& desc)
{
    if (desc.rank != 3) throw InvalidInput("cyclic isogeny degree is defined for rank 3 only");
    if (desc.disc <= 0 || mod(desc.disc, 2) != 0) {
        throw InvalidInput("a rank 3 Néron-Severi discriminant is positive and even: " + to_decimal(desc.disc));
    }
    return desc.disc / 2;
}

int geometric_brauer_corank(int rho)
{
    if (rho < 1 || rho > 4) throw InvalidInput("Picard rank of an abelian surface lies in [1, 4], got " + std::to_string(rho));
    return 6 - rho;
}

}  // namespace cmbrauer
