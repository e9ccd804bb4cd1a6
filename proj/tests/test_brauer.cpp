#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cmbrauer/brauer.hpp"
#include "cmbrauer/lattices.hpp"

using namespace cmbrauer;

namespace {

FundamentalDiscriminant field(long disc) { return FundamentalDiscriminant(Integer(disc)); }

CMPair pair(long disc, long f1, long f2) { return CMPair(field(disc), Integer(f1), Integer(f2)); }

GroupShape shape(std::vector<long> factors)
{
    GroupShape s;
    for (long f : factors) s.cyclic_factors.emplace_back(f);
    return s;
}

}  // namespace

TEST_CASE("lattice discriminants")
{
    CHECK(disc_hom(pair(-4, 1, 1)) == 1);
    CHECK(disc_hom(pair(-4, 1, 2)) == 4);
    CHECK(disc_hom(pair(-3, 2, 3)) == 27);
    CHECK(disc_hom(pair(-3, 1, 1)) == Rational(3, 4));
    CHECK(disc_ns_product(pair(-4, 1, 2)) == -16);
    CHECK(disc_ns_product(pair(-7, 2, 2)) == -28);
    CHECK(disc_ns_kummer(pair(-4, 1, 2)) == 64);
    CHECK(disc_ns_kummer(pair(-8, 1, 3)) == 288);
}

TEST_CASE("parse_lattice inverts the discriminant maps")
{
    const LatticeSummary a = parse_lattice(Integer(-16), SurfaceKind::abelian);
    CHECK(a.field.value() == -4);
    CHECK(a.conductor_lcm == 2);
    const LatticeSummary k = parse_lattice(Integer(64), SurfaceKind::kummer);
    CHECK(k.field.value() == -4);
    CHECK(k.conductor_lcm == 2);
    CHECK_THROWS_AS(parse_lattice(Integer(-5), SurfaceKind::abelian), InvalidInput);
    CHECK_THROWS_AS(parse_lattice(Integer(6), SurfaceKind::kummer), InvalidInput);
    CHECK_THROWS_AS(parse_lattice(LatticeDescriptor{3, Integer(-16)}, SurfaceKind::abelian), InvalidInput);
    CHECK(cyclic_isogeny_degree(LatticeDescriptor{3, Integer(10)}) == 5);
    CHECK(geometric_brauer_corank(4) == 2);
}

TEST_CASE("maximal-order Brauer shapes")
{
    CHECK(brauer_shape_maximal(Integer(3), 1, {true, false}) == shape({3, 3}));
    CHECK(brauer_shape_maximal(Integer(2), 1, {false, true}) == shape({2, 2}));
    CHECK(brauer_shape_maximal(Integer(5), 0, {false, false}).cyclic_factors.empty());
    CHECK(brauer_shape_maximal(Integer(2), 3, {false, true}) == shape({8, 2}));
    CHECK(brauer_shape_maximal(Integer(7), 2, {false, false}) == shape({49}));
    CHECK_THROWS_AS(brauer_shape_maximal(Integer(2), 0, {false, true}), InvalidInput);
    CHECK_THROWS_AS(brauer_shape_maximal(Integer(2), 1, {false, true}, field(-3)), InvalidInput);
    CHECK_THROWS_AS(brauer_shape_maximal(Integer(4), 1, {false, false}), InvalidInput);
    CHECK(brauer_shape_maximal(Integer(2), 2, {false, true}).to_string() == "Z/4 x Z/2");
}

TEST_CASE("Galois-fixed endomorphisms")
{
    CHECK(fixed_endomorphisms(Integer(1), field(-3), Integer(5), true) == shape({5, 5}));
    CHECK(fixed_endomorphisms(Integer(2), field(-3), Integer(4), false) == shape({4, 2}));
    CHECK(fixed_endomorphisms(Integer(1), field(-3), Integer(4), false) == shape({4}));
}

TEST_CASE("non-maximal order bounds")
{
    CHECK(brauer_order_bound_nonmaximal(Integer(3), Integer(1), 1, {true, false}, field(-3)) == 9);
    CHECK(brauer_order_bound_nonmaximal(Integer(2), Integer(2), 0, {false, false}, field(-3)) == 2);
    CHECK(brauer_order_bound_nonmaximal(Integer(5), Integer(1), 0, {false, false}, field(-3)) == 1);
    // With f = 1 the bound reproduces the maximal-order orders.
    for (long ell : {2L, 3L, 5L}) {
        for (unsigned long m = 0; m <= 3; ++m) {
            CHECK(brauer_order_bound_nonmaximal(Integer(ell), Integer(1), m, {true, false}, field(-4)) ==
                  brauer_shape_maximal(Integer(ell), m, {true, false}).order());
        }
    }
    CHECK(brauer_order_bound_nonmaximal(Integer(2), Integer(1), 2, {false, true}, field(-4), true) ==
          brauer_shape_maximal(Integer(2), 2, {false, true}).order());
    CHECK(brauer_order_bound_nonmaximal(Integer(2), Integer(2), 2, {false, true}, field(-4), false) == 32);
    CHECK_THROWS_AS(
        brauer_order_bound_nonmaximal(Integer(2), Integer(1), 2, {false, true}, field(-4), false), InvalidInput);
    CHECK_THROWS_AS(brauer_order_bound_nonmaximal(Integer(2), Integer(1), 1, {false, true}, field(-3)), InvalidInput);
}

TEST_CASE("divisibility and uniform bounds")
{
    CHECK(divisibility_bound(Integer(1), Integer(2), field(-20)) == 288);
    CHECK(divisibility_bound(Integer(1), Integer(1), field(-163)) == 2);
    CHECK(exceptional_primes(Integer(2), field(-20)) == std::vector<Integer>{Integer(3)});
    for (long f = 1; f <= 4; ++f) {
        for (long d = 1; d <= 4; ++d) {
            CHECK(divisibility_bound(Integer(f), Integer(d), field(-7)) % (2 * f * f * d * d * d * d) == 0);
        }
    }
    CHECK(uniform_bound_EE(Integer(2), Integer(3), field(-11)) == 324);
    CHECK(uniform_bound_EE(std::nullopt, Integer(2), field(-11)) == 256);
    CHECK(uniform_bound_EE(std::nullopt, Integer(1), field(-7)) == 4);
    CHECK(uniform_bound_EE(std::nullopt, Integer(1), field(-4)) == 8);
    CHECK(uniform_bound_EE(std::nullopt, Integer(1), field(-3)) == 9);
    CHECK(uniform_bound_EE(std::nullopt, Integer(1), field(-11)) == 1);
}

TEST_CASE("geometric Brauer invariants")
{
    CHECK(geometric_brauer_invariants_order(field(-4), {}) == 4);
    MValuation m;
    m.exponents[2] = 1;
    CHECK(m.c() == 2);
    CHECK(geometric_brauer_invariants_order(field(-3), m) == 12);
    CHECK(geometric_brauer_invariants_order(field(-3), m) <= geometric_brauer_invariants_bound(field(-3), Integer(1)));
}
