#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cmbrauer/cm_census.hpp"
#include "cmbrauer/minkowski.hpp"
#include "oracles.hpp"

using namespace cmbrauer;

namespace {

FundamentalDiscriminant field(long disc) { return FundamentalDiscriminant(Integer(disc)); }

}  // namespace

TEST_CASE("Minkowski constants")
{
    CHECK(minkowski_constant(1).value == 2);
    CHECK(minkowski_constant(2).value == 24);
    CHECK(minkowski_constant(3).value == 48);
    CHECK(minkowski_constant(4).value == 5760);
    CHECK(minkowski_constant(20).value == oracle::minkowski_20());
    CHECK(algebraic_brauer_bound(2) == 576);

    const MinkowskiConstant m = minkowski_constant(18);
    Integer product = 1;
    for (const auto& [p, e] : m.factorization) product *= ipow(Integer(p), e);
    CHECK(product == m.value);
    CHECK_THROWS_AS(minkowski_constant(0), InvalidInput);
}

TEST_CASE("conductor bounds")
{
    CHECK(conductor_bound(field(-3), 1).bound == 3);
    CHECK(conductor_bound(field(-4), 2).bound == 5);
    CHECK(conductor_bound(field(-11), 3).bound == 9);
    CHECK(conductor_bound(field(-7), 1).bound == 2);
    CHECK(conductor_bound_over_degree(1) == 3);
    CHECK(conductor_bound_over_degree(2) == 7);
    CHECK(conductor_bound_over_degree(3) == 9);
    for (long d = 1; d <= 50; ++d) {
        const Integer expected = std::min<Integer>(Integer(3 * d * d), std::max<Integer>(Integer(d * d), Integer(7)));
        CHECK(conductor_bound_over_degree(d) == expected);
    }
}

TEST_CASE("permissible conductors")
{
    std::vector<long> fs;
    for (const auto& pc : d_permissible_conductors(field(-3), 2)) fs.push_back(pc.conductor.get_si());
    CHECK(fs == std::vector<long>{1, 2, 3, 4, 5, 7});

    std::vector<long> hs;
    for (const auto& pc : d_permissible_conductors(field(-4), 2)) hs.push_back(pc.class_number.get_si());
    CHECK(hs == std::vector<long>{1, 1, 2, 2, 2});

    const auto single = d_permissible_conductors(field(-163), 1);
    REQUIRE(single.size() == 1);
    CHECK(single[0].conductor == 1);
}

TEST_CASE("CM counts per field")
{
    CHECK(cm_count_per_field(field(-7), 1).count == 2);
    CHECK(cm_count_per_field(field(-4), 1).count == 2);
    CHECK(cm_count_per_field(field(-3), 1).count == 3);
    CHECK(cm_count_per_field(field(-3), 2).count == 9);
    CHECK(cm_count_per_field(field(-4), 2).count == 8);
    CHECK(cm_count_per_field(field(-7), 2).count <= 4);
    CHECK(is_exceptional_census_pair(field(-3), 2));
    CHECK_FALSE(is_exceptional_census_pair(field(-4), 2));
}

TEST_CASE("CM census over Q")
{
    const CensusReport full = cm_count_total(1, 200);
    CHECK(full.total == 13);
    CHECK(full.certified_complete);
    Integer sum = 0;
    for (const auto& c : full.per_field) sum += c.count;
    CHECK(sum == full.total);

    const CensusReport partial = cm_count_total(1, 10);
    CHECK(partial.per_field.size() == 4);
    CHECK_FALSE(partial.certified_complete);

    const CensusReport two = cm_count_total(2, 500);
    CHECK(two.total <= two.cubic_bound);
}

TEST_CASE("singular K3 census bounds")
{
    CHECK(singular_k3_bound(1, Integer(9)) == 56);
    CHECK(singular_k3_bound(3, Integer(0)) == 0);
    const Integer refined = singular_k3_refined_sum(1, 200);
    CHECK(refined == 45);
    CHECK(refined <= singular_k3_bound(1, Integer(9)));
    CHECK(singular_k3_refined_sum(1, 10) < refined);
    for (std::uint64_t d = 1; d <= 3; ++d) {
        const FieldEnumeration e = enumerate_fields_by_class_number(d, 300);
        const Integer n = static_cast<unsigned long>(e.fields.size());
        CHECK(singular_k3_refined_sum(d, e.fields) <= singular_k3_bound(d, n));
    }
    const Integer strong1 = singular_k3_strong_bound(1, Integer(1));
    const Integer m20 = minkowski_constant(20).value;
    CHECK(strong1 > 3 * m20 * m20 * m20);
    CHECK(singular_k3_strong_bound(2, Integer(1)) > 8 * strong1);
}
