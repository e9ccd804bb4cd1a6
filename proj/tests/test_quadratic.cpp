#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cmbrauer/quadratic.hpp"
#include "oracles.hpp"

using namespace cmbrauer;

namespace {

Integer h(long disc, long f) { return class_number_order(Order(FundamentalDiscriminant(Integer(disc)), Integer(f))); }

}  // namespace

TEST_CASE("fundamental discriminants are validated")
{
    CHECK(FundamentalDiscriminant::is_fundamental(Integer(-3)));
    CHECK(FundamentalDiscriminant::is_fundamental(Integer(-4)));
    CHECK(FundamentalDiscriminant::is_fundamental(Integer(-8)));
    CHECK(FundamentalDiscriminant::is_fundamental(Integer(-20)));
    CHECK_FALSE(FundamentalDiscriminant::is_fundamental(Integer(-12)));
    CHECK_FALSE(FundamentalDiscriminant::is_fundamental(Integer(-16)));
    CHECK_FALSE(FundamentalDiscriminant::is_fundamental(Integer(-5)));
    CHECK_FALSE(FundamentalDiscriminant::is_fundamental(Integer(5)));
    CHECK_THROWS_AS(FundamentalDiscriminant(Integer(-12)), InvalidInput);
    CHECK(FundamentalDiscriminant(Integer(-3)).unit_count() == 6);
    CHECK(FundamentalDiscriminant(Integer(-4)).unit_count() == 4);
    CHECK(FundamentalDiscriminant(Integer(-7)).unit_count() == 2);
}

TEST_CASE("order discriminants split into field and conductor")
{
    const Order a = fundamental_discriminant(Integer(-16));
    CHECK(a.field().value() == -4);
    CHECK(a.conductor() == 2);
    const Order b = fundamental_discriminant(Integer(-12));
    CHECK(b.field().value() == -3);
    CHECK(b.conductor() == 2);
    const Order c = fundamental_discriminant(Integer(-163));
    CHECK(c.conductor() == 1);
    const Order d = fundamental_discriminant(Integer(-300));
    CHECK(d.field().value() == -3);
    CHECK(d.conductor() == 10);
    CHECK_THROWS_AS(fundamental_discriminant(Integer(0)), InvalidInput);
}

TEST_CASE("Kronecker symbol at 2 and odd primes")
{
    CHECK(kronecker_symbol(Integer(-4), Integer(2)) == 0);
    CHECK(kronecker_symbol(Integer(-7), Integer(2)) == 1);
    CHECK(kronecker_symbol(Integer(-3), Integer(2)) == -1);
    CHECK(kronecker_symbol(Integer(-4), Integer(5)) == 1);
    CHECK(kronecker_symbol(Integer(-4), Integer(3)) == -1);
    CHECK(kronecker_symbol(Integer(-20), Integer(3)) == 1);
    CHECK(kronecker_symbol(Integer(-3), Integer(7)) == 1);
}

TEST_CASE("class numbers of small orders")
{
    CHECK(class_number_field(FundamentalDiscriminant(Integer(-20))) == 2);
    CHECK(class_number_field(FundamentalDiscriminant(Integer(-163))) == 1);
    CHECK(class_number_field(FundamentalDiscriminant(Integer(-23))) == 3);
    CHECK(h(-4, 4) == 2);
    CHECK(h(-3, 6) == 3);
    CHECK(h(-7, 3) == 4);
    const long gaussian[] = {1, 1, 2, 2, 2};
    for (long f = 1; f <= 5; ++f) CHECK(h(-4, f) == gaussian[f - 1]);
    const long eisenstein[] = {1, 1, 1, 2, 2, 3, 2};
    for (long f = 1; f <= 7; ++f) CHECK(h(-3, f) == eisenstein[f - 1]);
}

TEST_CASE("class number formula agrees with the reduced-form oracle")
{
    for (std::int64_t n = 3; n <= 20000; ++n) {
        if (n % 4 != 0 && n % 4 != 3) continue;
        const Integer disc(static_cast<long>(-n));
        const Order order = fundamental_discriminant(disc);
        const Integer formula = class_number_order(order);
        CHECK_MESSAGE(formula == oracle::reduced_form_count(-n), "disc ", -n);
        CHECK(count_reduced_forms(disc) == formula);
    }
}

TEST_CASE("reduced forms are reduced and primitive")
{
    const auto forms = reduced_forms(Integer(-84));
    CHECK(forms.size() == 4);
    for (const auto& q : forms) {
        CHECK(q.b * q.b - 4 * q.a * q.c == -84);
        CHECK(abs(q.b) <= q.a);
        CHECK(q.a <= q.c);
    }
}

TEST_CASE("fields by class number")
{
    const FieldEnumeration small = enumerate_fields_by_class_number(1, 10);
    REQUIRE(small.fields.size() == 4);
    CHECK(small.fields[0].value() == -3);
    CHECK(small.fields[1].value() == -4);
    CHECK(small.fields[2].value() == -7);
    CHECK(small.fields[3].value() == -8);
    CHECK_FALSE(small.completeness_certified);

    const FieldEnumeration all = enumerate_fields_by_class_number(1, 200);
    CHECK(all.fields.size() == 9);
    CHECK(all.fields.back().value() == -163);
    CHECK(all.completeness_certified);

    const FieldEnumeration two = enumerate_fields_by_class_number(2, 500);
    CHECK_FALSE(two.completeness_certified);
    for (std::size_t i = 0; i < two.fields.size(); ++i) CHECK(two.class_numbers[i] <= 2);
    CHECK(two.fields.size() == 9 + 18);
}
