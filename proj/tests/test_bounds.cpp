#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cmbrauer/bounds.hpp"
#include "cmbrauer/minkowski.hpp"
#include "oracles.hpp"

using namespace cmbrauer;

namespace {

BoundInputs make(std::initializer_list<std::pair<const char*, long>> values, std::set<std::string> flags = {})
{
    BoundInputs in;
    for (const auto& [k, v] : values) in.values[k] = Integer(v);
    in.flags = std::move(flags);
    return in;
}

EvalOptions grh(unsigned digits = 6) { return EvalOptions{Precision{digits}, true}; }

// One representative input set per formula.
std::vector<std::pair<BoundFormula, BoundInputs>> samples()
{
    return {
        {BoundFormula::uncond_lattice, make({{"disc_lambda", 64}, {"k_degree", 1}})},
        {BoundFormula::lattice_k_isog, make({{"disc_lambda", 64}, {"L_degree", 2}})},
        {BoundFormula::lattice_k_isog, make({{"disc_lambda", 64}, {"k_degree", 1}}, {"class_number_one"})},
        {BoundFormula::ab_lattice, make({{"disc_lambda", -28}, {"L_degree", 4}})},
        {BoundFormula::ab_GRH, make({{"k_degree", 2}})},
        {BoundFormula::kummer_GRH, make({{"L_degree", 96}})},
        {BoundFormula::singular_cover_GRH, make({{"k_degree", 1}})},
        {BoundFormula::isog_pair, make({{"f1", 1}, {"f2", 1}, {"disc", -4}, {"M_degree", 2}})},
        {BoundFormula::isog_pair_GRH, make({{"M_over_k", 4}, {"k_degree", 2}})},
        {BoundFormula::nonisog_GRH, make({{"k_degree", 3}})},
        {BoundFormula::kummer_nonisog_GRH, make({{"k_degree", 1}})},
        {BoundFormula::isogeny_degree, make({{"f1", 2}, {"f2", 3}, {"disc", -23}})},
        {BoundFormula::isogeny_degree_GRH, make({{"k_degree", 5}})},
        {BoundFormula::faltings_GRH, make({{"k_degree", 7}})},
        {BoundFormula::isogeny_brauer_multiplier, make({{"g", 2}, {"degree", 3}, {"rho", 4}})},
    };
}

}  // namespace

TEST_CASE("formula ids round-trip")
{
    for (BoundFormula f : all_bound_formulas()) CHECK(bound_formula_from_string(to_string(f)) == f);
    CHECK(all_bound_formulas().size() == 14);
    CHECK_THROWS_AS(bound_formula_from_string("nope"), InvalidInput);
}

TEST_CASE("isogenous pair over Q(i)")
{
    const BoundReport r = eval_bound(BoundFormula::isog_pair, make({{"f1", 1}, {"f2", 1}, {"disc", -4}, {"M_degree", 2}}));
    CHECK(r.integer_bound == 25);
    CHECK_FALSE(r.conditional);
    CHECK(r.provenance == "bound.isog_pair");

    // 256/pi² from a 60-digit decimal expansion of pi.
    const Rational lo = Rational(256) / (oracle::pi_upper() * oracle::pi_upper());
    const Rational hi = Rational(256) / (oracle::pi_lower() * oracle::pi_lower());
    CHECK(floor_of(lo) == 25);
    CHECK(floor_of(hi) == 25);
    CHECK(r.upper_value >= hi);

    const BoundReport one = eval_bound(BoundFormula::isog_pair,
                                       make({{"f1", 1}, {"f2", 1}, {"disc", -4}, {"M_degree", 2}}, {"class_number_one"}));
    CHECK(one.integer_bound == 16);
    CHECK_THROWS_AS(eval_bound(BoundFormula::isog_pair,
                               make({{"f1", 1}, {"f2", 1}, {"disc", -4}, {"M_degree", 3}})),
                    InvalidInput);
    CHECK_THROWS_AS(eval_bound(BoundFormula::isog_pair,
                               make({{"f1", 1}, {"f2", 1}, {"disc", -20}, {"M_degree", 2}}, {"class_number_one"})),
                    InvalidInput);
}

TEST_CASE("exact and small bounds")
{
    CHECK(eval_bound(BoundFormula::isogeny_degree, make({{"disc", -3}})).integer_bound == 1);
    const BoundReport m = eval_bound(BoundFormula::isogeny_brauer_multiplier, make({{"g", 2}, {"degree", 3}, {"rho", 4}}));
    CHECK(m.integer_bound == 9);
    CHECK(m.rounding == Rounding::exact);
    const BoundReport h = eval_bound(BoundFormula::faltings_GRH, make({{"k_degree", 1}}), grh());
    CHECK(h.integer_bound == 298);
    CHECK(h.rounding == Rounding::ceil);
    CHECK(h.conditional);
}

TEST_CASE("GRH formulas need the assumption")
{
    for (const auto& [id, in] : samples()) {
        if (!is_grh_conditional(id)) continue;
        CHECK_THROWS_AS(eval_bound(id, in), InvalidInput);
        CHECK(eval_bound(id, in, grh()).conditional);
    }
}

TEST_CASE("unknown inputs and flags are rejected")
{
    CHECK_THROWS_AS(eval_bound(BoundFormula::faltings_GRH, make({{"k_degree", 1}, {"bogus", 2}}), grh()), InvalidInput);
    CHECK_THROWS_AS(eval_bound(BoundFormula::faltings_GRH, make({{"k_degree", 1}}, {"bogus"}), grh()), InvalidInput);
    CHECK_THROWS_AS(eval_bound(BoundFormula::faltings_GRH, make({}), grh()), InvalidInput);
    CHECK_THROWS_AS(eval_bound(BoundFormula::faltings_GRH, make({{"k_degree", 0}}), grh()), InvalidInput);
}

TEST_CASE("raising precision never raises a bound")
{
    for (const auto& [id, in] : samples()) {
        const BoundReport coarse = eval_bound(id, in, grh(6));
        const BoundReport fine = eval_bound(id, in, grh(12));
        CHECK_MESSAGE(fine.upper_value <= coarse.upper_value, to_string(id));
        CHECK_MESSAGE(fine.integer_bound <= coarse.integer_bound, to_string(id));
        CHECK(coarse.upper_value >= 0);
    }
}

TEST_CASE("bounds grow with their inputs")
{
    Integer previous = 0;
    for (long d = 1; d <= 8; ++d) {
        const Integer b = eval_bound(BoundFormula::isogeny_degree_GRH, make({{"k_degree", d}}), grh()).integer_bound;
        CHECK(b >= previous);
        previous = b;
    }
    // Within a fixed field the lattice bounds grow with |disc Λ|.
    previous = 0;
    for (long f = 1; f <= 10; ++f) {
        const long disc = 4 * f * f * 7;
        const Integer b = eval_bound(BoundFormula::lattice_k_isog, make({{"disc_lambda", disc}, {"L_degree", 3}}))
                              .integer_bound;
        CHECK(b >= previous);
        previous = b;
    }
}

TEST_CASE("tower constants")
{
    const Integer m20 = minkowski_constant(20).value;
    CHECK(tower_constant("ab_endo").value == 48);
    CHECK(tower_constant("kummer_full").value == 512 * 3 * m20);
    CHECK(tower_constant("singular_pic").value == m20);
    CHECK_THROWS_AS(tower_constant("nope"), InvalidInput);
    const BoundReport via_k = eval_bound(BoundFormula::ab_GRH, make({{"k_degree", 2}}), grh());
    const BoundReport via_l = eval_bound(BoundFormula::ab_GRH, make({{"L_degree", 96}}), grh());
    CHECK(via_k.integer_bound == via_l.integer_bound);
}

TEST_CASE("composition of the unconditional Kummer bound")
{
    const IntroComposition c = compose_intro_bound(Integer(64), Integer(1));
    CHECK(c.constant_identity_holds);
    CHECK(c.inequality_holds);
    CHECK(c.field_disc == -4);
    CHECK(c.conductor_lcm == 2);
    CHECK(ipow(Integer(2), 34) * ipow(Integer(3), 4) * 4 == ipow(Integer(512 * 3), 4));
    CHECK(m_over_k_helper(Integer(-3)) == 6);
    CHECK(m_over_k_helper(Integer(-7)) == 2);
}

TEST_CASE("provenance registry covers every formula")
{
    const auto& reg = provenance_registry();
    for (BoundFormula f : all_bound_formulas()) CHECK(reg.count(provenance_id(f)) == 1);
    CHECK(reg.count("census.cm_count") == 1);
}
