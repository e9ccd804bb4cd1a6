#pragma once

// Exact integer upper bounds on transcendental Brauer groups of CM abelian
// surfaces and the associated K3 surfaces. Each closed form is evaluated in
// rational arithmetic with pi, ln and sqrt replaced by one-sided rational
// approximations, so the reported integer is a true upper bound.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cmbrauer/certified.hpp"
#include "cmbrauer/numeric.hpp"

namespace cmbrauer {

enum class BoundFormula {
    uncond_lattice,            // Kummer lattice, unconditional, [k:Q] only
    lattice_k_isog,            // Kummer lattice through an explicit [L:Q]
    ab_lattice,                // abelian surface with NS of rank 4
    ab_GRH,                    // abelian surface of Picard rank 4, GRH
    kummer_GRH,                // singular Kummer surface, GRH
    singular_cover_GRH,        // any singular K3 surface, GRH
    isog_pair,                 // E1 x E2 isogenous CM curves
    isog_pair_GRH,             // E1 x E2 isogenous CM curves, GRH
    nonisog_GRH,               // E1 x E2 non-isogenous CM curves, GRH
    kummer_nonisog_GRH,        // Kummer of non-isogenous CM curves, GRH
    isogeny_degree,            // smallest isogeny between CM curves
    isogeny_degree_GRH,        // isogeny degree in terms of [k:Q], GRH
    faltings_GRH,              // stable Faltings height of a CM curve, GRH
    isogeny_brauer_multiplier, // d^(g(2g-1)-rho)
};

std::string to_string(BoundFormula id);
BoundFormula bound_formula_from_string(const std::string& name);
const std::vector<BoundFormula>& all_bound_formulas();
bool is_grh_conditional(BoundFormula id);

/// Named integer inputs and boolean flags for eval_bound.
///
/// Degrees: `k_degree` is [k:Q]; where the closed form involves [L:Q] for a
/// descent field L/k, either pass `L_degree` directly or pass `k_degree` and
/// the tower constant for that formula is applied ([L:Q] <= const·[k:Q]).
/// Other names: disc_lambda, disc (a fundamental Δ_K), f1, f2, M_degree,
/// M_over_k, compositum_degree, g, degree, rho. Flag: class_number_one.
struct BoundInputs {
    std::map<std::string, Integer> values;
    std::set<std::string> flags;
};

struct EvalOptions {
    Precision precision;
    bool assume_grh = false;
};

enum class Rounding { exact, floor, ceil };
std::string to_string(Rounding r);

struct BoundReport {
    BoundFormula id = BoundFormula::isog_pair;
    std::string provenance;
    std::map<std::string, std::string> inputs;  // echoed, decimal
    std::vector<std::string> flags;
    std::string symbolic;     // the closed form that was evaluated
    Rational upper_value;     // certified rational upper bound before rounding
    Integer integer_bound;
    Rounding rounding = Rounding::floor;
    bool conditional = false; // true for GRH-dependent formulas
    RoundingCertificate certificate;
    std::vector<std::string> notes;
};

/// Evaluates one closed form. Throws InvalidInput for missing or out of
/// range inputs and for GRH formulas without options.assume_grh.
BoundReport eval_bound(BoundFormula id, const BoundInputs& inputs, const EvalOptions& options = {});

struct TowerConstant {
    std::string name;
    Integer value;
    std::string expression;   // e.g. "2^9*3*M(20)"
    std::string description;
};

/// Degree bounds for the descent fields used by the K3 and abelian bounds.
const std::vector<TowerConstant>& field_tower_constants();
const TowerConstant& tower_constant(const std::string& name);

/// The unconditional Kummer bound 2^34·3^3·pi^-2·M(20)^4·|disc Λ|²·d⁴ together
/// with the value obtained from the lattice bound with [L:Q] = 2^9·3·M(20)·d.
struct IntroComposition {
    BoundReport intro;
    BoundReport via_lattice;
    Integer field_disc;  // Δ_K recovered from disc Λ
    Integer conductor_lcm;
    /// 2^-2·(2^9·3)^4 == 2^34·3^4, checked exactly.
    bool constant_identity_holds = false;
    /// via_lattice.upper_value <= intro.upper_value.
    bool inequality_holds = false;
};

IntroComposition compose_intro_bound(const Integer& disc_lambda, const Integer& degree, Precision precision = {});

/// #O_K^x, the helper value for M_over_k in the GRH isogenous-pair bound.
Integer m_over_k_helper(const Integer& field_disc);

/// Registry of provenance ids attached to every result (bounds, census,
/// Brauer structure, CLI envelopes), id -> description.
const std::map<std::string, std::string>& provenance_registry();
std::string provenance_id(BoundFormula id);

}  // namespace cmbrauer
