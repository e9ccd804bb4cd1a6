#pragma once

// Conductor bounds for CM orders and the resulting counts of CM j-invariants
// and singular K3 surfaces over fields of bounded degree.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cmbrauer/certified.hpp"
#include "cmbrauer/quadratic.hpp"

namespace cmbrauer {

enum class ConductorClause {
    sqrt_minus_7,  // Q(sqrt(-7)): f <= max{d², 2}
    gaussian,      // Q(i): f <= max{d², 5}
    eisenstein,    // Q(zeta_3): f <= max{d², 7}
    generic,       // f <= d²
    over_base,     // no field given: f <= min{3d², max{d², 7}}
};

std::string to_string(ConductorClause clause);

struct ConductorBoundReport {
    std::optional<FundamentalDiscriminant> field;  // empty for the field-independent bound
    Integer degree;
    Integer bound;
    ConductorClause clause = ConductorClause::generic;
};

/// Largest conductor f of an order in K whose ring class field has degree at
/// most ring_class_degree over K. Always <= 3·d².
ConductorBoundReport conductor_bound(const FundamentalDiscriminant& field, const Integer& ring_class_degree);

/// min{3d², max{d², 7}}: the bound on f for any CM curve over a field of degree d.
Integer conductor_bound_over_degree(const Integer& degree);

struct PermissibleConductor {
    Integer conductor;
    Integer class_number;
};

/// Conductors f <= conductor_bound(field, d) with h(O_f) <= d. This is a
/// necessary condition for f to occur over a degree-d field, so the list
/// may over-count.
std::vector<PermissibleConductor> d_permissible_conductors(const FundamentalDiscriminant& field,
                                                           std::uint64_t degree);

struct FieldCount {
    FundamentalDiscriminant field;
    Integer count;
    /// True where the count is known to be exact rather than an upper bound.
    bool exact = false;
};

/// Sum of h(O_f) over the permissible conductors. Exact for d = 1 and for
/// (d = 2, Q(zeta_3)); otherwise an upper bound, at most d³ outside the four
/// exceptional (d, K) pairs.
FieldCount cm_count_per_field(const FundamentalDiscriminant& field, std::uint64_t degree);

/// True for (1, -7), (1, -4), (1, -3), (2, -3).
bool is_exceptional_census_pair(const FundamentalDiscriminant& field, std::uint64_t degree);

struct CensusReport {
    std::uint64_t degree = 0;
    std::uint64_t search_bound = 0;
    std::vector<FieldCount> per_field;
    Integer total;
    /// d³ · #{K : h_K <= d} over the enumerated fields.
    Integer cubic_bound;
    bool certified_complete = false;
};

/// CM j-invariants over fields of degree <= d, summed over fields with
/// h_K <= d and |Δ_K| <= search bound. For d = 1 and a bound >= 163 the
/// total is the exact 13.
CensusReport cm_count_total(std::uint64_t degree, std::uint64_t disc_search_bound);

/// floor(3 d³ (ln(3 d²) + 1) · field_count), with ln rounded upward.
Integer singular_k3_bound(std::uint64_t degree, const Integer& field_count, Precision precision = {});

/// sum over K (h_K <= d) of sum_{f <= 3d²} sum_{g | f} min{h(O_g), d}.
Integer singular_k3_refined_sum(std::uint64_t degree, std::uint64_t disc_search_bound);

/// Same sum over an explicit field list.
Integer singular_k3_refined_sum(std::uint64_t degree, const std::vector<FundamentalDiscriminant>& fields);

/// floor(3 M(20)³ d³ (ln(3 M(20)² d²) + 1) · field_count), where field_count
/// counts K with h_K <= M(20)·d.
Integer singular_k3_strong_bound(std::uint64_t degree, const Integer& field_count, Precision precision = {});

}  // namespace cmbrauer
