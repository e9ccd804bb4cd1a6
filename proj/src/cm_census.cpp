#include "cmbrauer/cm_census.hpp"

#include <algorithm>

#include "cmbrauer/minkowski.hpp"

namespace cmbrauer {

namespace {

void require_degree(const Integer& d)
{
    if (d < 1) throw InvalidInput("degree must be at least 1, got " + to_decimal(d));
}

Integer from_u64(std::uint64_t v) { return Integer(static_cast<unsigned long>(v)); }

// Exact values of the per-field count at the four pairs where it exceeds d³.
std::optional<unsigned long> exceptional_count(const FundamentalDiscriminant& field, std::uint64_t degree)
{
    const Integer& v = field.value();
    if (degree == 1) {
        if (v == -7 || v == -4) return 2;
        if (v == -3) return 3;
    }
    if (degree == 2 && v == -3) return 9;
    return std::nullopt;
}

// 3 d³ (ln(3 d²) + 1) · count with ln rounded up, before flooring.
Integer log_census_bound(const Integer& d, const Integer& count, Precision precision)
{
    if (count < 0) throw InvalidInput("field count must be non-negative");
    if (count == 0) return 0;
    const Integer d2 = d * d;
    const Rational ln = ln_upper(Rational(3 * d2), precision);
    const Rational value = Rational(3 * d2 * d) * (ln + 1) * Rational(count);
    return floor_of(value);
}

}  // namespace

std::string to_string(ConductorClause clause)
{
    switch (clause) {
    case ConductorClause::sqrt_minus_7: return "sqrt_minus_7";
    case ConductorClause::gaussian: return "gaussian";
    case ConductorClause::eisenstein: return "eisenstein";
    case ConductorClause::generic: return "generic";
    case ConductorClause::over_base: return "over_base";
    }
    throw InternalError("unknown conductor clause");
}

ConductorBoundReport conductor_bound(const FundamentalDiscriminant& field, const Integer& ring_class_degree)
{
    require_degree(ring_class_degree);
    const Integer d2 = ring_class_degree * ring_class_degree;
    ConductorBoundReport report{field, ring_class_degree, d2, ConductorClause::generic};
    const Integer& v = field.value();
    if (v == -7) {
        report.clause = ConductorClause::sqrt_minus_7;
        report.bound = std::max(d2, Integer(2));
    } else if (v == -4) {
        report.clause = ConductorClause::gaussian;
        report.bound = std::max(d2, Integer(5));
    } else if (v == -3) {
        report.clause = ConductorClause::eisenstein;
        report.bound = std::max(d2, Integer(7));
    }
    // The exceptional conductors above d² all need [K_f:K] = 2, so at d = 1
    // the uniform 3d² is the sharper value.
    report.bound = std::min(report.bound, Integer(3 * d2));
    return report;
}

Integer conductor_bound_over_degree(const Integer& degree)
{
    require_degree(degree);
    const Integer d2 = degree * degree;
    return std::min(Integer(3 * d2), std::max(d2, Integer(7)));
}

std::vector<PermissibleConductor> d_permissible_conductors(const FundamentalDiscriminant& field,
                                                           std::uint64_t degree)
{
    const Integer d = from_u64(degree);
    const Integer bound = conductor_bound(field, d).bound;
    const Integer h_field = class_number_field(field);
    std::vector<PermissibleConductor> out;
    for (Integer f = 1; f <= bound; ++f) {
        Integer h = class_number_order(Order(field, f), h_field);
        if (h <= d) out.push_back(PermissibleConductor{f, std::move(h)});
    }
    return out;
}

bool is_exceptional_census_pair(const FundamentalDiscriminant& field, std::uint64_t degree)
{
    return exceptional_count(field, degree).has_value();
}

FieldCount cm_count_per_field(const FundamentalDiscriminant& field, std::uint64_t degree)
{
    FieldCount result{field, Integer(0), false};
    for (const auto& pc : d_permissible_conductors(field, degree)) result.count += pc.class_number;
    result.exact = degree == 1 || (degree == 2 && field.is_eisenstein());
    if (auto expected = exceptional_count(field, degree); expected && result.count != *expected) {
        throw InternalError("census count " + to_decimal(result.count) + " disagrees with the known value " +
                            std::to_string(*expected) + " for discriminant " + to_decimal(field.value()));
    }
    return result;
}

CensusReport cm_count_total(std::uint64_t degree, std::uint64_t disc_search_bound)
{
    require_degree(from_u64(degree));
    const FieldEnumeration fields = enumerate_fields_by_class_number(degree, disc_search_bound);
    CensusReport report;
    report.degree = degree;
    report.search_bound = disc_search_bound;
    report.certified_complete = fields.completeness_certified;
    report.total = 0;
    for (const auto& field : fields.fields) {
        report.per_field.push_back(cm_count_per_field(field, degree));
        report.total += report.per_field.back().count;
    }
    const Integer d = from_u64(degree);
    report.cubic_bound = d * d * d * static_cast<unsigned long>(fields.fields.size());
    return report;
}

Integer singular_k3_bound(std::uint64_t degree, const Integer& field_count, Precision precision)
{
    const Integer d = from_u64(degree);
    require_degree(d);
    return log_census_bound(d, field_count, precision);
}

Integer singular_k3_refined_sum(std::uint64_t degree, const std::vector<FundamentalDiscriminant>& fields)
{
    const Integer d = from_u64(degree);
    require_degree(d);
    const Integer limit = 3 * d * d;
    const std::uint64_t n = to_int64(limit, 1, INT64_MAX, "conductor range");
    Integer total = 0;
    for (const auto& field : fields) {
        const Integer h_field = class_number_field(field);
        // sum_{f <= n} sum_{g | f} w(g) = sum_{g <= n} w(g) · floor(n / g)
        for (std::uint64_t g = 1; g <= n; ++g) {
            const Integer h = class_number_order(Order(field, from_u64(g)), h_field);
            total += std::min(h, d) * from_u64(n / g);
        }
    }
    return total;
}

Integer singular_k3_refined_sum(std::uint64_t degree, std::uint64_t disc_search_bound)
{
    const FieldEnumeration fields = enumerate_fields_by_class_number(degree, disc_search_bound);
    return singular_k3_refined_sum(degree, fields.fields);
}

Integer singular_k3_strong_bound(std::uint64_t degree, const Integer& field_count, Precision precision)
{
    const Integer d = from_u64(degree);
    require_degree(d);
    return log_census_bound(minkowski_constant(20).value * d, field_count, precision);
}

}  // namespace cmbrauer
