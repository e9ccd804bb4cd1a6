#pragma once

// Imaginary quadratic fields and their orders. Class numbers come from the
// closed formula, with the reduced-form count kept as a cross-check.
// Fields can be enumerated by class number up to a search bound.

#include <cstdint>
#include <vector>

#include "cmbrauer/numeric.hpp"

namespace cmbrauer {

/// Discriminant of an imaginary quadratic field. Construction validates.
class FundamentalDiscriminant {
public:
    explicit FundamentalDiscriminant(Integer value);

    static bool is_fundamental(const Integer& value);

    const Integer& value() const { return value_; }
    Integer abs_value() const { return abs(value_); }

    bool is_gaussian() const { return value_ == -4; }
    bool is_eisenstein() const { return value_ == -3; }

    /// Number of roots of unity in the ring of integers (6, 4 or 2).
    int unit_count() const;

    friend bool operator==(const FundamentalDiscriminant&, const FundamentalDiscriminant&) = default;

private:
    Integer value_;
};

/// The order Z + f·O_K of conductor f.
class Order {
public:
    Order(FundamentalDiscriminant field, Integer conductor);

    const FundamentalDiscriminant& field() const { return field_; }
    const Integer& conductor() const { return conductor_; }
    Integer discriminant() const { return conductor_ * conductor_ * field_.value(); }

    /// [O_K^x : O_f^x]: 2 for Z[i] with f > 1, 3 for Z[zeta_3] with f > 1, else 1.
    int unit_index() const;

private:
    FundamentalDiscriminant field_;
    Integer conductor_;
};

/// Integral binary quadratic form a·x² + b·xy + c·y².
struct QuadraticForm {
    Integer a;
    Integer b;
    Integer c;

    Integer discriminant() const { return b * b - 4 * a * c; }
    bool is_positive_definite() const { return a > 0 && discriminant() < 0; }
    bool is_reduced() const;
    bool is_primitive() const;

    friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;
};

/// Splits an order discriminant n = f²·Δ_K. Rejects n >= 0 and n ≢ 0,1 (mod 4).
Order fundamental_discriminant(const Integer& n);

/// Kronecker symbol (Δ/p) for prime p; the p = 2 case follows the mod 8 rule.
int kronecker_symbol(const Integer& disc, const Integer& p);

/// Primitive reduced positive-definite forms of discriminant disc (< 0, ≡ 0,1 mod 4).
std::vector<QuadraticForm> reduced_forms(const Integer& disc);

/// Number of primitive reduced forms of discriminant disc; this is h of the
/// order of that discriminant.
Integer count_reduced_forms(const Integer& disc);

/// h_K by counting reduced forms of discriminant Δ_K.
Integer class_number_field(const FundamentalDiscriminant& field);

/// h(O_f) from h_K via the conductor formula, in exact rationals.
/// Throws InternalError if the formula does not produce an integer.
Integer class_number_order(const Order& order);

/// Same, with h_K supplied by the caller (avoids recounting forms in loops).
Integer class_number_order(const Order& order, const Integer& field_class_number);

struct FieldEnumeration {
    std::vector<FundamentalDiscriminant> fields;  // sorted by |Δ_K|
    std::vector<Integer> class_numbers;           // parallel to fields
    std::uint64_t search_bound = 0;
    bool completeness_certified = false;
};

/// All Δ_K with |Δ_K| <= disc_search_bound and h_K <= h_max. Completeness
/// beyond the search bound is only certified for h_max <= 1 with a bound
/// of at least 163.
FieldEnumeration enumerate_fields_by_class_number(std::uint64_t h_max, std::uint64_t disc_search_bound);

}  // namespace cmbrauer
