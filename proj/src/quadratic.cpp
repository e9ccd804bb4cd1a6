#include "cmbrauer/quadratic.hpp"

#include <numeric>
#include <type_traits>

namespace cmbrauer {

namespace {

bool is_squarefree(const Integer& n)
{
    if (n.fits_ulong_p()) {
        std::uint64_t v = n.get_ui();
        for (std::uint64_t p = 2; p * p <= v; ++p) {
            if (v % p != 0) continue;
            v /= p;
            if (v % p == 0) return false;
        }
        return true;
    }
    for (const auto& [p, e] : factorize(n)) {
        if (e > 1) return false;
    }
    return true;
}

// Enumerates reduced forms of discriminant disc: |b| <= a <= c, 3a² <= |disc|.
// T is std::int64_t on the fast path and Integer otherwise; the visitor gets
// (a, b, c) for every primitive reduced form.
template <typename T, typename Visit>
void for_each_reduced_form(const T& disc, Visit&& visit)
{
    const T minus_disc = -disc;
    for (T a = 1; 3 * a * a <= minus_disc; ++a) {
        const T four_a = 4 * a;
        // b has the parity of disc
        T b = -a;
        if ((disc - b * b) % 2 != 0) ++b;
        for (; b <= a; b += 2) {
            const T num = b * b - disc;
            if (num % four_a != 0) continue;
            const T c = num / four_a;
            if (c < a) continue;
            if ((b < 0) && (-b == a || a == c)) continue;
            T g;
            if constexpr (std::is_same_v<T, std::int64_t>) {
                g = std::gcd(std::gcd(a, b < 0 ? -b : b), c);
            } else {
                g = gcd(gcd(a, b), c);
            }
            if (g != 1) continue;
            visit(a, b, c);
        }
    }
}

void check_form_discriminant(const Integer& disc)
{
    if (disc >= 0) throw InvalidInput("form discriminant must be negative: " + to_decimal(disc));
    const Integer r = mod(disc, 4);
    if (r != 0 && r != 1) throw InvalidInput("form discriminant must be 0 or 1 mod 4: " + to_decimal(disc));
}

// |disc| below this keeps every intermediate of the enumeration inside int64.
const Integer kFastPathLimit = Integer(1) << 40;

}  // namespace

FundamentalDiscriminant::FundamentalDiscriminant(Integer value) : value_(std::move(value))
{
    if (!is_fundamental(value_)) {
        throw InvalidInput("not a fundamental discriminant of an imaginary quadratic field: " +
                           to_decimal(value_));
    }
}

bool FundamentalDiscriminant::is_fundamental(const Integer& value)
{
    if (value >= 0) return false;
    const Integer r = mod(value, 4);
    if (r == 1) return is_squarefree(abs(value));
    if (r != 0) return false;
    const Integer m = value / 4;
    const Integer m4 = mod(m, 4);
    return (m4 == 2 || m4 == 3) && is_squarefree(abs(m));
}

int FundamentalDiscriminant::unit_count() const
{
    if (is_eisenstein()) return 6;
    if (is_gaussian()) return 4;
    return 2;
}

Order::Order(FundamentalDiscriminant field, Integer conductor)
    : field_(std::move(field)), conductor_(std::move(conductor))
{
    if (conductor_ < 1) throw InvalidInput("conductor must be positive: " + to_decimal(conductor_));
}

int Order::unit_index() const
{
    if (conductor_ == 1) return 1;
    return field_.unit_count() / 2;
}

bool QuadraticForm::is_reduced() const
{
    if (!is_positive_definite()) return false;
    if (abs(b) > a || a > c) return false;
    if ((abs(b) == a || a == c) && b < 0) return false;
    return true;
}

bool QuadraticForm::is_primitive() const { return gcd(gcd(a, b), c) == 1; }

Order fundamental_discriminant(const Integer& n)
{
    check_form_discriminant(n);
    Integer square_root = 1;
    Integer kernel = 1;
    for (const auto& [p, e] : factorize(n)) {
        square_root *= ipow(p, e / 2);
        if (e % 2 == 1) kernel *= p;
    }
    Integer field = -kernel;
    if (mod(field, 4) != 1) {
        // n ≡ 0,1 (mod 4) forces an even square part here
        field *= 4;
        square_root /= 2;
    }
    return Order(FundamentalDiscriminant(field), square_root);
}

int kronecker_symbol(const Integer& disc, const Integer& p)
{
    if (!is_prime(p)) throw InvalidInput("Kronecker symbol needs a prime modulus: " + to_decimal(p));
    if (p == 2) {
        if (mpz_even_p(disc.get_mpz_t())) return 0;
        const Integer r = mod(disc, 8);
        return (r == 1 || r == 7) ? 1 : -1;
    }
    return mpz_kronecker(disc.get_mpz_t(), p.get_mpz_t());
}

std::vector<QuadraticForm> reduced_forms(const Integer& disc)
{
    check_form_discriminant(disc);
    std::vector<QuadraticForm> out;
    for_each_reduced_form(disc, [&](const Integer& a, const Integer& b, const Integer& c) {
        out.push_back(QuadraticForm{a, b, c});
    });
    return out;
}

Integer count_reduced_forms(const Integer& disc)
{
    check_form_discriminant(disc);
    if (abs(disc) < kFastPathLimit) {
        std::uint64_t count = 0;
        const std::int64_t d = disc.get_si();
        for_each_reduced_form(d, [&](std::int64_t, std::int64_t, std::int64_t) { ++count; });
        return Integer(static_cast<unsigned long>(count));
    }
    Integer count = 0;
    for_each_reduced_form(disc, [&](const Integer&, const Integer&, const Integer&) { ++count; });
    return count;
}

Integer class_number_field(const FundamentalDiscriminant& field) { return count_reduced_forms(field.value()); }

Integer class_number_order(const Order& order) { return class_number_order(order, class_number_field(order.field())); }

Integer class_number_order(const Order& order, const Integer& field_class_number)
{
    const Integer& f = order.conductor();
    Rational h = Rational(field_class_number * f);
    for (const auto& [p, e] : factorize(f)) {
        h *= Rational(p - kronecker_symbol(order.field().value(), p), p);
    }
    h /= order.unit_index();
    h.canonicalize();
    if (h.get_den() != 1 || h.get_num() < 1) {
        throw InternalError("class number formula gave a non-integer for discriminant " +
                            to_decimal(order.discriminant()) + ": " + to_decimal(h));
    }
    return h.get_num();
}

FieldEnumeration enumerate_fields_by_class_number(std::uint64_t h_max, std::uint64_t disc_search_bound)
{
    if (disc_search_bound < 3) throw InvalidInput("discriminant search bound must be at least 3");
    FieldEnumeration result;
    result.search_bound = disc_search_bound;
    result.completeness_certified = h_max == 0 || (h_max == 1 && disc_search_bound >= 163);
    if (h_max == 0) return result;
    for (std::uint64_t v = 3; v <= disc_search_bound; ++v) {
        const Integer d = -Integer(static_cast<unsigned long>(v));
        if (!FundamentalDiscriminant::is_fundamental(d)) continue;
        Integer h = count_reduced_forms(d);
        if (h <= static_cast<unsigned long>(h_max)) {
            result.fields.emplace_back(d);
            result.class_numbers.push_back(std::move(h));
        }
    }
    return result;
}

}  // namespace cmbrauer
