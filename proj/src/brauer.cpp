#include "cmbrauer/brauer.hpp"

#include <algorithm>

namespace cmbrauer {

namespace {

void require_prime(const Integer& ell)
{
    if (!is_prime(ell)) throw InvalidInput("expected a prime, got " + to_decimal(ell));
}

void require_positive(const Integer& v, const char* what)
{
    if (v < 1) throw InvalidInput(std::string(what) + " must be positive, got " + to_decimal(v));
}

bool is_even(const Integer& n) { return mpz_even_p(n.get_mpz_t()) != 0; }

GroupShape make_shape(std::vector<Integer> factors)
{
    GroupShape s;
    for (auto& f : factors) {
        if (f != 1) s.cyclic_factors.push_back(std::move(f));
    }
    std::sort(s.cyclic_factors.begin(), s.cyclic_factors.end(), std::greater<>());
    return s;
}

}  // namespace

Integer GroupShape::order() const
{
    Integer n = 1;
    for (const auto& f : cyclic_factors) n *= f;
    return n;
}

std::string GroupShape::to_string() const
{
    if (cyclic_factors.empty()) return "0";
    std::string out;
    for (const auto& f : cyclic_factors) {
        if (!out.empty()) out += " x ";
        out += "Z/" + to_decimal(f);
    }
    return out;
}

Integer MValuation::c() const
{
    Integer c = 1;
    for (const auto& [ell, m] : exponents) c *= ipow(Integer(ell), m);
    return c;
}

BrauerShape brauer_shape_maximal(const Integer& ell, unsigned long m, const GaloisFlags& flags,
                                 const std::optional<FundamentalDiscriminant>& field)
{
    require_prime(ell);
    const bool two_case = ell == 2 && flags.two_torsion_rational;
    if (two_case && m == 0) {
        throw InvalidInput("E[2] = E[2](k) forces m_2(E) >= 1");
    }
    if (two_case && !flags.K_in_k && field && !is_even(field->value())) {
        throw InvalidInput("E[2] = E[2](k) with K not in k forces 2 | Δ_K");
    }
    const Integer q = ipow(ell, m);
    if (flags.K_in_k) return make_shape({q, q});
    if (two_case) return make_shape({q, Integer(2)});
    return make_shape({q});
}

GroupShape fixed_endomorphisms(const Integer& conductor, const FundamentalDiscriminant& field, const Integer& n,
                               bool K_in_k)
{
    require_positive(conductor, "conductor");
    require_positive(n, "n");
    if (K_in_k) return make_shape({n, n});
    if (is_even(conductor * field.value()) && is_even(n)) return make_shape({n, Integer(2)});
    return make_shape({n});
}

Integer brauer_order_bound_nonmaximal(const Integer& ell, const Integer& conductor, unsigned long m_prime,
                                      const GaloisFlags& flags, const FundamentalDiscriminant& field,
                                      std::optional<bool> E_prime_two_torsion_rational)
{
    require_prime(ell);
    require_positive(conductor, "conductor");
    const bool disc_even = is_even(field.value());
    if (!flags.K_in_k && flags.two_torsion_rational && !is_even(conductor * field.value())) {
        throw InvalidInput("E[2] = E[2](k) with K not in k forces 2 | f·Δ_K");
    }
    if (E_prime_two_torsion_rational) {
        if (!is_even(conductor) && *E_prime_two_torsion_rational != flags.two_torsion_rational) {
            throw InvalidInput("for odd f, E[2] = E[2](k) holds exactly when E'[2] = E'[2](k)");
        }
        if (*E_prime_two_torsion_rational && ell == 2 && m_prime == 0) {
            throw InvalidInput("E'[2] = E'[2](k) forces m_2(E') >= 1");
        }
        if (*E_prime_two_torsion_rational && !flags.K_in_k && !disc_even) {
            throw InvalidInput("E'[2] = E'[2](k) with K not in k forces 2 | Δ_K");
        }
    }
    const unsigned long a = m_prime + valuation(conductor, ell);
    if (flags.K_in_k) return ipow(ell, 2 * a);
    if (ell == 2 && flags.two_torsion_rational) {
        // The extra factor of 2 in the exponent is only possible when 2 | Δ_K
        // and E'[2] is not rational; an unknown E' is treated as that case.
        const bool loose = disc_even && !E_prime_two_torsion_rational.value_or(false);
        return ipow(ell, a + (loose ? 1 : 0)) * 2;
    }
    return ipow(ell, a);
}

int unit_index_prime_conductor(const FundamentalDiscriminant& field) { return field.unit_count() / 2; }

std::vector<Integer> exceptional_primes(const Integer& degree, const FundamentalDiscriminant& field, bool use_six)
{
    require_positive(degree, "degree");
    const Integer u = use_six ? Integer(6) : Integer(unit_index_prime_conductor(field));
    const Integer target = u * degree;
    // l - (Δ_K/l) >= l - 1 must divide u·d <= 6d, so no prime above 6d + 1 qualifies.
    const Integer cutoff = 6 * degree + 2;
    std::vector<Integer> out;
    for (Integer ell = 2; ell <= cutoff; ++ell) {
        if (!is_prime(ell) || mod(degree, ell) == 0) continue;
        const Integer step = ell - kronecker_symbol(field.value(), ell);
        if (mod(target, step) == 0) out.push_back(ell);
    }
    return out;
}

Integer divisibility_bound(const Integer& conductor, const Integer& degree, const FundamentalDiscriminant& field,
                           bool use_six)
{
    require_positive(conductor, "conductor");
    Integer b = 2 * conductor * conductor * ipow(degree, 4);
    for (const auto& ell : exceptional_primes(degree, field, use_six)) b *= ell * ell;
    return b;
}

Integer divisibility_bound_any_conductor(const Integer& degree, const FundamentalDiscriminant& field, bool use_six)
{
    Integer b = 2 * ipow(degree, 8);
    for (const auto& ell : exceptional_primes(degree, field, use_six)) b *= ipow(ell, 4);
    return b;
}

Integer uniform_bound_EE(const std::optional<Integer>& conductor, const Integer& degree,
                         const FundamentalDiscriminant& field)
{
    require_positive(degree, "degree");
    if (conductor) require_positive(*conductor, "conductor");
    if (degree == 1) {
        const Integer& v = field.value();
        if (v == -7) return 4;
        if (v == -4) return 8;
        if (v == -3) return 9;
        return 1;
    }
    if (conductor) return (*conductor) * (*conductor) * ipow(degree, 4);
    return ipow(degree, 8);
}

Integer geometric_brauer_invariants_order(const FundamentalDiscriminant& field, const MValuation& m)
{
    for (const auto& [ell, e] : m.exponents) {
        if (!is_prime(Integer(ell))) throw InvalidInput("m-valuation keyed by a non-prime: " + std::to_string(ell));
    }
    const Integer c = m.c();
    return field.abs_value() * c * c;
}

Integer geometric_brauer_invariants_bound(const FundamentalDiscriminant& field, const Integer& degree)
{
    require_positive(degree, "degree");
    return 9 * field.abs_value() * ipow(degree, 4);
}

}  // namespace cmbrauer
