#include "cmbrauer/bounds.hpp"

#include <algorithm>
#include <functional>

#include "cmbrauer/lattices.hpp"
#include "cmbrauer/minkowski.hpp"
#include "cmbrauer/quadratic.hpp"

namespace cmbrauer {

namespace {

const Integer& M20()
{
    static const Integer v = minkowski_constant(20).value;
    return v;
}

const Integer& M18()
{
    static const Integer v = minkowski_constant(18).value;
    return v;
}

Integer pow2(unsigned long e) { return Integer(1) << e; }

struct FormulaInfo {
    BoundFormula id;
    const char* name;
    const char* description;
    bool grh;
    std::vector<std::string> inputs;  // accepted value names
    std::vector<std::string> flags;   // accepted flags
};

const std::vector<FormulaInfo>& formula_table()
{
    static const std::vector<FormulaInfo> table = {
        {BoundFormula::uncond_lattice, "uncond_lattice",
         "Kummer surface with NS isometric to the Kummer lattice of an isogenous CM product, unconditional",
         false, {"disc_lambda", "k_degree"}, {}},
        {BoundFormula::lattice_k_isog, "lattice_k_isog",
         "Kummer surface of an isogenous CM product through its descent field L", false,
         {"disc_lambda", "k_degree", "L_degree"}, {"class_number_one"}},
        {BoundFormula::ab_lattice, "ab_lattice", "abelian surface with Neron-Severi lattice of rank 4", false,
         {"disc_lambda", "k_degree", "L_degree"}, {"class_number_one"}},
        {BoundFormula::ab_GRH, "ab_GRH", "abelian surface of geometric Picard rank 4, under GRH", true,
         {"k_degree", "L_degree"}, {}},
        {BoundFormula::kummer_GRH, "kummer_GRH", "Kummer surface of geometric Picard rank 20, under GRH", true,
         {"k_degree", "L_degree"}, {}},
        {BoundFormula::singular_cover_GRH, "singular_cover_GRH", "any singular K3 surface, under GRH", true,
         {"k_degree"}, {}},
        {BoundFormula::isog_pair, "isog_pair", "product of isogenous CM elliptic curves", false,
         {"f1", "f2", "disc", "M_degree"}, {"class_number_one"}},
        {BoundFormula::isog_pair_GRH, "isog_pair_GRH", "product of isogenous CM elliptic curves, under GRH", true,
         {"M_over_k", "k_degree"}, {}},
        {BoundFormula::nonisog_GRH, "nonisog_GRH", "product of non-isogenous CM elliptic curves, under GRH", true,
         {"k_degree", "compositum_degree"}, {}},
        {BoundFormula::kummer_nonisog_GRH, "kummer_nonisog_GRH",
         "Kummer surface of a non-isogenous CM product, under GRH", true, {"k_degree"}, {}},
        {BoundFormula::isogeny_degree, "isogeny_degree",
         "degree of a minimal isogeny between CM curves over C (Minkowski's theorem)", false,
         {"f1", "f2", "disc"}, {}},
        {BoundFormula::isogeny_degree_GRH, "isogeny_degree_GRH",
         "degree of a minimal isogeny between CM curves over k, under GRH", true, {"k_degree"}, {}},
        {BoundFormula::faltings_GRH, "faltings_GRH", "stable Faltings height of a CM elliptic curve, under GRH",
         true, {"k_degree"}, {}},
        {BoundFormula::isogeny_brauer_multiplier, "isogeny_brauer_multiplier",
         "change of the transcendental Brauer group under an isogeny of degree d", false,
         {"g", "degree", "rho"}, {}},
    };
    return table;
}

const FormulaInfo& info(BoundFormula id)
{
    for (const auto& f : formula_table()) {
        if (f.id == id) return f;
    }
    throw InternalError("bound formula missing from the table");
}

// Tower constant applied when the caller gives [k:Q] instead of [L:Q].
const char* descent_constant_for(BoundFormula id)
{
    switch (id) {
    case BoundFormula::lattice_k_isog: return "kummer_full";
    case BoundFormula::ab_lattice: return "ab_endo";
    case BoundFormula::ab_GRH: return "ab_endo";
    case BoundFormula::kummer_GRH: return "kummer_full";
    default: return nullptr;
    }
}

class Evaluation {
public:
    Evaluation(BoundFormula id, const BoundInputs& in, const EvalOptions& options)
        : id_(id), in_(in), info_(info(id))
    {
        report_.id = id;
        report_.provenance = provenance_id(id);
        report_.conditional = info_.grh;
        report_.certificate.precision = options.precision;
        for (const auto& [name, value] : in.values) {
            if (std::find(info_.inputs.begin(), info_.inputs.end(), name) == info_.inputs.end()) {
                throw InvalidInput("input '" + name + "' is not used by " + info_.name);
            }
            report_.inputs[name] = to_decimal(value);
        }
        for (const auto& flag : in.flags) {
            if (std::find(info_.flags.begin(), info_.flags.end(), flag) == info_.flags.end()) {
                throw InvalidInput("flag '" + flag + "' is not used by " + info_.name);
            }
            report_.flags.push_back(flag);
        }
        if (info_.grh && !options.assume_grh) {
            throw InvalidInput(std::string(info_.name) + " is conditional on GRH; pass the assume-GRH option");
        }
    }

    bool has(const std::string& name) const { return in_.values.count(name) != 0; }
    bool flag(const std::string& name) const { return in_.flags.count(name) != 0; }

    Integer value(const std::string& name, const Integer& min = 1) const
    {
        auto it = in_.values.find(name);
        if (it == in_.values.end()) throw InvalidInput(std::string(info_.name) + " needs input '" + name + "'");
        if (it->second < min) {
            throw InvalidInput("input '" + name + "' must be at least " + to_decimal(min) + ", got " +
                               to_decimal(it->second));
        }
        return it->second;
    }

    Integer value_or(const std::string& name, const Integer& fallback, const Integer& min = 1) const
    {
        return has(name) ? value(name, min) : fallback;
    }

    // The input without a range check.
    const Integer& raw(const std::string& name) const
    {
        auto it = in_.values.find(name);
        if (it == in_.values.end()) throw InvalidInput(std::string(info_.name) + " needs input '" + name + "'");
        return it->second;
    }

    FundamentalDiscriminant field(const std::string& name) const { return FundamentalDiscriminant(raw(name)); }

    // [L:Q], either given directly or as tower constant times [k:Q].
    Integer descent_degree()
    {
        const bool l_given = has("L_degree");
        const bool k_given = has("k_degree");
        if (l_given == k_given) throw InvalidInput(std::string(info_.name) + " needs exactly one of L_degree, k_degree");
        if (l_given) return value("L_degree");
        const TowerConstant& c = tower_constant(descent_constant_for(id_));
        const Integer l = c.value * value("k_degree");
        report_.notes.push_back("L_degree = " + c.expression + " * k_degree = " + to_decimal(l));
        return l;
    }

    LatticeSummary lattice(SurfaceKind kind) const { return parse_lattice(raw("disc_lambda"), kind); }

    void require_class_number_one(const FundamentalDiscriminant& k)
    {
        if (class_number_field(k) != 1) {
            throw InvalidInput("class_number_one was set but h(" + to_decimal(k.value()) + ") != 1");
        }
        report_.notes.push_back("class number one form");
    }

    Rational pi_inverse() { return Rational(1) / report_.certificate.pi_lower(); }

    Rational ln(const Rational& x) { return report_.certificate.ln_upper(x); }

    Rational sqrt(const Integer& n) { return report_.certificate.sqrt_upper(n); }

    // 3.23·ln(x) + 2.73·109, the GRH height term.
    Rational grh_height_term(const Integer& x) { return Rational(323, 100) * ln(Rational(x)) + Rational(273 * 109, 100); }

    BoundReport finish(const std::string& symbolic, Rational upper, Rounding rounding)
    {
        upper.canonicalize();
        report_.symbolic = symbolic;
        report_.upper_value = upper;
        report_.rounding = rounding;
        switch (rounding) {
        case Rounding::exact:
            if (upper.get_den() != 1) throw InternalError("exact bound is not an integer");
            report_.integer_bound = upper.get_num();
            break;
        case Rounding::floor: report_.integer_bound = floor_of(upper); break;
        case Rounding::ceil: report_.integer_bound = ceil_of(upper); break;
        }
        return report_;
    }

    BoundReport& report() { return report_; }

private:
    BoundFormula id_;
    const BoundInputs& in_;
    const FormulaInfo& info_;
    BoundReport report_;
};

Rational q(const Integer& n) { return Rational(n); }

}  // namespace

std::string to_string(BoundFormula id) { return info(id).name; }

BoundFormula bound_formula_from_string(const std::string& name)
{
    for (const auto& f : formula_table()) {
        if (name == f.name) return f.id;
    }
    throw InvalidInput("unknown bound id: " + name);
}

const std::vector<BoundFormula>& all_bound_formulas()
{
    static const std::vector<BoundFormula> ids = [] {
        std::vector<BoundFormula> v;
        for (const auto& f : formula_table()) v.push_back(f.id);
        return v;
    }();
    return ids;
}

bool is_grh_conditional(BoundFormula id) { return info(id).grh; }

std::string to_string(Rounding r)
{
    switch (r) {
    case Rounding::exact: return "exact";
    case Rounding::floor: return "floor";
    case Rounding::ceil: return "ceil";
    }
    throw InternalError("unknown rounding kind");
}

BoundReport eval_bound(BoundFormula id, const BoundInputs& inputs, const EvalOptions& options)
{
    Evaluation ev(id, inputs, options);
    switch (id) {
    case BoundFormula::uncond_lattice: {
        ev.lattice(SurfaceKind::kummer);
        const Integer disc = abs(ev.raw("disc_lambda"));
        const Integer d = ev.value("k_degree");
        const Rational pi_inv = ev.pi_inverse();
        const Rational v = q(pow2(34) * 27 * ipow(M20(), 4) * disc * disc * ipow(d, 4)) * pi_inv * pi_inv;
        return ev.finish("2^34*3^3*pi^-2*M(20)^4*|disc_lambda|^2*k_degree^4", v, Rounding::floor);
    }
    case BoundFormula::lattice_k_isog: {
        const LatticeSummary lat = ev.lattice(SurfaceKind::kummer);
        const Integer disc = abs(ev.raw("disc_lambda"));
        const Integer l = ev.descent_degree();
        const Integer dk = lat.field.abs_value();
        const Integer common = disc * disc * ipow(l, 4);
        if (ev.flag("class_number_one")) {
            ev.require_class_number_one(lat.field);
            return ev.finish("2^-4*|Delta_K|^-2*|disc_lambda|^2*L_degree^4", Rational(common, 16 * dk * dk),
                             Rounding::floor);
        }
        const Rational pi_inv = ev.pi_inverse();
        return ev.finish("2^-2*pi^-2*|Delta_K|^-1*|disc_lambda|^2*L_degree^4",
                         Rational(common, 4 * dk) * pi_inv * pi_inv, Rounding::floor);
    }
    case BoundFormula::ab_lattice: {
        const LatticeSummary lat = ev.lattice(SurfaceKind::abelian);
        const Integer disc = abs(ev.raw("disc_lambda"));
        const Integer l = ev.descent_degree();
        const Integer dk = lat.field.abs_value();
        const Integer common = disc * disc * ipow(l, 4);
        if (ev.flag("class_number_one")) {
            ev.require_class_number_one(lat.field);
            return ev.finish("|Delta_K|^-2*|disc_lambda|^2*L_degree^4", Rational(common, dk * dk), Rounding::floor);
        }
        const Rational pi_inv = ev.pi_inverse();
        return ev.finish("2^2*pi^-2*|Delta_K|^-1*|disc_lambda|^2*L_degree^4",
                         Rational(4 * common, dk) * pi_inv * pi_inv, Rounding::floor);
    }
    case BoundFormula::ab_GRH:
    case BoundFormula::kummer_GRH: {
        const Integer l = ev.descent_degree();
        const Rational t = ev.grh_height_term(l);
        const Rational v = Rational(34 * 34, 100) * q(ipow(Integer(10), 8) * ipow(l, 12)) * rpow(t, 4);
        return ev.finish("3.4^2*10^8*L_degree^12*(3.23*log(L_degree)+2.73*109)^4", v, Rounding::floor);
    }
    case BoundFormula::singular_cover_GRH: {
        const Integer d = ev.value("k_degree");
        const Rational t = ev.grh_height_term(pow2(10) * 3 * M20() * d);
        const Integer c = pow2(130) * ipow(Integer(3), 12) * ipow(Integer(5), 8);
        const Rational v = q(c) * Rational(34 * 34, 100) * q(ipow(M20(), 12) * ipow(d, 12)) * rpow(t, 4);
        return ev.finish("2^130*3^12*5^8*3.4^2*M(20)^12*k_degree^12*(3.23*log(2^10*3*M(20)*k_degree)+2.73*109)^4",
                         v, Rounding::floor);
    }
    case BoundFormula::isog_pair: {
        const Integer f1 = ev.value("f1");
        const Integer f2 = ev.value("f2");
        const FundamentalDiscriminant k = ev.field("disc");
        const Integer m = ev.value("M_degree", 2);
        if (mod(m, 2) != 0) throw InvalidInput("M contains K, so M_degree must be even");
        const Integer common = f1 * f1 * f2 * f2 * ipow(m, 4);
        if (ev.flag("class_number_one")) {
            ev.require_class_number_one(k);
            return ev.finish("f1^2*f2^2*M_degree^4", q(common), Rounding::floor);
        }
        const Rational pi_inv = ev.pi_inverse();
        return ev.finish("2^2*pi^-2*f1^2*f2^2*|Delta_K|*M_degree^4", q(4 * common * k.abs_value()) * pi_inv * pi_inv,
                         Rounding::floor);
    }
    case BoundFormula::isog_pair_GRH: {
        const Integer mk = ev.value("M_over_k");
        const Integer d = ev.value("k_degree");
        const Rational t = ev.grh_height_term(d);
        const Rational v = Rational(34 * 34, 100) * q(ipow(Integer(10), 8) * ipow(mk, 4) * ipow(d, 12)) * rpow(t, 4);
        return ev.finish("3.4^2*10^8*M_over_k^4*k_degree^12*(3.23*log(k_degree)+2.73*109)^4", v, Rounding::floor);
    }
    case BoundFormula::nonisog_GRH: {
        const Integer d = ev.value("k_degree");
        const Integer big = ev.value_or("compositum_degree", 4 * d);
        if (mod(big, d) != 0 || (big / d != 1 && big / d != 2 && big / d != 4)) {
            throw InvalidInput("compositum_degree must be 1, 2 or 4 times k_degree");
        }
        if (!ev.has("compositum_degree")) ev.report().notes.push_back("compositum_degree = 4 * k_degree");
        const Rational t = Rational(546, 100) * (Rational(109) + ev.ln(q(d))) + 3;
        const Rational v = q(pow2(316) * ipow(Integer(241), 24) * ipow(big, 24)) * rpow(t, 24);
        return ev.finish("2^316*241^24*compositum_degree^24*(5.46*(109+log(k_degree))+3)^24", v, Rounding::floor);
    }
    case BoundFormula::kummer_nonisog_GRH: {
        const Integer d = ev.value("k_degree");
        const Rational t = Rational(546, 100) * (Rational(109) + ev.ln(q(pow2(6) * M18() * d))) + 3;
        const Rational v = q(pow2(508) * ipow(Integer(241), 24) * ipow(M18(), 24) * ipow(d, 24)) * rpow(t, 24);
        return ev.finish("2^508*241^24*M(18)^24*k_degree^24*(5.46*(109+log(2^6*M(18)*k_degree))+3)^24", v,
                         Rounding::floor);
    }
    case BoundFormula::isogeny_degree: {
        const Integer f1 = ev.value_or("f1", 1);
        const Integer f2 = ev.value_or("f2", 1);
        const FundamentalDiscriminant k = ev.field("disc");
        const Rational v = q(2 * f1 * f2) * ev.pi_inverse() * ev.sqrt(k.abs_value());
        return ev.finish("2*pi^-1*f1*f2*sqrt(|Delta_K|)", v, Rounding::floor);
    }
    case BoundFormula::isogeny_degree_GRH: {
        const Integer d = ev.value("k_degree");
        const Rational t = ev.grh_height_term(d);
        return ev.finish("3.4*10^4*k_degree^2*(3.23*log(k_degree)+2.73*109)^2", q(34000 * d * d) * t * t,
                         Rounding::floor);
    }
    case BoundFormula::faltings_GRH: {
        const Integer d = ev.value("k_degree");
        const Rational v = Rational(273, 100) * (Rational(109) + ev.ln(q(d)));
        // A height is real-valued, so the integer reported is a ceiling.
        return ev.finish("2.73*(109+log(k_degree))", v, Rounding::ceil);
    }
    case BoundFormula::isogeny_brauer_multiplier: {
        const Integer g = ev.value("g");
        const Integer d = ev.value("degree");
        const Integer rho = ev.value("rho");
        if (rho > g * g) throw InvalidInput("rho must lie in [1, g^2]");
        const Integer e = g * (2 * g - 1) - rho;
        const unsigned long exponent = static_cast<unsigned long>(to_int64(e, 0, 1 << 20, "exponent"));
        return ev.finish("degree^(g*(2g-1)-rho)", q(ipow(d, exponent)), Rounding::exact);
    }
    }
    throw InternalError("unhandled bound formula");
}

const std::vector<TowerConstant>& field_tower_constants()
{
    static const std::vector<TowerConstant> table = [] {
        const Integer m20 = M20();
        const Integer m18 = M18();
        return std::vector<TowerConstant>{
            {"ab_endo", Integer(48), "2^4*3", "extension over which all endomorphisms of an abelian surface are defined"},
            {"kummer_2cover", Integer(16), "2^4", "extension realising the 2-covering of a Kummer surface"},
            {"singular_pic", m20, "M(20)", "extension over which NS of a singular K3 surface is defined"},
            {"nik_rank20", 2 * m20, "2*M(20)", "Nikulin extension for Picard rank 20"},
            {"kummer_M0_rank20", pow2(5) * 3 * m20, "2^5*3*M(20)", "Kummer structure descent for Picard rank 20"},
            {"kummer_full", pow2(9) * 3 * m20, "2^9*3*M(20)", "Kummer surface becomes Kum(E1 x E2), Picard rank 20"},
            {"singular_cover", pow2(10) * 3 * m20, "2^10*3*M(20)", "singular K3 surface through its Kummer double cover"},
            {"nik_rank18", 2 * m18, "2*M(18)", "Nikulin extension for Picard rank 18"},
            {"kummer_M0_rank18", pow2(2) * m18, "2^2*M(18)", "Kummer structure descent for Picard rank 18"},
            {"kummer_nonisog", pow2(6) * m18, "2^6*M(18)", "Kummer surface of a non-isogenous CM product"},
        };
    }();
    return table;
}

const TowerConstant& tower_constant(const std::string& name)
{
    for (const auto& c : field_tower_constants()) {
        if (c.name == name) return c;
    }
    throw InvalidInput("unknown tower constant: " + name);
}

IntroComposition compose_intro_bound(const Integer& disc_lambda, const Integer& degree, Precision precision)
{
    const LatticeSummary lat = parse_lattice(disc_lambda, SurfaceKind::kummer);
    EvalOptions options;
    options.precision = precision;

    BoundInputs in;
    in.values["disc_lambda"] = disc_lambda;
    in.values["k_degree"] = degree;

    IntroComposition out;
    out.field_disc = lat.field.value();
    out.conductor_lcm = lat.conductor_lcm;
    out.intro = eval_bound(BoundFormula::uncond_lattice, in, options);
    out.via_lattice = eval_bound(BoundFormula::lattice_k_isog, in, options);
    out.constant_identity_holds = Rational(1, 4) * q(ipow(Integer(512 * 3), 4)) == q(pow2(34) * 81);
    out.inequality_holds = out.via_lattice.upper_value <= out.intro.upper_value;
    return out;
}

Integer m_over_k_helper(const Integer& field_disc)
{
    return Integer(FundamentalDiscriminant(field_disc).unit_count());
}

std::string provenance_id(BoundFormula id) { return "bound." + to_string(id); }

const std::map<std::string, std::string>& provenance_registry()
{
    static const std::map<std::string, std::string> registry = [] {
        std::map<std::string, std::string> r = {
            {"quadratic.fundamental_discriminant", "splitting an order discriminant as f^2 * Delta_K"},
            {"quadratic.class_number", "class number of an imaginary quadratic order (conductor formula)"},
            {"quadratic.fields_by_class_number", "imaginary quadratic fields of bounded class number"},
            {"minkowski.constant", "Minkowski's lcm of orders of finite subgroups of GL_n(Z)"},
            {"minkowski.algebraic_brauer", "algebraic Brauer group of a K3 surface divides M(r)^r"},
            {"census.conductor_bound", "conductor of a CM order from the degree of its ring class field"},
            {"census.conductor_over_degree", "conductor of a CM curve over a field of degree d"},
            {"census.cm_count", "CM j-invariants over fields of bounded degree"},
            {"census.singular_k3", "singular K3 surfaces over fields of bounded degree"},
            {"lattice.discriminants", "Hom and Neron-Severi discriminants of CM products and their Kummer surfaces"},
            {"lattice.geometric_brauer", "corank of the geometric Brauer group of an abelian surface"},
            {"brauer.shape_maximal", "transcendental Brauer group of E x E, CM by the maximal order"},
            {"brauer.fixed_endomorphisms", "Galois-fixed endomorphisms modulo n"},
            {"brauer.order_nonmaximal", "transcendental Brauer group of E x E, CM by a non-maximal order"},
            {"brauer.divisibility", "divisibility and uniform bounds for the transcendental Brauer group of E x E"},
            {"brauer.geometric_invariants", "Galois invariants of the geometric Brauer group of E x E"},
            {"grossencharakter.ap", "Frobenius trace by point counting"},
            {"grossencharakter.psi", "Grossencharakter value recovered from a Frobenius trace"},
            {"grossencharakter.m_estimate", "sampled upper bound on the exponent m_l(E)"},
            {"bounds.tower_constants", "degrees of the descent fields"},
            {"bounds.intro_composition", "unconditional Kummer bound and its derivation from the lattice bound"},
        };
        for (const auto& f : formula_table()) r["bound." + std::string(f.name)] = f.description;
        return r;
    }();
    return registry;
}

}  // namespace cmbrauer
