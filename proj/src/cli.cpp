#include "cmbrauer/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "cmbrauer/bounds.hpp"
#include "cmbrauer/brauer.hpp"
#include "cmbrauer/cm_census.hpp"
#include "cmbrauer/grossencharakter.hpp"
#include "cmbrauer/lattices.hpp"
#include "cmbrauer/minkowski.hpp"
#include "cmbrauer/quadratic.hpp"

namespace cmbrauer::cli {

namespace {

using json = nlohmann::json;

struct Envelope {
    std::string command;
    json inputs = json::object();
    json result = json::object();
    std::string provenance;
    bool conditional = false;

    json to_json() const
    {
        return json{{"command", command},
                    {"inputs", inputs},
                    {"result", result},
                    {"provenance", provenance},
                    {"conditional", conditional}};
    }
};

std::string dec(const Integer& n) { return to_decimal(n); }
std::string dec(const Rational& q) { return to_decimal(q); }

std::uint64_t to_u64(const Integer& n, const char* what)
{
    return static_cast<std::uint64_t>(to_int64(n, 0, INT64_MAX, what));
}

json certificate_json(const RoundingCertificate& cert)
{
    json entries = json::array();
    for (const auto& e : cert.entries) {
        json j{{"quantity", e.quantity}, {"upper", dec(e.upper)}};
        if (e.has_lower) j["lower"] = dec(e.lower);
        entries.push_back(j);
    }
    return json{{"digits", std::to_string(cert.precision.digits)}, {"entries", entries}};
}

json report_json(const BoundReport& r)
{
    return json{{"id", to_string(r.id)},
                {"inputs", r.inputs},
                {"flags", r.flags},
                {"symbolic", r.symbolic},
                {"upper_value", dec(r.upper_value)},
                {"integer_bound", dec(r.integer_bound)},
                {"rounding", to_string(r.rounding)},
                {"conditional", r.conditional},
                {"provenance", r.provenance},
                {"rounding_certificate", certificate_json(r.certificate)},
                {"notes", r.notes}};
}

json shape_json(const GroupShape& s)
{
    json factors = json::array();
    for (const auto& f : s.cyclic_factors) factors.push_back(dec(f));
    return json{{"cyclic_factors", factors}, {"order", dec(s.order())}, {"structure", s.to_string()}};
}

// Options shared by every subcommand.
struct Common {
    std::string format = "json";
    std::string output;
};

void add_common(CLI::App& app, Common& common)
{
    app.add_option("--format", common.format, "json (canonical) or table (lossy, for reading)")
        ->check(CLI::IsMember({"json", "table"}));
    app.add_option("--output", common.output, "also write the canonical JSON to this file");
}

// CLI11 expects the argument vector in reverse order.
void parse(CLI::App& app, const std::vector<std::string>& args)
{
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
}

using Handler = std::function<void(const std::vector<std::string>&, Envelope&, Common&)>;

void cmd_classnum(const std::vector<std::string>& args, Envelope& env, Common& common)
{
    CLI::App app{"class number of an imaginary quadratic order", "classnum"};
    add_common(app, common);
    std::string disc;
    std::optional<std::string> conductor;
    app.add_option("--disc", disc, "Δ_K, or any order discriminant when --conductor is omitted")->required();
    app.add_option("--conductor", conductor, "conductor f of the order in Q(sqrt(disc))");
    parse(app, args);

    env.inputs["disc"] = disc;
    std::optional<Order> order;
    if (conductor) {
        env.inputs["conductor"] = *conductor;
        order.emplace(FundamentalDiscriminant(parse_integer(disc)), parse_integer(*conductor));
    } else {
        order.emplace(fundamental_discriminant(parse_integer(disc)));
    }
    const Integer h_field = class_number_field(order->field());
    const Integer h = class_number_order(*order, h_field);
    env.provenance = "quadratic.class_number";
    env.result = json{{"field_disc", dec(order->field().value())},
                      {"conductor", dec(order->conductor())},
                      {"order_disc", dec(order->discriminant())},
                      {"unit_index", std::to_string(order->unit_index())},
                      {"class_number_field", dec(h_field)},
                      {"class_number", dec(h)}};
    if (abs(order->discriminant()) <= 100000000) {
        env.result["reduced_form_count"] = dec(count_reduced_forms(order->discriminant()));
    }
}

void cmd_fields_by_h(const std::vector<std::string>& args, Envelope& env, Common& common)
{
    CLI::App app{"imaginary quadratic fields of bounded class number", "fields-by-h"};
    add_common(app, common);
    std::string h_max, bound;
    app.add_option("--h-max", h_max, "largest class number")->required();
    app.add_option("--bound", bound, "search bound on |Δ_K|")->required();
    parse(app, args);

    env.inputs = json{{"h_max", h_max}, {"bound", bound}};
    const FieldEnumeration e = enumerate_fields_by_class_number(to_u64(parse_integer(h_max), "h_max"),
                                                                to_u64(parse_integer(bound), "bound"));
    json fields = json::array();
    for (std::size_t i = 0; i < e.fields.size(); ++i) {
        fields.push_back(json{{"disc", dec(e.fields[i].value())}, {"class_number", dec(e.class_numbers[i])}});
    }
    env.provenance = "quadratic.fields_by_class_number";
    env.result = json{{"fields", fields},
                      {"count", std::to_string(e.fields.size())},
                      {"search_bound", std::to_string(e.search_bound)},
                      {"completeness_certified", e.completeness_certified}};
}

void cmd_minkowski(const std::vector<std::string>& args, Envelope& env, Common& common)
{
    CLI::App app{"Minkowski's constant M(n)", "minkowski"};
    add_common(app, common);
    std::string n;
    std::optional<std::string> rank;
    app.add_option("--n", n, "rank n >= 1")->required();
    app.add_option("--algebraic-brauer", rank, "also report M(r)^r for this Picard rank r");
    parse(app, args);

    env.inputs["n"] = n;
    const MinkowskiConstant m = minkowski_constant(static_cast<unsigned long>(to_u64(parse_integer(n), "n")));
    json factors = json::array();
    for (const auto& [p, e] : m.factorization) {
        factors.push_back(json{{"prime", std::to_string(p)}, {"exponent", std::to_string(e)}});
    }
    env.provenance = "minkowski.constant";
    env.result = json{{"value", dec(m.value)}, {"factorization", factors}};
    if (rank) {
        env.inputs["algebraic_brauer"] = *rank;
        const auto r = static_cast<unsigned long>(to_u64(parse_integer(*rank), "rank"));
        env.result["algebraic_brauer_bound"] = dec(algebraic_brauer_bound(r));
    }
}

void cmd_conductor_bound(const std::vector<std::string>& args, Envelope& env, Common& common)
{
    CLI::App app{"largest conductor of a CM order at a given degree", "conductor-bound"};
    add_common(app, common);
    std::string degree;
    std::optional<std::string> disc;
    app.add_option("--degree", degree, "[K_f:K] with --disc, otherwise [k:Q]")->required();
    app.add_option("--disc", disc, "fundamental discriminant Δ_K");
    parse(app, args);

    env.inputs["degree"] = degree;
    const Integer d = parse_integer(degree);
    if (disc) {
        env.inputs["disc"] = *disc;
        const ConductorBoundReport r = conductor_bound(FundamentalDiscriminant(parse_integer(*disc)), d);
        env.provenance = "census.conductor_bound";
        env.result = json{{"bound", dec(r.bound)}, {"clause", to_string(r.clause)}, {"cap", dec(Integer(3 * d * d))}};
    } else {
        env.provenance = "census.conductor_over_degree";
        env.result = json{{"bound", dec(conductor_bound_over_degree(d))}, {"clause", to_string(ConductorClause::over_base)}};
    }
}

json field_count_json(const FieldCount& c)
{
    return json{{"disc", dec(c.field.value())}, {"count", dec(c.count)}, {"exact", c.exact}};
}

void cmd_cm_count(const std::vector<std::string>& args, Envelope& env, Common& common)
{
    CLI::App app{"CM j-invariants over fields of bounded degree", "cm-count"};
    add_common(app, common);
    std::string degree;
    std::string bound = "5000";
    std::optional<std::string> disc;
    app.add_option("--degree", degree, "degree d")->required();
    app.add_option("--bound", bound, "search bound on |Δ_K|")->capture_default_str();
    app.add_option("--disc", disc, "restrict to one field and list its permissible conductors");
    parse(app, args);

    env.inputs["degree"] = degree;
    const std::uint64_t d = to_u64(parse_integer(degree), "degree");
    env.provenance = "census.cm_count";
    if (disc) {
        env.inputs["disc"] = *disc;
        const FundamentalDiscriminant k(parse_integer(*disc));
        json conductors = json::array();
        for (const auto& pc : d_permissible_conductors(k, d)) {
            conductors.push_back(json{{"conductor", dec(pc.conductor)}, {"class_number", dec(pc.class_number)}});
        }
        env.result = field_count_json(cm_count_per_field(k, d));
        env.result["permissible_conductors"] = conductors;
        env.result["exceptional"] = is_exceptional_census_pair(k, d);
        return;
    }
    env.inputs["bound"] = bound;
    const CensusReport r = cm_count_total(d, to_u64(parse_integer(bound), "bound"));
    json per_field = json::array();
    for (const auto& c : r.per_field) per_field.push_back(field_count_json(c));
    env.result = json{{"total", dec(r.total)},
                      {"per_field", per_field},
                      {"field_count", std::to_string(r.per_field.size())},
                      {"cubic_bound", dec(r.cubic_bound)},
                      {"search_bound", std::to_string(r.search_bound)},
                      {"certified_complete", r.certified_complete}};
}

void cmd_k3_census(const std::vector<std::string>& args, Envelope& env, Common& common)
{
    CLI::App app{"bounds on the number of singular K3 surfaces over fields of degree d", "k3-census"};
    add_common(app, common);
    std::string degree;
    std::string bound = "5000";
    std::optional<std::string> field_count, strong_count;
    unsigned digits = 6;
    app.add_option("--degree", degree, "degree d")->required();
    app.add_option("--bound", bound, "search bound on |Δ_K| for the field enumeration")->capture_default_str();
    app.add_option("--field-count", field_count, "use this #{K : h_K <= d} instead of enumerating");
    app.add_option("--strong-field-count", strong_count, "#{K : h_K <= M(20) d}; enables the strong bound");
    app.add_option("--precision", digits, "decimal digits for ln")->capture_default_str();
    parse(app, args);

    env.inputs["degree"] = degree;
    env.inputs["precision"] = std::to_string(digits);
    const std::uint64_t d = to_u64(parse_integer(degree), "degree");
    const Precision precision{digits};
    env.provenance = "census.singular_k3";
    env.result = json::object();
    Integer count;
    if (field_count) {
        env.inputs["field_count"] = *field_count;
        count = parse_integer(*field_count);
    } else {
        env.inputs["bound"] = bound;
        const FieldEnumeration e = enumerate_fields_by_class_number(d, to_u64(parse_integer(bound), "bound"));
        count = static_cast<unsigned long>(e.fields.size());
        env.result["refined_sum"] = dec(singular_k3_refined_sum(d, e.fields));
        env.result["completeness_certified"] = e.completeness_certified;
    }
    env.result["field_count"] = dec(count);
    env.result["bound"] = dec(singular_k3_bound(d, count, precision));
    if (strong_count) {
        env.inputs["strong_field_count"] = *strong_count;
        env.result["strong_bound"] = dec(singular_k3_strong_bound(d, parse_integer(*strong_count), precision));
    }
}

void cmd_lattice(const std::vector<std::string>& args, Envelope& env, Common& common)
{
    CLI::App app{"lattice discriminants of CM products and their Kummer surfaces", "lattice"};
    add_common(app, common);
    std::optional<std::string> disc, f1, f2, parse_disc;
    std::string kind = "abelian";
    std::optional<int> rho;
    app.add_option("--disc", disc, "Δ_K for the forward direction");
    app.add_option("--f1", f1, "conductor of E1");
    app.add_option("--f2", f2, "conductor of E2");
    app.add_option("--parse", parse_disc, "recover (Δ_K, lcm) from this lattice discriminant");
    app.add_option("--kind", kind, "abelian or kummer, for --parse")->check(CLI::IsMember({"abelian", "kummer"}));
    app.add_option("--rho", rho, "Picard rank of an abelian surface, for the geometric Brauer corank");
    parse(app, args);

    env.result = json::object();
    if (rho) {
        env.inputs["rho"] = std::to_string(*rho);
        env.provenance = "lattice.geometric_brauer";
        env.result["geometric_brauer_corank"] = std::to_string(geometric_brauer_corank(*rho));
        if (!parse_disc && !disc) return;
    }
    env.provenance = "lattice.discriminants";
    if (parse_disc) {
        env.inputs["parse"] = *parse_disc;
        env.inputs["kind"] = kind;
        const LatticeSummary s =
            parse_lattice(parse_integer(*parse_disc), kind == "abelian" ? SurfaceKind::abelian : SurfaceKind::kummer);
        env.result["field_disc"] = dec(s.field.value());
        env.result["conductor_lcm"] = dec(s.conductor_lcm);
        return;
    }
    if (!disc) throw InvalidInput("lattice needs --disc with --f1/--f2, --parse, or --rho");
    env.inputs["disc"] = *disc;
    env.inputs["f1"] = f1.value_or("1");
    env.inputs["f2"] = f2.value_or("1");
    const CMPair pair(FundamentalDiscriminant(parse_integer(*disc)), parse_integer(f1.value_or("1")),
                      parse_integer(f2.value_or("1")));
    env.result["conductor_lcm"] = dec(pair.conductor_lcm());
    env.result["disc_hom"] = dec(disc_hom(pair));
    env.result["disc_ns_product"] = dec(disc_ns_product(pair));
    env.result["disc_ns_kummer"] = dec(disc_ns_kummer(pair));
}

void cmd_brauer_shape(const std::vector<std::string>& args, Envelope& env, Common& common)
{
    CLI::App app{"l-primary transcendental Brauer group of E x E", "brauer-shape"};
    add_common(app, common);
    std::string ell;
    std::string m = "0";
    std::optional<std::string> disc, conductor;
    std::optional<std::string> e_prime;
    GaloisFlags flags;
    app.add_option("--ell", ell, "prime l")->required();
    app.add_option("--m", m, "m_l(E), or m_l(E') with --conductor")->capture_default_str();
    app.add_flag("--k-in-k", flags.K_in_k, "the CM field lies in k");
    app.add_flag("--two-torsion", flags.two_torsion_rational, "E[2] = E[2](k)");
    app.add_option("--disc", disc, "Δ_K (required with --conductor)");
    app.add_option("--conductor", conductor, "conductor f of End(E); switches to the non-maximal order bound");
    app.add_option("--e-prime-two-torsion", e_prime, "E'[2] = E'[2](k): true or false")
        ->check(CLI::IsMember({"true", "false"}));
    parse(app, args);

    env.inputs = json{{"ell", ell}, {"m", m}, {"k_in_k", flags.K_in_k}, {"two_torsion", flags.two_torsion_rational}};
    const Integer l = parse_integer(ell);
    const auto mm = static_cast<unsigned long>(to_u64(parse_integer(m), "m"));
    std::optional<FundamentalDiscriminant> field;
    if (disc) {
        env.inputs["disc"] = *disc;
        field.emplace(parse_integer(*disc));
    }
    if (conductor) {
        env.inputs["conductor"] = *conductor;
        if (!field) throw InvalidInput("--conductor needs --disc");
        std::optional<bool> ep;
        if (e_prime) {
            env.inputs["e_prime_two_torsion"] = *e_prime;
            ep = *e_prime == "true";
        }
        env.provenance = "brauer.order_nonmaximal";
        env.result = json{{"max_order", dec(brauer_order_bound_nonmaximal(l, parse_integer(*conductor), mm, flags,
                                                                          *field, ep))}};
        return;
    }
    env.provenance = "brauer.shape_maximal";
    env.result = shape_json(brauer_shape_maximal(l, mm, flags, field));
}

void cmd_divisibility(const std::vector<std::string>& args, Envelope& env, Common& common)
{
    CLI::App app{"divisibility and uniform bounds for #Br(E x E)/Br_1", "divisibility"};
    add_common(app, common);
    std::string disc, degree;
    std::optional<std::string> conductor;
    bool use_six = false;
    app.add_option("--disc", disc, "Δ_K")->required();
    app.add_option("--degree", degree, "[k:Q]")->required();
    app.add_option("--conductor", conductor, "conductor f (omit if unknown)");
    app.add_flag("--use-six", use_six, "use 6 in place of the unit index");
    parse(app, args);

    env.inputs = json{{"disc", disc}, {"degree", degree}, {"use_six", use_six}};
    const FundamentalDiscriminant k(parse_integer(disc));
    const Integer d = parse_integer(degree);
    json primes = json::array();
    for (const auto& p : exceptional_primes(d, k, use_six)) primes.push_back(dec(p));
    env.provenance = "brauer.divisibility";
    env.result = json{{"exceptional_primes", primes},
                      {"divisibility_bound_any_conductor", dec(divisibility_bound_any_conductor(d, k, use_six))},
                      {"geometric_invariants_bound", dec(geometric_brauer_invariants_bound(k, d))}};
    std::optional<Integer> f;
    if (conductor) {
        env.inputs["conductor"] = *conductor;
        f = parse_integer(*conductor);
        env.result["divisibility_bound"] = dec(divisibility_bound(*f, d, k, use_six));
    }
    env.result["uniform_bound"] = dec(uniform_bound_EE(f, d, k));
}

void cmd_mell_estimate(const std::vector<std::string>& args, Envelope& env, Common& common)
{
    CLI::App app{"sampled upper bound on m_l(E) for a CM curve over Q", "mell-estimate"};
    add_common(app, common);
    std::string a4, a6, cm_disc;
    std::optional<std::string> ell;
    std::string budget = "1000";
    std::string max_ell = "7";
    app.add_option("--a4", a4, "coefficient of x")->required();
    app.add_option("--a6", a6, "constant coefficient")->required();
    app.add_option("--cm-disc", cm_disc, "discriminant of the CM order (must be fundamental)")->required();
    app.add_option("--ell", ell, "a single prime l; otherwise all l <= --max-ell");
    app.add_option("--budget", budget, "sample primes up to this bound")->capture_default_str();
    app.add_option("--max-ell", max_ell, "largest l when --ell is omitted")->capture_default_str();
    parse(app, args);

    env.inputs = json{{"a4", a4}, {"a6", a6}, {"cm_disc", cm_disc}, {"budget", budget}};
    const CurveOverQ curve(parse_integer(a4), parse_integer(a6), parse_integer(cm_disc));
    const std::uint64_t b = to_u64(parse_integer(budget), "budget");
    env.provenance = "grossencharakter.m_estimate";
    auto one = [&](const Integer& l) {
        const MEstimate est = estimate_m(curve, l, b);
        return json{{"ell", dec(est.ell)},
                    {"m_hat", std::to_string(est.m_hat)},
                    {"samples", std::to_string(est.samples)},
                    {"witness_prime", dec(est.witness_prime)}};
    };
    if (ell) {
        env.inputs["ell"] = *ell;
        env.result = one(parse_integer(*ell));
        return;
    }
    env.inputs["max_ell"] = max_ell;
    json per_ell = json::array();
    MValuation m;
    for (std::uint64_t l : primes_up_to(to_u64(parse_integer(max_ell), "max_ell"))) {
        json j = one(Integer(static_cast<unsigned long>(l)));
        const unsigned long e = std::stoul(j["m_hat"].get<std::string>());
        if (e > 0) m.exponents[static_cast<unsigned long>(l)] = e;
        per_ell.push_back(std::move(j));
    }
    env.result = json{{"per_ell", per_ell}, {"c_hat", dec(m.c())}};
}

void cmd_bound(const std::vector<std::string>& args, Envelope& env, Common& common)
{
    CLI::App app{"evaluate a closed-form Brauer group bound", "bound"};
    add_common(app, common);
    std::optional<std::string> id;
    std::vector<std::string> inputs, flags;
    bool assume_grh = false, compose = false, list = false;
    unsigned digits = 6;
    std::optional<std::string> disc_lambda, degree;
    app.add_option("--id", id, "bound id (see --list)");
    app.add_option("--input", inputs, "name=value, repeatable");
    app.add_option("--flag", flags, "boolean flag name, repeatable");
    app.add_flag("--assume-grh", assume_grh, "allow bounds conditional on GRH");
    app.add_option("--precision", digits, "decimal digits for pi, ln and sqrt")->capture_default_str();
    app.add_flag("--compose", compose, "unconditional Kummer bound composed from the lattice bound");
    app.add_option("--disc-lambda", disc_lambda, "Kummer lattice discriminant, for --compose");
    app.add_option("--degree", degree, "[k:Q], for --compose");
    app.add_flag("--list", list, "list the bound ids");
    parse(app, args);

    const Precision precision{digits};
    env.inputs["precision"] = std::to_string(digits);
    if (list) {
        json ids = json::array();
        for (BoundFormula f : all_bound_formulas()) {
            ids.push_back(json{{"id", to_string(f)}, {"conditional", is_grh_conditional(f)}});
        }
        env.provenance = "bounds.tower_constants";
        env.result = json{{"ids", ids}};
        return;
    }
    if (compose) {
        if (!disc_lambda || !degree) throw InvalidInput("--compose needs --disc-lambda and --degree");
        env.inputs["disc_lambda"] = *disc_lambda;
        env.inputs["degree"] = *degree;
        const IntroComposition c = compose_intro_bound(parse_integer(*disc_lambda), parse_integer(*degree), precision);
        env.provenance = "bounds.intro_composition";
        env.result = json{{"intro", report_json(c.intro)},
                          {"via_lattice", report_json(c.via_lattice)},
                          {"field_disc", dec(c.field_disc)},
                          {"conductor_lcm", dec(c.conductor_lcm)},
                          {"constant_identity_holds", c.constant_identity_holds},
                          {"inequality_holds", c.inequality_holds}};
        return;
    }
    if (!id) throw InvalidInput("bound needs --id, --compose or --list");
    env.inputs["id"] = *id;
    const BoundFormula formula = bound_formula_from_string(*id);
    BoundInputs in;
    for (const auto& kv : inputs) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw InvalidInput("--input expects name=value, got " + kv);
        in.values[kv.substr(0, eq)] = parse_integer(kv.substr(eq + 1));
    }
    for (const auto& f : flags) in.flags.insert(f);
    env.inputs["assume_grh"] = assume_grh;
    EvalOptions options{precision, assume_grh};
    const BoundReport r = eval_bound(formula, in, options);
    env.provenance = r.provenance;
    env.conditional = r.conditional;
    env.result = report_json(r);
}

void cmd_constants(const std::vector<std::string>& args, Envelope& env, Common& common)
{
    CLI::App app{"descent-degree constants and the provenance registry", "constants"};
    add_common(app, common);
    parse(app, args);

    json table = json::object();
    for (const auto& c : field_tower_constants()) {
        table[c.name] = json{{"value", dec(c.value)}, {"expression", c.expression}, {"description", c.description}};
    }
    env.provenance = "bounds.tower_constants";
    env.result = json{{"tower_constants", table}, {"registry", provenance_registry()}};
}

const std::map<std::string, Handler>& handlers()
{
    static const std::map<std::string, Handler> table = {
        {"classnum", cmd_classnum},
        {"fields-by-h", cmd_fields_by_h},
        {"minkowski", cmd_minkowski},
        {"conductor-bound", cmd_conductor_bound},
        {"cm-count", cmd_cm_count},
        {"k3-census", cmd_k3_census},
        {"lattice", cmd_lattice},
        {"brauer-shape", cmd_brauer_shape},
        {"divisibility", cmd_divisibility},
        {"mell-estimate", cmd_mell_estimate},
        {"bound", cmd_bound},
        {"constants", cmd_constants},
    };
    return table;
}

void flatten(const json& j, const std::string& prefix, std::ostream& out)
{
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
    } else if (j.is_array()) {
        std::size_t i = 0;
        for (const auto& v : j) flatten(v, prefix + "[" + std::to_string(i++) + "]", out);
    } else {
        out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
    }
}

void usage(std::ostream& err)
{
    err << "usage: cmbrauer <subcommand> [options]\nsubcommands:";
    for (const auto& name : subcommands()) err << ' ' << name;
    err << "\nrun `cmbrauer <subcommand> --help` for the options of one subcommand\n";
}

json error_payload(const std::string& command, const std::string& kind, const std::string& message)
{
    return json{{"command", command}, {"error", json{{"kind", kind}, {"message", message}}}};
}

}  // namespace

const std::vector<std::string>& subcommands()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, h] : handlers()) v.push_back(name);
        return v;
    }();
    return names;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    if (args.empty() || args[0] == "--help" || args[0] == "-h") {
        usage(err);
        return args.empty() ? kExitInvalidInput : kExitOk;
    }
    const auto it = handlers().find(args[0]);
    if (it == handlers().end()) {
        out << error_payload(args[0], "unknown_subcommand", "unknown subcommand '" + args[0] + "'").dump(2) << '\n';
        usage(err);
        return kExitUnknownCommand;
    }
    Envelope env;
    env.command = args[0];
    Common common;
    const std::vector<std::string> rest(args.begin() + 1, args.end());
    try {
        it->second(rest, env, common);
    } catch (const CLI::CallForHelp& e) {
        err << e.what();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        out << error_payload(env.command, "usage", e.what()).dump(2) << '\n';
        return kExitInvalidInput;
    } catch (const InvalidInput& e) {
        out << error_payload(env.command, "invalid_input", e.what()).dump(2) << '\n';
        return kExitInvalidInput;
    } catch (const InternalError& e) {
        out << error_payload(env.command, "internal", e.what()).dump(2) << '\n';
        return kExitInternal;
    } catch (const std::exception& e) {
        out << error_payload(env.command, "internal", e.what()).dump(2) << '\n';
        return kExitInternal;
    }

    const std::string canonical = env.to_json().dump(2) + "\n";
    if (!common.output.empty()) {
        std::ofstream file(common.output, std::ios::binary);
        if (!file) {
            out << error_payload(env.command, "invalid_input", "cannot open output file " + common.output).dump(2)
                << '\n';
            return kExitInvalidInput;
        }
        file << canonical;
    }
    if (common.format == "table") {
        out << "command: " << env.command << '\n';
        flatten(env.inputs, "inputs", out);
        flatten(env.result, "result", out);
        out << "provenance: " << env.provenance << '\n' << "conditional: " << (env.conditional ? "true" : "false") << '\n';
    } else {
        out << canonical;
    }
    return kExitOk;
}

}  // namespace cmbrauer::cli
