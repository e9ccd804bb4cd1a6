// Python bindings. Integers cross the boundary as Python ints of any size,
// exact rationals as fractions.Fraction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cmbrauer/bounds.hpp"
#include "cmbrauer/brauer.hpp"
#include "cmbrauer/cli.hpp"
#include "cmbrauer/cm_census.hpp"
#include "cmbrauer/grossencharakter.hpp"
#include "cmbrauer/lattices.hpp"
#include "cmbrauer/minkowski.hpp"
#include "cmbrauer/quadratic.hpp"

namespace py = pybind11;

namespace pybind11::detail {

template <>
struct type_caster<mpz_class> {
    PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

    bool load(handle src, bool)
    {
        if (!src || !PyLong_Check(src.ptr())) return false;
        value = cmbrauer::parse_integer(py::str(src).cast<std::string>());
        return true;
    }

    static handle cast(const mpz_class& n, return_value_policy, handle)
    {
        return PyLong_FromString(cmbrauer::to_decimal(n).c_str(), nullptr, 10);
    }
};

template <>
struct type_caster<mpq_class> {
    PYBIND11_TYPE_CASTER(mpq_class, const_name("fractions.Fraction"));

    bool load(handle, bool) { return false; }

    static handle cast(const mpq_class& q, return_value_policy policy, handle parent)
    {
        const mpz_class num = q.get_num();
        const mpz_class den = q.get_den();
        object fraction = module_::import("fractions").attr("Fraction");
        object n = reinterpret_steal<object>(type_caster<mpz_class>::cast(num, policy, parent));
        object d = reinterpret_steal<object>(type_caster<mpz_class>::cast(den, policy, parent));
        return fraction(n, d).release();
    }
};

}  // namespace pybind11::detail

namespace {

using namespace cmbrauer;

FundamentalDiscriminant field(const Integer& disc) { return FundamentalDiscriminant(disc); }

SurfaceKind surface_kind(const std::string& kind)
{
    if (kind == "abelian") return SurfaceKind::abelian;
    if (kind == "kummer") return SurfaceKind::kummer;
    throw InvalidInput("kind must be 'abelian' or 'kummer'");
}

py::dict report_dict(const BoundReport& r)
{
    py::dict d;
    d["id"] = to_string(r.id);
    d["provenance"] = r.provenance;
    d["symbolic"] = r.symbolic;
    d["upper_value"] = r.upper_value;
    d["integer_bound"] = r.integer_bound;
    d["rounding"] = to_string(r.rounding);
    d["conditional"] = r.conditional;
    d["notes"] = r.notes;
    return d;
}

}  // namespace

PYBIND11_MODULE(cmbrauer, m)
{
    m.doc() = "Class numbers, CM census and Brauer group bounds for CM abelian and K3 surfaces";

    py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);

    m.def(
        "fundamental_discriminant",
        [](const Integer& n) {
            const Order o = fundamental_discriminant(n);
            return py::make_tuple(o.field().value(), o.conductor());
        },
        py::arg("disc"), "Split an order discriminant into (Δ_K, conductor).");
    m.def("kronecker_symbol", &kronecker_symbol, py::arg("disc"), py::arg("p"));
    m.def(
        "class_number",
        [](const Integer& disc, std::optional<Integer> conductor) {
            if (conductor) return class_number_order(Order(field(disc), *conductor));
            return class_number_order(fundamental_discriminant(disc));
        },
        py::arg("disc"), py::arg("conductor") = py::none(),
        "h(O_f) for the order of conductor f in Q(sqrt(disc)), or of discriminant disc when f is omitted.");
    m.def("count_reduced_forms", &count_reduced_forms, py::arg("disc"));
    m.def(
        "fields_by_class_number",
        [](std::uint64_t h_max, std::uint64_t bound) {
            const FieldEnumeration e = enumerate_fields_by_class_number(h_max, bound);
            py::list fields;
            for (std::size_t i = 0; i < e.fields.size(); ++i) {
                fields.append(py::make_tuple(e.fields[i].value(), e.class_numbers[i]));
            }
            py::dict d;
            d["fields"] = fields;
            d["completeness_certified"] = e.completeness_certified;
            return d;
        },
        py::arg("h_max"), py::arg("bound"));

    m.def(
        "minkowski_constant", [](unsigned long n) { return minkowski_constant(n).value; }, py::arg("n"));
    m.def("algebraic_brauer_bound", &algebraic_brauer_bound, py::arg("rank"));

    m.def(
        "conductor_bound",
        [](const Integer& disc, const Integer& degree) {
            const ConductorBoundReport r = conductor_bound(field(disc), degree);
            return py::make_tuple(r.bound, to_string(r.clause));
        },
        py::arg("disc"), py::arg("ring_class_degree"));
    m.def("conductor_bound_over_degree", &conductor_bound_over_degree, py::arg("degree"));
    m.def(
        "cm_count_per_field",
        [](const Integer& disc, std::uint64_t d) { return cm_count_per_field(field(disc), d).count; },
        py::arg("disc"), py::arg("degree"));
    m.def(
        "cm_count_total",
        [](std::uint64_t d, std::uint64_t bound) {
            const CensusReport r = cm_count_total(d, bound);
            py::dict out;
            out["total"] = r.total;
            out["cubic_bound"] = r.cubic_bound;
            out["field_count"] = r.per_field.size();
            out["certified_complete"] = r.certified_complete;
            return out;
        },
        py::arg("degree"), py::arg("bound") = 5000);
    m.def(
        "singular_k3_bound",
        [](std::uint64_t d, const Integer& count, unsigned digits) {
            return singular_k3_bound(d, count, Precision{digits});
        },
        py::arg("degree"), py::arg("field_count"), py::arg("digits") = 6);

    m.def(
        "disc_hom", [](const Integer& disc, const Integer& f1, const Integer& f2) {
            return disc_hom(CMPair(field(disc), f1, f2));
        },
        py::arg("disc"), py::arg("f1"), py::arg("f2"));
    m.def(
        "disc_ns_product", [](const Integer& disc, const Integer& f1, const Integer& f2) {
            return disc_ns_product(CMPair(field(disc), f1, f2));
        },
        py::arg("disc"), py::arg("f1"), py::arg("f2"));
    m.def(
        "disc_ns_kummer", [](const Integer& disc, const Integer& f1, const Integer& f2) {
            return disc_ns_kummer(CMPair(field(disc), f1, f2));
        },
        py::arg("disc"), py::arg("f1"), py::arg("f2"));
    m.def(
        "parse_lattice",
        [](const Integer& disc, const std::string& kind) {
            const LatticeSummary s = parse_lattice(disc, surface_kind(kind));
            return py::make_tuple(s.field.value(), s.conductor_lcm);
        },
        py::arg("disc"), py::arg("kind"));

    m.def(
        "brauer_shape_maximal",
        [](const Integer& ell, unsigned long m_ell, bool k_in_k, bool two_torsion, std::optional<Integer> disc) {
            std::optional<FundamentalDiscriminant> k;
            if (disc) k.emplace(*disc);
            return brauer_shape_maximal(ell, m_ell, GaloisFlags{k_in_k, two_torsion}, k).cyclic_factors;
        },
        py::arg("ell"), py::arg("m"), py::arg("K_in_k") = false, py::arg("two_torsion") = false,
        py::arg("disc") = py::none(), "Cyclic factors of the l-primary transcendental Brauer group of E x E.");
    m.def(
        "divisibility_bound",
        [](const Integer& f, const Integer& d, const Integer& disc, bool use_six) {
            return divisibility_bound(f, d, field(disc), use_six);
        },
        py::arg("conductor"), py::arg("degree"), py::arg("disc"), py::arg("use_six") = false);
    m.def(
        "uniform_bound_EE",
        [](const Integer& d, const Integer& disc, std::optional<Integer> f) { return uniform_bound_EE(f, d, field(disc)); },
        py::arg("degree"), py::arg("disc"), py::arg("conductor") = py::none());

    m.def(
        "count_points_ap",
        [](const Integer& a4, const Integer& a6, const Integer& cm_disc, const Integer& p) {
            return count_points_ap(CurveOverQ(a4, a6, cm_disc), p);
        },
        py::arg("a4"), py::arg("a6"), py::arg("cm_disc"), py::arg("p"));
    m.def(
        "estimate_m",
        [](const Integer& a4, const Integer& a6, const Integer& cm_disc, const Integer& ell, std::uint64_t budget) {
            return estimate_m(CurveOverQ(a4, a6, cm_disc), ell, budget).m_hat;
        },
        py::arg("a4"), py::arg("a6"), py::arg("cm_disc"), py::arg("ell"), py::arg("budget") = 1000);

    m.def("bound_ids", [] {
        std::vector<std::string> ids;
        for (BoundFormula f : all_bound_formulas()) ids.push_back(to_string(f));
        return ids;
    });
    m.def(
        "eval_bound",
        [](const std::string& id, const std::map<std::string, Integer>& inputs, const std::vector<std::string>& flags,
           bool assume_grh, unsigned digits) {
            BoundInputs in;
            in.values = inputs;
            in.flags.insert(flags.begin(), flags.end());
            return report_dict(eval_bound(bound_formula_from_string(id), in, EvalOptions{Precision{digits}, assume_grh}));
        },
        py::arg("id"), py::arg("inputs"), py::arg("flags") = std::vector<std::string>{}, py::arg("assume_grh") = false,
        py::arg("digits") = 6);
    m.def(
        "compose_intro_bound",
        [](const Integer& disc_lambda, const Integer& degree, unsigned digits) {
            const IntroComposition c = compose_intro_bound(disc_lambda, degree, Precision{digits});
            py::dict d;
            d["intro"] = report_dict(c.intro);
            d["via_lattice"] = report_dict(c.via_lattice);
            d["constant_identity_holds"] = c.constant_identity_holds;
            d["inequality_holds"] = c.inequality_holds;
            return d;
        },
        py::arg("disc_lambda"), py::arg("degree"), py::arg("digits") = 6);

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run one CLI invocation; returns (exit_code, stdout, stderr).");
}
