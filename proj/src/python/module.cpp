// Python bindings: exact unit construction, freeness certification, and
// the independent word oracle.  Exact integers cross the boundary as
// Python ints (built from decimal strings, never through a double);
// certificates and reports cross as plain dicts with every number an
// exact rational/quadratic string.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>

#include "freequat/errors.hpp"
#include "freequat/numbers.hpp"
#include "freequat/oracle.hpp"
#include "freequat/pell.hpp"
#include "freequat/pingpong.hpp"
#include "freequat/quaternion.hpp"
#include "freequat/semigroup.hpp"
#include "freequat/serialize.hpp"

namespace py = pybind11;
namespace fq = freequat;

namespace {

py::object big_int(const fq::Int& z) {
    return py::module_::import("builtins").attr("int")(z.get_str());
}

py::object json_to_py(const fq::Json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

fq::SquareFreeD make_d(unsigned value) { return fq::SquareFreeD(value); }

std::string fund_repr(const fq::FundUnit& u) {
    return "FundUnit(d=" + std::to_string(u.d.value) + ", x=" +
           u.x.get_str() + ", y=" + u.y.get_str() +
           ", norm=" + (u.norm < 0 ? "-1" : "+1") + ")";
}

std::string half_repr(const fq::PellHalf& h) {
    return "PellHalf(x=" + h.x.get_str() + ", y=" + h.y.get_str() +
           ", power=" + std::to_string(h.power) + ")";
}

std::vector<std::string> support_names(const fq::QuatElem& q) {
    const fq::Support s = fq::support(q);
    std::vector<std::string> names;
    if (s.one) names.push_back("1");
    if (s.i) names.push_back("i");
    if (s.j) names.push_back("j");
    if (s.k) names.push_back("k");
    return names;
}

} // namespace

PYBIND11_MODULE(freequat, m) {
    m.doc() = "Exact quaternion units over imaginary quadratic fields and "
              "machine-checked freeness certificates for the groups and "
              "semigroups they generate.";
    m.attr("__version__") = "1.0.0";

    py::register_exception<fq::Error>(m, "Error");

    py::enum_<fq::BasisSlot>(m, "Slot", "Basis slot of a quaternion unit.")
        .value("ONE", fq::BasisSlot::One)
        .value("I", fq::BasisSlot::I)
        .value("J", fq::BasisSlot::J)
        .value("K", fq::BasisSlot::K);

    py::enum_<fq::WKind>(m, "Kind", "Which companion unit w to pair with u.")
        .value("W1", fq::WKind::W1)
        .value("W2", fq::WKind::W2)
        .value("W3", fq::WKind::W3);

    py::class_<fq::FundUnit>(m, "FundUnit",
                             "Fundamental solution of x^2 - d y^2 = +-1.")
        .def_property_readonly("x",
                               [](const fq::FundUnit& u) { return big_int(u.x); })
        .def_property_readonly("y",
                               [](const fq::FundUnit& u) { return big_int(u.y); })
        .def_property_readonly("norm",
                               [](const fq::FundUnit& u) { return u.norm; })
        .def_property_readonly("d",
                               [](const fq::FundUnit& u) { return u.d.value; })
        .def("__repr__", &fund_repr);

    py::class_<fq::PellHalf>(m, "PellHalf",
                             "Solution of x^2 - d y^2 = 2 (-1)^power.")
        .def_property_readonly("x",
                               [](const fq::PellHalf& h) { return big_int(h.x); })
        .def_property_readonly("y",
                               [](const fq::PellHalf& h) { return big_int(h.y); })
        .def_property_readonly("power",
                               [](const fq::PellHalf& h) { return h.power; })
        .def("__repr__", &half_repr);

    py::class_<fq::QuatElem>(m, "Quaternion",
                             "Element of the quaternion algebra (-1,-1) over "
                             "Q(sqrt(-d)); coefficients are exact.")
        .def("__repr__", [](const fq::QuatElem& q) { return fq::to_string(q); })
        .def("__str__", [](const fq::QuatElem& q) { return fq::to_string(q); })
        .def("__mul__",
             [](const fq::QuatElem& a, const fq::QuatElem& b) { return a * b; })
        .def("__pow__",
             [](const fq::QuatElem& q, long n) { return fq::quat_pow(q, n); })
        .def("__eq__",
             [](const fq::QuatElem& a, const fq::QuatElem& b) { return a == b; })
        .def_property_readonly(
            "d", [](const fq::QuatElem& q) { return q.d().value; })
        .def_property_readonly(
            "norm",
            [](const fq::QuatElem& q) { return fq::to_string(fq::quat_norm(q)); },
            "Reduced norm as an exact string, e.g. \"1\" or \"-1\".")
        .def_property_readonly(
            "is_unit", [](const fq::QuatElem& q) { return fq::is_unit(q); })
        .def_property_readonly(
            "is_integral",
            [](const fq::QuatElem& q) { return fq::is_integral(q); })
        .def_property_readonly("support", &support_names,
                               "Names of the nonzero basis slots.")
        .def("conjugate",
             [](const fq::QuatElem& q) { return fq::quat_conj(q); })
        .def("inverse", [](const fq::QuatElem& q) { return fq::quat_inverse(q); })
        .def("is_torsion",
             [](const fq::QuatElem& q) { return fq::is_torsion(q); });

    py::class_<fq::TableData>(
        m, "Table",
        "A generator pair together with its candidate separation table.")
        .def_property_readonly("generator_names",
                               [](const fq::TableData& td) {
                                   std::vector<std::string> names;
                                   for (const auto& g : td.generators)
                                       names.push_back(g.name);
                                   return names;
                               })
        .def_property_readonly("generators",
                               [](const fq::TableData& td) {
                                   std::vector<fq::QuatElem> units;
                                   for (const auto& g : td.generators)
                                       if (g.unit)
                                           units.push_back(fq::quat_pow(
                                               *g.unit, long(g.power)));
                                   return units;
                               },
                               "The generators as quaternions (with the "
                               "declared powers applied); empty for tables "
                               "whose maps do not come from units.")
        .def("__repr__", [](const fq::TableData& td) {
            std::string r = "Table(";
            for (std::size_t k = 0; k < td.generators.size(); ++k) {
                if (k) r += ", ";
                r += td.generators[k].name;
            }
            return r + ")";
        });

    // --- number theory -----------------------------------------------------

    m.def("is_square_free",
          [](std::uint64_t n) { return fq::is_square_free(n); },
          py::arg("n"));

    m.def(
        "pell_fundamental",
        [](unsigned d) { return fq::pell_fundamental(make_d(d)); },
        py::arg("d"),
        "Fundamental solution of x^2 - d y^2 = +-1 (norm -1 when it exists).");

    m.def(
        "pell_power",
        [](const fq::FundUnit& u, unsigned n) { return fq::pell_power(u, n); },
        py::arg("unit"), py::arg("n"),
        "The n-th power of a fundamental solution, with its norm (-1)^n.");

    m.def(
        "pell_fundamental_2d",
        [](unsigned d) { return fq::pell_fundamental_2d(make_d(d)); },
        py::arg("d"),
        "Smallest solution of x^2 - d y^2 = +-2 (odd square-free d only).");

    // --- unit constructors ---------------------------------------------------

    m.def(
        "basis",
        [](fq::BasisSlot slot, unsigned d) {
            return fq::QuatElem::basis(slot, make_d(d));
        },
        py::arg("slot"), py::arg("d"));

    m.def(
        "pell2_unit",
        [](const fq::FundUnit& fund, fq::BasisSlot xi, fq::BasisSlot psi) {
            return fq::pell2_unit(fund, xi, psi);
        },
        py::arg("fund"), py::arg("xi"), py::arg("psi"),
        "Two-slot unit y sqrt(-d) xi + x psi; its norm matches the solution.");

    m.def(
        "pell3_unit",
        [](const fq::PellHalf& half, unsigned d, fq::BasisSlot xi,
           fq::BasisSlot psi, fq::BasisSlot phi) {
            return fq::pell3_unit(half, make_d(d), xi, psi, phi);
        },
        py::arg("half"), py::arg("d"), py::arg("xi"), py::arg("psi"),
        py::arg("phi"), "Three-slot unit of norm +1 from a half solution.");

    m.def(
        "pell4_unit",
        [](const fq::FundUnit& fund, fq::BasisSlot zeta, fq::BasisSlot xi,
           fq::BasisSlot psi, fq::BasisSlot phi, int sign) {
            return fq::pell4_unit(fund, zeta, xi, psi, phi, sign);
        },
        py::arg("fund"), py::arg("zeta"), py::arg("xi"), py::arg("psi"),
        py::arg("phi"), py::arg("sign") = 1,
        "Four-slot unit of norm +1 (needs norm +1 and even y).");

    m.def(
        "pell4_unit_from_square",
        [](const fq::FundUnit& fund) {
            return fq::pell4_unit_from_square(fund);
        },
        py::arg("fund"),
        "Four-slot unit built from the squared solution (needs odd y).");

    m.def(
        "gauss_unit",
        [](unsigned d, long mval, int sign) {
            return fq::gauss_unit(make_d(d), fq::Int(mval), sign);
        },
        py::arg("d"), py::arg("m"), py::arg("sign") = 1,
        "Unit m sqrt(-d) + a i + b j + c k with a^2+b^2+c^2 = m^2 d + sign, "
        "or None when no three-square decomposition applies.");

    m.def(
        "pp1_units",
        [](const fq::FundUnit& fund) {
            const fq::Pp1Units pu = fq::prop_pp1_units(fund);
            py::list out;
            for (std::size_t k = 0; k < pu.units.size(); ++k)
                out.append(py::make_tuple(pu.units[k], pu.integral[k]));
            return out;
        },
        py::arg("fund"),
        "The four norm +1 units attached to a norm +1 solution, each paired "
        "with an integrality flag.");

    // --- group certification --------------------------------------------------

    m.def(
        "standard_table",
        [](unsigned d, fq::WKind kind) {
            const fq::SquareFreeD sd = make_d(d);
            return fq::standard_table(sd, fq::pell_fundamental(sd), kind);
        },
        py::arg("d"), py::arg("kind") = fq::WKind::W1,
        "Separation table for the pair (u, w) at norm +1.");

    m.def(
        "corollary_table",
        [](unsigned d) {
            const fq::SquareFreeD sd = make_d(d);
            return fq::corollary_table(sd, fq::pell_fundamental(sd));
        },
        py::arg("d"), "Separation table for the norm -1 case (x != 1).");

    m.def("d2_special_table", &fq::d2_special_table,
          "The table certifying the squared pair (u^2, w) at d = 2.");
    m.def("d2_unsquared_table", &fq::d2_unsquared_table,
          "The candidate table for the unsquared pair (u, w) at d = 2 "
          "(its certificate fails).");
    m.def("sanov_table", &fq::sanov_table,
          "The classical integer pair z/(2z+1), z+2.");

    m.def(
        "certify",
        [](const fq::TableData& td) {
            return json_to_py(fq::certificate_to_json(fq::certify(td)));
        },
        py::arg("table"),
        "Run every separation condition exactly; returns the certificate "
        "as a dict with a boolean \"verdict\".");

    m.def(
        "power_freeness",
        [](const fq::TableData& td, unsigned long n) {
            const fq::Certificate cert = fq::certify(td);
            const fq::PowerVerdict pv = fq::power_certificate(cert, n);
            const fq::Json j{{"n", pv.n},
                             {"free", pv.free},
                             {"method", fq::to_string(pv.method)},
                             {"explanation", pv.explanation}};
            return json_to_py(j);
        },
        py::arg("table"), py::arg("n"),
        "Whether the pair of n-th powers of a certified pair is free, and "
        "by which argument.");

    m.def(
        "interval_lemmas",
        [](unsigned d, fq::WKind kind) {
            const fq::SquareFreeD sd = make_d(d);
            const fq::IntervalReport rep =
                fq::verify_interval_lemmas(sd, fq::pell_fundamental(sd), kind);
            fq::Json checks = fq::Json::array();
            for (const fq::IntervalCheck& c : rep.checks)
                checks.push_back({{"description", c.description},
                                  {"lhs", c.lhs},
                                  {"rhs", c.rhs},
                                  {"verdict", c.pass}});
            const fq::Json j{{"kind", fq::to_string(rep.kind)},
                             {"checks", std::move(checks)},
                             {"verdict", rep.all_pass}};
            return json_to_py(j);
        },
        py::arg("d"), py::arg("kind") = fq::WKind::W1,
        "Exact verification of the interval inclusions behind the table.");

    m.def(
        "infeasibility",
        [](unsigned resolution) {
            const fq::InfeasibilityReport rep =
                fq::infeasibility_sweep(resolution);
            const fq::Json j{
                {"resolution", rep.resolution},
                {"samples", rep.samples},
                {"reduced_satisfying", rep.reduced_satisfying},
                {"first_inequality_failures", rep.first_inequality_failures},
                {"second_inequality_failures", rep.second_inequality_failures},
                {"table_passes", rep.table_passes},
                {"method", rep.method}};
            return json_to_py(j);
        },
        py::arg("resolution") = 100u,
        "Grid scan of candidate d = 2 tables for the unsquared pair; every "
        "sample fails the reduced system.");

    // --- semigroup certification ----------------------------------------------

    m.def(
        "certify_semigroup",
        [](unsigned d, fq::WKind kind) {
            const fq::SquareFreeD sd = make_d(d);
            const fq::SemigroupCertificate cert = fq::certify_semigroup(
                fq::standard_semigroup_data(sd, fq::pell_fundamental(sd), kind));
            return json_to_py(fq::semigroup_certificate_to_json(cert));
        },
        py::arg("d"), py::arg("kind") = fq::WKind::W1,
        "Invariant-set criterion for the pair of induced maps: no nonempty "
        "positive word acts as the identity.");

    m.def(
        "certify_direct",
        [](unsigned d) {
            const fq::SquareFreeD sd = make_d(d);
            const fq::SemigroupCertificate cert = fq::certify_semigroup(
                fq::norm_minus_one_direct_data(sd, fq::pell_fundamental(sd)));
            return json_to_py(fq::semigroup_certificate_to_json(cert));
        },
        py::arg("d"),
        "The same criterion applied directly to a norm -1 pair.");

    m.def(
        "certify_positive",
        [](unsigned d, fq::WKind kind) {
            const fq::SquareFreeD sd = make_d(d);
            const fq::PositiveCertificate cert = fq::certify_positive(
                fq::positive_ping_pong_data(sd, fq::pell_fundamental(sd), kind));
            return json_to_py(fq::positive_certificate_to_json(cert));
        },
        py::arg("d"), py::arg("kind") = fq::WKind::W1,
        "Two-set separation proving the positive words are pairwise "
        "distinct, i.e. the semigroup is free.");

    // --- the independent word oracle --------------------------------------------

    m.def(
        "free_group_word_check",
        [](const fq::QuatElem& g1, const fq::QuatElem& g2,
           unsigned max_length) {
            return json_to_py(fq::group_report_to_json(
                fq::free_group_word_check(g1, g2, max_length)));
        },
        py::arg("g1"), py::arg("g2"),
        py::arg("max_length") = fq::kDefaultGroupDepth,
        "Multiply out every reduced word up to the given length; reports "
        "the first trivial word and any torsion, or clean counts.");

    m.def(
        "free_semigroup_word_check",
        [](const fq::QuatElem& g1, const fq::QuatElem& g2,
           unsigned max_length) {
            return json_to_py(fq::semigroup_report_to_json(
                fq::free_semigroup_word_check(g1, g2, max_length)));
        },
        py::arg("g1"), py::arg("g2"),
        py::arg("max_length") = fq::kDefaultSemigroupDepth,
        "Multiply out every positive word up to the given length and look "
        "for a collision between distinct words.");

    m.def(
        "power_word_check",
        [](const fq::QuatElem& g1, const fq::QuatElem& g2, unsigned n,
           unsigned max_length) {
            return json_to_py(fq::group_report_to_json(
                fq::power_word_check(g1, g2, n, max_length)));
        },
        py::arg("g1"), py::arg("g2"), py::arg("n"),
        py::arg("max_length") = fq::kDefaultGroupDepth,
        "The group word check applied to the pair of n-th powers.");
}
