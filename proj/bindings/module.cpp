#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zest/io.hpp"

namespace py = pybind11;
using namespace zest;

namespace {

py::dict report_dict(const VerificationReport& rep) {
    py::dict out;
    out["all_pass"] = rep.all_pass();
    py::list rows;
    for (const auto& r : rep.rows) {
        py::dict row;
        row["name"] = r.name;
        row["pass"] = r.pass;
        row["counterexample"] = r.counterexample;
        rows.append(row);
    }
    out["rows"] = rows;
    return out;
}

} // namespace

PYBIND11_MODULE(pyzest, m) {
    m.doc() = "exact zesting constructions and verifiers for pointed group data";

    py::register_exception<Error>(m, "ZestError");

    py::class_<TorsionScalar>(m, "Scalar")
        .def_static("zero", &TorsionScalar::zero)
        .def_static("one", &TorsionScalar::one)
        .def_static("root", &TorsionScalar::root, py::arg("num"), py::arg("den"))
        .def("is_zero", &TorsionScalar::is_zero)
        .def("is_one", &TorsionScalar::is_one)
        .def("order", &TorsionScalar::order)
        .def("pow", &TorsionScalar::pow)
        .def("inverse", &TorsionScalar::inverse)
        .def("__mul__", &TorsionScalar::operator*)
        .def("__eq__", [](const TorsionScalar& a, const TorsionScalar& b) { return a == b; })
        .def("__repr__", &TorsionScalar::str);
    m.def("parse_scalar", &parse_scalar);
    m.def("nth_roots", &ts_nth_roots, py::arg("m"), py::arg("n"));
    m.def("roots_of_unity", &roots_of_unity);

    py::class_<GroupElement>(m, "GroupElement")
        .def(py::init<std::vector<int>>())
        .def_readonly("w", &GroupElement::w)
        .def("__eq__", [](const GroupElement& a, const GroupElement& b) { return a == b; });

    py::class_<FiniteGroup>(m, "Group")
        .def_static("cyclic", &FiniteGroup::cyclic)
        .def_static("product", &FiniteGroup::product)
        .def_static("metacyclic33", &FiniteGroup::metacyclic33)
        .def("order", &FiniteGroup::order)
        .def("elements", &FiniteGroup::elements)
        .def("mul", &FiniteGroup::mul)
        .def("inv", &FiniteGroup::inv)
        .def("pow", &FiniteGroup::pow)
        .def("is_abelian", &FiniteGroup::is_abelian)
        .def("str", py::overload_cast<const GroupElement&>(&FiniteGroup::str, py::const_))
        .def("__repr__", py::overload_cast<>(&FiniteGroup::str, py::const_));

    py::class_<YetterDrinfeldDatum>(m, "YetterDrinfeldDatum")
        .def_readonly("gamma", &YetterDrinfeldDatum::gamma)
        .def_readonly("degrees", &YetterDrinfeldDatum::degrees);
    m.def("builtin_a12", &builtin_a12, py::arg("n"));
    m.def("builtin_fk3", &builtin_fk3, py::arg("ell"), py::arg("k"));
    m.def("braiding_matrix", &braiding_matrix);

    py::class_<AssociativeZestingDatum>(m, "ZestingDatum");
    py::class_<BraidedZestingDatum>(m, "BraidedZestingDatum");

    m.def("enumerate_a12", [](int n) {
        YetterDrinfeldDatum yd = builtin_a12(n);
        return enumerate_cyclic_zestings(yd, default_gamma0_a12(yd),
                                         std::vector<GroupElement>{yd.degrees[0]});
    });
    m.def("enumerate_fk3", [](int ell, int k) {
        YetterDrinfeldDatum yd = builtin_fk3(ell, k);
        return enumerate_cyclic_zestings(yd, default_gamma0_fk3(yd));
    });
    m.def("builtin_z4", &builtin_z4, py::arg("zeta"), py::arg("eta"));

    m.def("verify", [](const AssociativeZestingDatum& d) { return report_dict(verify_assoc_datum(d)); });
    m.def("verify_braided",
          [](const BraidedZestingDatum& bd) { return report_dict(verify_braided_datum(bd)); });
    m.def("verify_coquasi", [](const AssociativeZestingDatum& d) {
        return report_dict(verify_coquasi_bialgebra(build_zested(d, true)));
    });
    m.def("verify_coquasitriangular", [](const BraidedZestingDatum& bd) {
        return report_dict(verify_coquasitriangular(build_braided_zested(bd, true)));
    });

    m.def("datum_to_json", [](const AssociativeZestingDatum& d) { return datum_to_json(d).dump(2); });
    m.def("datum_from_json",
          [](const std::string& text) { return datum_from_json(nlohmann::json::parse(text)); });

    m.def("structure_constants", [](const AssociativeZestingDatum& d) {
        ZestedGroupAlgebra z = build_zested(d);
        py::dict out;
        out["mlambda"] = z.mlambda;
        py::list omega;
        for (const auto& v : z.omega)
            omega.append(v);
        out["omega"] = omega;
        return out;
    });

    m.def("cohomology_classes", [](int arity, int n, int m) {
        return enumerate_cohomology(arity, FiniteGroup::cyclic(n), UnityCoeff{m}).class_count;
    });
}
