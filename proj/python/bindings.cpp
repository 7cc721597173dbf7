#include "hcsuper/errors.hpp"
#include "hcsuper/json_io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace hcsuper;

namespace {

// Reports cross the boundary as JSON text and come back as plain dicts.
py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Json from_python(const py::object& o) {
    return Json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

py::object roots(const std::string& entry, const std::optional<std::vector<std::string>>& direction) {
    std::optional<Vec> dir;
    if (direction) {
        dir.emplace();
        for (const auto& s : *direction) {
            dir->push_back(Scalar::parse(s));
        }
    }
    return to_python(roots_to_json(build_entry(entry, dir)));
}

py::object verify(const std::string& entry, std::optional<unsigned> degree, std::uint64_t seed, unsigned threads,
                  const std::string& plant) {
    const PairData d = build_entry(entry);
    VerifyOptions o;
    o.seed = seed;
    o.threads = threads;
    if (plant == "truncated-n") {
        o.defect = Defect::TruncatedN;
    } else if (plant == "wrong-multiplicity") {
        o.defect = Defect::WrongMultiplicity;
    } else if (plant != "none") {
        throw py::value_error("plant must be none, truncated-n or wrong-multiplicity");
    }
    VerificationReport r;
    {
        py::gil_scoped_release release;
        r = verify_main_theorem(d, degree.value_or(d.default_degree), o);
    }
    Json j = report_to_json(r);
    j["ok"] = r.ok();
    return to_python(j);
}

py::object invariants(const std::string& entry, unsigned degree) {
    const PairData d = build_entry(entry);
    const HarishChandra hc(d.pair, d.system);
    const auto basis = hc.invariants(degree);
    const auto names = d.a_names();
    Json inv = Json::array();
    for (const auto& u : basis.invariants) {
        inv.push_back({{"element", uea_to_json(hc.to_original(u))}, {"gamma", poly_to_json(hc.gamma(u), names)}});
    }
    Json ker = Json::array();
    for (const auto& u : basis.companion) {
        ker.push_back(uea_to_json(hc.to_original(u)));
    }
    return to_python({{"degree", degree}, {"a_basis", names}, {"invariants", inv}, {"kernel", ker}});
}

py::object gamma_py(const std::string& entry, const py::object& element) {
    const PairData d = build_entry(entry);
    const HarishChandra hc(d.pair, d.system);
    const UEAElement u = hc.transport(uea_from_json(from_python(element), hc.original()));
    const auto names = d.a_names();
    return to_python({{"invariant", hc.is_invariant(u)},
                      {"projection", poly_to_json(hc.project_to_a(u), names)},
                      {"gamma", poly_to_json(hc.gamma(u), names)}});
}

bool membership_py(const std::string& entry, const py::object& poly, const std::string& ring) {
    const PairData d = build_entry(entry);
    const APolynomial p = poly_from_json(from_python(poly), d.a_names());
    if (ring != "I" && ring != "J") {
        throw py::value_error("ring must be I or J");
    }
    return membership(ring == "I" ? Space::I : Space::J, p, d.system, d.weyl);
}

py::object validate_algebra(const py::object& algebra) {
    const LieSuperalgebra g = algebra_from_json(from_python(algebra));
    return to_python(violations_to_json(g, verify_algebra(g)));
}

} // namespace

PYBIND11_MODULE(_hcsuper, m) {
    m.doc() = "Harish-Chandra homomorphism for symmetric superpairs";

    py::register_exception<Error>(m, "Error", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<UnknownEntry>(m, "UnknownEntry", PyExc_KeyError);

    m.def("catalog", [] {
        std::vector<std::string> names;
        for (const auto& e : catalog()) {
            names.push_back(e.name);
        }
        return names;
    });
    m.def("default_degree", [](const std::string& entry) { return find_entry(entry).default_degree; });
    m.def("roots", &roots, py::arg("entry"), py::arg("direction") = py::none());
    m.def("verify", &verify, py::arg("entry"), py::arg("degree") = py::none(), py::arg("seed") = 0,
          py::arg("threads") = 1, py::arg("plant") = "none");
    m.def("invariants", &invariants, py::arg("entry"), py::arg("degree"));
    m.def("gamma", &gamma_py, py::arg("entry"), py::arg("element"));
    m.def("membership", &membership_py, py::arg("entry"), py::arg("poly"), py::arg("ring") = "J");
    m.def("validate_algebra", &validate_algebra, py::arg("algebra"));
    m.def("planted_jacobi_defect", [] { return to_python(algebra_to_json(planted_jacobi_defect())); });
}
