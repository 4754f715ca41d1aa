#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "aralg/errors.hpp"
#include "aralg/verify.hpp"

namespace py = pybind11;
using namespace aralg;
using io::json;

namespace {

// pybind11 holders cannot be shared_ptr<const T>.
struct PyAlgebra {
    AlgebraPtr p;
};

std::vector<std::size_t> dimvec(const Module& m) { return m.dimension_vector(); }

Module module_of(const PyAlgebra& pa, const std::string& d) {
    const AlgebraPtr& a = pa.p;
    if (!d.empty() && d.front() == '{') return io::module_from_json(json::parse(d), a);
    return io::module_from_json(json(d), a);
}

Window window_of(int lo, int hi, int guard) { return Window{lo, hi, guard}; }

}  // namespace

PYBIND11_MODULE(_aralg, m) {
    m.doc() = "Auslander-Reiten sequences and triangles over finite-dimensional algebras";

    auto base = py::register_exception<Error>(m, "AralgError");
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<InvalidAlgebra>(m, "InvalidAlgebra", base.ptr());
    py::register_exception<InvalidModule>(m, "InvalidModule", base.ptr());
    py::register_exception<UnsupportedCharacteristic>(m, "UnsupportedCharacteristic", base.ptr());
    py::register_exception<ProjectiveInput>(m, "ProjectiveInput", base.ptr());
    py::register_exception<WindowTooSmall>(m, "WindowTooSmall", base.ptr());
    py::register_exception<NotSelfInjective>(m, "NotSelfInjective", base.ptr());

    py::class_<PyAlgebra>(m, "Algebra")
        .def_static("from_json", [](const std::string& s) { return PyAlgebra{io::algebra_from_json(json::parse(s))}; })
        .def_static("load", [](const std::string& path) { return PyAlgebra{io::load_algebra(path)}; })
        .def_static("example", [](const std::string& name, const std::string& field) {
            return PyAlgebra{examples::by_name(name, Field::parse(field))};
        }, py::arg("name"), py::arg("field") = "Q")
        .def_property_readonly("dim", [](const PyAlgebra& a) { return a.p->dim(); })
        .def_property_readonly("field", [](const PyAlgebra& a) { return a.p->field().descriptor(); })
        .def_property_readonly("vertices", [](const PyAlgebra& a) { return a.p->vertex_names(); })
        .def_property_readonly("labels", [](const PyAlgebra& a) { return a.p->labels(); })
        .def("is_self_injective", [](const PyAlgebra& a) { return is_self_injective(a.p); })
        .def("to_json", [](const PyAlgebra& a) { return io::algebra_to_json(*a.p).dump(); })
        .def("module", &module_of, py::arg("descriptor"))
        .def("curated", [](const PyAlgebra& pa) {
            const AlgebraPtr& a = pa.p;
            std::vector<std::pair<std::string, Module>> out;
            for (auto& n : examples::curated_indecomposables(a)) out.emplace_back(n.name, n.module);
            return out;
        });

    py::class_<Module>(m, "Module")
        .def_property_readonly("dim", &Module::dim)
        .def_property_readonly("dimension_vector", &dimvec)
        .def("to_json", [](const Module& x, bool matrices) { return io::module_to_json(x, matrices).dump(); },
             py::arg("matrices") = true)
        .def("is_projective", [](const Module& x) { return is_projective(x); })
        .def("is_injective", [](const Module& x) { return is_injective(x); })
        .def("__repr__", [](const Module& x) { return "<Module dims=" + io::json(x.dimension_vector()).dump() + ">"; });

    m.def("is_isomorphic", &is_isomorphic);
    m.def("dtr", &dtr);
    m.def("dtr_via_tensor", &dtr_via_tensor);
    m.def("ext1_dim", [](const Module& x, const Module& y) { return ext1(x, y).dim; });
    m.def("stable_hom_dim", [](const Module& x, const Module& y, bool injectives) {
        return stable_hom(x, y, injectives ? StableMode::ModuloInjectives : StableMode::ModuloProjectives).dim;
    }, py::arg("m"), py::arg("n"), py::arg("modulo_injectives") = true);
    m.def("decompose", [](const Module& x) {
        std::vector<Module> out;
        for (auto& s : decompose_module(x)) out.push_back(s.module);
        return out;
    });

    m.def("_ar_sequence", [](const Module& n, long extension, bool matrices) {
        AlmostSplitCertificate c = ar_sequence(n, ArOptions{extension, true});
        return io::certificate_to_json(c, matrices).dump();
    }, py::arg("n"), py::arg("extension") = 0, py::arg("matrices") = false);
    m.def("ar_middle", [](const Module& n) { return ar_sequence(n, ArOptions{0, false}).sequence.M; });

    m.def("_ar_triangle", [](const Module& n, int lo, int hi, int guard, bool matrices) {
        Triangle t = ar_triangle(CompactObject::of_module(n), window_of(lo, hi, guard));
        json j = io::triangle_to_json(t, matrices);
        if (auto r = gamma_as_multiplication(t)) {
            json c = json::array();
            for (const auto& x : *r) c.push_back(Field::format(x));
            j["gamma_multiplication"] = c;
        }
        return j.dump();
    }, py::arg("n"), py::arg("lo") = -6, py::arg("hi") = 6, py::arg("guard") = 2, py::arg("matrices") = false);

    m.def("_verify", [](const std::string& suite, const PyAlgebra& a, int lo, int hi, int guard) {
        SuiteOptions o;
        o.window = window_of(lo, hi, guard);
        SuiteResult r = run_suite(parse_suite(suite), a.p, o);
        return r.report.dump();
    }, py::arg("suite"), py::arg("algebra"), py::arg("lo") = -6, py::arg("hi") = 6, py::arg("guard") = 2);

    m.def("quiver_dot", [](const PyAlgebra& pa, std::vector<Module> seeds, int steps) {
        const AlgebraPtr& a = pa.p;
        if (seeds.empty())
            for (std::size_t v = 0; v < a->num_vertices(); ++v) seeds.push_back(examples::simple(a, v));
        return io::quiver_to_dot(ar_quiver_fragment(a, seeds, steps));
    }, py::arg("algebra"), py::arg("seeds") = std::vector<Module>{}, py::arg("steps") = 3);

    m.def("_happel_compare", [](const Module& n, int a, int b) {
        return io::happel_to_json(happel_compare(n, a, b)).dump();
    }, py::arg("n"), py::arg("a") = -2, py::arg("b") = 2);
}
