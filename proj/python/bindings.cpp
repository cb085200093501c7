#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "reslat/claims.hpp"
#include "reslat/classify.hpp"
#include "reslat/corpus.hpp"
#include "reslat/enumerate.hpp"
#include "reslat/filters.hpp"
#include "reslat/quotient.hpp"
#include "reslat/regular.hpp"

namespace py = pybind11;
using namespace reslat;

namespace {

std::vector<std::string> names(const ResiduatedLattice& l, const std::vector<int>& xs) {
    std::vector<std::string> out;
    for (int x : xs) out.push_back(l.name_of(x));
    return out;
}

py::dict classification_dict(const ResiduatedLattice& l) {
    const ClassificationReport r = classification_report(l);
    py::dict d;
    d["name"] = r.name;
    d["n"] = r.n;
    py::dict verdicts;
    for (const auto& [cls, v] : r.verdicts) verdicts[cls.c_str()] = to_string(v);
    d["verdicts"] = verdicts;
    d["filter_count"] = r.filter_count;
    d["spec_count"] = r.spec_count;
    d["max_count"] = r.max_count;
    d["dense"] = names(l, r.dense);
    d["radical"] = names(l, r.rad);
    d["center"] = names(l, r.center);
    return d;
}

} // namespace

PYBIND11_MODULE(_reslat, m) {
    m.doc() = "finite commutative residuated lattices";

    py::register_exception<Error>(m, "ReslatError");

    py::class_<ResiduatedLattice>(m, "ResiduatedLattice")
        .def_property_readonly("n", &ResiduatedLattice::size)
        .def_property_readonly("name", &ResiduatedLattice::label)
        .def_property_readonly("elements",
                               [](const ResiduatedLattice& l) { return l.names(); })
        .def("join", &ResiduatedLattice::join)
        .def("meet", &ResiduatedLattice::meet)
        .def("prod", &ResiduatedLattice::prod)
        .def("imp", &ResiduatedLattice::imp)
        .def("leq", &ResiduatedLattice::leq)
        .def("neg", &ResiduatedLattice::neg)
        .def("index_of", &ResiduatedLattice::index_of)
        .def("name_of",
             [](const ResiduatedLattice& l, int a) { return l.name_of(a); })
        .def("order_of",
             [](const ResiduatedLattice& l, int a) { return l.order_of(a).ord; })
        .def("boolean_center",
             [](const ResiduatedLattice& l) { return names(l, l.boolean_center()); });

    m.def("corpus_keys", &corpus_keys);
    m.def("builtin", &builtin_algebra, py::arg("key"));
    m.def("load", [](const std::string& path) {
        return ResiduatedLattice::validate(load(path));
    });
    m.def("regular_elements", [](const ResiduatedLattice& l) {
        return names(l, regular_elements(l));
    });
    m.def("dense_elements", [](const ResiduatedLattice& l) {
        return names(l, dense_elements(l).elements(l.size()));
    });
    m.def("radical", [](const ResiduatedLattice& l) {
        return names(l, radical(l).elements(l.size()));
    });
    m.def("all_filters", [](const ResiduatedLattice& l) {
        std::vector<std::vector<std::string>> out;
        for (const Filter& f : all_filters(l)) out.push_back(names(l, f.elements(l.size())));
        return out;
    });
    m.def("is_glivenko", &is_glivenko);
    m.def("satisfies_star_equation", &satisfies_star_equation);
    m.def("classify", &classification_dict);
    m.def("check_claims", [](const ResiduatedLattice& l) {
        py::list out;
        for (const ClaimResult& c : check_claims(l)) {
            py::dict d;
            d["id"] = c.id;
            d["title"] = c.title;
            d["status"] = to_string(c.status);
            d["detail"] = c.detail;
            out.append(d);
        }
        return out;
    });
    m.def("quotient", [](const ResiduatedLattice& l, const std::vector<std::string>& gens) {
        std::vector<int> idx;
        for (const auto& g : gens) idx.push_back(l.index_of(g));
        return quotient(l, generated_filter(l, idx)).algebra;
    });
    m.def(
        "count_algebras",
        [](int n) { return enumerate_residuated(n, enumeration_options_from_env()).size(); },
        py::arg("n"));
}
