#include "sccsem/base_semantics.hpp"
#include "sccsem/constructive.hpp"
#include "sccsem/criteria.hpp"
#include "sccsem/errors.hpp"
#include "sccsem/generators.hpp"
#include "sccsem/io.hpp"
#include "sccsem/oracle.hpp"
#include "sccsem/scc_semantics.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace sccsem;

namespace {

using Labels = std::vector<std::string>;

std::vector<Labels> label_sets(const Framework& f, const ExtensionSet& es) {
    std::vector<Labels> out;
    for (const auto& e : es.extensions) out.push_back(f.labels_of(e));
    return out;
}

Limits limits_for(std::size_t max_args) {
    Limits l;
    l.max_args = max_args;
    return l;
}

CriterionReport run_check(const Framework& f, const std::string& criterion, const std::string& semantics,
                          const std::optional<Framework>& other, const std::string& relation,
                          const std::optional<Labels>& u) {
    const auto which = parse_semantics(semantics);
    if (criterion == "i-max") return check_i_maximality(enumerate_semantics(f, which));
    if (criterion == "reinstatement") return check_reinstatement(f, enumerate_semantics(f, which), Reinstatement::plain);
    if (criterion == "weak-reinstatement") {
        return check_reinstatement(f, enumerate_semantics(f, which), Reinstatement::weak);
    }
    if (criterion == "cf-reinstatement") return check_reinstatement(f, enumerate_semantics(f, which), Reinstatement::cf);
    if (criterion == "directionality") {
        std::optional<ArgSet> set;
        if (u) set = f.set_of(*u);
        return check_directionality(f, which, set);
    }
    if (criterion == "skepticism-adequacy") {
        if (!other) throw PreconditionError("skepticism-adequacy needs a second framework");
        return check_skepticism_adequacy(f, *other, which, relation == "weak" ? Skepticism::weak : Skepticism::cap);
    }
    throw PreconditionError("unknown criterion '" + criterion + "'");
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "SCC-recursive abstract argumentation semantics";

    auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
    py::register_exception<LimitExceeded>(m, "LimitExceeded", base.ptr());

    py::class_<Framework>(m, "Framework")
        .def(py::init([](Labels labels, const std::vector<std::pair<std::string, std::string>>& attacks) {
                 return Framework::build(std::move(labels), attacks);
             }),
             py::arg("labels"), py::arg("attacks") = std::vector<std::pair<std::string, std::string>>{})
        .def_property_readonly("labels", &Framework::labels)
        .def_property_readonly("attacks",
                               [](const Framework& f) {
                                   std::vector<std::pair<std::string, std::string>> out;
                                   for (const auto& a : f.attack_list()) out.emplace_back(f.label(a.attacker), f.label(a.target));
                                   return out;
                               })
        .def("__len__", &Framework::size)
        .def("__eq__", [](const Framework& a, const Framework& b) { return a == b; })
        .def("to_apx", &serialize_apx)
        .def("to_tgf", &serialize_tgf)
        .def("__repr__", [](const Framework& f) {
            return "<Framework " + std::to_string(f.size()) + " arguments, " + std::to_string(f.attack_count()) +
                   " attacks>";
        });

    m.def("parse_apx", [](const std::string& text) { return parse_apx(text); });
    m.def("parse_tgf", [](const std::string& text) { return parse_tgf(text); });

    m.def(
        "extensions",
        [](const Framework& f, const std::string& semantics, std::size_t max_args) {
            return label_sets(f, enumerate_semantics(f, parse_semantics(semantics), limits_for(max_args)));
        },
        py::arg("framework"), py::arg("semantics"), py::arg("max_args") = Limits{}.max_args);
    m.def(
        "is_extension",
        [](const Framework& f, const std::string& semantics, const Labels& s) {
            return is_extension(f, parse_semantics(semantics), f.set_of(s));
        },
        py::arg("framework"), py::arg("semantics"), py::arg("labels"));
    m.def("grounded", [](const Framework& f) { return f.labels_of(grounded(f)); });
    m.def(
        "brute_force",
        [](const Framework& f, const std::string& semantics) {
            return label_sets(f, oracle::brute_force(f, parse_semantics(semantics)));
        },
        py::arg("framework"), py::arg("semantics"));
    m.def("random_framework", &oracle::random_framework, py::arg("n"), py::arg("edge_prob"),
          py::arg("self_attack_prob"), py::arg("seed"));

    m.def(
        "construct",
        [](const Framework& f, const std::string& algorithm) {
            const auto ord = lemma1_order(f);
            if (algorithm == "greedy-cf1.5") return f.labels_of(greedy_cf15(f, ord));
            if (algorithm == "lex-stg1.5") return f.labels_of(lex_scc_stg15(f, ord));
            if (algorithm == "lex-stage") return f.labels_of(lex_greedy_stage(f, ord));
            throw PreconditionError("unknown algorithm '" + algorithm + "'");
        },
        py::arg("framework"), py::arg("algorithm"));

    m.def(
        "check_json",
        [](const Framework& f, const std::string& criterion, const std::string& semantics,
           const std::optional<Framework>& other, const std::string& relation, const std::optional<Labels>& u) {
            return dump(to_json(f, run_check(f, criterion, semantics, other, relation, u)));
        },
        py::arg("framework"), py::arg("criterion"), py::arg("semantics"), py::arg("other") = py::none(),
        py::arg("relation") = "cap", py::arg("unattacked") = py::none());

    m.def(
        "truncation_study_json",
        [](const std::string& family, const std::map<std::string, std::string>& params, const std::string& semantics,
           const std::vector<std::size_t>& levels, const Labels& track, std::size_t k) {
            const auto g = builtin_generator(family, Params(params.begin(), params.end()));
            return dump(to_json(truncation_study(*g, parse_semantics(semantics), levels, track, k)));
        },
        py::arg("family"), py::arg("params"), py::arg("semantics"), py::arg("levels"), py::arg("track"),
        py::arg("k") = 3);

    m.def(
        "truncate",
        [](const std::string& family, const std::map<std::string, std::string>& params, std::size_t n) {
            return truncate(*builtin_generator(family, Params(params.begin(), params.end())), n);
        },
        py::arg("family"), py::arg("params"), py::arg("n"));
    m.def("families", &builtin_generator_names);
}
