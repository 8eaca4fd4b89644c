#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "knotpairs/json_io.hpp"
#include "knotpairs/parse.hpp"

namespace py = pybind11;
using namespace knotpairs;

namespace {

py::object to_py(const json& j) {
    switch (j.type()) {
        case json::value_t::null: return py::none();
        case json::value_t::boolean: return py::bool_(j.get<bool>());
        case json::value_t::number_integer: return py::int_(j.get<long long>());
        case json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
        case json::value_t::number_float: return py::float_(j.get<double>());
        case json::value_t::string: return py::str(j.get<std::string>());
        case json::value_t::array: {
            py::list out;
            for (const auto& e : j) out.append(to_py(e));
            return out;
        }
        case json::value_t::object: {
            py::dict out;
            for (const auto& [k, v] : j.items()) out[py::str(k)] = to_py(v);
            return out;
        }
        default: return py::none();
    }
}

Presentation pres(const std::string& text) { return parse_presentation(text); }

}  // namespace

PYBIND11_MODULE(_knotpairs, m) {
    m.doc() = "Group-theoretic calculus of knot-group pairs";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    m.def("parse", [](const std::string& text) {
        return serialize_presentation(pres(text));
    }, py::arg("presentation"), "Parse a presentation and return its canonical text form");

    m.def("parse_json", [](const std::string& text) {
        return to_py(presentation_to_json(pres(text)));
    }, py::arg("presentation"));

    m.def("simplify", [](const std::string& text) {
        return serialize_presentation(tietze_simplify(pres(text)).presentation);
    }, py::arg("presentation"), "Safe Tietze simplification");

    m.def("abelianize", [](const std::string& text) {
        return to_py(invariants_to_json(abelianization(pres(text))));
    }, py::arg("presentation"));

    m.def("smith_normal_form", [](const std::vector<std::vector<long long>>& rows) {
        IntMatrix a(rows.size(), rows.empty() ? 0 : rows[0].size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != a.cols()) throw ValidationError("ragged matrix rows");
            for (std::size_t j = 0; j < a.cols(); ++j) a.at(i, j) = static_cast<long>(rows[i][j]);
        }
        SmithResult s = smith_normal_form(a);
        json out{{"u", matrix_to_json(s.u)}, {"d", matrix_to_json(s.d)},
                 {"v", matrix_to_json(s.v)}, {"rank", s.rank}};
        return to_py(out);
    }, py::arg("matrix"));

    m.def("enumerate_cosets", [](const std::string& text, const std::vector<std::string>& subgroup,
                                 long budget) {
        Presentation p = pres(text);
        std::vector<Word> words;
        for (const auto& w : subgroup) words.push_back(parse_word(w, p));
        return to_py(enumeration_to_json(enumerate_cosets(p, words, budget)));
    }, py::arg("presentation"), py::arg("subgroup"), py::arg("budget") = 100000);

    m.def("kervaire", [](const std::string& text, const std::string& meridian, long budget) {
        Presentation p = pres(text);
        return to_py(kervaire_to_json(kervaire_report(p, parse_word(meridian, p), budget)));
    }, py::arg("presentation"), py::arg("meridian"), py::arg("budget") = 100000);

    m.def("pair_report", [](const std::string& g, const std::string& g_meridian,
                            const std::string& gbar, const std::string& gbar_meridian,
                            long budget) {
        Presentation gp = pres(g), gbarp = pres(gbar);
        return to_py(pair_report_to_json(pair_report(gp, parse_word(g_meridian, gp), gbarp,
                                                     parse_word(gbar_meridian, gbarp),
                                                     std::nullopt, budget)));
    }, py::arg("g"), py::arg("g_meridian"), py::arg("gbar"), py::arg("gbar_meridian"),
       py::arg("budget") = 100000);

    m.def("knot_sum", [](const std::string& p1, const std::string& m1, const std::string& p2,
                         const std::string& m2) {
        Presentation a = pres(p1), b = pres(p2);
        auto [sum, m] = knot_sum(a, parse_word(m1, a), b, parse_word(m2, b));
        json out{{"presentation", serialize_presentation(sum)}, {"meridian", serialize_word(m)}};
        return to_py(out);
    }, py::arg("p1"), py::arg("m1"), py::arg("p2"), py::arg("m2"));

    m.def("spin", [](const std::string& pair_json, const std::string& m_group,
                     const std::map<std::string, long>& tau) {
        KnotGroupPair pair = pair_from_json(json::parse(pair_json));
        Presentation m = pres(m_group);
        SpinInput in{pair, m, {tau.begin(), tau.end()}};
        for (const auto& x : m.generators()) in.tau_degrees.emplace(x, 0);
        SpinResult r = frame_twist_spin(in);
        json out{{"knot_group", serialize_presentation(r.knot_group)},
                 {"boundary_group", serialize_presentation(r.boundary_group)},
                 {"knot_meridian", serialize_word(r.knot_meridian)},
                 {"boundary_meridian", serialize_word(r.boundary_meridian)}};
        return to_py(out);
    }, py::arg("pair_json"), py::arg("m_group"), py::arg("tau") = std::map<std::string, long>{});

    m.def("suspend", [](const std::string& pair_json) {
        SuspensionResult r = suspension(pair_from_json(json::parse(pair_json)));
        json out{{"knot_group", serialize_presentation(r.knot_group)},
                 {"boundary_group", serialize_presentation(r.boundary_group)}};
        return to_py(out);
    }, py::arg("pair_json"));

    m.def("simplicial_homology", [](const std::vector<std::vector<int>>& maximal) {
        return to_py(graded_to_json(simplicial_homology(SimplicialComplex::from_maximal(maximal))));
    }, py::arg("maximal_simplices"));

    m.def("circle_product_homology", [](const std::vector<std::vector<int>>& maximal) {
        SimplicialComplex k = circle_product(SimplicialComplex::from_maximal(maximal));
        return to_py(graded_to_json(simplicial_homology(k)));
    }, py::arg("maximal_simplices"));

    m.def("predict_boundary_homology", [](const std::vector<std::vector<int>>& maximal, int n) {
        GradedAbelian h = simplicial_homology(SimplicialComplex::from_maximal(maximal));
        return to_py(graded_to_json(predict_boundary_homology(h, n)));
    }, py::arg("maximal_simplices"), py::arg("ambient_dimension"));

    m.def("type_k", [](const std::string& poly) {
        TypeKResult r = is_type_K_cyclic(parse_laurent(poly));
        json out{{"type_k", r.type_k}, {"p_at_one", r.p_at_one.get_str()}};
        return to_py(out);
    }, py::arg("poly"));

    m.def("p_complex", [](const std::string& poly) {
        return to_py(pcomplex_to_json(p_complex_homology(parse_laurent(poly))));
    }, py::arg("poly"));

    m.def("catalog", []() {
        json out = json::array();
        for (const auto& e : knotpairs::catalog()) out.push_back(catalog_entry_to_json(e));
        return to_py(out);
    });
}
