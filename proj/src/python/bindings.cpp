#include <pybind11/pybind11.h>

#include "polaris/homology.hpp"
#include "polaris/hypersimplex.hpp"
#include "polaris/json_io.hpp"
#include "polaris/morse.hpp"
#include "polaris/tableaux.hpp"

namespace py = pybind11;
using namespace polaris;

namespace {

py::object to_py(const Json& j) {
    auto loads = py::module_::import("json").attr("loads");
    return loads(py::str(j.dump()));
}

Json from_py(const py::object& obj) {
    auto dumps = py::module_::import("json").attr("dumps");
    return Json::parse(py::cast<std::string>(dumps(obj)));
}

std::optional<Exponent> opt_u(const py::object& u) {
    if (u.is_none()) return std::nullopt;
    return exponent_from(from_py(u));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact combinatorics of polarizations of powers of the maximal ideal";

    m.def("enumerate_points", [](int n, int d) {
        Json j = Json::array();
        for (const auto& a : enumerate_points(n, d)) j.push_back(exponent_json(a));
        return to_py(j);
    });

    m.def("leq_i",
          [](const py::object& a, const py::object& b, int i) {
              return leq_i(exponent_from(from_py(a)), exponent_from(from_py(b)), i - 1);
          },
          py::arg("a"), py::arg("b"), py::arg("i"));

    m.def("standard_basis", [](int a, int b, int n) {
        Json j = Json::array();
        for (const auto& t : standard_basis(a, b, n)) j.push_back(tableau_json(t));
        return to_py(j);
    });

    m.def("l_rank", [](int a, int b, int n) { return l_rank(a, b, n).convert_to<long long>(); });

    m.def("straighten", [](const py::object& tableau, int n) {
        Key t = tableau_from(from_py(tableau), n);
        return to_py(chain_json(straighten(t)));
    });

    m.def("l_complex_ranks", [](int n, int d) {
        auto r = build_l_complex(n, d).ranks();
        Json j = Json::array();
        for (size_t h = 1; h < r.size(); ++h) j.push_back(r[h]);
        return to_py(j);
    });

    m.def("l_complex_exact", [](int n, int d) {
        ComplexDesc L = build_l_complex(n, d);
        validate_square_zero(L);
        return is_cellular_resolution(homogenize(L)).ok;
    });

    m.def("hypersimplex_census",
          [](int n, int d, const py::object& u) {
              auto cen = hypersimplex_census(n, d, opt_u(u));
              Json j;
              j["cells_by_dim"] = cen.cells_by_dim;
              j["down_by_dim"] = cen.down_by_dim;
              j["up_by_dim"] = cen.up_by_dim;
              j["hypersimplex_by_dim"] = cen.proper_by_dim;
              Json apexes = Json::array();
              for (const auto& a : cen.full_support_down_apexes) apexes.push_back(exponent_json(a));
              j["full_support_down_apexes"] = apexes;
              return to_py(j);
          },
          py::arg("n"), py::arg("d"), py::arg("u") = py::none());

    m.def("cell_boundary",
          [](const py::object& cell, int n, int d) {
              return to_py(chain_json(cell_boundary(tableau_from(from_py(cell), n), d)));
          },
          py::arg("cell"), py::arg("n"), py::arg("d"));

    m.def("hypersimplex_resolves", [](int n, int d, const py::object& u) {
        return is_cellular_resolution(hypersimplex_complex(n, d, opt_u(u))).ok;
    }, py::arg("n"), py::arg("d"), py::arg("u") = py::none());

    m.def("morse_summary",
          [](int n, int d, bool check_iso) {
              ComplexDesc H = hypersimplex_complex(n, d);
              Matching match = l_matching(n, d);
              auto rep = validate_matching(H, match);
              ComplexDesc M = morse_complex(H, match);
              Json j;
              j["acyclic"] = rep.acyclic;
              j["homogeneous"] = rep.homogeneous;
              auto r = M.ranks();
              Json ranks = Json::array();
              for (size_t h = 1; h < r.size(); ++h) ranks.push_back(r[h]);
              j["critical_by_degree"] = ranks;
              if (check_iso) j["isomorphic_to_l_complex"] = verify_l_isomorphism(n, d).ok;
              return to_py(j);
          },
          py::arg("n"), py::arg("d"), py::arg("check_iso") = false);

    m.def("standard_family",
          [](int n, int d, const py::object& u) {
              return to_py(family_json(standard_family(n, d, opt_u(u))));
          },
          py::arg("n"), py::arg("d"), py::arg("u") = py::none());

    m.def("ls_edges", [](const py::object& family) {
        return to_py(graph_json(ls_edges(family_from(from_py(family)))));
    });

    m.def("is_polarization",
          [](const py::object& family, bool cross_check) {
              IsotoneFamily f = family_from(from_py(family));
              PolarizationVerdict v = is_polarization(f, cross_check);
              Json j;
              j["spanning_tree"] = v.spanning;
              if (v.tab_span) j["tab_spanning"] = *v.tab_span;
              if (v.oracle) j["oracle"] = *v.oracle;
              return to_py(j);
          },
          py::arg("family"), py::arg("cross_check") = false);

    m.def("check_conditions", [](const py::object& graph) {
        SyzygyGraph g = graph_from(from_py(graph));
        Json j = Json::array();
        for (const auto& d : check_conditions_all(g)) j.push_back(diagnostic_json(d));
        return to_py(j);
    });

    m.def("infer_family", [](const py::object& graph) {
        SyzygyGraph g = graph_from(from_py(graph));
        return to_py(family_json(infer_family(g).family));
    });

    m.def("taylor_betti", [](const py::object& gens) {
        std::vector<Exponent> v;
        for (const auto& g : from_py(gens)) v.push_back(exponent_from(g));
        return to_py(betti_json(taylor_betti(v)));
    });

    m.def("verify_polarization_bruteforce", [](const py::object& family) {
        return verify_polarization_bruteforce(family_from(from_py(family)));
    });

    m.def("restricted_summary", [](int n, int d, const py::object& u) {
        RestrictedSetup setup = restricted_power_setup(n, d, exponent_from(from_py(u)));
        Json j;
        j["empty"] = setup.empty;
        Json gens = Json::array();
        for (const auto& a : setup.generators) gens.push_back(exponent_json(a));
        j["generators"] = gens;
        if (!setup.empty) {
            j["hypersimplex_ranks"] = setup.hypersimplex.ranks();
            j["morse_ranks"] = setup.morse.ranks();
            j["l_ranks"] = setup.l_ranks;
        }
        return to_py(j);
    });

    m.def("enumerate_polarizations",
          [](int n, int d, const py::object& u, bool by_family) {
              Enumeration e = enumerate_polarizations(n, d, opt_u(u), by_family);
              Json j;
              j["graph_classes"] = e.classes.size();
              j["total_families"] = e.total_families;
              bool verified = true;
              for (const auto& c : e.classes) verified = verified && c.oracle_verified;
              j["oracle_verified"] = verified;
              return to_py(j);
          },
          py::arg("n"), py::arg("d"), py::arg("u") = py::none(),
          py::arg("by_family") = false);
}
