#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hcover/caps.hpp"
#include "hcover/cover.hpp"
#include "hcover/digraph.hpp"
#include "hcover/embed.hpp"
#include "hcover/errors.hpp"
#include "hcover/extremal.hpp"
#include "hcover/fparam.hpp"
#include "hcover/lp.hpp"
#include "hcover/oracles.hpp"
#include "hcover/rational.hpp"

namespace py = pybind11;

namespace {

using namespace hcover;

Rational rational_from_py(const py::handle& obj) {
    if (py::isinstance<py::int_>(obj)) {
        return Rational(obj.cast<long>());
    }
    if (py::isinstance<py::float_>(obj)) {
        return rational_from_double(obj.cast<double>());
    }
    if (py::isinstance<py::str>(obj)) {
        return parse_rational(obj.cast<std::string>());
    }
    throw ValidationError("weight must be int, float, or 'p/q' string");
}

Digraph digraph_from_py(int n, const py::sequence& arcs) {
    std::vector<Arc> list;
    for (const auto& item : arcs) {
        auto t = py::reinterpret_borrow<py::sequence>(item);
        if (t.size() == 2) {
            list.push_back({t[0].cast<int>(), t[1].cast<int>(), Rational(1)});
        } else if (t.size() == 3) {
            list.push_back({t[0].cast<int>(), t[1].cast<int>(), rational_from_py(t[2])});
        } else {
            throw ValidationError("arc must be (tail, head) or (tail, head, weight)");
        }
    }
    return Digraph(n, std::move(list));
}

UndirectedGraph undirected_from_py(int n, const py::sequence& edges, bool simple) {
    std::vector<Edge> list;
    for (const auto& item : edges) {
        auto t = py::reinterpret_borrow<py::sequence>(item);
        if (t.size() == 2) {
            list.push_back({t[0].cast<int>(), t[1].cast<int>(), Rational(1)});
        } else if (t.size() == 3) {
            list.push_back({t[0].cast<int>(), t[1].cast<int>(), rational_from_py(t[2])});
        } else {
            throw ValidationError("edge must be (u, v) or (u, v, weight)");
        }
    }
    return UndirectedGraph(n, std::move(list), simple);
}

py::dict rational_dict(const Rational& q) {
    py::dict d;
    d["exact"] = rational_string(q);
    d["float"] = rational_double(q);
    return d;
}

py::dict frac_solution_dict(const Digraph& d, const FracSolution& sol) {
    py::dict out;
    out["optimum"] = rational_dict(sol.optimum);
    out["gap"] = rational_dict(sol.gap);
    py::dict cover;
    for (int id = 0; id < d.arc_count(); ++id) {
        if (sol.cover[static_cast<std::size_t>(id)] == 0) continue;
        cover[py::int_(id)] = rational_string(sol.cover[static_cast<std::size_t>(id)]);
    }
    out["cover"] = cover;
    py::dict packing;
    for (std::size_t i = 0; i < sol.packing.size(); ++i) {
        if (sol.packing[i] == 0) continue;
        packing[py::int_(i)] = rational_string(sol.packing[i]);
    }
    out["packing"] = packing;
    return out;
}

py::dict cover_result_dict(const CoverResult& r) {
    py::dict out;
    out["cover_arcs"] = r.cover_arcs;
    out["cover_weight"] = rational_dict(r.cover_weight);
    out["nu_star"] = rational_dict(r.nu_star_original);
    out["ratio_bound"] = rational_dict(r.ratio_bound);
    py::list trace;
    for (const auto& [id, value] : r.peel_trace) {
        trace.append(py::make_tuple(id, rational_string(value)));
    }
    out["peel_trace"] = trace;
    out["assignment"] = r.assignment;
    out["h_free_certified"] = r.h_free_certified;
    return out;
}

py::dict oracle_dict(const OracleResult& r) {
    py::dict out;
    out["value"] = rational_dict(r.value);
    out["witness_arcs"] = r.witness_arcs;
    out["witness_copies"] = r.witness_copies;
    out["node_count"] = r.node_count;
    return out;
}

Arith mode_of(bool exact) { return exact ? Arith::exact : Arith::floating; }

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Fractional packing/covering of a fixed directed pattern graph";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<ResourceLimitError>(m, "ResourceLimitError", PyExc_RuntimeError);
    py::register_exception<NumericError>(m, "NumericError", PyExc_RuntimeError);

    py::class_<Digraph>(m, "Digraph")
        .def(py::init(&digraph_from_py), py::arg("vertex_count"), py::arg("arcs"))
        .def_property_readonly("vertex_count", &Digraph::vertex_count)
        .def_property_readonly("arc_count", &Digraph::arc_count)
        .def("arcs",
             [](const Digraph& d) {
                 py::list out;
                 for (const Arc& a : d.arcs()) {
                     out.append(py::make_tuple(a.tail, a.head, rational_string(a.weight)));
                 }
                 return out;
             })
        .def("serialize", &serialize_digraph)
        .def("__eq__", [](const Digraph& a, const Digraph& b) { return a == b; })
        .def("__repr__", [](const Digraph& d) {
            return "Digraph(n=" + std::to_string(d.vertex_count()) +
                   ", arcs=" + std::to_string(d.arc_count()) + ")";
        });

    py::class_<Pattern>(m, "Pattern")
        .def(py::init<int, std::vector<std::pair<int, int>>>(), py::arg("vertex_count"),
             py::arg("arcs"))
        .def_property_readonly("vertex_count", &Pattern::vertex_count)
        .def_property_readonly("arc_count", &Pattern::arc_count)
        .def("arcs", [](const Pattern& p) { return p.arcs(); })
        .def("serialize", &serialize_pattern)
        .def("__eq__", [](const Pattern& a, const Pattern& b) { return a == b; })
        .def("__repr__", [](const Pattern& p) {
            return "Pattern(n=" + std::to_string(p.vertex_count()) +
                   ", arcs=" + std::to_string(p.arc_count()) + ")";
        });

    py::class_<UndirectedGraph>(m, "UndirectedGraph")
        .def(py::init(&undirected_from_py), py::arg("vertex_count"), py::arg("edges"),
             py::arg("simple") = false)
        .def_property_readonly("vertex_count", &UndirectedGraph::vertex_count)
        .def_property_readonly("edge_count", &UndirectedGraph::edge_count)
        .def("serialize", &serialize_undirected);

    py::class_<Copy>(m, "Copy")
        .def_readonly("arc_ids", &Copy::arc_ids)
        .def_readonly("witness", &Copy::witness)
        .def("__repr__", [](const Copy& c) {
            return "Copy(arcs=" + std::to_string(c.arc_ids.size()) + ")";
        });

    py::class_<CycleDecomposition>(m, "CycleDecomposition")
        .def_readonly("n", &CycleDecomposition::n)
        .def_readonly("k", &CycleDecomposition::k)
        .def_readonly("cycles", &CycleDecomposition::cycles)
        .def("serialize", &serialize_decomposition);

    m.def("parse_digraph", &parse_digraph);
    m.def("serialize_digraph", &serialize_digraph);
    m.def("parse_pattern", &parse_pattern);
    m.def("directed_cycle", &directed_cycle, py::arg("k"));
    m.def("transitive_tournament", &transitive_tournament, py::arg("r"));
    m.def("rotational_tournament", &rotational_tournament, py::arg("n"));
    m.def("random_digraph", &random_digraph, py::arg("n"), py::arg("p"), py::arg("seed"));
    m.def("random_tournament", &random_tournament, py::arg("n"), py::arg("seed"));
    m.def("complete_graph", &complete_graph, py::arg("n"));
    m.def("perfect_matching", &perfect_matching, py::arg("n"));
    m.def("acyclic_orientation", &acyclic_orientation);
    m.def("to_digraph", &to_digraph);
    m.def("is_acyclic", &is_acyclic);

    m.def(
        "enumerate_copies",
        [](const Digraph& d, const Pattern& h) {
            return enumerate_copies(d, h, ResourceCaps::from_env());
        },
        py::arg("d"), py::arg("h"));
    m.def(
        "is_h_free",
        [](const Digraph& d, const Pattern& h, const std::vector<int>& removed) {
            return is_h_free(d, h, removed, ResourceCaps::from_env());
        },
        py::arg("d"), py::arg("h"), py::arg("removed_arcs"));

    m.def(
        "nu_star",
        [](const Digraph& d, const Pattern& h, bool exact) {
            return rational_dict(nu_star(d, h, mode_of(exact), ResourceCaps::from_env()));
        },
        py::arg("d"), py::arg("h"), py::arg("exact") = true);
    m.def(
        "solve_fractional",
        [](const Digraph& d, const Pattern& h, bool exact) {
            auto caps = ResourceCaps::from_env();
            auto copies = enumerate_copies(d, h, caps);
            return frac_solution_dict(d, solve_fractional(d, h, copies, mode_of(exact), caps));
        },
        py::arg("d"), py::arg("h"), py::arg("exact") = true);

    m.def(
        "check_complementary_slackness",
        [](const Digraph& d, const Pattern& h, bool exact) {
            auto caps = ResourceCaps::from_env();
            auto copies = enumerate_copies(d, h, caps);
            auto sol = solve_fractional(d, h, copies, mode_of(exact), caps);
            auto report = check_complementary_slackness(d, copies, sol, mode_of(exact));
            py::dict out;
            out["ok"] = report.ok;
            out["max_violation"] = rational_dict(report.max_violation);
            py::list entries;
            for (const auto& e : report.entries) {
                py::dict row;
                row["arc_id"] = e.arc_id;
                row["cover"] = rational_string(e.cover_value);
                row["load"] = rational_string(e.packing_load);
                row["weight"] = rational_string(e.weight);
                entries.append(row);
            }
            out["entries"] = entries;
            return out;
        },
        py::arg("d"), py::arg("h"), py::arg("exact") = true);

    m.def(
        "disc",
        [](const Pattern& h, const Pattern& l) {
            return disc(h, l, ResourceCaps::from_env());
        },
        py::arg("h"), py::arg("l"));
    m.def(
        "f_of",
        [](const Pattern& h, const Pattern& l) {
            return rational_dict(f_of(h, l, ResourceCaps::from_env()));
        },
        py::arg("h"), py::arg("l"));
    m.def(
        "f_search",
        [](const Pattern& h, int r_max) {
            auto report = f_search(h, r_max, ResourceCaps::from_env());
            py::dict out;
            out["f_lower"] = rational_dict(report.f_lower);
            out["f_upper"] = rational_dict(report.f_upper);
            out["disc"] = report.disc;
            out["gamma"] = report.gamma;
            out["b"] = report.b;
            out["one_way_bipartite"] = report.one_way_bipartite;
            out["infimum_not_attained"] = report.infimum_not_attained;
            out["best_l"] = report.best_l ? py::object(py::cast(*report.best_l)) : py::none();
            return out;
        },
        py::arg("h"), py::arg("r_max") = 4);
    m.def(
        "gamma", [](const Pattern& h) { return gamma(h, ResourceCaps::from_env()); },
        py::arg("h"));
    m.def(
        "b_param", [](const Pattern& h) { return b_param(h, ResourceCaps::from_env()); },
        py::arg("h"));
    m.def("is_one_way_bipartite", &is_one_way_bipartite, py::arg("h"));

    m.def(
        "approximate_cover",
        [](const Digraph& d, const Pattern& h, const Pattern& l, bool exact) {
            return cover_result_dict(
                approximate_cover(d, h, l, mode_of(exact), ResourceCaps::from_env()));
        },
        py::arg("d"), py::arg("h"), py::arg("l"), py::arg("exact") = true);
    m.def(
        "undirected_kk_cover",
        [](const UndirectedGraph& g, int k, bool exact) {
            return cover_result_dict(
                undirected_kk_cover(g, k, mode_of(exact), ResourceCaps::from_env()));
        },
        py::arg("g"), py::arg("k"), py::arg("exact") = true);

    m.def(
        "exact_tau",
        [](const Digraph& d, const Pattern& h) {
            return oracle_dict(exact_tau(d, h, ResourceCaps::from_env()));
        },
        py::arg("d"), py::arg("h"));
    m.def(
        "exact_nu",
        [](const Digraph& d, const Pattern& h) {
            return oracle_dict(exact_nu(d, h, ResourceCaps::from_env()));
        },
        py::arg("d"), py::arg("h"));
    m.def(
        "greedy_packing",
        [](const Digraph& d, const Pattern& h) {
            return greedy_packing(d, h, ResourceCaps::from_env());
        },
        py::arg("d"), py::arg("h"));

    m.def(
        "decompose_kn",
        [](int n, int k) { return decompose_kn(n, k, ResourceCaps::from_env()); },
        py::arg("n"), py::arg("k"));
    m.def("validate_decomposition", &validate_decomposition);
    m.def("orient_decomposition", &orient_decomposition, py::arg("dec"), py::arg("seed"));
    m.def(
        "packing_from_decomposition",
        [](const CycleDecomposition& dec, const Digraph& t) {
            return packing_from_decomposition(dec, t, ResourceCaps::from_env());
        },
        py::arg("dec"), py::arg("t"));
    m.def(
        "ht_bound",
        [](int n, int k) { return rational_dict(ht_bound(n, k)); },
        py::arg("n"), py::arg("k"));
    m.def(
        "check_ht",
        [](const Digraph& d, int k) {
            auto report = check_ht(d, k, ResourceCaps::from_env());
            py::dict out;
            out["ck_free"] = report.ck_free;
            out["arc_count"] = report.arc_count;
            out["bound"] = rational_dict(report.bound);
            out["consistent"] = report.consistent;
            return out;
        },
        py::arg("d"), py::arg("k"));
}
