#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hoffman/catalog.hpp"
#include "hoffman/classify.hpp"
#include "hoffman/hoffman_graph.hpp"
#include "hoffman/io.hpp"
#include "hoffman/representation.hpp"
#include "hoffman/spectral.hpp"

namespace py = pybind11;
using namespace hoffman;

namespace {

using Rows = std::vector<std::vector<std::int64_t>>;

SymmetricIntMatrix matrix(const Rows& rows) { return SymmetricIntMatrix::from_rows(rows); }

py::dict solve_dict(const HoffmanGraph& h, int dim_cap, std::int64_t budget) {
    SolveOptions opts;
    opts.dim_cap = dim_cap;
    opts.node_budget = budget;
    SolveOutcome out;
    {
        py::gil_scoped_release release;
        out = solve_reduced_integral(h, opts);
    }
    py::dict d;
    d["status"] = to_string(out.status);
    d["nodes"] = out.nodes;
    if (out.status == SolveStatus::Found) {
        d["dim"] = out.rep.dim;
        d["vectors"] = out.rep.vectors;
    }
    return d;
}

py::list census(int n_max) {
    std::vector<TreeCensusEntry> entries;
    {
        py::gil_scoped_release release;
        entries = brute_force_ir_trees(n_max);
    }
    py::list out;
    for (const auto& e : entries) {
        py::dict d;
        d["code"] = e.code;
        d["n"] = e.n;
        d["edges"] = e.tree.edges();
        d["lambda_cmp"] = to_string(e.lambda_vs_minus3);
        d["representable"] = to_string(e.representable);
        d["dim"] = e.witness ? e.witness->dim : -1;
        out.append(d);
    }
    return out;
}

py::dict main_theorem(int n_max, int slack) {
    MainTheoremReport r;
    {
        py::gil_scoped_release release;
        r = verify_main_theorem(n_max, slack);
    }
    py::dict d;
    d["n_max"] = r.n_max;
    d["slack"] = r.slack;
    d["census_trees"] = r.census_trees;
    d["census_radius3"] = r.census_radius3;
    d["constructed"] = r.constructed;
    d["only_in_census"] = r.only_in_census;
    d["only_constructed"] = r.only_constructed;
    d["smaller_trees"] = r.smaller_trees;
    d["not_embedded"] = r.not_embedded;
    d["largest_host"] = r.largest_host;
    d["beyond_short_slack"] = r.beyond_short_slack;
    d["ok"] = r.ok();
    return d;
}

}  // namespace

PYBIND11_MODULE(_hoffman, m) {
    m.doc() = "Hoffman graphs, integral representations of norm 3 and tree classification";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const std::invalid_argument& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    py::class_<HoffmanGraph>(m, "HoffmanGraph")
        .def(py::init([](const std::vector<Vertex>& slim, const std::vector<Vertex>& fat, const std::vector<Edge>& edges) {
                 return HoffmanGraph::from_lists(slim, fat, edges);
             }),
             py::arg("slim"), py::arg("fat"), py::arg("edges"))
        .def_property_readonly("slims", &HoffmanGraph::slims)
        .def_property_readonly("fats", &HoffmanGraph::fats)
        .def_property_readonly("edges", [](const HoffmanGraph& h) { return h.graph().edges(); })
        .def_property_readonly("order", &HoffmanGraph::order)
        .def("weight", &HoffmanGraph::weight)
        .def("is_tree_like", &HoffmanGraph::is_tree_like)
        .def("is_fat", &HoffmanGraph::is_fat_hoffman)
        .def("to_json", [](const HoffmanGraph& h) { return to_json(h).dump(); })
        .def("to_dot", [](const HoffmanGraph& h) { return to_dot(h); })
        .def("__eq__", [](const HoffmanGraph& a, const HoffmanGraph& b) { return a == b; })
        .def("__repr__", [](const HoffmanGraph& h) {
            return "<HoffmanGraph " + std::to_string(h.slim_count()) + " slim, " + std::to_string(h.fat_count()) + " fat>";
        });

    m.def("from_json", [](const std::string& s) { return hoffman_from_json(Json::parse(s)); }, py::arg("text"));
    m.def("all_slim", [](int n, const std::vector<Edge>& edges) { return all_slim(Graph(n, edges)); },
          py::arg("n"), py::arg("edges"));

    m.def("special_matrix", [](const HoffmanGraph& h) { return special_matrix(h).rows(); });
    m.def("lambda_min_cmp3", [](const HoffmanGraph& h) { return to_string(lambda_min_cmp3(h)); },
          "'less', 'equal' or 'greater'");
    m.def("cmp_lambda_min", [](const Rows& a, std::int64_t num, std::int64_t den) {
              return to_string(cmp_lambda_min(matrix(a), Rational(num, den)));
          },
          py::arg("matrix"), py::arg("num"), py::arg("den") = 1);
    m.def("eigen_multiplicity_at", [](const Rows& a, std::int64_t num, std::int64_t den) {
              return eigen_multiplicity_at(matrix(a), Rational(num, den));
          },
          py::arg("matrix"), py::arg("num"), py::arg("den") = 1);
    m.def("eigenvalues", [](const Rows& a) { return eigenvalues_float(matrix(a)); });

    m.def("decompose", [](const HoffmanGraph& h) {
        std::vector<std::vector<Vertex>> out;
        for (const auto& f : decompose(h)) {
            std::vector<Vertex> s;
            for (Vertex v : f.graph.slims()) s.push_back(f.origin[v]);
            out.push_back(s);
        }
        return out;
    });
    m.def("isomorphic", &hoffman_isomorphic);

    m.def("solve", &solve_dict, py::arg("h"), py::arg("dim_cap") = -1, py::arg("budget") = 10'000'000);
    m.def("verify_reduced", [](const HoffmanGraph& h, int dim, const std::vector<IntVector>& vectors) {
        return verify_reduced(h, ReducedRep{dim, vectors});
    });

    m.def("make_h_t", &make_h_t);
    m.def("make_fat_star", &make_fat_star);
    m.def("make_c", &make_c);
    m.def("make_third_member", &make_third_member);
    m.def("psi_c", [](int mm) { return make_psi_c(mm).vectors; });
    m.def("catalog_member", [](const std::string& name) { return catalog_member(name).graph; });
    m.def("family_tags", [](int max_m) {
        std::vector<std::string> tags;
        for (const auto& f : family_F(max_m)) tags.push_back(f.tag);
        return tags;
    });
    m.def("fat_3_seedlings", [](const std::string& base) { return enumerate_fat_3_seedlings(parse_extended_e(base)); });

    m.def("census", &census, py::arg("n_max"));
    m.def("construct_trees", [](int n_max) {
        py::gil_scoped_release release;
        return construct_ir_trees_from_F(n_max);
    });
    m.def("verify_main_theorem", &main_theorem, py::arg("n_max"), py::arg("slack") = 6);
    m.def("free_tree_count", [](int n) { return enumerate_free_trees(n).size(); });
}
