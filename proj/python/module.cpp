#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rootpoly/cli.hpp"
#include "rootpoly/invariants.hpp"
#include "rootpoly/io.hpp"
#include "rootpoly/layer_complete.hpp"
#include "rootpoly/planar.hpp"
#include "rootpoly/pointloc.hpp"
#include "rootpoly/triangulation.hpp"

namespace py = pybind11;
using namespace rootpoly;

namespace {

DirectedGraph make_graph(int n, const std::vector<std::pair<int, int>>& ends) {
    std::vector<Arc> arcs;
    for (auto [t, h] : ends) arcs.push_back({static_cast<int>(arcs.size()), t, h});
    return DirectedGraph(n, std::move(arcs));
}

RibbonStructure ribbon_of(const DirectedGraph& g,
                          const std::optional<std::vector<std::vector<int>>>& rot) {
    if (!rot) return canonical_ribbon(g);
    RibbonStructure r{*rot};
    validate_ribbon(g, r);
    return r;
}

Basis basis_of(const DirectedGraph& g, const std::optional<std::pair<int, int>>& b) {
    if (b) return Basis{b->first, b->second};
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!g.incident(v).empty()) return Basis{v, g.incident(v).front()};
    throw domain_error("graph has no arcs");
}

RationalVector point_of(const DirectedGraph& g, const std::map<int, std::string>& coords) {
    RationalVector p(g.vertex_count(), 0);
    for (auto& [v, s] : coords) p.at(v) = parse_rational(s);
    return p;
}

Hypertree hypertree_of(const DirectedGraph& g, const std::string& side,
                       const std::map<int, long long>& values) {
    Hypertree h;
    h.side = (side == "U") ? Side::U : Side::W;
    h.values.assign(g.vertex_count(), 0);
    for (auto& [v, x] : values) h.values.at(v) = x;
    return h;
}

}  // namespace

PYBIND11_MODULE(_rootpoly, m) {
    m.doc() = "root polytopes of directed graphs: Jaeger dissections, interior polynomials, "
              "point location, planar duality";

    py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);
    py::register_exception<domain_error>(m, "DomainError", PyExc_ValueError);

    py::class_<DirectedGraph>(m, "DirectedGraph")
        .def(py::init(&make_graph), py::arg("vertex_count"), py::arg("arcs"))
        .def_property_readonly("vertex_count", &DirectedGraph::vertex_count)
        .def_property_readonly("arc_count", &DirectedGraph::arc_count)
        .def_property_readonly("arcs",
                               [](const DirectedGraph& g) {
                                   std::vector<std::pair<int, int>> out;
                                   for (const Arc& a : g.arcs()) out.push_back({a.tail, a.head});
                                   return out;
                               })
        .def("incident", [](const DirectedGraph& g, int v) { return g.incident(v); })
        .def("__eq__", [](const DirectedGraph& a, const DirectedGraph& b) { return a == b; })
        .def("__repr__", [](const DirectedGraph& g) {
            return "DirectedGraph(" + std::to_string(g.vertex_count()) + " vertices, " +
                   std::to_string(g.arc_count()) + " arcs)";
        });

    m.def("parse_graph_file", [](const std::string& text) {
        GraphFile gf = parse_graph_file(text);
        py::dict out;
        out["graph"] = gf.graph;
        if (gf.ribbon) out["ribbon"] = gf.ribbon->rotation;
        if (gf.basis) out["basis"] = std::make_pair(gf.basis->node, gf.basis->arc);
        return out;
    });
    m.def("format_graph_file", [](const DirectedGraph& g,
                                  std::optional<std::vector<std::vector<int>>> rot,
                                  std::optional<std::pair<int, int>> basis) {
        std::optional<RibbonStructure> r;
        if (rot) r = ribbon_of(g, rot);
        std::optional<Basis> b;
        if (basis) b = basis_of(g, basis);
        return format_graph_file(g, r ? &*r : nullptr, b ? &*b : nullptr);
    }, py::arg("graph"), py::arg("ribbon") = std::nullopt, py::arg("basis") = std::nullopt);

    m.def("reverse", [](const DirectedGraph& g) { return reverse(g); });
    m.def("semi_balanced_layering", [](const DirectedGraph& g) -> py::object {
        auto lay = semi_balanced_layering(g);
        if (!lay) return py::none();
        return py::cast(lay->potential);
    });
    m.def("spanning_trees", [](const DirectedGraph& g) {
        std::vector<std::vector<int>> out;
        for (const auto& t : enumerate_spanning_trees(g)) out.push_back(t.arcs);
        return out;
    });
    m.def("canonical_ribbon",
          [](const DirectedGraph& g) { return canonical_ribbon(g).rotation; });

    m.def("tour",
          [](const DirectedGraph& g, std::optional<std::vector<std::vector<int>>> rot,
             std::optional<std::pair<int, int>> basis, const std::vector<int>& tree) {
              Tour w = tour(g, ribbon_of(g, rot), basis_of(g, basis),
                            make_spanning_tree(g, tree));
              std::vector<std::tuple<int, int, bool>> out;
              for (const TourStep& s : w.steps) out.push_back({s.vertex, s.arc, s.traversed});
              return out;
          },
          py::arg("graph"), py::arg("ribbon"), py::arg("basis"), py::arg("tree"));
    m.def("is_jaeger",
          [](const DirectedGraph& g, std::optional<std::vector<std::vector<int>>> rot,
             std::optional<std::pair<int, int>> basis, const std::vector<int>& tree) {
              return is_jaeger(g, ribbon_of(g, rot), basis_of(g, basis),
                               make_spanning_tree(g, tree));
          },
          py::arg("graph"), py::arg("ribbon"), py::arg("basis"), py::arg("tree"));
    m.def("jaeger_trees",
          [](const DirectedGraph& g, std::optional<std::vector<std::vector<int>>> rot,
             std::optional<std::pair<int, int>> basis) {
              std::vector<std::vector<int>> out;
              for (const auto& t :
                   enumerate_jaeger_trees(g, ribbon_of(g, rot), basis_of(g, basis)))
                  out.push_back(t.arcs);
              return out;
          },
          py::arg("graph"), py::arg("ribbon") = std::nullopt, py::arg("basis") = std::nullopt);
    m.def("semi_passive_arcs",
          [](const DirectedGraph& g, std::optional<std::vector<std::vector<int>>> rot,
             std::optional<std::pair<int, int>> basis, const std::vector<int>& tree) {
              return semi_passive_arcs(g, ribbon_of(g, rot), basis_of(g, basis),
                                       make_spanning_tree(g, tree));
          },
          py::arg("graph"), py::arg("ribbon"), py::arg("basis"), py::arg("tree"));

    m.def("interior_polynomial",
          [](const DirectedGraph& g, std::optional<std::vector<std::vector<int>>> rot,
             std::optional<std::pair<int, int>> basis) {
              if (!g.weakly_connected()) return interior_disconnected(g).coeffs();
              return interior_polynomial(g, ribbon_of(g, rot), basis_of(g, basis)).coeffs();
          },
          py::arg("graph"), py::arg("ribbon") = std::nullopt, py::arg("basis") = std::nullopt);
    m.def("ehrhart_count",
          [](const DirectedGraph& g, int k, const std::string& backend, int threads) {
              if (backend == "box")
                  return ehrhart_count(g, k, EhrhartBackend::BoxScan, threads);
              if (backend == "multiset")
                  return ehrhart_count(g, k, EhrhartBackend::Multiset, threads);
              long long a = ehrhart_count(g, k, EhrhartBackend::BoxScan, threads);
              long long b = ehrhart_count(g, k, EhrhartBackend::Multiset, threads);
              if (a != b) throw internal_error("Ehrhart backends disagree");
              return a;
          },
          py::arg("graph"), py::arg("k"), py::arg("backend") = "multiset",
          py::arg("threads") = 1);
    m.def("h_star",
          [](const DirectedGraph& g, const std::string& backend) {
              return h_star_from_ehrhart(g, backend == "box" ? EhrhartBackend::BoxScan
                                                             : EhrhartBackend::Multiset)
                  .coeffs();
          },
          py::arg("graph"), py::arg("backend") = "multiset");

    m.def("contains_point",
          [](const DirectedGraph& g, const std::map<int, std::string>& coords) -> py::object {
              auto cert = contains_point(g, point_of(g, coords));
              if (!cert) return py::none();
              py::dict out;
              for (size_t i = 0; i < cert->arcs.size(); ++i)
                  out[py::cast(cert->arcs[i])] = format_rational(cert->coeffs[i]);
              return out;
          });
    m.def("locate",
          [](const DirectedGraph& g, std::optional<std::vector<std::vector<int>>> rot,
             std::optional<std::pair<int, int>> basis, const std::map<int, std::string>& coords) {
              return jaeger_tree_for_point(g, ribbon_of(g, rot), basis_of(g, basis),
                                           point_of(g, coords))
                  .arcs;
          },
          py::arg("graph"), py::arg("ribbon"), py::arg("basis"), py::arg("point"));
    m.def("marker",
          [](const DirectedGraph& g, const std::string& side,
             const std::map<int, long long>& values) {
              RationalVector p = marker(g, hypertree_of(g, side, values));
              std::map<int, std::string> out;
              for (int v = 0; v < g.vertex_count(); ++v)
                  if (p[v] != 0) out[v] = format_rational(p[v]);
              return out;
          },
          py::arg("graph"), py::arg("side"), py::arg("values"));
    m.def("bernardi",
          [](const DirectedGraph& g, std::optional<std::vector<std::vector<int>>> rot,
             std::optional<std::pair<int, int>> basis, const std::string& side,
             const std::map<int, long long>& values) {
              return bernardi(g, ribbon_of(g, rot), basis_of(g, basis),
                              hypertree_of(g, side, values))
                  .arcs;
          },
          py::arg("graph"), py::arg("ribbon"), py::arg("basis"), py::arg("side"),
          py::arg("values"));
    m.def("hypertrees",
          [](const DirectedGraph& g, const std::string& side) {
              std::vector<std::map<int, long long>> out;
              for (const auto& h :
                   enumerate_hypertrees(g, side == "U" ? Side::U : Side::W)) {
                  std::map<int, long long> vals;
                  for (int v = 0; v < g.vertex_count(); ++v)
                      if (h.values[v]) vals[v] = h.values[v];
                  out.push_back(std::move(vals));
              }
              return out;
          },
          py::arg("graph"), py::arg("side"));

    m.def("is_triangulation",
          [](const DirectedGraph& g, std::optional<std::vector<std::vector<int>>> rot,
             std::optional<std::pair<int, int>> basis) {
              TriangulationReport rep =
                  is_triangulation(g, ribbon_of(g, rot), basis_of(g, basis));
              py::dict out;
              out["triangulation"] = rep.triangulation;
              out["jaeger_trees"] = rep.jaeger_tree_count;
              if (rep.witness) {
                  out["witness_tree1"] = rep.witness->tree1.arcs;
                  out["witness_tree2"] = rep.witness->tree2.arcs;
                  out["witness_cycle"] = rep.witness->cycle.arcs;
              }
              return out;
          },
          py::arg("graph"), py::arg("ribbon") = std::nullopt, py::arg("basis") = std::nullopt);

    m.def("dual",
          [](const DirectedGraph& g, const std::vector<std::vector<int>>& rot) {
              DualDigraph d = dual(g, ribbon_of(g, rot));
              py::dict out;
              out["face_count"] = d.graph.n;
              std::vector<std::pair<int, int>> arcs;
              for (const Arc& a : d.graph.arcs) arcs.push_back({a.tail, a.head});
              out["arcs"] = arcs;
              out["rotation"] = d.graph.rotation;
              return out;
          },
          py::arg("graph"), py::arg("ribbon"));
    m.def("greedoid_polynomial",
          [](const DirectedGraph& g, const std::vector<std::vector<int>>& rot, int root) {
              return greedoid_polynomial(g, ribbon_of(g, rot), root).coeffs();
          },
          py::arg("graph"), py::arg("ribbon"), py::arg("root"));

    m.def("layer_complete", [](const std::vector<int>& sizes) {
        LayerComplete lc = build_layer_complete(LayerSpec{sizes});
        py::dict out;
        out["graph"] = lc.graph;
        out["ribbon"] = lc.ribbon.rotation;
        out["basis"] = std::make_pair(lc.basis.node, lc.basis.arc);
        return out;
    });
    m.def("layer_complete_formula", [](const std::vector<int>& sizes) {
        return layer_complete_formula(LayerSpec{sizes}).coeffs();
    });
    m.def("comb_trees", [](const std::vector<int>& sizes) {
        std::vector<std::vector<int>> out;
        for (const auto& t : enumerate_comb_trees(LayerSpec{sizes})) out.push_back(t.tree.arcs);
        return out;
    });

    m.def("verify_product_edge",
          [](const DirectedGraph& g1, int a1, const DirectedGraph& g2, int a2) {
              return verify_product_edge(g1, a1, g2, a2).holds;
          });
    m.def("verify_product_vertex",
          [](const DirectedGraph& g1, int v1, const DirectedGraph& g2, int v2) {
              return verify_product_vertex(g1, v1, g2, v2).holds;
          });
    m.def("verify_bridge", [](const DirectedGraph& g, int arc) {
        return verify_bridge(g, arc).holds;
    });
    m.def("verify_disjoint_union", [](const DirectedGraph& g1, const DirectedGraph& g2) {
        return verify_disjoint_union(g1, g2).holds;
    });
    m.def("verify_recursion", [](const DirectedGraph& g, const std::vector<int>& cycle) {
        return verify_recursion(g, cycle_from_arcs(g, cycle)).holds;
    });
    m.def("cycles", [](const DirectedGraph& g) {
        std::vector<std::vector<int>> out;
        for (const auto& c : enumerate_cycles(g)) out.push_back(c.arcs);
        return out;
    });

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::string out;
        int code = run_cli(args, out);
        return std::make_pair(code, out);
    });
}
