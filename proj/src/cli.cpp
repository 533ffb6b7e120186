#include "rootpoly/cli.hpp"

#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rootpoly/errors.hpp"
#include "rootpoly/invariants.hpp"
#include "rootpoly/io.hpp"
#include "rootpoly/layer_complete.hpp"
#include "rootpoly/planar.hpp"
#include "rootpoly/pointloc.hpp"
#include "rootpoly/triangulation.hpp"

namespace rootpoly {

namespace {

using nlohmann::json;

struct Ctx {
    bool json_mode = false;
    unsigned long long seed = 20240901ULL;
    int threads = 1;
    std::ostringstream out;
};

GraphFile load_graph(const std::string& path) { return parse_graph_file(read_file(path)); }

RibbonStructure ribbon_or_canonical(const GraphFile& gf) {
    return gf.ribbon ? *gf.ribbon : canonical_ribbon(gf.graph);
}

Basis basis_or_default(const GraphFile& gf) {
    if (gf.basis) return *gf.basis;
    for (int v = 0; v < gf.graph.vertex_count(); ++v)
        if (!gf.graph.incident(v).empty()) return Basis{v, gf.graph.incident(v).front()};
    throw domain_error("graph has no arcs");
}

json poly_json(const Polynomial& p) {
    json j;
    j["coefficients"] = p.coeffs();
    j["pretty"] = p.human();
    return j;
}

std::string arc_list(const std::vector<int>& arcs) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < arcs.size(); ++i) {
        if (i) os << " ";
        os << arcs[i];
    }
    os << "]";
    return os.str();
}

int cmd_check(Ctx& ctx, const std::string& path) {
    GraphFile gf = load_graph(path);
    auto lay = semi_balanced_layering(gf.graph);
    if (ctx.json_mode) {
        json j;
        j["semi_balanced"] = lay.has_value();
        if (lay) j["potential"] = lay->potential;
        j["dimension"] = polytope_dimension(gf.graph);
        ctx.out << j.dump() << "\n";
    } else if (lay) {
        ctx.out << "semi-balanced\n";
        ctx.out << "potential:";
        for (int v = 0; v < gf.graph.vertex_count(); ++v) ctx.out << " " << lay->potential[v];
        ctx.out << "\n";
        ctx.out << "dimension " << polytope_dimension(gf.graph) << "\n";
    } else {
        ctx.out << "not semi-balanced\n";
    }
    return lay ? 0 : 1;
}

int cmd_jaeger(Ctx& ctx, const std::string& path) {
    GraphFile gf = load_graph(path);
    auto trees = enumerate_jaeger_trees(gf.graph, ribbon_or_canonical(gf), basis_or_default(gf));
    if (ctx.json_mode) {
        json j;
        j["count"] = trees.size();
        j["trees"] = json::array();
        for (const auto& t : trees) j["trees"].push_back(t.arcs);
        ctx.out << j.dump() << "\n";
    } else {
        ctx.out << trees.size() << " Jaeger trees\n";
        for (const auto& t : trees) ctx.out << arc_list(t.arcs) << "\n";
    }
    return 0;
}

int cmd_interior(Ctx& ctx, const std::string& path) {
    GraphFile gf = load_graph(path);
    Polynomial p = gf.graph.weakly_connected()
                       ? interior_polynomial(gf.graph, ribbon_or_canonical(gf),
                                             basis_or_default(gf))
                       : interior_disconnected(gf.graph);
    if (ctx.json_mode)
        ctx.out << poly_json(p).dump() << "\n";
    else
        ctx.out << p.coeff_list() << "\n" << p.human() << "\n";
    return 0;
}

int cmd_ehrhart(Ctx& ctx, const std::string& path, int k, const std::string& backend) {
    GraphFile gf = load_graph(path);
    json j;
    j["counts"] = json::array();
    std::vector<std::pair<std::string, long long>> rows;
    for (int i = 0; i <= k; ++i) {
        long long box = -1, multi = -1;
        if (backend == "box" || backend == "both")
            box = ehrhart_count(gf.graph, i, EhrhartBackend::BoxScan, ctx.threads);
        if (backend == "multiset" || backend == "both")
            multi = ehrhart_count(gf.graph, i, EhrhartBackend::Multiset, ctx.threads);
        if (backend == "both" && box != multi)
            throw internal_error("Ehrhart backends disagree at k=" + std::to_string(i));
        long long val = (box >= 0) ? box : multi;
        rows.push_back({std::to_string(i), val});
        j["counts"].push_back(val);
    }
    if (ctx.json_mode)
        ctx.out << j.dump() << "\n";
    else
        for (auto& [kk, v] : rows) ctx.out << "k=" << kk << " " << v << "\n";
    return 0;
}

int cmd_triangulation(Ctx& ctx, const std::string& path) {
    GraphFile gf = load_graph(path);
    TriangulationReport rep =
        is_triangulation(gf.graph, ribbon_or_canonical(gf), basis_or_default(gf));
    if (ctx.json_mode) {
        json j;
        j["triangulation"] = rep.triangulation;
        j["jaeger_trees"] = rep.jaeger_tree_count;
        if (rep.witness) {
            j["witness"]["tree1"] = rep.witness->tree1.arcs;
            j["witness"]["tree2"] = rep.witness->tree2.arcs;
            j["witness"]["cycle"] = rep.witness->cycle.arcs;
        }
        ctx.out << j.dump() << "\n";
    } else if (rep.triangulation) {
        ctx.out << "triangulation (" << rep.jaeger_tree_count << " Jaeger trees)\n";
    } else {
        ctx.out << "dissection only, not a triangulation\n";
        ctx.out << "witness tree1 " << arc_list(rep.witness->tree1.arcs) << "\n";
        ctx.out << "witness tree2 " << arc_list(rep.witness->tree2.arcs) << "\n";
        ctx.out << "incompatible cycle " << arc_list(rep.witness->cycle.arcs) << "\n";
    }
    return 0;
}

int cmd_locate(Ctx& ctx, const std::string& path, const std::string& point_path) {
    GraphFile gf = load_graph(path);
    RationalVector p = parse_point_file(read_file(point_path), gf.graph.vertex_count());
    SpanningTree t =
        jaeger_tree_for_point(gf.graph, ribbon_or_canonical(gf), basis_or_default(gf), p);
    if (ctx.json_mode) {
        json j;
        j["tree"] = t.arcs;
        ctx.out << j.dump() << "\n";
    } else {
        ctx.out << "tree " << arc_list(t.arcs) << "\n";
    }
    return 0;
}

int cmd_bernardi(Ctx& ctx, const std::string& path, const std::string& ht_path,
                 const std::string& side) {
    GraphFile gf = load_graph(path);
    Side s = side == "U" ? Side::U : Side::W;
    Hypertree h = parse_hypertree_file(read_file(ht_path), gf.graph.vertex_count(), s);
    SpanningTree t = bernardi(gf.graph, ribbon_or_canonical(gf), basis_or_default(gf), h);
    if (ctx.json_mode) {
        json j;
        j["tree"] = t.arcs;
        ctx.out << j.dump() << "\n";
    } else {
        ctx.out << "tree " << arc_list(t.arcs) << "\n";
    }
    return 0;
}

int cmd_dual(Ctx& ctx, const std::string& path) {
    GraphFile gf = load_graph(path);
    if (!gf.ribbon) throw domain_error("dual needs an embedding: add rot lines to the file");
    DualDigraph d = dual(gf.graph, *gf.ribbon);
    DirectedGraph dg = dual_as_digraph(d);  // rejects parallel dual arcs
    RibbonStructure dr = dual_ribbon(d);
    if (ctx.json_mode) {
        json j;
        j["graph"] = format_graph_file(dg, &dr);
        j["map"] = json::array();
        for (const Arc& a : dg.arcs()) j["map"].push_back({a.id, a.id});
        ctx.out << j.dump() << "\n";
    } else {
        ctx.out << format_graph_file(dg, &dr);
        for (const Arc& a : dg.arcs()) ctx.out << "map " << a.id << " " << a.id << "\n";
    }
    return 0;
}

int cmd_greedoid(Ctx& ctx, const std::string& path, int root) {
    GraphFile gf = load_graph(path);
    if (!gf.ribbon) throw domain_error("greedoid needs an embedding: add rot lines to the file");
    Polynomial lambda = greedoid_polynomial(gf.graph, *gf.ribbon, root);
    if (ctx.json_mode)
        ctx.out << poly_json(lambda).dump() << "\n";
    else
        ctx.out << lambda.coeff_list() << "\n" << lambda.human() << "\n";
    return 0;
}

int cmd_layer_complete(Ctx& ctx, const std::string& sizes_csv, const std::string& emit) {
    LayerSpec spec;
    std::istringstream ss(sizes_csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            spec.sizes.push_back(std::stoi(tok));
        } catch (const std::logic_error&) {
            throw parse_error("bad layer size '" + tok + "'");
        }
    }
    LayerComplete lc = build_layer_complete(spec);
    if (emit == "graph") {
        ctx.out << format_graph_file(lc.graph, &lc.ribbon, &lc.basis);
    } else if (emit == "formula") {
        Polynomial p = layer_complete_formula(spec);
        if (ctx.json_mode)
            ctx.out << poly_json(p).dump() << "\n";
        else
            ctx.out << p.coeff_list() << "\n" << p.human() << "\n";
    } else if (emit == "trees") {
        auto trees = enumerate_comb_trees(spec);
        if (ctx.json_mode) {
            json j = json::array();
            for (const auto& t : trees) j.push_back(t.tree.arcs);
            ctx.out << j.dump() << "\n";
        } else {
            ctx.out << trees.size() << " comb trees\n";
            for (const auto& t : trees) ctx.out << arc_list(t.tree.arcs) << "\n";
        }
    } else {
        throw parse_error("unknown emit mode '" + emit + "'");
    }
    return 0;
}

void report_identity(Ctx& ctx, const std::string& name, const IdentityReport& rep) {
    if (ctx.json_mode) {
        json j;
        j["identity"] = name;
        j["holds"] = rep.holds;
        j["lhs"] = poly_json(rep.lhs);
        j["rhs"] = poly_json(rep.rhs);
        ctx.out << j.dump() << "\n";
    } else {
        ctx.out << name << ": " << (rep.holds ? "true" : "false") << "\n";
        ctx.out << "lhs " << rep.lhs.coeff_list() << "\n";
        ctx.out << "rhs " << rep.rhs.coeff_list() << "\n";
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::string& out) {
    Ctx ctx;
    CLI::App app{"root polytopes of directed graphs: Jaeger dissections, interior "
                 "polynomials, duality"};
    app.set_help_all_flag("--help-all");
    app.add_flag("--json", ctx.json_mode, "machine-readable output");
    app.add_option("--seed", ctx.seed, "seed for randomized subcommands");
    app.add_option("--threads", ctx.threads, "worker threads (output is identical for any N)");
    app.require_subcommand(1);

    std::string path, point_path, ht_path, side = "U", backend = "both";
    std::string sizes_csv, emit = "formula";
    int karg = 4, root = 0;
    int bridge_arc = 0;
    std::string g2_path, glue;
    std::vector<int> cycle_arcs;

    auto* c_check = app.add_subcommand("check", "semi-balancedness, layering, dimension");
    c_check->add_option("graph", path)->required();
    auto* c_jaeger = app.add_subcommand("jaeger", "enumerate Jaeger trees in tree order");
    c_jaeger->add_option("graph", path)->required();
    auto* c_interior = app.add_subcommand("interior", "interior polynomial");
    c_interior->add_option("graph", path)->required();
    auto* c_ehr = app.add_subcommand("ehrhart", "lattice-point counts of dilates");
    c_ehr->add_option("graph", path)->required();
    c_ehr->add_option("--k", karg, "maximum dilation");
    c_ehr->add_option("--backend", backend, "box|multiset|both");
    auto* c_tri = app.add_subcommand("triangulation", "is the Jaeger dissection a triangulation");
    c_tri->add_option("graph", path)->required();
    auto* c_loc = app.add_subcommand("locate", "Jaeger tree containing a point");
    c_loc->add_option("graph", path)->required();
    c_loc->add_option("--point", point_path)->required();
    auto* c_ber = app.add_subcommand("bernardi", "Jaeger tree realizing a hypertree");
    c_ber->add_option("graph", path)->required();
    c_ber->add_option("--hypertree", ht_path)->required();
    c_ber->add_option("--side", side, "U|W");
    auto* c_dual = app.add_subcommand("dual", "directed plane dual");
    c_dual->add_option("graph", path)->required();
    auto* c_gre = app.add_subcommand("greedoid", "greedoid polynomial of an Eulerian plane digraph");
    c_gre->add_option("graph", path)->required();
    c_gre->add_option("--root", root, "root vertex");
    auto* c_lay = app.add_subcommand("layer-complete", "layer-complete generators");
    c_lay->add_option("--sizes", sizes_csv, "comma-separated s_0,..,s_k")->required();
    c_lay->add_option("--emit", emit, "graph|formula|trees");
    auto* c_verify = app.add_subcommand("verify", "polynomial identities");
    c_verify->require_subcommand(1);
    auto* v_prod = c_verify->add_subcommand("product", "fusion product formula");
    v_prod->add_option("graph1", path)->required();
    v_prod->add_option("graph2", g2_path)->required();
    v_prod->add_option("--glue-arc", glue, "a1:a2 arc fusion");
    v_prod->add_option("--glue-vertex", glue, "v1:v2 vertex fusion");
    auto* v_bridge = c_verify->add_subcommand("bridge", "bridge deletion formula");
    v_bridge->add_option("graph", path)->required();
    v_bridge->add_option("--arc", bridge_arc, "bridge arc id")->required();
    auto* v_disj = c_verify->add_subcommand("disjoint", "disjoint union formula");
    v_disj->add_option("graph1", path)->required();
    v_disj->add_option("graph2", g2_path)->required();
    auto* v_rec = c_verify->add_subcommand("recursion", "cycle deletion recursion");
    v_rec->add_option("graph", path)->required();
    v_rec->add_option("--cycle", cycle_arcs, "cycle arc ids (default: all cycles)");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        std::ostringstream os;
        os << (e.get_exit_code() == 0 ? app.help() : std::string(e.what()) + "\n");
        out = os.str();
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        int code = 0;
        if (*c_check) code = cmd_check(ctx, path);
        else if (*c_jaeger) code = cmd_jaeger(ctx, path);
        else if (*c_interior) code = cmd_interior(ctx, path);
        else if (*c_ehr) code = cmd_ehrhart(ctx, path, karg, backend);
        else if (*c_tri) code = cmd_triangulation(ctx, path);
        else if (*c_loc) code = cmd_locate(ctx, path, point_path);
        else if (*c_ber) code = cmd_bernardi(ctx, path, ht_path, side);
        else if (*c_dual) code = cmd_dual(ctx, path);
        else if (*c_gre) code = cmd_greedoid(ctx, path, root);
        else if (*c_lay) code = cmd_layer_complete(ctx, sizes_csv, emit);
        else if (*c_verify) {
            GraphFile g1 = load_graph(path);
            if (*v_prod) {
                GraphFile g2 = load_graph(g2_path);
                auto colon = glue.find(':');
                if (colon == std::string::npos)
                    throw parse_error("glue spec must be <id>:<id>");
                int id1 = std::stoi(glue.substr(0, colon));
                int id2 = std::stoi(glue.substr(colon + 1));
                IdentityReport rep = v_prod->count("--glue-arc")
                                         ? verify_product_edge(g1.graph, id1, g2.graph, id2)
                                         : verify_product_vertex(g1.graph, id1, g2.graph, id2);
                report_identity(ctx, "product", rep);
                code = rep.holds ? 0 : 1;
            } else if (*v_bridge) {
                IdentityReport rep = verify_bridge(g1.graph, bridge_arc);
                report_identity(ctx, "bridge", rep);
                code = rep.holds ? 0 : 1;
            } else if (*v_disj) {
                GraphFile g2 = load_graph(g2_path);
                IdentityReport rep = verify_disjoint_union(g1.graph, g2.graph);
                report_identity(ctx, "disjoint", rep);
                code = rep.holds ? 0 : 1;
            } else if (*v_rec) {
                bool all_hold = true;
                if (!cycle_arcs.empty()) {
                    IdentityReport rep =
                        verify_recursion(g1.graph, cycle_from_arcs(g1.graph, cycle_arcs));
                    if (ctx.json_mode)
                        report_identity(ctx, "recursion", rep);
                    else
                        ctx.out << "zero polynomial: " << (rep.holds ? "true" : "false") << "\n";
                    all_hold = rep.holds;
                } else {
                    for (const CycleWithSides& c : enumerate_cycles(g1.graph)) {
                        IdentityReport rep = verify_recursion(g1.graph, c);
                        ctx.out << "cycle " << arc_list(c.arcs) << " zero polynomial: "
                                << (rep.holds ? "true" : "false") << "\n";
                        all_hold = all_hold && rep.holds;
                    }
                }
                code = all_hold ? 0 : 1;
            }
        }
        out = ctx.out.str();
        return code;
    } catch (const parse_error& e) {
        out = std::string("parse error: ") + e.what() + "\n";
        return 2;
    } catch (const domain_error& e) {
        out = std::string("error: ") + e.what() + "\n";
        return 1;
    }
}

}  // namespace rootpoly
