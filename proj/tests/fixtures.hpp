#pragma once

// Shared test graphs. Coordinates matter: several ribbons are defined as the
// positive (counterclockwise) angular order of a concrete drawing.

#include <algorithm>
#include <string>
#include <vector>

#include "rootpoly/digraph.hpp"
#include "rootpoly/layer_complete.hpp"
#include "rootpoly/ribbon.hpp"

namespace fixtures {

using namespace rootpoly;

struct Fixture {
    std::string name;
    DirectedGraph graph;
    RibbonStructure ribbon;
    Basis basis;
};

inline DirectedGraph make_graph(int n, std::vector<std::pair<int, int>> ends) {
    std::vector<Arc> arcs;
    for (auto [t, h] : ends) arcs.push_back({static_cast<int>(arcs.size()), t, h});
    return DirectedGraph(n, std::move(arcs));
}

inline Fixture with_canonical(std::string name, DirectedGraph g) {
    RibbonStructure r = canonical_ribbon(g);
    Basis b{0, g.incident(0).front()};
    return Fixture{std::move(name), std::move(g), std::move(r), b};
}

// --- complete bipartite orientations (all layer-complete shapes) ---

// standard K_{2,3}: three sources 0,1,2 -> two sinks 3,4
inline Fixture k23_standard() {
    return with_canonical("k23-standard",
                          make_graph(5, {{0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 3}, {2, 4}}));
}

// middle K_{2,3} orientation: {0,1} -> {2,3} -> {4}
inline Fixture k23_middle() {
    return with_canonical("k23-middle",
                          make_graph(5, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}, {3, 4}}));
}

// rightmost K_{2,3} orientation, drawn as in the dissection example:
// p=0 at the bottom, a=1, b=2, c=3 in the middle, q=4 on top;
// counterclockwise ribbon, basis (p, pc).
inline Fixture k23_octahedron() {
    DirectedGraph g = make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
    std::vector<std::pair<long long, long long>> xy{{9, 3}, {3, 10}, {9, 10}, {15, 10}, {9, 17}};
    RibbonStructure r = ribbon_from_points(g, xy);
    return Fixture{"k23-octahedron", std::move(g), std::move(r), Basis{0, 2}};  // arc 2 = p->c
}

// the four semi-balanced K_{3,4} orientations of the running example,
// realized by their layer shapes
inline Fixture k34_orientation(int which) {
    static const std::vector<std::vector<int>> shapes{{2, 3}, {1, 3, 0}, {2, 2, 0}, {1, 2, 1}};
    LayerComplete lc = build_layer_complete(LayerSpec{shapes.at(which)});
    return Fixture{"k34-" + std::to_string(which + 1), lc.graph, lc.ribbon, lc.basis};
}

// --- small shapes ---

inline Fixture cycle4() {
    // a=0 -> b=1 <- c=2 -> d=3 <- a
    return with_canonical("cycle4", make_graph(4, {{0, 1}, {2, 1}, {2, 3}, {0, 3}}));
}

inline Fixture cycle6() {
    return with_canonical("cycle6",
                          make_graph(6, {{0, 1}, {2, 1}, {2, 3}, {4, 3}, {4, 5}, {0, 5}}));
}

inline Fixture path4() {
    return with_canonical("path4", make_graph(4, {{0, 1}, {2, 1}, {2, 3}}));
}

inline Fixture star4() {
    return with_canonical("star4", make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}));
}

// K_3 with every edge subdivided and oriented toward the new points;
// originals 0,1,2; subdividers 3=01, 4=12, 5=20. A 6-cycle, but with the
// standard orientation onto the subdivision class.
inline Fixture subdivided_k3() {
    return with_canonical("subdivided-k3",
                          make_graph(6, {{0, 3}, {1, 3}, {1, 4}, {2, 4}, {2, 5}, {0, 5}}));
}

// --- figures with prescribed embeddings ---

// the tour example: un-semibalanced 4-vertex graph
// v1=0 (8,0), v2=1 (4,1.5), v3=2 (0,0), v4=3 (4,-1.5); plane ribbon.
// arcs: e1=v1v2, e2=v2v3, e3=v3v4, e4=v4v1, e5=v2v4
inline Fixture tour_example() {
    DirectedGraph g = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 3}});
    std::vector<std::pair<long long, long long>> xy{{16, 0}, {8, 3}, {0, 0}, {8, -3}};
    RibbonStructure r = ribbon_from_points(g, xy);
    return Fixture{"tour-example", std::move(g), std::move(r), Basis{0, 0}};
}

// plane graph whose Jaeger trees map to dual arborescences; basis (b0, b1b0)
// with b0 the head. b1=0 (0,0.8), 1 (3,2.3), b0=2 (-3,2.3), 3 (3,4.7),
// 4 (-3,4.7), 5 (0,6.2), 6 (0,3.6).
inline Fixture duality_example() {
    DirectedGraph g = make_graph(7, {{0, 2}, {1, 0}, {4, 2}, {5, 3}, {6, 2}, {5, 6}, {5, 4},
                                     {1, 3}, {1, 6}});
    std::vector<std::pair<long long, long long>> xy{{0, 8},  {30, 23}, {-30, 23}, {30, 47},
                                                    {-30, 47}, {0, 62}, {0, 36}};
    RibbonStructure r = ribbon_from_points(g, xy);
    return Fixture{"duality-example", std::move(g), std::move(r), Basis{2, 0}};
}

// bipartite graph on 7 vertices, clockwise at vertex 0 and counterclockwise
// elsewhere; with base (5, arc 5-2) its Jaeger dissection is NOT a
// triangulation, with base (5, arc 5-0) it is.
// positions: 0 (-3,2.3), 1 (3,2.3), 2 (0,6.2), 3 (0,0.9), 4 (3,4.7),
// 5 (-3,4.7), 6 (0,3.6)
inline DirectedGraph basis_sensitive_graph() {
    return make_graph(7, {{0, 3}, {0, 5}, {0, 6}, {1, 3}, {1, 4}, {1, 6}, {2, 4}, {2, 5}, {2, 6}});
}

inline RibbonStructure basis_sensitive_ribbon() {
    DirectedGraph g = basis_sensitive_graph();
    std::vector<std::pair<long long, long long>> xy{{-30, 23}, {30, 23}, {0, 62}, {0, 9},
                                                    {30, 47},  {-30, 47}, {0, 36}};
    RibbonStructure r = ribbon_from_points(g, xy);
    std::reverse(r.rotation[0].begin(), r.rotation[0].end());  // clockwise at vertex 0
    return r;
}

inline Fixture basis_sensitive_bad() {
    DirectedGraph g = basis_sensitive_graph();
    return Fixture{"basis-sensitive-bad", g, basis_sensitive_ribbon(), Basis{5, 7}};  // arc 2->5
}

inline Fixture basis_sensitive_good() {
    DirectedGraph g = basis_sensitive_graph();
    return Fixture{"basis-sensitive-good", g, basis_sensitive_ribbon(), Basis{5, 1}};  // arc 0->5
}

// graph embedded in the torus with exactly four Jaeger trees; rotations are
// listed explicitly (only vertex 2 has degree > 2).
// arcs: 0: 1->0 (beta), 1: 1->2 (zeta), 2: 3->2 (gamma), 3: 4->2 (alpha),
//       4: 5->2, 5: 5->6 (delta), 6: 3->0 (epsilon, wraps), 7: 4->6 (wraps)
inline Fixture torus_example() {
    DirectedGraph g = make_graph(7, {{1, 0}, {1, 2}, {3, 2}, {4, 2}, {5, 2}, {5, 6}, {3, 0},
                                     {4, 6}});
    RibbonStructure r;
    r.rotation = {{0, 6}, {0, 1}, {2, 4, 1, 3}, {2, 6}, {3, 7}, {4, 5}, {5, 7}};
    return Fixture{"torus-example", std::move(g), std::move(r), Basis{6, 7}};
}

// standard-orientation cube graph Q_3 (plane, 3-connected); classes by
// parity of coordinate sum. Vertices: 0=000, 1=001, 2=010, 3=011, 4=100,
// 5=101, 6=110, 7=111; arcs from even-weight to odd-weight vertices.
inline Fixture cube_standard() {
    DirectedGraph g = make_graph(8, {{0, 1}, {0, 2}, {0, 4}, {3, 1}, {3, 2}, {3, 7}, {5, 1},
                                     {5, 4}, {5, 7}, {6, 2}, {6, 4}, {6, 7}});
    // planar drawing: outer square 000,001,011,010; inner square 100,101,111,110
    std::vector<std::pair<long long, long long>> xy{{-40, -40}, {40, -40}, {-40, 40}, {40, 40},
                                                    {-15, -15}, {15, -15}, {-15, 15}, {15, 15}};
    RibbonStructure r = ribbon_from_points(g, xy);
    return Fixture{"cube-standard", std::move(g), std::move(r), Basis{0, 0}};
}

/// Connected semi-balanced corpus used by the invariance/identity sweeps.
inline std::vector<Fixture> semi_balanced_corpus() {
    std::vector<Fixture> out;
    out.push_back(k23_standard());
    out.push_back(k23_middle());
    out.push_back(k23_octahedron());
    for (int i = 0; i < 4; ++i) out.push_back(k34_orientation(i));
    out.push_back(cycle4());
    out.push_back(cycle6());
    out.push_back(path4());
    out.push_back(star4());
    out.push_back(subdivided_k3());
    out.push_back(duality_example());
    out.push_back(basis_sensitive_good());
    out.push_back(torus_example());
    out.push_back(cube_standard());
    return out;
}

/// Small members (|V| <= 6) for the box-scan cross-checks.
inline std::vector<Fixture> small_corpus() {
    std::vector<Fixture> out;
    out.push_back(k23_standard());
    out.push_back(k23_middle());
    out.push_back(k23_octahedron());
    out.push_back(cycle4());
    out.push_back(cycle6());
    out.push_back(path4());
    out.push_back(star4());
    out.push_back(subdivided_k3());
    return out;
}

}  // namespace fixtures
