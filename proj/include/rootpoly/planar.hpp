#pragma once

#include <vector>

#include "rootpoly/embedding.hpp"
#include "rootpoly/polynomial.hpp"

namespace rootpoly {

/// Directed dual of a plane-embedded digraph. One vertex per face; arc ids
/// match the primal (the arc map is id-preserving); every dual arc is the
/// primal arc turned in the positive direction, i.e. it runs from the face
/// on the right of the primal arc to the face on its left. Parallel dual
/// arcs are legitimate here; converting to a simple DirectedGraph rejects
/// them.
struct DualDigraph {
    EmbeddedDigraph graph;       // the dual itself, embedded via face cycles
    FaceStructure primal_faces;  // faces of the primal = dual vertices
};

/// Requires connected, genus 0, bridgeless input (a bridge would make a dual
/// loop).
DualDigraph dual(const DirectedGraph& g, const RibbonStructure& r);
DualDigraph dual_embedded(const EmbeddedDigraph& g);

/// Simple-graph view of the dual; error when parallel arcs exist.
DirectedGraph dual_as_digraph(const DualDigraph& d);
RibbonStructure dual_ribbon(const DualDigraph& d);

bool is_eulerian(const DirectedGraph& g);
bool is_eulerian(const EmbeddedDigraph& g);

/// Dual spanning tree: the duals of the non-tree arcs.
std::vector<int> tree_dual_arcs(const DirectedGraph& g, const SpanningTree& t);

/// Root of the arborescence correspondence: the endpoint of the dual base
/// arc matching the side of the primal base node (tail for tail, head for
/// head).
VertexId arborescence_root(const DualDigraph& d, const DirectedGraph& g, const Basis& b);

/// All spanning arborescences rooted at `root` (arcs oriented away from the
/// root), ascending arc-id lists. Works with parallel arcs.
std::vector<std::vector<int>> enumerate_arborescences(int n, const std::vector<Arc>& arcs,
                                                      VertexId root);

bool is_spanning_arborescence(int n, const std::vector<Arc>& arcs,
                              const std::vector<int>& tree_arcs, VertexId root);

/// Greedoid polynomial of the branching greedoid of an Eulerian plane
/// digraph, computed two ways and cross-checked: the h-vector of the dual
/// complex by direct face counting, and the interior polynomial of the
/// plane dual via lambda(t) = t^(|E|-|V|+1) I(1/t).
Polynomial greedoid_polynomial(const EmbeddedDigraph& g, VertexId root);
Polynomial greedoid_polynomial(const DirectedGraph& g, const RibbonStructure& r, VertexId root);

}  // namespace rootpoly
