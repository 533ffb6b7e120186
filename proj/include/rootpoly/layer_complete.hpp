#pragma once

#include <vector>

#include "rootpoly/digraph.hpp"
#include "rootpoly/polynomial.hpp"
#include "rootpoly/ribbon.hpp"

namespace rootpoly {

/// sizes[i] = s_i, so layer i holds s_i + 1 vertices x_{i,0}..x_{i,s_i}.
struct LayerSpec {
    std::vector<int> sizes;
    int layer_count() const { return static_cast<int>(sizes.size()); }  // k + 1 layers
    int vertex_count() const;
};

struct LayerComplete {
    DirectedGraph graph;
    RibbonStructure ribbon;  // from the crossing drawing, positive orientation
    Basis basis;             // (x_{0,0}, x_{0,0} x_{1,s_1})
    std::vector<int> layer_offset;
    VertexId vertex(int layer, int index) const { return layer_offset[layer] + index; }
};

/// Complete bipartite arcs between consecutive layers, all pointing up.
LayerComplete build_layer_complete(const LayerSpec& spec);

/// Non-crossing comb-tree: per-layer partitions D_i/U_i (indices within the
/// layer, 0 excluded; D_0 and U_k are empty) with one non-crossing tooth per
/// level, glued along the leftmost backbone.
struct CombTree {
    SpanningTree tree;
    std::vector<std::vector<int>> down_sets;  // D_i per layer
};

/// All non-crossing comb-trees; as arc sets they are exactly the Jaeger
/// trees of the canonical ribbon and basis.
std::vector<CombTree> enumerate_comb_trees(const LayerSpec& spec);

/// The closed-form interior polynomial (nested binomial sum).
Polynomial layer_complete_formula(const LayerSpec& spec);

}  // namespace rootpoly
