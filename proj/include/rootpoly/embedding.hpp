#pragma once

#include <vector>

#include "rootpoly/digraph.hpp"
#include "rootpoly/ribbon.hpp"

namespace rootpoly {

/// Rotation system over a loop-free digraph that may carry parallel arcs;
/// duals of simple graphs live here.
struct EmbeddedDigraph {
    int n = 0;
    std::vector<Arc> arcs;
    std::vector<std::vector<int>> rotation;

    const Arc& arc(int id) const { return arcs.at(id); }
    bool weakly_connected() const;
    std::optional<Layering> layering() const;
    bool is_semi_balanced() const { return layering().has_value(); }
};

EmbeddedDigraph as_embedded(const DirectedGraph& g, const RibbonStructure& r);

/// One directed boundary side of an arc: forward walks tail->head.
struct FaceSide {
    int arc;
    bool forward;
};

/// Orbits of the face-tracing permutation; every face keeps the traversed
/// sides in order and lies to the left of each of them.
struct FaceStructure {
    int face_count = 0;
    std::vector<std::vector<FaceSide>> faces;
    std::vector<int> left_face;   // arc -> face containing its forward side
    std::vector<int> right_face;  // arc -> face containing its backward side
    int genus = 0;
};

/// Requires a weakly connected input.
FaceStructure trace_faces(const EmbeddedDigraph& g);

/// Genus-0 embedding; constructor-checked Euler formula.
struct PlaneEmbedding {
    EmbeddedDigraph graph;
    FaceStructure faces;
};

PlaneEmbedding plane_embedding(const DirectedGraph& g, const RibbonStructure& r);
PlaneEmbedding plane_embedding(EmbeddedDigraph g);

}  // namespace rootpoly
