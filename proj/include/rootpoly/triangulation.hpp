#pragma once

#include <optional>
#include <vector>

#include "rootpoly/digraph.hpp"
#include "rootpoly/ribbon.hpp"

namespace rootpoly {

/// A cycle whose two orientation classes are split between two trees; the
/// obstruction to their simplices meeting in a common face.
struct IncompatibilityWitness {
    SpanningTree tree1;
    SpanningTree tree2;
    CycleWithSides cycle;  // plus within tree1, minus within tree2
};

struct CommonFaceResult {
    bool common_face;
    std::vector<int> shared_arcs;  // t1 n t2 when common_face
    std::optional<IncompatibilityWitness> witness;
};

/// Decides whether Q_t1 and Q_t2 meet in a common face: overlay t1 with the
/// reversal of t2, contract the 2-cycles coming from shared arcs, and look
/// for a directed cycle; any such cycle decodes to a witness.
CommonFaceResult common_face_test(const DirectedGraph& g, const SpanningTree& t1,
                                  const SpanningTree& t2);

struct TriangulationReport {
    bool triangulation;
    int jaeger_tree_count;
    std::optional<IncompatibilityWitness> witness;  // first in tree order
};

/// Pairwise common-face check over all Jaeger trees, early exit on the
/// lexicographically least failing pair.
TriangulationReport is_triangulation(const DirectedGraph& g, const RibbonStructure& r,
                                     const Basis& b);

/// A cycle is separating when no outside path enters it from the right and
/// leaves from the left, the sides being the two rotation intervals at each
/// cycle vertex. Incompatible cycles are never separating.
bool is_separating_cycle(const DirectedGraph& g, const RibbonStructure& r,
                         const CycleWithSides& cycle);

}  // namespace rootpoly
