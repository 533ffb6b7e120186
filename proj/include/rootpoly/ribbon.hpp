#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "rootpoly/digraph.hpp"

namespace rootpoly {

/// Rotation system: a cyclic order of the incident arcs at every vertex.
struct RibbonStructure {
    std::vector<std::vector<int>> rotation;
    bool operator==(const RibbonStructure& o) const { return rotation == o.rotation; }
};

/// Throws domain_error unless rotation[v] is a permutation of the arcs at v.
void validate_ribbon(const DirectedGraph& g, const RibbonStructure& r);

/// The arc following `arc_id` at v in the cyclic order.
int rotation_successor(const RibbonStructure& r, VertexId v, int arc_id);
int rotation_predecessor(const RibbonStructure& r, VertexId v, int arc_id);

/// Incident arcs in ascending id order at every vertex.
RibbonStructure canonical_ribbon(const DirectedGraph& g);

/// Counterclockwise angular order around each vertex of a straight-line
/// drawing; coordinates are integers and comparisons are exact.
RibbonStructure ribbon_from_points(const DirectedGraph& g,
                                   const std::vector<std::pair<long long, long long>>& xy);

/// Every cyclic order inverted.
RibbonStructure reversed_ribbon(const RibbonStructure& r);

RibbonStructure random_ribbon(const DirectedGraph& g, std::mt19937_64& rng);

/// Distinguished starting incidence of every tour.
struct Basis {
    VertexId node;
    int arc;
    bool operator==(const Basis& o) const { return node == o.node && arc == o.arc; }
};

void validate_basis(const DirectedGraph& g, const Basis& b);

/// All (vertex, incident arc) pairs, deterministic order.
std::vector<Basis> all_bases(const DirectedGraph& g);

struct TourStep {
    VertexId vertex;
    int arc;
    bool traversed;  // false = skipped
    bool operator==(const TourStep& o) const {
        return vertex == o.vertex && arc == o.arc && traversed == o.traversed;
    }
};

/// The Bernardi walk of a spanning tree: starts at the basis, traverses tree
/// arcs, skips the rest, stops right before the basis pair recurs. Every arc
/// becomes current exactly twice, once per endpoint.
struct Tour {
    std::vector<TourStep> steps;
};

Tour tour(const DirectedGraph& g, const RibbonStructure& r, const Basis& b,
          const SpanningTree& t);

/// Total order of the arcs by the step at which each first becomes current
/// together with its tail.
struct TOrder {
    std::vector<int> rank;  // arc id -> rank
    bool less(int a, int b) const { return rank[a] < rank[b]; }
};

TOrder t_order(const DirectedGraph& g, const Tour& walk);

/// A spanning tree whose tour meets every non-tree arc tail first.
bool is_jaeger(const DirectedGraph& g, const RibbonStructure& r, const Basis& b,
               const SpanningTree& t);

/// All Jaeger trees in ascending tree order, found by branching on tour
/// decisions: a tail-first arc may be cut (smaller branch) or kept, a
/// head-first arc must be kept. Never enumerates non-Jaeger trees.
std::vector<SpanningTree> enumerate_jaeger_trees(const DirectedGraph& g,
                                                 const RibbonStructure& r, const Basis& b);

enum class Ordering { Less, Equal, Greater };

/// The tree order: compare by the Jaeger-rule status of the first tour
/// difference.
Ordering compare_prec(const DirectedGraph& g, const RibbonStructure& r, const Basis& b,
                      const SpanningTree& t1, const SpanningTree& t2);

/// Internally semi-passive arcs of a Jaeger tree: tree arcs whose tail lies
/// in the base component of T - arc while some arc of the fundamental cut
/// stands opposite. Precondition: t is a Jaeger tree.
std::vector<int> semi_passive_arcs(const DirectedGraph& g, const RibbonStructure& r,
                                   const Basis& b, const SpanningTree& t);

namespace detail {
/// Same set via the order characterization: the T-order-largest arc of the
/// fundamental cut stands opposite. Exposed so tests can cross the two.
std::vector<int> semi_passive_arcs_by_cut_order(const DirectedGraph& g,
                                                const RibbonStructure& r, const Basis& b,
                                                const SpanningTree& t);
}  // namespace detail

/// For a basis whose node is the head of the base arc, the equivalent basis
/// seen from the tail side; Jaeger trees are unchanged.
Basis jaeger_basis_slide(const DirectedGraph& g, const RibbonStructure& r, const Basis& b);

}  // namespace rootpoly
