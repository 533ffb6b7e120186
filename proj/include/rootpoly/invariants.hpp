#pragma once

#include <vector>

#include "rootpoly/digraph.hpp"
#include "rootpoly/geometry.hpp"
#include "rootpoly/polynomial.hpp"
#include "rootpoly/ribbon.hpp"

namespace rootpoly {

/// Interior polynomial of a connected semi-balanced graph: the shelling
/// statistic of the Jaeger dissection, I(x) = sum over Jaeger trees of
/// x^(number of internally semi-passive arcs). Intrinsic: independent of the
/// ribbon structure and basis.
Polynomial interior_polynomial(const DirectedGraph& g, const RibbonStructure& r, const Basis& b);

/// Same, with the canonical ribbon and basis.
Polynomial interior_polynomial_auto(const DirectedGraph& g);

/// Interior polynomial of a semi-balanced graph with any number of
/// components: (1-x)^(c-1) times the product over components.
Polynomial interior_disconnected(const DirectedGraph& g);

enum class EhrhartBackend {
    BoxScan,   // bounding-box enumeration with exact LP membership
    Multiset,  // image of degree-k arc multisets; semi-balanced inputs only
};

/// |(k Q_G) n Z^V|, exact.
long long ehrhart_count(const DirectedGraph& g, int k, EhrhartBackend backend, int threads = 1);

struct EhrhartTable {
    std::vector<long long> counts;  // counts[k] for k = 0..kmax
};

EhrhartTable ehrhart_table(const DirectedGraph& g, int kmax, EhrhartBackend backend,
                           int threads = 1);

/// h*-vector of Q_G from lattice-point counts: solves the triangular
/// binomial system in exact integers and cross-checks one extra dilation.
/// Fails loudly on a non-integral solution.
Polynomial h_star_from_ehrhart(const DirectedGraph& g, EhrhartBackend backend, int threads = 1);

/// h* of the polytope spanned by arbitrary integer generators (multiset
/// backend); used for duals that carry parallel arcs.
Polynomial h_star_of_generators(const std::vector<std::vector<int>>& generators);

struct IdentityReport {
    bool holds;
    Polynomial lhs;
    Polynomial rhs;
};

/// Fuses g1 and g2 along one arc each (tail to tail, head to head) and
/// checks I(fused) = I(g1) * I(g2).
IdentityReport verify_product_edge(const DirectedGraph& g1, int arc1, const DirectedGraph& g2,
                                   int arc2);

/// Fuses at a single vertex and checks the same product formula.
IdentityReport verify_product_vertex(const DirectedGraph& g1, VertexId v1,
                                     const DirectedGraph& g2, VertexId v2);

/// I(G - bridge) = (1-x) I(G), component-aware on the left.
IdentityReport verify_bridge(const DirectedGraph& g, int bridge_arc);

/// Disjoint union: I(G1 u G2) = (1-x) I(G1) I(G2).
IdentityReport verify_disjoint_union(const DirectedGraph& g1, const DirectedGraph& g2);

/// The deletion recursion: sum over S subset of C+ of (-1)^|S| I(G-S) is the
/// zero polynomial. lhs carries the signed sum.
IdentityReport verify_recursion(const DirectedGraph& g, const CycleWithSides& cycle);

/// The fused graphs themselves, exposed for tests.
DirectedGraph fuse_at_edge(const DirectedGraph& g1, int arc1, const DirectedGraph& g2, int arc2);
DirectedGraph fuse_at_vertex(const DirectedGraph& g1, VertexId v1, const DirectedGraph& g2,
                             VertexId v2);
DirectedGraph disjoint_union(const DirectedGraph& g1, const DirectedGraph& g2);

}  // namespace rootpoly
