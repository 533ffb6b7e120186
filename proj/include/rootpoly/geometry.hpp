#pragma once

#include <optional>
#include <vector>

#include "rootpoly/digraph.hpp"
#include "rootpoly/lp.hpp"
#include "rootpoly/rational.hpp"

namespace rootpoly {

/// The generator h - t of the root polytope for one arc: +1 at the head,
/// -1 at the tail, 0 elsewhere.
RationalVector vertex_vector(const DirectedGraph& g, int arc_id);

/// Integer form of the same generator, for lattice-point work.
std::vector<int> vertex_vector_int(const DirectedGraph& g, int arc_id);

/// Affine independence of an arc set's generators, decided combinatorially:
/// at most one cycle and no balanced cycle.
bool affine_independent(const DirectedGraph& g, const std::vector<int>& arc_ids);

/// Exact-arithmetic oracle for the combinatorial rule above.
bool affine_independent_by_rank(const DirectedGraph& g, const std::vector<int>& arc_ids);

/// Dimension of the affine hull of the given vectors (-1 for none).
int affine_rank(const std::vector<std::vector<int>>& vectors);

/// dim Q_G; -1 for a graph with no arcs.
int polytope_dimension(const DirectedGraph& g);

/// Convex-combination certificate: coefficients over the listed arcs,
/// all >= 0, summing to 1, reproducing the point.
struct BarycentricCert {
    std::vector<int> arcs;
    std::vector<Rational> coeffs;
};

bool verify_certificate(const DirectedGraph& g, const BarycentricCert& cert,
                        const RationalVector& p);

/// Unique affine coordinates of p in the simplex of a spanning tree, solved
/// exactly by peeling leaf arcs. Nullopt when p is outside the closed simplex.
std::optional<BarycentricCert> barycentric_in_tree(const DirectedGraph& g, const SpanningTree& t,
                                                   const RationalVector& p);

/// Exact LP membership in the root polytope of the arc subset.
std::optional<BarycentricCert> contains_point_in_arcs(const DirectedGraph& g,
                                                      const std::vector<int>& arc_ids,
                                                      const RationalVector& p);

/// Exact LP membership in Q_G with certificate.
std::optional<BarycentricCert> contains_point(const DirectedGraph& g, const RationalVector& p);

/// 0/1 vertex weights across the fundamental cut of (t, pivot): 0 on the
/// base-component side, 1 on the rest. Separates the simplices on the two
/// sides of the cut.
struct SeparatingFunctional {
    std::vector<Rational> values;
    Rational eval(const RationalVector& p) const;
    Rational eval_arc(const DirectedGraph& g, int arc_id) const;
};

SeparatingFunctional separating_functional(const DirectedGraph& g, const SpanningTree& t,
                                           int pivot, VertexId root);

}  // namespace rootpoly
