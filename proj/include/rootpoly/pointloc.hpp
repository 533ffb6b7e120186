#pragma once

#include <vector>

#include "rootpoly/digraph.hpp"
#include "rootpoly/geometry.hpp"
#include "rootpoly/ribbon.hpp"

namespace rootpoly {

/// Color classes of a standard-orientation bipartite graph: U = all tails,
/// W = all heads. Errors when some vertex is both.
struct Bipartition {
    std::vector<char> in_u;
    int u_size = 0;
    int w_size = 0;
};

Bipartition standard_bipartition(const DirectedGraph& g);

enum class Side { U, W };

/// Degree-minus-one vector on one color class, realizable by a spanning tree.
struct Hypertree {
    Side side;
    std::vector<long long> values;  // per vertex; zero off the chosen class
    bool operator==(const Hypertree& o) const { return side == o.side && values == o.values; }
    bool operator<(const Hypertree& o) const {
        return std::tie(side, values) < std::tie(o.side, o.values);
    }
};

Hypertree hypertree_of_tree(const DirectedGraph& g, const SpanningTree& t, Side side);

/// The rational point that lies in Q_T exactly for the trees T realizing the
/// hypertree, and then in the interior.
RationalVector marker(const DirectedGraph& g, const Hypertree& h);

/// Realizability, decided through the marker and exact membership.
bool is_hypertree(const DirectedGraph& g, const Hypertree& h);

/// All hypertrees on the chosen side (via spanning-tree degrees; test-scale).
std::vector<Hypertree> enumerate_hypertrees(const DirectedGraph& g, Side side);

/// Greedy point location: walks the graph from the basis, deleting a
/// tail-current arc whenever the rest stays connected and still contains p.
/// Returns the tree-order minimum among all spanning trees whose simplex
/// contains p; that minimum is a Jaeger tree.
SpanningTree jaeger_tree_for_point(const DirectedGraph& g, const RibbonStructure& r,
                                   const Basis& b, const RationalVector& p);

/// The Bernardi process for hypertrees (cut:U variants). Returns the unique
/// Jaeger tree realizing h; coincides with locating the marker of h.
SpanningTree bernardi(const DirectedGraph& g, const RibbonStructure& r, const Basis& b,
                      const Hypertree& h);

}  // namespace rootpoly
