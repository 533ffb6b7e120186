#pragma once

#include <optional>
#include <vector>

#include "rootpoly/errors.hpp"

namespace rootpoly {

using VertexId = int;

/// Directed edge; `id` is dense in 0..|E|-1 and is the identity of the arc
/// everywhere (trees, cuts and cycles are sets of arc ids).
struct Arc {
    int id;
    VertexId tail;
    VertexId head;
    bool operator==(const Arc& o) const { return id == o.id && tail == o.tail && head == o.head; }
};

/// Loop-free simple directed graph with dense vertex and arc ids.
/// Weak connectivity is not required; operations that need it check it.
class DirectedGraph {
  public:
    DirectedGraph(int vertex_count, std::vector<Arc> arcs);

    int vertex_count() const { return n_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    const Arc& arc(int id) const { return arcs_.at(id); }
    const std::vector<Arc>& arcs() const { return arcs_; }
    /// Incident arc ids at v, ascending.
    const std::vector<int>& incident(VertexId v) const { return inc_.at(v); }
    VertexId other_end(int arc_id, VertexId v) const;

    bool weakly_connected() const;
    int component_count() const;
    /// Vertex -> component index (components numbered by smallest vertex).
    std::vector<int> components() const;

    bool operator==(const DirectedGraph& o) const { return n_ == o.n_ && arcs_ == o.arcs_; }

  private:
    int n_;
    std::vector<Arc> arcs_;
    std::vector<std::vector<int>> inc_;
};

/// Same vertices and arc ids, every arc's tail and head swapped.
DirectedGraph reverse(const DirectedGraph& g);

/// Graph with an arc subset deleted (vertices kept, arc ids re-densified).
/// `old_ids` receives the original id of each surviving arc when non-null.
DirectedGraph delete_arcs(const DirectedGraph& g, const std::vector<int>& doomed,
                          std::vector<int>* old_ids = nullptr);

/// Vertex potential rising by exactly 1 along every arc.
struct Layering {
    std::vector<int> potential;
};

/// Potential certificate of semi-balancedness, normalized so every connected
/// component has minimum potential 0; nullopt when some cycle is unbalanced.
std::optional<Layering> semi_balanced_layering(const DirectedGraph& g);
bool is_semi_balanced(const DirectedGraph& g);

/// Spanning tree in the undirected sense; arc ids sorted ascending.
struct SpanningTree {
    std::vector<int> arcs;
    bool contains(int arc_id) const;
    bool operator==(const SpanningTree& o) const { return arcs == o.arcs; }
    bool operator<(const SpanningTree& o) const { return arcs < o.arcs; }
};

/// Validates that `arcs` forms a spanning tree of g.
SpanningTree make_spanning_tree(const DirectedGraph& g, std::vector<int> arcs);

/// All spanning trees, lexicographically by sorted arc-id list. Test oracle
/// and brute-force workhorse; not meant for large graphs.
std::vector<SpanningTree> enumerate_spanning_trees(const DirectedGraph& g);

/// Fundamental cut C*(T, pivot): all arcs between the two components of
/// T - pivot. The base component is the one containing `root`.
struct FundamentalCut {
    int pivot;
    std::vector<int> arcs;               // sorted; contains pivot
    std::vector<char> vertex_in_base;    // per vertex
    bool tail_in_base(const DirectedGraph& g, int arc_id) const;
};

FundamentalCut fundamental_cut(const DirectedGraph& g, const SpanningTree& t, int pivot,
                               VertexId root);

/// Cycle as a closed walk with a reference arc; `plus` holds the arcs
/// traversed in the reference direction, `minus` the rest.
/// vertices[i] is where the walk stands before traversing arcs[i].
struct CycleWithSides {
    std::vector<int> arcs;
    std::vector<VertexId> vertices;
    std::vector<int> plus;   // sorted
    std::vector<int> minus;  // sorted
    int reference;

    bool is_balanced() const { return plus.size() == minus.size(); }
};

/// The unique cycle of T + pivot (pivot not in T); reference arc = pivot.
CycleWithSides fundamental_cycle(const DirectedGraph& g, const SpanningTree& t, int pivot);

/// Orders an unordered arc set into a cycle; reference = smallest arc id.
CycleWithSides cycle_from_arcs(const DirectedGraph& g, const std::vector<int>& arc_ids);

/// All simple cycles, each once, deterministic order.
std::vector<CycleWithSides> enumerate_cycles(const DirectedGraph& g);

namespace detail {
/// Weak connectivity of the subgraph on all n vertices spanned by the arcs
/// with alive[a] true.
bool connected_with_alive(const DirectedGraph& g, const std::vector<char>& alive);
}  // namespace detail

}  // namespace rootpoly
