#include "rootpoly/pointloc.hpp"

#include <algorithm>
#include <set>

namespace rootpoly {

Bipartition standard_bipartition(const DirectedGraph& g) {
    Bipartition bp;
    bp.in_u.assign(g.vertex_count(), 0);
    std::vector<char> is_tail(g.vertex_count(), 0), is_head(g.vertex_count(), 0);
    for (const Arc& a : g.arcs()) {
        is_tail[a.tail] = 1;
        is_head[a.head] = 1;
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (is_tail[v] && is_head[v])
            throw domain_error("not a standard orientation: vertex " + std::to_string(v) +
                               " is both a tail and a head");
        if (!is_tail[v] && !is_head[v])
            throw domain_error("isolated vertex has no color class");
        bp.in_u[v] = is_tail[v];
        if (is_tail[v])
            bp.u_size++;
        else
            bp.w_size++;
    }
    return bp;
}

Hypertree hypertree_of_tree(const DirectedGraph& g, const SpanningTree& t, Side side) {
    Bipartition bp = standard_bipartition(g);
    Hypertree h;
    h.side = side;
    h.values.assign(g.vertex_count(), 0);
    std::vector<long long> deg(g.vertex_count(), 0);
    for (int aid : t.arcs) {
        deg[g.arc(aid).tail]++;
        deg[g.arc(aid).head]++;
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        bool on_side = (side == Side::U) ? bp.in_u[v] : !bp.in_u[v];
        if (on_side) h.values[v] = deg[v] - 1;
    }
    return h;
}

RationalVector marker(const DirectedGraph& g, const Hypertree& h) {
    Bipartition bp = standard_bipartition(g);
    const Rational u_size = bp.u_size, w_size = bp.w_size;
    RationalVector p(g.vertex_count(), 0);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (h.side == Side::U) {
            if (bp.in_u[v])
                p[v] = Rational(-h.values[v]) / w_size - Rational(1) / (u_size * w_size);
            else
                p[v] = Rational(1) / w_size;
        } else {
            if (bp.in_u[v])
                p[v] = Rational(-1) / u_size;
            else
                p[v] = Rational(h.values[v]) / u_size + Rational(1) / (u_size * w_size);
        }
    }
    if (vector_sum(p) != 0) throw domain_error("hypertree values have the wrong total");
    return p;
}

bool is_hypertree(const DirectedGraph& g, const Hypertree& h) {
    if (!g.weakly_connected()) return false;
    for (long long x : h.values)
        if (x < 0) return false;
    RationalVector m;
    try {
        m = marker(g, h);
    } catch (const domain_error&) {
        return false;
    }
    return contains_point(g, m).has_value();
}

std::vector<Hypertree> enumerate_hypertrees(const DirectedGraph& g, Side side) {
    std::set<Hypertree> seen;
    for (const SpanningTree& t : enumerate_spanning_trees(g)) seen.insert(hypertree_of_tree(g, t, side));
    return std::vector<Hypertree>(seen.begin(), seen.end());
}

namespace {

// Shared walking machinery of the two greedy algorithms: rotations are taken
// in the current graph, i.e. deleted arcs are invisible.
struct GreedyWalk {
    const DirectedGraph& g;
    const RibbonStructure& r;
    std::vector<char> alive;

    explicit GreedyWalk(const DirectedGraph& graph, const RibbonStructure& ribbon)
        : g(graph), r(ribbon), alive(graph.arc_count(), 1) {}

    int successor_alive(VertexId v, int arc_id) const {
        const auto& rot = r.rotation.at(v);
        size_t i = 0;
        while (i < rot.size() && rot[i] != arc_id) ++i;
        if (i == rot.size()) throw internal_error("arc missing from rotation");
        for (size_t step = 1; step <= rot.size(); ++step) {
            int cand = rot[(i + step) % rot.size()];
            if (alive[cand]) return cand;
        }
        throw internal_error("no alive arc left at vertex");
    }

    bool deletable(int arc_id, const RationalVector& p) {
        alive[arc_id] = 0;
        bool ok = detail::connected_with_alive(g, alive);
        if (ok) {
            std::vector<int> ids;
            for (int a = 0; a < g.arc_count(); ++a)
                if (alive[a]) ids.push_back(a);
            ok = contains_point_in_arcs(g, ids, p).has_value();
        }
        alive[arc_id] = 1;
        return ok;
    }

    SpanningTree result() const {
        std::vector<int> ids;
        for (int a = 0; a < g.arc_count(); ++a)
            if (alive[a]) ids.push_back(a);
        return SpanningTree{std::move(ids)};
    }
};

}  // namespace

SpanningTree jaeger_tree_for_point(const DirectedGraph& g, const RibbonStructure& r,
                                   const Basis& b, const RationalVector& p) {
    validate_ribbon(g, r);
    validate_basis(g, b);
    if (!g.weakly_connected()) throw domain_error("point location requires a connected graph");
    if (!is_semi_balanced(g)) throw domain_error("point location requires a semi-balanced graph");
    if (!contains_point(g, p)) throw domain_error("point lies outside the root polytope");

    GreedyWalk walk(g, r);
    std::vector<int> tail_seen(g.arc_count(), 0);
    VertexId v = b.node;
    int e = b.arc;
    const long limit = 8L * g.arc_count() * (g.arc_count() + 1) + 16;
    long guard = 0;
    while (true) {
        if (++guard > limit) throw internal_error("point location walk diverged");
        const Arc& a = g.arc(e);
        if (a.tail == v) {
            if (++tail_seen[e] == 2) break;
            if (walk.deletable(e, p)) {
                walk.alive[e] = 0;
                e = walk.successor_alive(v, e);
            } else {
                v = a.head;
                e = walk.successor_alive(v, e);
            }
        } else {
            v = a.tail;
            e = walk.successor_alive(v, e);
        }
    }
    SpanningTree t = walk.result();
    return make_spanning_tree(g, t.arcs);
}

SpanningTree bernardi(const DirectedGraph& g, const RibbonStructure& r, const Basis& b,
                      const Hypertree& h) {
    validate_ribbon(g, r);
    validate_basis(g, b);
    Bipartition bp = standard_bipartition(g);
    if (!bp.in_u[b.node])
        throw domain_error("the cut:U Bernardi process needs its base node in U");
    if (!is_hypertree(g, h)) throw domain_error("input vector is not a hypertree");
    RationalVector m = marker(g, h);

    GreedyWalk walk(g, r);
    std::set<std::pair<VertexId, int>> seen;
    VertexId v = b.node;
    int e = b.arc;
    const long limit = 8L * g.arc_count() * (g.arc_count() + 1) + 16;
    long guard = 0;
    while (true) {
        if (++guard > limit) throw internal_error("Bernardi walk diverged");
        if (!seen.insert({v, e}).second) break;  // a pair became current twice
        if (bp.in_u[v]) {
            // Deleting must leave h realizable, i.e. keep the marker inside.
            if (walk.deletable(e, m)) {
                walk.alive[e] = 0;
                e = walk.successor_alive(v, e);
            } else {
                v = g.other_end(e, v);
                e = walk.successor_alive(v, e);
            }
        } else {
            v = g.other_end(e, v);
            e = walk.successor_alive(v, e);
        }
    }
    SpanningTree t = walk.result();
    return make_spanning_tree(g, t.arcs);
}

}  // namespace rootpoly
