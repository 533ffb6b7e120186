#include "rootpoly/triangulation.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>

namespace rootpoly {

namespace {

struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

// Unique path between two vertices inside the shared-arc forest.
std::vector<std::pair<int, bool>> shared_path(const DirectedGraph& g,
                                              const std::vector<int>& shared, VertexId from,
                                              VertexId to) {
    if (from == to) return {};
    std::map<VertexId, std::vector<int>> inc;
    for (int aid : shared) {
        inc[g.arc(aid).tail].push_back(aid);
        inc[g.arc(aid).head].push_back(aid);
    }
    std::map<VertexId, std::pair<int, VertexId>> via;  // vertex -> (arc, predecessor)
    std::queue<VertexId> q;
    q.push(from);
    via[from] = {-1, from};
    while (!q.empty()) {
        VertexId v = q.front();
        q.pop();
        if (v == to) break;
        for (int aid : inc[v]) {
            VertexId w = g.other_end(aid, v);
            if (!via.count(w)) {
                via[w] = {aid, v};
                q.push(w);
            }
        }
    }
    if (!via.count(to)) throw internal_error("contracted class is not shared-connected");
    std::vector<std::pair<int, bool>> rev;
    for (VertexId v = to; v != from;) {
        auto [aid, prev] = via[v];
        rev.push_back({aid, g.arc(aid).head == v});  // forward if entered at head
        v = prev;
    }
    std::reverse(rev.begin(), rev.end());
    return rev;
}

}  // namespace

CommonFaceResult common_face_test(const DirectedGraph& g, const SpanningTree& t1,
                                  const SpanningTree& t2) {
    std::vector<int> shared;
    std::set_intersection(t1.arcs.begin(), t1.arcs.end(), t2.arcs.begin(), t2.arcs.end(),
                          std::back_inserter(shared));
    Dsu dsu(g.vertex_count());
    for (int aid : shared) dsu.unite(g.arc(aid).tail, g.arc(aid).head);

    // Contracted overlay: t1-only arcs forward, t2-only arcs reversed.
    struct CArc {
        int id;
        int from, to;
        bool from_t1;
    };
    std::vector<CArc> carcs;
    for (int aid : t1.arcs)
        if (!std::binary_search(shared.begin(), shared.end(), aid))
            carcs.push_back({aid, dsu.find(g.arc(aid).tail), dsu.find(g.arc(aid).head), true});
    for (int aid : t2.arcs)
        if (!std::binary_search(shared.begin(), shared.end(), aid))
            carcs.push_back({aid, dsu.find(g.arc(aid).head), dsu.find(g.arc(aid).tail), false});

    // Directed cycle search, deterministic DFS order.
    std::map<int, std::vector<int>> out;  // class -> carc indices
    for (size_t i = 0; i < carcs.size(); ++i) out[carcs[i].from].push_back(static_cast<int>(i));
    std::map<int, int> color;  // 0/absent = white, 1 = on stack, 2 = done
    std::vector<int> stack_arcs;
    std::vector<int> cycle_arcs;  // indices into carcs
    std::function<bool(int)> dfs = [&](int v) -> bool {
        color[v] = 1;
        for (int ci : out[v]) {
            int w = carcs[ci].to;
            if (color[w] == 1) {
                // unwind the stack back to w
                cycle_arcs.push_back(ci);
                for (auto it = stack_arcs.rbegin(); it != stack_arcs.rend(); ++it) {
                    if (carcs[cycle_arcs.back()].from == w) break;
                    cycle_arcs.push_back(*it);
                }
                std::reverse(cycle_arcs.begin(), cycle_arcs.end());
                return true;
            }
            if (color[w] == 0) {
                stack_arcs.push_back(ci);
                if (dfs(w)) return true;
                stack_arcs.pop_back();
            }
        }
        color[v] = 2;
        return false;
    };
    bool found = false;
    for (const CArc& a : carcs) {
        if (color[a.from] == 0 && dfs(a.from)) {
            found = true;
            break;
        }
    }
    if (!found) return CommonFaceResult{true, shared, std::nullopt};

    // Decode: expand contracted classes through shared-arc paths.
    std::vector<std::pair<int, bool>> walk;  // (arc, forward along traversal)
    const int r = static_cast<int>(cycle_arcs.size());
    for (int i = 0; i < r; ++i) {
        const CArc& cur = carcs[cycle_arcs[i]];
        const CArc& nxt = carcs[cycle_arcs[(i + 1) % r]];
        walk.push_back({cur.id, cur.from_t1});
        const Arc& a = g.arc(cur.id);
        VertexId entry = cur.from_t1 ? a.head : a.tail;  // original vertex entered
        const Arc& b = g.arc(nxt.id);
        VertexId exit = nxt.from_t1 ? b.tail : b.head;  // original vertex left from
        for (auto step : shared_path(g, shared, entry, exit)) walk.push_back(step);
    }
    CycleWithSides cyc;
    cyc.reference = -1;
    for (auto [aid, fwd] : walk)
        if (fwd && cyc.reference == -1) cyc.reference = aid;  // a tree-1 arc
    for (auto [aid, fwd] : walk) {
        const Arc& a = g.arc(aid);
        cyc.arcs.push_back(aid);
        cyc.vertices.push_back(fwd ? a.tail : a.head);
        if (fwd)
            cyc.plus.push_back(aid);
        else
            cyc.minus.push_back(aid);
    }
    std::sort(cyc.plus.begin(), cyc.plus.end());
    std::sort(cyc.minus.begin(), cyc.minus.end());
    IncompatibilityWitness w{t1, t2, std::move(cyc)};
    return CommonFaceResult{false, shared, std::move(w)};
}

TriangulationReport is_triangulation(const DirectedGraph& g, const RibbonStructure& r,
                                     const Basis& b) {
    if (!g.weakly_connected() || !is_semi_balanced(g))
        throw domain_error("triangulation analysis needs a connected semi-balanced graph");
    std::vector<SpanningTree> trees = enumerate_jaeger_trees(g, r, b);
    for (size_t i = 0; i < trees.size(); ++i)
        for (size_t j = i + 1; j < trees.size(); ++j) {
            CommonFaceResult res = common_face_test(g, trees[i], trees[j]);
            if (!res.common_face)
                return TriangulationReport{false, static_cast<int>(trees.size()),
                                           std::move(res.witness)};
        }
    return TriangulationReport{true, static_cast<int>(trees.size()), std::nullopt};
}

bool is_separating_cycle(const DirectedGraph& g, const RibbonStructure& r,
                         const CycleWithSides& cycle) {
    validate_ribbon(g, r);
    const int n = g.vertex_count();
    const int len = static_cast<int>(cycle.arcs.size());
    std::vector<char> on_cycle_arc(g.arc_count(), 0);
    std::vector<int> cycle_pos(n, -1);
    for (int i = 0; i < len; ++i) {
        on_cycle_arc[cycle.arcs[i]] = 1;
        cycle_pos[cycle.vertices[i]] = i;
    }
    // Side of each non-cycle incidence at a cycle vertex: scan the rotation
    // from the previous cycle arc (exclusive) to the next one (inclusive).
    // right = inside that interval.
    std::vector<std::map<int, bool>> right_of(n);
    for (int i = 0; i < len; ++i) {
        VertexId v = cycle.vertices[i];
        int prev_arc = cycle.arcs[(i + len - 1) % len];
        int next_arc = cycle.arcs[i];
        const auto& rot = r.rotation[v];
        size_t start = 0;
        while (rot[start] != prev_arc) ++start;
        bool inside = true;
        for (size_t step = 1; step < rot.size(); ++step) {
            int aid = rot[(start + step) % rot.size()];
            if (aid == next_arc) {
                inside = false;
                continue;
            }
            right_of[v][aid] = inside;
        }
    }
    // Auxiliary connectivity: terminals (cycle vertex, side), junctions =
    // off-cycle vertices. Non-separating iff a right terminal reaches a left
    // terminal.
    // Node ids: off-cycle vertex v -> v; (cycle v, right) -> n + 2*pos;
    // (cycle v, left) -> n + 2*pos + 1.
    Dsu dsu(n + 2 * len);
    auto endpoint_node = [&](int aid, VertexId v) {
        if (cycle_pos[v] < 0) return static_cast<int>(v);
        return n + 2 * cycle_pos[v] + (right_of[v].at(aid) ? 0 : 1);
    };
    for (const Arc& a : g.arcs()) {
        if (on_cycle_arc[a.id]) continue;
        dsu.unite(endpoint_node(a.id, a.tail), endpoint_node(a.id, a.head));
    }
    for (int i = 0; i < len; ++i)
        for (int j = 0; j < len; ++j)
            if (dsu.find(n + 2 * i) == dsu.find(n + 2 * j + 1)) return false;
    return true;
}

}  // namespace rootpoly
