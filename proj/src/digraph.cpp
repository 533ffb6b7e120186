#include "rootpoly/digraph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace rootpoly {

DirectedGraph::DirectedGraph(int vertex_count, std::vector<Arc> arcs)
    : n_(vertex_count), arcs_(std::move(arcs)) {
    if (n_ < 0) throw domain_error("negative vertex count");
    std::set<std::pair<int, int>> seen_pairs;
    for (int i = 0; i < static_cast<int>(arcs_.size()); ++i) {
        const Arc& a = arcs_[i];
        if (a.id != i) throw domain_error("arc ids must be dense 0..|E|-1 in order");
        if (a.tail < 0 || a.tail >= n_ || a.head < 0 || a.head >= n_)
            throw domain_error("arc endpoint out of range");
        if (a.tail == a.head) throw domain_error("loops are not allowed");
        auto key = std::minmax(a.tail, a.head);
        if (!seen_pairs.insert({key.first, key.second}).second)
            throw domain_error("multiple edges between the same vertex pair are not allowed");
    }
    inc_.assign(n_, {});
    for (const Arc& a : arcs_) {
        inc_[a.tail].push_back(a.id);
        inc_[a.head].push_back(a.id);
    }
}

VertexId DirectedGraph::other_end(int arc_id, VertexId v) const {
    const Arc& a = arc(arc_id);
    if (a.tail == v) return a.head;
    if (a.head == v) return a.tail;
    throw domain_error("vertex not incident to arc");
}

std::vector<int> DirectedGraph::components() const {
    std::vector<int> comp(n_, -1);
    int next = 0;
    for (int s = 0; s < n_; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = next;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int a : inc_[v]) {
                int w = other_end(a, v);
                if (comp[w] == -1) {
                    comp[w] = next;
                    q.push(w);
                }
            }
        }
        ++next;
    }
    return comp;
}

int DirectedGraph::component_count() const {
    auto comp = components();
    return comp.empty() ? 0 : 1 + *std::max_element(comp.begin(), comp.end());
}

bool DirectedGraph::weakly_connected() const { return component_count() <= 1; }

DirectedGraph reverse(const DirectedGraph& g) {
    std::vector<Arc> arcs = g.arcs();
    for (Arc& a : arcs) std::swap(a.tail, a.head);
    return DirectedGraph(g.vertex_count(), std::move(arcs));
}

DirectedGraph delete_arcs(const DirectedGraph& g, const std::vector<int>& doomed,
                          std::vector<int>* old_ids) {
    std::vector<char> drop(g.arc_count(), 0);
    for (int a : doomed) drop.at(a) = 1;
    std::vector<Arc> arcs;
    if (old_ids) old_ids->clear();
    for (const Arc& a : g.arcs()) {
        if (drop[a.id]) continue;
        arcs.push_back({static_cast<int>(arcs.size()), a.tail, a.head});
        if (old_ids) old_ids->push_back(a.id);
    }
    return DirectedGraph(g.vertex_count(), std::move(arcs));
}

std::optional<Layering> semi_balanced_layering(const DirectedGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> pot(n, 0);
    std::vector<char> done(n, 0);
    for (int s = 0; s < n; ++s) {
        if (done[s]) continue;
        // BFS assigning potentials; any inconsistency is an unbalanced cycle.
        pot[s] = 0;
        done[s] = 1;
        std::queue<int> q;
        q.push(s);
        std::vector<int> comp{s};
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int aid : g.incident(v)) {
                const Arc& a = g.arc(aid);
                int w = g.other_end(aid, v);
                int expect = pot[v] + (a.tail == v ? 1 : -1);
                if (!done[w]) {
                    pot[w] = expect;
                    done[w] = 1;
                    comp.push_back(w);
                    q.push(w);
                } else if (pot[w] != expect) {
                    return std::nullopt;
                }
            }
        }
        int lo = pot[comp[0]];
        for (int v : comp) lo = std::min(lo, pot[v]);
        for (int v : comp) pot[v] -= lo;
    }
    return Layering{std::move(pot)};
}

bool is_semi_balanced(const DirectedGraph& g) { return semi_balanced_layering(g).has_value(); }

bool SpanningTree::contains(int arc_id) const {
    return std::binary_search(arcs.begin(), arcs.end(), arc_id);
}

namespace {

// Acyclic + spans every vertex of its component set.
bool arcs_form_spanning_tree(const DirectedGraph& g, const std::vector<int>& arcs) {
    if (static_cast<int>(arcs.size()) != g.vertex_count() - 1) return false;
    std::vector<int> parent(g.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int aid : arcs) {
        const Arc& a = g.arc(aid);
        int ra = find(a.tail), rb = find(a.head);
        if (ra == rb) return false;
        parent[ra] = rb;
    }
    return true;
}

}  // namespace

SpanningTree make_spanning_tree(const DirectedGraph& g, std::vector<int> arcs) {
    std::sort(arcs.begin(), arcs.end());
    if (!arcs_form_spanning_tree(g, arcs))
        throw domain_error("arc set is not a spanning tree");
    return SpanningTree{std::move(arcs)};
}

std::vector<SpanningTree> enumerate_spanning_trees(const DirectedGraph& g) {
    if (!g.weakly_connected())
        throw domain_error("spanning tree enumeration requires a connected graph");
    const int n = g.vertex_count();
    const int m = g.arc_count();
    std::vector<SpanningTree> out;
    if (n <= 1) {
        out.push_back(SpanningTree{{}});
        return out;
    }
    std::vector<int> pick;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(pick.size()) == n - 1) {
            if (arcs_form_spanning_tree(g, pick)) out.push_back(SpanningTree{pick});
            return;
        }
        int need = n - 1 - static_cast<int>(pick.size());
        for (int a = start; a + need <= m; ++a) {
            pick.push_back(a);
            rec(a + 1);
            pick.pop_back();
        }
    };
    rec(0);
    return out;
}

FundamentalCut fundamental_cut(const DirectedGraph& g, const SpanningTree& t, int pivot,
                               VertexId root) {
    if (!t.contains(pivot)) throw domain_error("fundamental cut pivot must be a tree arc");
    std::vector<char> in_base(g.vertex_count(), 0);
    in_base.at(root) = 1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int aid : g.incident(v)) {
            if (aid == pivot || !t.contains(aid)) continue;
            int w = g.other_end(aid, v);
            if (!in_base[w]) {
                in_base[w] = 1;
                q.push(w);
            }
        }
    }
    FundamentalCut cut;
    cut.pivot = pivot;
    cut.vertex_in_base = in_base;
    for (const Arc& a : g.arcs())
        if (in_base[a.tail] != in_base[a.head]) cut.arcs.push_back(a.id);
    return cut;
}

bool FundamentalCut::tail_in_base(const DirectedGraph& g, int arc_id) const {
    return vertex_in_base.at(g.arc(arc_id).tail) != 0;
}

namespace {

CycleWithSides cycle_from_walk(const DirectedGraph& g, const std::vector<VertexId>& verts,
                               const std::vector<int>& arcs, int reference) {
    CycleWithSides c;
    c.vertices = verts;
    c.arcs = arcs;
    c.reference = reference;
    // Forwardness of the reference arc decides the walk's "+" direction.
    bool ref_forward = false;
    for (size_t i = 0; i < arcs.size(); ++i)
        if (arcs[i] == reference) ref_forward = (g.arc(reference).tail == verts[i]);
    for (size_t i = 0; i < arcs.size(); ++i) {
        bool fwd = (g.arc(arcs[i]).tail == verts[i]);
        if (fwd == ref_forward)
            c.plus.push_back(arcs[i]);
        else
            c.minus.push_back(arcs[i]);
    }
    std::sort(c.plus.begin(), c.plus.end());
    std::sort(c.minus.begin(), c.minus.end());
    return c;
}

}  // namespace

CycleWithSides fundamental_cycle(const DirectedGraph& g, const SpanningTree& t, int pivot) {
    if (t.contains(pivot)) throw domain_error("fundamental cycle pivot must be a non-tree arc");
    const Arc& p = g.arc(pivot);
    // Unique tree path from head back to tail, preceded by the pivot itself.
    std::vector<int> via_arc(g.vertex_count(), -1);
    std::vector<int> via_from(g.vertex_count(), -1);
    std::queue<int> q;
    q.push(p.head);
    via_from[p.head] = p.head;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        if (v == p.tail) break;
        for (int aid : g.incident(v)) {
            if (!t.contains(aid)) continue;
            int w = g.other_end(aid, v);
            if (via_from[w] == -1) {
                via_from[w] = v;
                via_arc[w] = aid;
                q.push(w);
            }
        }
    }
    if (via_from[p.tail] == -1) throw internal_error("tree does not connect pivot endpoints");
    std::vector<VertexId> verts{p.tail};
    std::vector<int> arcs{pivot};
    std::vector<VertexId> path;  // head .. tail reversed
    for (int v = p.tail; v != p.head; v = via_from[v]) path.push_back(v);
    path.push_back(p.head);
    // walk: tail -(pivot)-> head -(tree path)-> tail
    for (int i = static_cast<int>(path.size()) - 1; i > 0; --i) {
        verts.push_back(path[i]);
        arcs.push_back(via_arc[path[i - 1]]);
    }
    return cycle_from_walk(g, verts, arcs, pivot);
}

CycleWithSides cycle_from_arcs(const DirectedGraph& g, const std::vector<int>& arc_ids) {
    if (arc_ids.size() < 2) throw domain_error("cycle needs at least 2 arcs");
    std::map<VertexId, std::vector<int>> at;
    for (int aid : arc_ids) {
        const Arc& a = g.arc(aid);
        at[a.tail].push_back(aid);
        at[a.head].push_back(aid);
    }
    for (auto& [v, list] : at)
        if (list.size() != 2) throw domain_error("arc set is not a single cycle");
    const int start_arc = *std::min_element(arc_ids.begin(), arc_ids.end());
    VertexId start = g.arc(start_arc).tail;
    std::vector<VertexId> verts;
    std::vector<int> arcs;
    VertexId v = start;
    int prev = -1;
    do {
        auto& list = at[v];
        int next = (list[0] == prev) ? list[1] : list[0];
        if (next == prev) throw domain_error("arc set is not a single cycle");
        verts.push_back(v);
        arcs.push_back(next);
        v = g.other_end(next, v);
        prev = next;
    } while (v != start);
    if (arcs.size() != arc_ids.size()) throw domain_error("arc set is not a single cycle");
    return cycle_from_walk(g, verts, arcs, start_arc);
}

std::vector<CycleWithSides> enumerate_cycles(const DirectedGraph& g) {
    std::vector<CycleWithSides> out;
    std::set<std::vector<int>> seen;
    const int n = g.vertex_count();
    // Paths from s with all intermediate vertices > s; close back at s.
    std::vector<char> used(n, 0);
    std::vector<int> path_arcs;
    std::function<void(int, int, int)> rec = [&](int s, int v, int prev_arc) {
        for (int aid : g.incident(v)) {
            if (aid == prev_arc) continue;
            int w = g.other_end(aid, v);
            if (w == s) {
                if (path_arcs.size() >= 2) {
                    std::vector<int> key = path_arcs;
                    key.push_back(aid);
                    std::sort(key.begin(), key.end());
                    if (seen.insert(key).second) out.push_back(cycle_from_arcs(g, key));
                }
                continue;
            }
            if (w < s || used[w]) continue;
            used[w] = 1;
            path_arcs.push_back(aid);
            rec(s, w, aid);
            path_arcs.pop_back();
            used[w] = 0;
        }
    };
    for (int s = 0; s < n; ++s) {
        used.assign(n, 0);
        used[s] = 1;
        rec(s, s, -1);
    }
    return out;
}

namespace detail {

bool connected_with_alive(const DirectedGraph& g, const std::vector<char>& alive) {
    const int n = g.vertex_count();
    if (n == 0) return true;
    std::vector<char> vis(n, 0);
    std::queue<int> q;
    q.push(0);
    vis[0] = 1;
    int cnt = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int aid : g.incident(v)) {
            if (!alive[aid]) continue;
            int w = g.other_end(aid, v);
            if (!vis[w]) {
                vis[w] = 1;
                ++cnt;
                q.push(w);
            }
        }
    }
    return cnt == n;
}

}  // namespace detail

}  // namespace rootpoly
