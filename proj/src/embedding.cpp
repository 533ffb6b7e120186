#include "rootpoly/embedding.hpp"

#include <algorithm>
#include <queue>

namespace rootpoly {

bool EmbeddedDigraph::weakly_connected() const {
    if (n == 0) return true;
    std::vector<std::vector<int>> adj(n);
    for (const Arc& a : arcs) {
        adj[a.tail].push_back(a.head);
        adj[a.head].push_back(a.tail);
    }
    std::vector<char> vis(n, 0);
    std::queue<int> q;
    q.push(0);
    vis[0] = 1;
    int cnt = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : adj[v])
            if (!vis[w]) {
                vis[w] = 1;
                ++cnt;
                q.push(w);
            }
    }
    return cnt == n;
}

std::optional<Layering> EmbeddedDigraph::layering() const {
    std::vector<int> pot(n, 0);
    std::vector<char> done(n, 0);
    std::vector<std::vector<int>> inc(n);
    for (const Arc& a : arcs) {
        inc[a.tail].push_back(a.id);
        inc[a.head].push_back(a.id);
    }
    for (int s = 0; s < n; ++s) {
        if (done[s]) continue;
        done[s] = 1;
        std::queue<int> q;
        q.push(s);
        std::vector<int> comp{s};
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int aid : inc[v]) {
                const Arc& a = arcs[aid];
                int w = (a.tail == v) ? a.head : a.tail;
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

EmbeddedDigraph as_embedded(const DirectedGraph& g, const RibbonStructure& r) {
    validate_ribbon(g, r);
    return EmbeddedDigraph{g.vertex_count(), g.arcs(), r.rotation};
}

FaceStructure trace_faces(const EmbeddedDigraph& g) {
    if (!g.weakly_connected()) throw domain_error("face tracing requires a connected graph");
    const int m = static_cast<int>(g.arcs.size());
    // Position of every arc in every rotation, for O(1) predecessor lookup.
    std::vector<std::vector<int>> pos_at(g.n);
    for (int v = 0; v < g.n; ++v) pos_at[v].assign(m, -1);
    for (int v = 0; v < g.n; ++v)
        for (size_t i = 0; i < g.rotation[v].size(); ++i) pos_at[v][g.rotation[v][i]] = i;

    FaceStructure fs;
    fs.left_face.assign(m, -1);
    fs.right_face.assign(m, -1);
    auto face_slot = [&](int arc, bool forward) -> int& {
        return forward ? fs.left_face[arc] : fs.right_face[arc];
    };
    for (int a0 = 0; a0 < m; ++a0) {
        for (bool fwd0 : {true, false}) {
            if (face_slot(a0, fwd0) != -1) continue;
            int f = fs.face_count++;
            std::vector<FaceSide> cycle;
            int a = a0;
            bool fwd = fwd0;
            do {
                face_slot(a, fwd) = f;
                cycle.push_back(FaceSide{a, fwd});
                // Arrive at the far endpoint; the face boundary continues
                // along the rotation predecessor there (face on the left).
                int w = fwd ? g.arc(a).head : g.arc(a).tail;
                int p = pos_at[w][a];
                const auto& rot = g.rotation[w];
                int next = rot[(p + rot.size() - 1) % rot.size()];
                a = next;
                fwd = (g.arc(next).tail == w);
            } while (!(a == a0 && fwd == fwd0));
            fs.faces.push_back(std::move(cycle));
        }
    }
    int euler = g.n - m + fs.face_count;
    if ((2 - euler) % 2 != 0) throw internal_error("odd Euler defect");
    fs.genus = (2 - euler) / 2;
    return fs;
}

PlaneEmbedding plane_embedding(EmbeddedDigraph g) {
    FaceStructure fs = trace_faces(g);
    if (fs.genus != 0)
        throw domain_error("ribbon structure has genus " + std::to_string(fs.genus) +
                           ", not a plane embedding");
    return PlaneEmbedding{std::move(g), std::move(fs)};
}

PlaneEmbedding plane_embedding(const DirectedGraph& g, const RibbonStructure& r) {
    return plane_embedding(as_embedded(g, r));
}

}  // namespace rootpoly
