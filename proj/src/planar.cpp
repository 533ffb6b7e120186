#include "rootpoly/planar.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "rootpoly/invariants.hpp"

namespace rootpoly {

DualDigraph dual_embedded(const EmbeddedDigraph& g) {
    PlaneEmbedding emb = plane_embedding(g);
    const FaceStructure& fs = emb.faces;
    DualDigraph d;
    d.primal_faces = fs;
    d.graph.n = fs.face_count;
    for (const Arc& a : g.arcs) {
        int rf = fs.right_face[a.id];
        int lf = fs.left_face[a.id];
        if (rf == lf)
            throw domain_error("bridge arc " + std::to_string(a.id) +
                               " would give a loop in the dual");
        d.graph.arcs.push_back({a.id, rf, lf});
    }
    // Rotation at a dual vertex: the arcs in the order its face cycle
    // crosses them; face cycles run with the face on the left, which is the
    // positive orientation seen from inside the face.
    d.graph.rotation.resize(fs.face_count);
    for (int f = 0; f < fs.face_count; ++f)
        for (const FaceSide& s : fs.faces[f]) d.graph.rotation[f].push_back(s.arc);
    return d;
}

DualDigraph dual(const DirectedGraph& g, const RibbonStructure& r) {
    return dual_embedded(as_embedded(g, r));
}

DirectedGraph dual_as_digraph(const DualDigraph& d) {
    return DirectedGraph(d.graph.n, d.graph.arcs);  // rejects parallel arcs
}

RibbonStructure dual_ribbon(const DualDigraph& d) { return RibbonStructure{d.graph.rotation}; }

bool is_eulerian(const EmbeddedDigraph& g) {
    std::vector<int> balance(g.n, 0);
    for (const Arc& a : g.arcs) {
        balance[a.tail]++;
        balance[a.head]--;
    }
    for (int b : balance)
        if (b != 0) return false;
    return g.weakly_connected();
}

bool is_eulerian(const DirectedGraph& g) {
    return is_eulerian(EmbeddedDigraph{g.vertex_count(), g.arcs(), {}});
}

std::vector<int> tree_dual_arcs(const DirectedGraph& g, const SpanningTree& t) {
    std::vector<int> out;
    for (const Arc& a : g.arcs())
        if (!t.contains(a.id)) out.push_back(a.id);
    return out;
}

VertexId arborescence_root(const DualDigraph& d, const DirectedGraph& g, const Basis& b) {
    const Arc& primal = g.arc(b.arc);
    const Arc& star = d.graph.arc(b.arc);
    return (primal.tail == b.node) ? star.tail : star.head;
}

namespace {

bool arcs_span_tree(int n, const std::vector<Arc>& arcs, const std::vector<int>& pick) {
    if (static_cast<int>(pick.size()) != n - 1) return false;
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int aid : pick) {
        int a = find(arcs[aid].tail), b = find(arcs[aid].head);
        if (a == b) return false;
        parent[a] = b;
    }
    return true;
}

}  // namespace

bool is_spanning_arborescence(int n, const std::vector<Arc>& arcs,
                              const std::vector<int>& tree_arcs, VertexId root) {
    if (!arcs_span_tree(n, arcs, tree_arcs)) return false;
    // each arc must point away from the root along the unique tree paths
    std::vector<std::vector<int>> inc(n);
    for (int aid : tree_arcs) {
        inc[arcs[aid].tail].push_back(aid);
        inc[arcs[aid].head].push_back(aid);
    }
    std::vector<int> depth(n, -1);
    depth[root] = 0;
    std::vector<VertexId> stack{root};
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (int aid : inc[v]) {
            VertexId w = (arcs[aid].tail == v) ? arcs[aid].head : arcs[aid].tail;
            if (depth[w] != -1) continue;
            if (arcs[aid].tail != v) return false;  // enters w against the arc
            depth[w] = depth[v] + 1;
            stack.push_back(w);
        }
    }
    return true;
}

std::vector<std::vector<int>> enumerate_arborescences(int n, const std::vector<Arc>& arcs,
                                                      VertexId root) {
    std::vector<std::vector<int>> out;
    if (n <= 1) {
        out.push_back({});
        return out;
    }
    const int m = static_cast<int>(arcs.size());
    std::vector<int> pick;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(pick.size()) == n - 1) {
            if (is_spanning_arborescence(n, arcs, pick, root)) out.push_back(pick);
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

namespace {

// h-vector of the abstract simplicial complex generated by the given facets
// (all of equal size), straight from the face numbers.
std::vector<long long> h_vector_of_complex(const std::vector<std::vector<int>>& facets) {
    if (facets.empty()) throw domain_error("complex needs at least one facet");
    const int d1 = static_cast<int>(facets[0].size());  // d+1
    std::set<std::vector<int>> faces;
    for (const auto& f : facets) {
        const int k = static_cast<int>(f.size());
        if (k != d1) throw domain_error("facets of unequal size");
        for (unsigned mask = 0; mask < (1u << k); ++mask) {
            std::vector<int> sub;
            for (int i = 0; i < k; ++i)
                if (mask & (1u << i)) sub.push_back(f[i]);
            faces.insert(std::move(sub));
        }
    }
    std::vector<long long> count_by_size(d1 + 1, 0);  // includes the empty face
    for (const auto& f : faces) count_by_size[f.size()]++;
    // f(y) = sum_s N_s y^(d+1-s); h(x) = f(x-1), h_k = coeff of x^(d+1-k).
    std::vector<long long> f_desc(d1 + 1, 0);  // f_desc[j] = coeff of y^j
    for (int s = 0; s <= d1; ++s) f_desc[d1 - s] += count_by_size[s];
    auto binom = [](long long a, long long b) {
        if (b < 0 || b > a) return 0LL;
        long long r = 1;
        for (long long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
        return r;
    };
    std::vector<long long> h_poly(d1 + 1, 0);  // coeff of x^j in f(x-1)
    for (int j = 0; j <= d1; ++j) {
        if (f_desc[j] == 0) continue;
        for (int i = 0; i <= j; ++i) {
            long long sign = ((j - i) % 2 == 0) ? 1 : -1;
            h_poly[i] += f_desc[j] * sign * binom(j, i);
        }
    }
    std::vector<long long> h(d1 + 1, 0);
    for (int k = 0; k <= d1; ++k) h[k] = h_poly[d1 - k];
    while (!h.empty() && h.back() == 0) h.pop_back();
    return h;
}

}  // namespace

Polynomial greedoid_polynomial(const EmbeddedDigraph& g, VertexId root) {
    if (!is_eulerian(g)) throw domain_error("greedoid polynomial needs an Eulerian digraph");
    if (root < 0 || root >= g.n) throw domain_error("root out of range");
    const int m = static_cast<int>(g.arcs.size());
    const int rank = g.n - 1;

    auto arbs = enumerate_arborescences(g.n, g.arcs, root);
    if (arbs.empty()) throw domain_error("no spanning arborescence: root does not reach everything");
    std::vector<std::vector<int>> facets;
    for (const auto& a : arbs) {
        std::vector<char> in(m, 0);
        for (int x : a) in[x] = 1;
        std::vector<int> comp;
        for (int x = 0; x < m; ++x)
            if (!in[x]) comp.push_back(x);
        facets.push_back(std::move(comp));
    }
    std::vector<long long> h = h_vector_of_complex(facets);
    std::vector<long long> lam(m - rank + 1, 0);
    for (size_t i = 0; i < h.size(); ++i) lam[m - rank - static_cast<int>(i)] = h[i];
    Polynomial lambda{std::move(lam)};

    // Independent route: transform of the interior polynomial of the dual.
    DualDigraph d = dual_embedded(g);
    if (!d.graph.is_semi_balanced())
        throw internal_error("dual of an Eulerian plane digraph must be semi-balanced");
    Polynomial interior;
    bool simple = true;
    try {
        DirectedGraph simple_dual = dual_as_digraph(d);
        interior = interior_polynomial_auto(simple_dual);
    } catch (const domain_error&) {
        simple = false;
    }
    if (!simple) {
        std::vector<std::vector<int>> gens;
        for (const Arc& a : d.graph.arcs) {
            std::vector<int> v(d.graph.n, 0);
            v[a.head] += 1;
            v[a.tail] -= 1;
            gens.push_back(std::move(v));
        }
        interior = h_star_of_generators(gens);
    }
    std::vector<long long> lam2(m - rank + 1, 0);
    for (int i = 0; i <= interior.degree(); ++i) lam2[m - rank - i] = interior.coeff(i);
    Polynomial lambda2{std::move(lam2)};
    if (lambda != lambda2)
        throw internal_error("greedoid polynomial routes disagree: " + lambda.coeff_list() +
                             " vs " + lambda2.coeff_list());
    return lambda;
}

Polynomial greedoid_polynomial(const DirectedGraph& g, const RibbonStructure& r, VertexId root) {
    return greedoid_polynomial(as_embedded(g, r), root);
}

}  // namespace rootpoly
