#include "rootpoly/invariants.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <thread>

namespace rootpoly {

Polynomial interior_polynomial(const DirectedGraph& g, const RibbonStructure& r,
                               const Basis& b) {
    if (!g.weakly_connected())
        throw domain_error("interior polynomial requires a connected graph; "
                           "use the component-aware variant");
    if (!is_semi_balanced(g)) throw domain_error("graph is not semi-balanced");
    std::vector<long long> h;
    for (const SpanningTree& t : enumerate_jaeger_trees(g, r, b)) {
        size_t k = semi_passive_arcs(g, r, b, t).size();
        if (h.size() <= k) h.resize(k + 1, 0);
        h[k]++;
    }
    if (h.empty()) h.push_back(1);  // single-vertex graph
    return Polynomial(std::move(h));
}

Polynomial interior_polynomial_auto(const DirectedGraph& g) {
    if (g.vertex_count() <= 1) return Polynomial::constant(1);
    Basis b{};
    bool found = false;
    for (int v = 0; v < g.vertex_count() && !found; ++v)
        if (!g.incident(v).empty()) {
            b = Basis{v, g.incident(v).front()};
            found = true;
        }
    if (!found) throw domain_error("graph has no arcs");
    return interior_polynomial(g, canonical_ribbon(g), b);
}

namespace {

// Induced subgraph on one component, arcs re-densified.
DirectedGraph component_subgraph(const DirectedGraph& g, const std::vector<int>& comp,
                                 int which) {
    std::vector<int> vmap(g.vertex_count(), -1);
    int nv = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (comp[v] == which) vmap[v] = nv++;
    std::vector<Arc> arcs;
    for (const Arc& a : g.arcs())
        if (comp[a.tail] == which)
            arcs.push_back({static_cast<int>(arcs.size()), vmap[a.tail], vmap[a.head]});
    return DirectedGraph(nv, std::move(arcs));
}

}  // namespace

Polynomial interior_disconnected(const DirectedGraph& g) {
    if (!is_semi_balanced(g)) throw domain_error("graph is not semi-balanced");
    std::vector<int> comp = g.components();
    int c = g.component_count();
    Polynomial acc = Polynomial::constant(1);
    for (int i = 0; i < c; ++i) acc = acc * interior_polynomial_auto(component_subgraph(g, comp, i));
    return acc * Polynomial::one_minus_x().pow(c - 1);
}

namespace {

// Distinct sums of k generators with repetition: exactly the lattice points
// of the k-dilate when the polytope has a unimodular dissection on its
// generator simplices.
long long ehrhart_multiset(const std::vector<std::vector<int>>& gens, int nverts, int k) {
    if (k == 0) return 1;
    if (gens.empty()) return 0;
    std::set<std::vector<int>> points;
    std::vector<int> point(nverts, 0);
    std::function<void(size_t, int)> rec = [&](size_t idx, int left) {
        if (idx + 1 == gens.size()) {
            std::vector<int> q = point;
            for (int v = 0; v < nverts; ++v) q[v] += left * gens[idx][v];
            points.insert(std::move(q));
            return;
        }
        rec(idx + 1, left);
        for (int take = 1; take <= left; ++take) {
            for (int v = 0; v < nverts; ++v) point[v] += gens[idx][v];
            rec(idx + 1, left - take);
        }
        for (int take = 1; take <= left; ++take)
            for (int v = 0; v < nverts; ++v) point[v] -= gens[idx][v];
    };
    rec(0, k);
    return static_cast<long long>(points.size());
}

}  // namespace

Polynomial h_star_of_generators(const std::vector<std::vector<int>>& generators) {
    int d = affine_rank(generators);
    if (d < 0) return Polynomial::constant(1);  // empty polytope, by convention
    int nverts = static_cast<int>(generators[0].size());
    std::vector<long long> counts(d + 2, 0);
    for (int k = 0; k <= d + 1; ++k) counts[k] = ehrhart_multiset(generators, nverts, k);
    // Triangular solve of counts[k] = sum_i h_i C(k-i+d, d).
    auto binom = [](long long a, long long b) {
        if (b < 0 || b > a) return 0LL;
        long long r = 1;
        for (long long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
        return r;
    };
    std::vector<long long> h(d + 1, 0);
    for (int k = 0; k <= d; ++k) {
        long long rest = 0;
        for (int i = 0; i < k; ++i) rest += h[i] * binom(k - i + d, d);
        h[k] = counts[k] - rest;
        if (h[k] < 0) throw internal_error("negative h* coefficient: inconsistent Ehrhart table");
    }
    long long check = 0;
    for (int i = 0; i <= d; ++i) check += h[i] * binom(d + 1 - i + d, d);
    if (check != counts[d + 1])
        throw internal_error("Ehrhart table fails the h* consistency check");
    return Polynomial(std::move(h));
}

namespace {

struct BoxScan {
    const DirectedGraph& g;
    int k;
    std::vector<int> lo, hi;       // per-vertex coordinate bounds
    std::vector<int> pot;          // layering, zero if un-semibalanced
    bool use_pot = false;
    std::vector<int> suf_lo, suf_hi;          // suffix sums of lo/hi
    std::vector<long long> suf_plo, suf_phi;  // suffix sums of pot-weighted bounds

    explicit BoxScan(const DirectedGraph& graph, int dil) : g(graph), k(dil) {
        const int n = g.vertex_count();
        lo.assign(n, 0);
        hi.assign(n, 0);
        for (const Arc& a : g.arcs()) {
            lo[a.tail] = -k;
            hi[a.head] = k;
        }
        auto lay = semi_balanced_layering(g);
        if (lay) {
            pot = lay->potential;
            use_pot = true;
        } else {
            pot.assign(n, 0);
        }
        suf_lo.assign(n + 1, 0);
        suf_hi.assign(n + 1, 0);
        suf_plo.assign(n + 1, 0);
        suf_phi.assign(n + 1, 0);
        for (int v = n - 1; v >= 0; --v) {
            suf_lo[v] = suf_lo[v + 1] + lo[v];
            suf_hi[v] = suf_hi[v + 1] + hi[v];
            long long a = static_cast<long long>(pot[v]) * lo[v];
            long long b = static_cast<long long>(pot[v]) * hi[v];
            suf_plo[v] = suf_plo[v + 1] + std::min(a, b);
            suf_phi[v] = suf_phi[v + 1] + std::max(a, b);
        }
    }

    bool member(const std::vector<int>& p) const {
        const int n = g.vertex_count();
        const int m = g.arc_count();
        Matrix A(n + 1, std::vector<Rational>(m, 0));
        std::vector<Rational> b(n + 1, 0);
        for (const Arc& a : g.arcs()) {
            A[a.head][a.id] = 1;
            A[a.tail][a.id] = -1;
            A[n][a.id] = 1;
        }
        for (int v = 0; v < n; ++v) b[v] = p[v];
        b[n] = k;  // membership in the k-dilate, kept integral
        return lp_feasible_point(A, b).has_value();
    }

    long long count_range(int first_lo, int first_hi) const {
        std::vector<int> p(g.vertex_count(), 0);
        long long total = 0;
        std::function<void(int, int, long long)> rec = [&](int v, int sum, long long psum) {
            const int n = g.vertex_count();
            if (v == n) {
                if (sum == 0 && (!use_pot || psum == k) && member(p)) ++total;
                return;
            }
            int a = lo[v], b = hi[v];
            if (v == 0) {
                a = std::max(a, first_lo);
                b = std::min(b, first_hi);
            }
            for (int x = a; x <= b; ++x) {
                int s = sum + x;
                // prune on reachable ranges of both linear forms
                if (s + suf_lo[v + 1] > 0 || s + suf_hi[v + 1] < 0) continue;
                long long ps = psum + static_cast<long long>(pot[v]) * x;
                if (use_pot && (ps + suf_plo[v + 1] > k || ps + suf_phi[v + 1] < k)) continue;
                p[v] = x;
                rec(v + 1, s, ps);
            }
            p[v] = 0;
        };
        rec(0, 0, 0);
        return total;
    }
};

long long ehrhart_boxscan(const DirectedGraph& g, int k, int threads) {
    if (k == 0) return 1;
    if (g.arc_count() == 0) return 0;
    BoxScan scan(g, k);
    int lo0 = scan.lo[0], hi0 = scan.hi[0];
    if (threads <= 1 || hi0 - lo0 < 1) return scan.count_range(lo0, hi0);
    int span = hi0 - lo0 + 1;
    int nthreads = std::min(threads, span);
    std::vector<long long> partial(nthreads, 0);
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) {
        int a = lo0 + span * t / nthreads;
        int b = lo0 + span * (t + 1) / nthreads - 1;
        pool.emplace_back([&scan, &partial, t, a, b] { partial[t] = scan.count_range(a, b); });
    }
    for (auto& th : pool) th.join();
    long long total = 0;
    for (long long x : partial) total += x;  // fixed order: deterministic
    return total;
}

}  // namespace

long long ehrhart_count(const DirectedGraph& g, int k, EhrhartBackend backend, int threads) {
    if (k < 0) throw domain_error("negative dilation");
    if (k == 0) return 1;
    switch (backend) {
        case EhrhartBackend::BoxScan:
            return ehrhart_boxscan(g, k, threads);
        case EhrhartBackend::Multiset: {
            if (!is_semi_balanced(g))
                throw domain_error("multiset Ehrhart backend needs a semi-balanced graph");
            std::vector<std::vector<int>> gens;
            for (const Arc& a : g.arcs()) gens.push_back(vertex_vector_int(g, a.id));
            return ehrhart_multiset(gens, g.vertex_count(), k);
        }
    }
    throw internal_error("unknown backend");
}

EhrhartTable ehrhart_table(const DirectedGraph& g, int kmax, EhrhartBackend backend,
                           int threads) {
    EhrhartTable t;
    for (int k = 0; k <= kmax; ++k) t.counts.push_back(ehrhart_count(g, k, backend, threads));
    return t;
}

Polynomial h_star_from_ehrhart(const DirectedGraph& g, EhrhartBackend backend, int threads) {
    int d = polytope_dimension(g);
    if (d < 0) return Polynomial::constant(1);
    EhrhartTable table = ehrhart_table(g, d + 1, backend, threads);
    auto binom = [](long long a, long long b) {
        if (b < 0 || b > a) return 0LL;
        long long r = 1;
        for (long long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
        return r;
    };
    std::vector<long long> h(d + 1, 0);
    for (int k = 0; k <= d; ++k) {
        long long rest = 0;
        for (int i = 0; i < k; ++i) rest += h[i] * binom(k - i + d, d);
        h[k] = table.counts[k] - rest;
        if (h[k] < 0) throw internal_error("negative h* coefficient: inconsistent Ehrhart table");
    }
    long long check = 0;
    for (int i = 0; i <= d; ++i) check += h[i] * binom(d + 1 - i + d, d);
    if (check != table.counts[d + 1])
        throw internal_error("Ehrhart table fails the h* consistency check");
    return Polynomial(std::move(h));
}

DirectedGraph disjoint_union(const DirectedGraph& g1, const DirectedGraph& g2) {
    std::vector<Arc> arcs = g1.arcs();
    int off = g1.vertex_count();
    for (const Arc& a : g2.arcs())
        arcs.push_back({static_cast<int>(arcs.size()), a.tail + off, a.head + off});
    return DirectedGraph(g1.vertex_count() + g2.vertex_count(), std::move(arcs));
}

namespace {

// Union with a vertex identification map for g2.
DirectedGraph glue(const DirectedGraph& g1, const DirectedGraph& g2,
                   const std::map<VertexId, VertexId>& ident, bool drop_shared_arc,
                   int shared_arc2) {
    int next = g1.vertex_count();
    std::vector<int> vmap(g2.vertex_count(), -1);
    for (auto [v2, v1] : ident) vmap[v2] = v1;
    for (int v = 0; v < g2.vertex_count(); ++v)
        if (vmap[v] == -1) vmap[v] = next++;
    std::vector<Arc> arcs = g1.arcs();
    for (const Arc& a : g2.arcs()) {
        if (drop_shared_arc && a.id == shared_arc2) continue;
        arcs.push_back({static_cast<int>(arcs.size()), vmap[a.tail], vmap[a.head]});
    }
    return DirectedGraph(next, std::move(arcs));
}

}  // namespace

DirectedGraph fuse_at_edge(const DirectedGraph& g1, int arc1, const DirectedGraph& g2,
                           int arc2) {
    const Arc& a1 = g1.arc(arc1);
    const Arc& a2 = g2.arc(arc2);
    return glue(g1, g2, {{a2.tail, a1.tail}, {a2.head, a1.head}}, true, arc2);
}

DirectedGraph fuse_at_vertex(const DirectedGraph& g1, VertexId v1, const DirectedGraph& g2,
                             VertexId v2) {
    return glue(g1, g2, {{v2, v1}}, false, -1);
}

IdentityReport verify_product_edge(const DirectedGraph& g1, int arc1, const DirectedGraph& g2,
                                   int arc2) {
    DirectedGraph fused = fuse_at_edge(g1, arc1, g2, arc2);
    Polynomial lhs = interior_disconnected(fused);
    Polynomial rhs = interior_disconnected(g1) * interior_disconnected(g2);
    return IdentityReport{lhs == rhs, lhs, rhs};
}

IdentityReport verify_product_vertex(const DirectedGraph& g1, VertexId v1,
                                     const DirectedGraph& g2, VertexId v2) {
    DirectedGraph fused = fuse_at_vertex(g1, v1, g2, v2);
    Polynomial lhs = interior_disconnected(fused);
    Polynomial rhs = interior_disconnected(g1) * interior_disconnected(g2);
    return IdentityReport{lhs == rhs, lhs, rhs};
}

IdentityReport verify_bridge(const DirectedGraph& g, int bridge_arc) {
    std::vector<char> alive(g.arc_count(), 1);
    alive[bridge_arc] = 0;
    if (g.weakly_connected() && detail::connected_with_alive(g, alive))
        throw domain_error("arc is not a bridge");
    DirectedGraph del = delete_arcs(g, {bridge_arc});
    Polynomial lhs = interior_disconnected(del);
    Polynomial rhs = Polynomial::one_minus_x() * interior_disconnected(g);
    return IdentityReport{lhs == rhs, lhs, rhs};
}

IdentityReport verify_disjoint_union(const DirectedGraph& g1, const DirectedGraph& g2) {
    Polynomial lhs = interior_disconnected(disjoint_union(g1, g2));
    Polynomial rhs =
        Polynomial::one_minus_x() * interior_disconnected(g1) * interior_disconnected(g2);
    return IdentityReport{lhs == rhs, lhs, rhs};
}

IdentityReport verify_recursion(const DirectedGraph& g, const CycleWithSides& cycle) {
    const std::vector<int>& cp = cycle.plus;
    Polynomial sum;
    for (unsigned mask = 0; mask < (1u << cp.size()); ++mask) {
        std::vector<int> doomed;
        for (size_t i = 0; i < cp.size(); ++i)
            if (mask & (1u << i)) doomed.push_back(cp[i]);
        Polynomial term = interior_disconnected(delete_arcs(g, doomed));
        sum = (__builtin_popcount(mask) % 2 == 0) ? sum + term : sum - term;
    }
    return IdentityReport{sum.is_zero(), sum, Polynomial()};
}

}  // namespace rootpoly
