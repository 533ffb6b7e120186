#include "rootpoly/ribbon.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace rootpoly {

void validate_ribbon(const DirectedGraph& g, const RibbonStructure& r) {
    if (static_cast<int>(r.rotation.size()) != g.vertex_count())
        throw domain_error("ribbon: one rotation per vertex required");
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<int> want = g.incident(v);
        std::vector<int> have = r.rotation[v];
        std::sort(have.begin(), have.end());
        if (want != have)
            throw domain_error("ribbon: rotation at vertex " + std::to_string(v) +
                               " is not a permutation of its incident arcs");
    }
}

namespace {
int rotation_index(const RibbonStructure& r, VertexId v, int arc_id) {
    const auto& rot = r.rotation.at(v);
    for (size_t i = 0; i < rot.size(); ++i)
        if (rot[i] == arc_id) return static_cast<int>(i);
    throw domain_error("arc not in rotation at vertex " + std::to_string(v));
}
}  // namespace

int rotation_successor(const RibbonStructure& r, VertexId v, int arc_id) {
    const auto& rot = r.rotation.at(v);
    return rot[(rotation_index(r, v, arc_id) + 1) % rot.size()];
}

int rotation_predecessor(const RibbonStructure& r, VertexId v, int arc_id) {
    const auto& rot = r.rotation.at(v);
    return rot[(rotation_index(r, v, arc_id) + rot.size() - 1) % rot.size()];
}

RibbonStructure canonical_ribbon(const DirectedGraph& g) {
    RibbonStructure r;
    r.rotation.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) r.rotation[v] = g.incident(v);
    return r;
}

RibbonStructure ribbon_from_points(const DirectedGraph& g,
                                   const std::vector<std::pair<long long, long long>>& xy) {
    if (static_cast<int>(xy.size()) != g.vertex_count())
        throw domain_error("one coordinate pair per vertex required");
    RibbonStructure r;
    r.rotation.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<int> arcs = g.incident(v);
        auto dir = [&](int aid) {
            int w = g.other_end(aid, v);
            return std::make_pair(xy[w].first - xy[v].first, xy[w].second - xy[v].second);
        };
        // CCW by angle from the positive x-axis, exact: compare half-planes,
        // then cross products.
        auto half = [](std::pair<long long, long long> d) {
            return (d.second < 0 || (d.second == 0 && d.first < 0)) ? 1 : 0;
        };
        std::sort(arcs.begin(), arcs.end(), [&](int a, int b) {
            auto da = dir(a), db = dir(b);
            int ha = half(da), hb = half(db);
            if (ha != hb) return ha < hb;
            long long cross = da.first * db.second - da.second * db.first;
            if (cross != 0) return cross > 0;
            throw domain_error("coincident edge directions in drawing");
        });
        r.rotation[v] = arcs;
    }
    return r;
}

RibbonStructure reversed_ribbon(const RibbonStructure& r) {
    RibbonStructure out = r;
    for (auto& rot : out.rotation) std::reverse(rot.begin(), rot.end());
    return out;
}

RibbonStructure random_ribbon(const DirectedGraph& g, std::mt19937_64& rng) {
    RibbonStructure r = canonical_ribbon(g);
    for (auto& rot : r.rotation) std::shuffle(rot.begin(), rot.end(), rng);
    return r;
}

void validate_basis(const DirectedGraph& g, const Basis& b) {
    if (b.node < 0 || b.node >= g.vertex_count()) throw domain_error("basis node out of range");
    const Arc& a = g.arc(b.arc);
    if (a.tail != b.node && a.head != b.node)
        throw domain_error("basis arc not incident to basis node");
}

std::vector<Basis> all_bases(const DirectedGraph& g) {
    std::vector<Basis> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int aid : g.incident(v)) out.push_back(Basis{v, aid});
    return out;
}

Tour tour(const DirectedGraph& g, const RibbonStructure& r, const Basis& b,
          const SpanningTree& t) {
    validate_ribbon(g, r);
    validate_basis(g, b);
    Tour walk;
    VertexId v = b.node;
    int e = b.arc;
    const long limit = 2L * g.arc_count() + 2;
    do {
        bool in_tree = t.contains(e);
        walk.steps.push_back(TourStep{v, e, in_tree});
        if (in_tree) {
            VertexId w = g.other_end(e, v);
            v = w;
            e = rotation_successor(r, w, e);
        } else {
            e = rotation_successor(r, v, e);
        }
        if (static_cast<long>(walk.steps.size()) > limit)
            throw internal_error("tour did not return to the basis");
    } while (!(v == b.node && e == b.arc));
    return walk;
}

TOrder t_order(const DirectedGraph& g, const Tour& walk) {
    TOrder ord;
    ord.rank.assign(g.arc_count(), -1);
    int next = 0;
    for (const TourStep& s : walk.steps)
        if (g.arc(s.arc).tail == s.vertex && ord.rank[s.arc] == -1) ord.rank[s.arc] = next++;
    if (next != g.arc_count()) throw internal_error("tour missed a tail incidence");
    return ord;
}

bool is_jaeger(const DirectedGraph& g, const RibbonStructure& r, const Basis& b,
               const SpanningTree& t) {
    Tour walk = tour(g, r, b, t);
    std::vector<char> seen(g.arc_count(), 0);
    for (const TourStep& s : walk.steps) {
        if (!seen[s.arc]) {
            seen[s.arc] = 1;
            if (!t.contains(s.arc) && g.arc(s.arc).tail != s.vertex) return false;
        }
    }
    return true;
}

namespace {

// Branch-and-prune over tour decisions. Status: 0 undecided, 1 kept, 2 cut.
struct JaegerEnum {
    const DirectedGraph& g;
    const RibbonStructure& r;
    const Basis& basis;
    std::vector<SpanningTree>* out;

    struct Dsu {
        std::vector<int> p;
        explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
        int find(int x) {
            while (p[x] != x) x = p[x] = p[p[x]];
            return x;
        }
        bool unite(int a, int b) {
            a = find(a);
            b = find(b);
            if (a == b) return false;
            p[a] = b;
            return true;
        }
    };

    void run() {
        std::vector<int8_t> status(g.arc_count(), 0);
        std::vector<char> alive(g.arc_count(), 1);
        Dsu kept(g.vertex_count());
        walk(basis.node, basis.arc, false, status, alive, kept, 0);
    }

    // Advances deterministically from (v, e) until the next undecided arc or
    // the basis pair; recursion only at branch points.
    void walk(VertexId v, int e, bool moved, std::vector<int8_t>& status,
              std::vector<char>& alive, Dsu& kept, int kept_count) {
        long guard = 0;
        const long limit = 4L * g.arc_count() + 4;
        while (true) {
            if (moved && v == basis.node && e == basis.arc) {
                if (kept_count == g.vertex_count() - 1) {
                    std::vector<int> arcs;
                    for (int a = 0; a < g.arc_count(); ++a)
                        if (status[a] == 1) arcs.push_back(a);
                    out->push_back(SpanningTree{std::move(arcs)});
                }
                return;
            }
            if (++guard > limit) throw internal_error("jaeger enumeration walk diverged");
            moved = true;
            if (status[e] == 1) {
                VertexId w = g.other_end(e, v);
                v = w;
                e = rotation_successor(r, w, e);
                continue;
            }
            if (status[e] == 2) {
                e = rotation_successor(r, v, e);
                continue;
            }
            const Arc& a = g.arc(e);
            if (a.tail == v) {
                // Cut branch first: cutting keeps the tree order ascending.
                alive[e] = 0;
                if (detail::connected_with_alive(g, alive)) {
                    auto status2 = status;
                    auto alive2 = alive;
                    auto kept2 = kept;
                    status2[e] = 2;
                    walk(v, rotation_successor(r, v, e), true, status2, alive2, kept2,
                         kept_count);
                }
                alive[e] = 1;
                if (kept.find(a.tail) != kept.find(a.head)) {
                    status[e] = 1;
                    kept.unite(a.tail, a.head);
                    VertexId w = g.other_end(e, v);
                    walk(w, rotation_successor(r, w, e), true, status, alive, kept,
                         kept_count + 1);
                }
                return;
            }
            // Head-first: the Jaeger rule forces this arc into the tree.
            if (kept.find(a.tail) == kept.find(a.head)) return;
            status[e] = 1;
            kept.unite(a.tail, a.head);
            ++kept_count;
            VertexId w = g.other_end(e, v);
            v = w;
            e = rotation_successor(r, w, e);
        }
    }
};

}  // namespace

std::vector<SpanningTree> enumerate_jaeger_trees(const DirectedGraph& g,
                                                 const RibbonStructure& r, const Basis& b) {
    validate_ribbon(g, r);
    validate_basis(g, b);
    if (!g.weakly_connected()) throw domain_error("jaeger enumeration requires a connected graph");
    std::vector<SpanningTree> out;
    if (g.vertex_count() <= 1) {
        out.push_back(SpanningTree{{}});
        return out;
    }
    JaegerEnum en{g, r, b, &out};
    en.run();
    return out;
}

Ordering compare_prec(const DirectedGraph& g, const RibbonStructure& r, const Basis& b,
                      const SpanningTree& t1, const SpanningTree& t2) {
    if (t1 == t2) return Ordering::Equal;
    Tour w1 = tour(g, r, b, t1);
    Tour w2 = tour(g, r, b, t2);
    size_t k = 0;
    for (; k < w1.steps.size() && k < w2.steps.size(); ++k) {
        const TourStep& s1 = w1.steps[k];
        const TourStep& s2 = w2.steps[k];
        if (!(s1.vertex == s2.vertex && s1.arc == s2.arc))
            throw internal_error("tours diverged without a membership difference");
        if (s1.traversed != s2.traversed) break;
    }
    if (k == w1.steps.size() || k == w2.steps.size())
        throw internal_error("distinct trees produced identical tours");
    const TourStep& s = w1.steps[k];
    bool at_tail = g.arc(s.arc).tail == s.vertex;
    bool in_t1 = t1.contains(s.arc);
    // Tail-side skip obeys the Jaeger rule (smaller); head-side skip
    // violates it (larger).
    if (at_tail) return in_t1 ? Ordering::Greater : Ordering::Less;
    return in_t1 ? Ordering::Less : Ordering::Greater;
}

std::vector<int> semi_passive_arcs(const DirectedGraph& g, const RibbonStructure& r,
                                   const Basis& b, const SpanningTree& t) {
    if (!is_jaeger(g, r, b, t))
        throw domain_error("semi-passivity is only defined for Jaeger trees");
    std::vector<int> out;
    for (int eps : t.arcs) {
        FundamentalCut cut = fundamental_cut(g, t, eps, b.node);
        if (!cut.tail_in_base(g, eps)) continue;
        for (int a : cut.arcs) {
            if (a == eps) continue;
            if (!cut.tail_in_base(g, a)) {  // stands opposite to eps
                out.push_back(eps);
                break;
            }
        }
    }
    return out;
}

namespace detail {

std::vector<int> semi_passive_arcs_by_cut_order(const DirectedGraph& g,
                                                const RibbonStructure& r, const Basis& b,
                                                const SpanningTree& t) {
    TOrder ord = t_order(g, tour(g, r, b, t));
    std::vector<int> out;
    for (int eps : t.arcs) {
        FundamentalCut cut = fundamental_cut(g, t, eps, b.node);
        int largest = cut.arcs[0];
        for (int a : cut.arcs)
            if (ord.rank[a] > ord.rank[largest]) largest = a;
        if (largest == eps) continue;
        if (cut.tail_in_base(g, largest) != cut.tail_in_base(g, eps)) out.push_back(eps);
    }
    return out;
}

}  // namespace detail

Basis jaeger_basis_slide(const DirectedGraph& g, const RibbonStructure& r, const Basis& b) {
    validate_basis(g, b);
    const Arc& a = g.arc(b.arc);
    if (a.head != b.node)
        throw domain_error("basis slide requires the base node to be the head of the base arc");
    return Basis{a.tail, rotation_successor(r, a.tail, b.arc)};
}

}  // namespace rootpoly
