#include "rootpoly/layer_complete.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace rootpoly {

int LayerSpec::vertex_count() const {
    int n = 0;
    for (int s : sizes) n += s + 1;
    return n;
}

LayerComplete build_layer_complete(const LayerSpec& spec) {
    const int k = spec.layer_count() - 1;
    if (k < 1) throw domain_error("layer-complete graphs need at least two layers");
    for (int s : spec.sizes)
        if (s < 0) throw domain_error("negative layer size");
    std::vector<int> offset(spec.sizes.size());
    int n = 0;
    for (size_t i = 0; i < spec.sizes.size(); ++i) {
        offset[i] = n;
        n += spec.sizes[i] + 1;
    }
    std::vector<Arc> arcs;
    for (int i = 1; i <= k; ++i)
        for (int a = 0; a <= spec.sizes[i - 1]; ++a)
            for (int b = 0; b <= spec.sizes[i]; ++b)
                arcs.push_back({static_cast<int>(arcs.size()), offset[i - 1] + a, offset[i] + b});
    DirectedGraph g(n, std::move(arcs));
    // The drawing: layer i on the horizontal line y = i, vertices in index
    // order; ribbon from the positive orientation of that (crossing) drawing.
    std::vector<std::pair<long long, long long>> xy(n);
    for (int i = 0; i <= k; ++i)
        for (int j = 0; j <= spec.sizes[i]; ++j) xy[offset[i] + j] = {j, i};
    RibbonStructure ribbon = ribbon_from_points(g, xy);
    // base edge x_{0,0} -> x_{1,s_1}
    int base_arc = -1;
    for (const Arc& a : g.arcs())
        if (a.tail == offset[0] && a.head == offset[1] + spec.sizes[1]) base_arc = a.id;
    LayerComplete out{std::move(g), std::move(ribbon), Basis{offset[0], base_arc}, offset};
    return out;
}

namespace {

// Non-crossing spanning trees of the complete bipartite graph on the listed
// vertices (positions = layer indices), as arc-id sets of the host graph.
std::vector<std::vector<int>> noncrossing_level_trees(const DirectedGraph& g,
                                                      const std::vector<VertexId>& bottom,
                                                      const std::vector<int>& bottom_pos,
                                                      const std::vector<VertexId>& top,
                                                      const std::vector<int>& top_pos) {
    const int p = static_cast<int>(bottom.size());
    const int q = static_cast<int>(top.size());
    std::map<std::pair<int, int>, int> arc_of;
    for (const Arc& a : g.arcs()) arc_of[{a.tail, a.head}] = a.id;
    struct Edge {
        int a, b, arc;
    };
    std::vector<Edge> edges;
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < q; ++b) {
            auto it = arc_of.find({bottom[a], top[b]});
            if (it == arc_of.end()) throw internal_error("missing level arc");
            edges.push_back({a, b, it->second});
        }
    auto crossing = [&](const Edge& e, const Edge& f) {
        return (bottom_pos[e.a] < bottom_pos[f.a] && top_pos[e.b] > top_pos[f.b]) ||
               (bottom_pos[e.a] > bottom_pos[f.a] && top_pos[e.b] < top_pos[f.b]);
    };
    const int need = p + q - 1;
    std::vector<std::vector<int>> out;
    std::vector<int> pick;
    std::vector<int> parent(p + q);
    std::function<void(int, int)> rec = [&](int start, int comps) {
        if (static_cast<int>(pick.size()) == need) {
            if (comps == 1) {
                std::vector<int> ids;
                for (int e : pick) ids.push_back(edges[e].arc);
                std::sort(ids.begin(), ids.end());
                out.push_back(std::move(ids));
            }
            return;
        }
        int left = need - static_cast<int>(pick.size());
        for (int e = start; e + left <= static_cast<int>(edges.size()); ++e) {
            bool ok = true;
            for (int f : pick)
                if (crossing(edges[e], edges[f])) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            // acyclicity via a tiny union-find snapshot
            std::function<int(int)> find = [&](int x) {
                while (parent[x] != x) x = parent[x] = parent[parent[x]];
                return x;
            };
            int ra = find(edges[e].a), rb = find(p + edges[e].b);
            if (ra == rb) continue;
            int save_ra = parent[ra];
            parent[ra] = rb;
            pick.push_back(e);
            rec(e + 1, comps - 1);
            pick.pop_back();
            parent[ra] = save_ra;
        }
    };
    for (int i = 0; i < p + q; ++i) parent[i] = i;
    rec(0, p + q);
    return out;
}

}  // namespace

std::vector<CombTree> enumerate_comb_trees(const LayerSpec& spec) {
    LayerComplete lc = build_layer_complete(spec);
    const int k = spec.layer_count() - 1;
    const DirectedGraph& g = lc.graph;

    // Choose D_i subset of {x_{i,1}..x_{i,s_i}} for the middle layers; the
    // bottom layer is all-U, the top all-D.
    std::vector<CombTree> out;
    std::vector<std::vector<int>> d_sets(spec.sizes.size());
    for (int j = 1; j <= spec.sizes[k]; ++j) d_sets[k].push_back(j);
    std::function<void(int)> choose = [&](int layer) {
        if (layer == k) {
            // levels are fixed; enumerate per-level trees and take products
            std::vector<std::vector<std::vector<int>>> per_level;
            for (int i = 1; i <= k; ++i) {
                std::vector<VertexId> bottom{lc.vertex(i - 1, 0)};
                std::vector<int> bottom_pos{0};
                if (i - 1 > 0) {
                    for (int j = 1; j <= spec.sizes[i - 1]; ++j) {
                        if (!std::binary_search(d_sets[i - 1].begin(), d_sets[i - 1].end(), j)) {
                            bottom.push_back(lc.vertex(i - 1, j));
                            bottom_pos.push_back(j);
                        }
                    }
                } else {
                    for (int j = 1; j <= spec.sizes[0]; ++j) {
                        bottom.push_back(lc.vertex(0, j));
                        bottom_pos.push_back(j);
                    }
                }
                std::vector<VertexId> top{lc.vertex(i, 0)};
                std::vector<int> top_pos{0};
                if (i == k) {
                    for (int j = 1; j <= spec.sizes[k]; ++j) {
                        top.push_back(lc.vertex(k, j));
                        top_pos.push_back(j);
                    }
                } else {
                    for (int j : d_sets[i]) {
                        top.push_back(lc.vertex(i, j));
                        top_pos.push_back(j);
                    }
                }
                per_level.push_back(
                    noncrossing_level_trees(g, bottom, bottom_pos, top, top_pos));
            }
            std::vector<int> assembled;
            std::function<void(int)> prod = [&](int level) {
                if (level == k) {
                    std::vector<int> ids = assembled;
                    std::sort(ids.begin(), ids.end());
                    out.push_back(CombTree{SpanningTree{std::move(ids)}, d_sets});
                    return;
                }
                for (const auto& t : per_level[level]) {
                    size_t before = assembled.size();
                    assembled.insert(assembled.end(), t.begin(), t.end());
                    prod(level + 1);
                    assembled.resize(before);
                }
            };
            prod(0);
            return;
        }
        // subsets of {1..s_layer} for D_layer, middle layers only
        int s = spec.sizes[layer];
        for (unsigned mask = 0; mask < (1u << s); ++mask) {
            d_sets[layer].clear();
            for (int j = 1; j <= s; ++j)
                if (mask & (1u << (j - 1))) d_sets[layer].push_back(j);
            choose(layer + 1);
        }
    };
    choose(1);
    std::sort(out.begin(), out.end(),
              [](const CombTree& a, const CombTree& b) { return a.tree < b.tree; });
    return out;
}

Polynomial layer_complete_formula(const LayerSpec& spec) {
    const int k = spec.layer_count() - 1;
    if (k < 1) throw domain_error("layer-complete graphs need at least two layers");
    auto binom = [](long long a, long long b) {
        if (b < 0 || b > a) return 0LL;
        long long r = 1;
        for (long long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
        return r;
    };
    std::vector<long long> coeff;
    std::vector<int> idx(k + 1, 0);  // idx[j] = i_j, idx[0] fixed at 0
    std::function<void(int, long long, int)> rec = [&](int j, long long prod, int degree) {
        if (j == k + 1) {
            if (coeff.size() <= static_cast<size_t>(degree)) coeff.resize(degree + 1, 0);
            coeff[degree] += prod;
            return;
        }
        for (int i = 0; i <= spec.sizes[j]; ++i) {
            idx[j] = i;
            long long factor = binom(spec.sizes[j], i);
            if (j < k)
                factor *= binom(i + spec.sizes[j - 1] - idx[j - 1], i);
            else
                factor *= binom(spec.sizes[k - 1] - idx[k - 1], i);
            if (factor == 0) continue;
            rec(j + 1, prod * factor, degree + i);
        }
        idx[j] = 0;
    };
    rec(1, 1, 0);
    return Polynomial(std::move(coeff));
}

}  // namespace rootpoly
