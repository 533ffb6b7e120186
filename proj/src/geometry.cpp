#include "rootpoly/geometry.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace rootpoly {

RationalVector vertex_vector(const DirectedGraph& g, int arc_id) {
    RationalVector v(g.vertex_count(), 0);
    const Arc& a = g.arc(arc_id);
    v[a.head] = 1;
    v[a.tail] = -1;
    return v;
}

std::vector<int> vertex_vector_int(const DirectedGraph& g, int arc_id) {
    std::vector<int> v(g.vertex_count(), 0);
    const Arc& a = g.arc(arc_id);
    v[a.head] = 1;
    v[a.tail] = -1;
    return v;
}

bool affine_independent(const DirectedGraph& g, const std::vector<int>& arc_ids) {
    // Count vertices/components touched by the set; cyclomatic number
    // |A| - |V(A)| + c(A) decides everything except balancedness of the
    // single cycle.
    if (arc_ids.empty()) return true;
    std::map<int, int> vid;
    for (int aid : arc_ids) {
        vid.emplace(g.arc(aid).tail, static_cast<int>(vid.size()));
        vid.emplace(g.arc(aid).head, static_cast<int>(vid.size()));
    }
    std::vector<int> parent(vid.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int merges = 0;
    for (int aid : arc_ids) {
        int a = find(vid[g.arc(aid).tail]);
        int b = find(vid[g.arc(aid).head]);
        if (a != b) {
            parent[a] = b;
            ++merges;
        }
    }
    int cyclomatic = static_cast<int>(arc_ids.size()) - merges;
    if (cyclomatic == 0) return true;
    if (cyclomatic > 1) return false;
    // Exactly one cycle: peel leaves to find it, then check balance.
    std::map<int, std::vector<int>> inc;
    for (int aid : arc_ids) {
        inc[g.arc(aid).tail].push_back(aid);
        inc[g.arc(aid).head].push_back(aid);
    }
    std::map<int, int> degree;
    std::vector<char> removed_arc(g.arc_count(), 0);
    for (auto& [v, list] : inc) degree[v] = static_cast<int>(list.size());
    std::vector<int> stack;
    for (auto& [v, d] : degree)
        if (d == 1) stack.push_back(v);
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (degree[v] != 1) continue;
        for (int aid : inc[v]) {
            if (removed_arc[aid]) continue;
            removed_arc[aid] = 1;
            degree[v]--;
            int w = g.other_end(aid, v);
            if (--degree[w] == 1) stack.push_back(w);
        }
    }
    std::vector<int> cycle;
    for (int aid : arc_ids)
        if (!removed_arc[aid]) cycle.push_back(aid);
    return !cycle_from_arcs(g, cycle).is_balanced();
}

int affine_rank(const std::vector<std::vector<int>>& vectors) {
    if (vectors.empty()) return -1;
    const size_t n = vectors[0].size();
    Matrix rows;
    for (size_t i = 1; i < vectors.size(); ++i) {
        std::vector<Rational> r(n);
        for (size_t j = 0; j < n; ++j) r[j] = vectors[i][j] - vectors[0][j];
        rows.push_back(std::move(r));
    }
    // Gaussian elimination over exact rationals.
    int rank = 0;
    size_t col = 0;
    for (; col < n && rank < static_cast<int>(rows.size()); ++col) {
        int piv = -1;
        for (int i = rank; i < static_cast<int>(rows.size()); ++i)
            if (rows[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
            if (i == rank || rows[i][col] == 0) continue;
            Rational f = rows[i][col] / rows[rank][col];
            for (size_t j = col; j < n; ++j) rows[i][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

bool affine_independent_by_rank(const DirectedGraph& g, const std::vector<int>& arc_ids) {
    if (arc_ids.empty()) return true;
    std::vector<std::vector<int>> vecs;
    for (int aid : arc_ids) vecs.push_back(vertex_vector_int(g, aid));
    return affine_rank(vecs) == static_cast<int>(arc_ids.size()) - 1;
}

int polytope_dimension(const DirectedGraph& g) {
    std::vector<std::vector<int>> vecs;
    for (const Arc& a : g.arcs()) vecs.push_back(vertex_vector_int(g, a.id));
    return affine_rank(vecs);
}

bool verify_certificate(const DirectedGraph& g, const BarycentricCert& cert,
                        const RationalVector& p) {
    if (cert.arcs.size() != cert.coeffs.size()) return false;
    Rational total = 0;
    RationalVector acc(g.vertex_count(), 0);
    for (size_t i = 0; i < cert.arcs.size(); ++i) {
        if (cert.coeffs[i] < 0) return false;
        total += cert.coeffs[i];
        const Arc& a = g.arc(cert.arcs[i]);
        acc[a.head] += cert.coeffs[i];
        acc[a.tail] -= cert.coeffs[i];
    }
    return total == 1 && acc == p;
}

std::optional<BarycentricCert> barycentric_in_tree(const DirectedGraph& g, const SpanningTree& t,
                                                   const RationalVector& p) {
    if (vector_sum(p) != 0) throw domain_error("point must have zero coordinate sum");
    const int n = g.vertex_count();
    std::vector<Rational> residue = p;
    std::map<int, Rational> lambda;
    std::vector<char> alive(g.arc_count(), 0);
    std::vector<int> degree(n, 0);
    for (int aid : t.arcs) {
        alive[aid] = 1;
        degree[g.arc(aid).tail]++;
        degree[g.arc(aid).head]++;
    }
    std::vector<int> leaves;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1) leaves.push_back(v);
    // Leaf coordinate pins its arc's coefficient; subtract and recurse inward.
    size_t qi = 0;
    while (qi < leaves.size()) {
        int v = leaves[qi++];
        int aid = -1;
        for (int cand : g.incident(v))
            if (alive[cand]) {
                aid = cand;
                break;
            }
        if (aid < 0) continue;
        const Arc& a = g.arc(aid);
        Rational coef = (a.head == v) ? residue[v] : -residue[v];
        lambda[aid] = coef;
        residue[a.head] -= coef;
        residue[a.tail] += coef;
        alive[aid] = 0;
        degree[a.head]--;
        degree[a.tail]--;
        int w = g.other_end(aid, v);
        if (degree[w] == 1) leaves.push_back(w);
    }
    for (int v = 0; v < n; ++v)
        if (residue[v] != 0) return std::nullopt;  // p outside the affine span
    Rational total = 0;
    BarycentricCert cert;
    for (int aid : t.arcs) {
        Rational coef = lambda.count(aid) ? lambda[aid] : Rational(0);
        if (coef < 0) return std::nullopt;
        total += coef;
        cert.arcs.push_back(aid);
        cert.coeffs.push_back(coef);
    }
    if (total != 1) return std::nullopt;
    return cert;
}

std::optional<BarycentricCert> contains_point_in_arcs(const DirectedGraph& g,
                                                      const std::vector<int>& arc_ids,
                                                      const RationalVector& p) {
    if (vector_sum(p) != 0) throw domain_error("point must have zero coordinate sum");
    const int n = g.vertex_count();
    const int m = static_cast<int>(arc_ids.size());
    Matrix A(n + 1, std::vector<Rational>(m, 0));
    std::vector<Rational> b(n + 1, 0);
    for (int j = 0; j < m; ++j) {
        const Arc& a = g.arc(arc_ids[j]);
        A[a.head][j] = 1;
        A[a.tail][j] = -1;
        A[n][j] = 1;
    }
    for (int v = 0; v < n; ++v) b[v] = p[v];
    b[n] = 1;
    auto x = lp_feasible_point(A, b);
    if (!x) return std::nullopt;
    BarycentricCert cert;
    cert.arcs = arc_ids;
    cert.coeffs = std::move(*x);
    return cert;
}

std::optional<BarycentricCert> contains_point(const DirectedGraph& g, const RationalVector& p) {
    std::vector<int> ids(g.arc_count());
    std::iota(ids.begin(), ids.end(), 0);
    return contains_point_in_arcs(g, ids, p);
}

Rational SeparatingFunctional::eval(const RationalVector& p) const {
    Rational s = 0;
    for (size_t v = 0; v < values.size(); ++v) s += values[v] * p[v];
    return s;
}

Rational SeparatingFunctional::eval_arc(const DirectedGraph& g, int arc_id) const {
    const Arc& a = g.arc(arc_id);
    return values[a.head] - values[a.tail];
}

SeparatingFunctional separating_functional(const DirectedGraph& g, const SpanningTree& t,
                                           int pivot, VertexId root) {
    FundamentalCut cut = fundamental_cut(g, t, pivot, root);
    SeparatingFunctional f;
    f.values.assign(g.vertex_count(), 0);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!cut.vertex_in_base[v]) f.values[v] = 1;
    return f;
}

}  // namespace rootpoly
