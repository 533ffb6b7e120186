#include "rootpoly/lp.hpp"

#include "rootpoly/errors.hpp"

namespace rootpoly {

namespace {

// Dense tableau simplex. Layout: rows 0..m-1 are constraints, columns
// 0..ncols-1 are variables, column ncols is the right-hand side. basis[i]
// is the variable id of row i. One extra cost row is kept separately.
struct Tableau {
    int m, ncols;
    Matrix t;                    // m x (ncols+1)
    std::vector<Rational> cost;  // ncols+1, reduced costs; last = -objective
    std::vector<int> basis;

    void pivot(int row, int col) {
        Rational piv = t[row][col];
        for (auto& x : t[row]) x /= piv;
        for (int i = 0; i < m; ++i) {
            if (i == row) continue;
            Rational f = t[i][col];
            if (f == 0) continue;
            for (int j = 0; j <= ncols; ++j) t[i][j] -= f * t[row][j];
        }
        Rational f = cost[col];
        if (f != 0)
            for (int j = 0; j <= ncols; ++j) cost[j] -= f * t[row][j];
        basis[row] = col;
    }

    // Bland: entering = lowest-index column with negative reduced cost;
    // leaving = min ratio, ties by lowest basis variable id.
    // Returns false when optimal; throws when unbounded.
    bool step(const std::vector<char>& allowed) {
        int col = -1;
        for (int j = 0; j < ncols; ++j) {
            if (!allowed[j]) continue;
            if (cost[j] < 0) {
                col = j;
                break;
            }
        }
        if (col < 0) return false;
        int row = -1;
        Rational best;
        for (int i = 0; i < m; ++i) {
            if (t[i][col] <= 0) continue;
            Rational ratio = t[i][ncols] / t[i][col];
            if (row < 0 || ratio < best || (ratio == best && basis[i] < basis[row])) {
                row = i;
                best = ratio;
            }
        }
        if (row < 0) throw domain_error("unbounded linear program");
        pivot(row, col);
        return true;
    }
};

// Phase 1: artificial basis, minimize artificial sum. Returns nullopt when
// infeasible, otherwise a tableau whose basis is free of artificial columns
// (redundant rows are zeroed out and parked on their artificial at level 0,
// then dropped).
std::optional<Tableau> phase1(const Matrix& A, const std::vector<Rational>& b, int n) {
    const int m = static_cast<int>(A.size());
    Tableau tab;
    tab.m = m;
    tab.ncols = n + m;
    tab.t.assign(m, std::vector<Rational>(tab.ncols + 1, 0));
    tab.basis.resize(m);
    for (int i = 0; i < m; ++i) {
        bool neg = b[i] < 0;
        for (int j = 0; j < n; ++j) tab.t[i][j] = neg ? -A[i][j] : A[i][j];
        tab.t[i][n + i] = 1;
        tab.t[i][tab.ncols] = neg ? -b[i] : b[i];
        tab.basis[i] = n + i;
    }
    tab.cost.assign(tab.ncols + 1, 0);
    for (int j = 0; j <= tab.ncols; ++j) {
        Rational s = 0;
        for (int i = 0; i < m; ++i) s += tab.t[i][j];
        tab.cost[j] = -s;  // reduced costs of min(sum of artificials)
    }
    for (int i = n; i < n + m; ++i) tab.cost[i] = 0;
    std::vector<char> allowed(tab.ncols, 1);
    while (tab.step(allowed)) {
    }
    Rational objective = -tab.cost[tab.ncols];
    if (objective != 0) return std::nullopt;
    // Drive artificials out of the basis.
    for (int i = 0; i < m; ++i) {
        if (tab.basis[i] < n) continue;
        int col = -1;
        for (int j = 0; j < n; ++j)
            if (tab.t[i][j] != 0) {
                col = j;
                break;
            }
        if (col >= 0) tab.pivot(i, col);
    }
    // Remaining artificial rows are redundant (all-zero over real columns).
    Tableau out;
    out.ncols = n;
    for (int i = 0; i < m; ++i) {
        if (tab.basis[i] >= n) continue;
        std::vector<Rational> row(tab.t[i].begin(), tab.t[i].begin() + n);
        row.push_back(tab.t[i][tab.ncols]);
        out.t.push_back(std::move(row));
        out.basis.push_back(tab.basis[i]);
    }
    out.m = static_cast<int>(out.t.size());
    out.cost.assign(n + 1, 0);
    return out;
}

std::vector<Rational> extract(const Tableau& tab, int n) {
    std::vector<Rational> x(n, 0);
    for (int i = 0; i < tab.m; ++i)
        if (tab.basis[i] < n) x[tab.basis[i]] = tab.t[i][tab.ncols];
    return x;
}

}  // namespace

std::optional<std::vector<Rational>> lp_feasible_point(const Matrix& A,
                                                       const std::vector<Rational>& b) {
    if (A.size() != b.size()) throw domain_error("lp: row count mismatch");
    int n = A.empty() ? 0 : static_cast<int>(A[0].size());
    auto tab = phase1(A, b, n);
    if (!tab) return std::nullopt;
    return extract(*tab, n);
}

std::optional<std::pair<Rational, std::vector<Rational>>> lp_maximize(
    const Matrix& A, const std::vector<Rational>& b, const std::vector<Rational>& c) {
    if (A.size() != b.size()) throw domain_error("lp: row count mismatch");
    int n = A.empty() ? 0 : static_cast<int>(A[0].size());
    auto tab = phase1(A, b, n);
    if (!tab) return std::nullopt;
    // Phase 2: minimize -c.
    tab->cost.assign(n + 1, 0);
    for (int j = 0; j < n; ++j) tab->cost[j] = -c[j];
    for (int i = 0; i < tab->m; ++i) {
        Rational f = tab->cost[tab->basis[i]];
        if (f == 0) continue;
        for (int j = 0; j <= n; ++j) tab->cost[j] -= f * tab->t[i][j];
    }
    std::vector<char> allowed(n, 1);
    while (tab->step(allowed)) {
    }
    std::vector<Rational> x = extract(*tab, n);
    Rational val = 0;
    for (int j = 0; j < n; ++j) val += c[j] * x[j];
    return std::make_pair(val, std::move(x));
}

}  // namespace rootpoly
