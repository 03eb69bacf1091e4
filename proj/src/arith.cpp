#include "coxforge/arith.hpp"

#include <functional>

#include "coxforge/polytope.hpp"

namespace coxforge {

namespace {

bool integral(const QS3& v) {
    return v.b == 0 && v.a.get_den() == 1;
}

}  // namespace

CycleReport is_arithmetic_over_Q(const CoxeterDiagram& d) {
    const int n = d.size();
    SymMatrix g = gram_matrix(d);
    std::vector<std::vector<QS3>> two(n, std::vector<QS3>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) two[i][j] = g.at(i, j) * QS3(2);

    CycleReport rep;
    rep.arithmetic_over_Q = true;
    auto fail = [&](std::vector<int> cyc, const QS3& prod) {
        rep.arithmetic_over_Q = false;
        rep.witness_cycle = std::move(cyc);
        rep.witness_product = prod;
    };

    // Length-2 cycles: the edge traversed both ways, product 4*g_ij^2.
    for (int i = 0; i < n && rep.arithmetic_over_Q; ++i)
        for (int j = i + 1; j < n && rep.arithmetic_over_Q; ++j) {
            if (two[i][j].is_zero()) continue;
            QS3 sq = two[i][j] * two[i][j];
            if (!integral(sq)) fail({i, j}, sq);
        }

    // Simple cycles of length >= 3: DFS rooted at the smallest node of
    // the cycle; each cycle is found twice (both directions), which only
    // duplicates work, never verdicts.
    std::vector<int> path;
    std::vector<char> used(n, 0);
    std::function<void(int, int, const QS3&)> dfs = [&](int start, int v,
                                                        const QS3& prod) {
        if (!rep.arithmetic_over_Q) return;
        for (int w = start; w < n; ++w) {
            if (two[v][w].is_zero()) continue;
            if (w == start && path.size() >= 3) {
                QS3 total = prod * two[v][w];
                if (!integral(total)) {
                    fail(path, total);
                    return;
                }
            }
            if (used[w] || w == start) continue;
            used[w] = 1;
            path.push_back(w);
            dfs(start, w, prod * two[v][w]);
            path.pop_back();
            used[w] = 0;
        }
    };
    for (int s = 0; s < n && rep.arithmetic_over_Q; ++s) {
        path = {s};
        used.assign(n, 0);
        used[s] = 1;
        dfs(s, s, QS3(1));
    }

    if (!rep.arithmetic_over_Q && d.dim() > 0 &&
        vinberg_check(d, d.dim()).compact)
        rep.compact_caveat = true;
    return rep;
}

}  // namespace coxforge
