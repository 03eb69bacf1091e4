#include "coxforge/classify.hpp"

#include <algorithm>
#include <array>

namespace coxforge {

namespace {

// Internal edge codes: 3.. for finite labels, kInf for infinity edges,
// kWeight for weighted (dotted) edges, 0 for no edge.
constexpr int kInf = 1000;
constexpr int kWeight = 1001;

struct Graph {
    int n = 0;
    std::vector<int> lab;  // n*n label-code matrix
    int at(int i, int j) const { return lab[i * n + j]; }
};

Graph build_graph(const CoxeterDiagram& d) {
    Graph g;
    g.n = d.size();
    g.lab.assign(g.n * g.n, 0);
    for (const auto& [e, l] : d.edges()) {
        int code = l.kind == EdgeLabel::Finite
                       ? l.m
                       : (l.kind == EdgeLabel::Infinity ? kInf : kWeight);
        g.lab[e.first * g.n + e.second] = code;
        g.lab[e.second * g.n + e.first] = code;
    }
    return g;
}

Classification sph(IrreducibleType::Family f, int rank, int m = 0) {
    return {Classification::Spherical, {f, rank, m}};
}
Classification aff(IrreducibleType::Family f, int rank) {
    return {Classification::Affine, {f, rank, 0}};
}
Classification other() { return {}; }

// Classify the connected diagram induced on `v` inside g.
Classification classify_nodes(const Graph& g, const std::vector<int>& v) {
    const int n = (int)v.size();
    if (n == 1) return sph(IrreducibleType::A, 1);

    // Local adjacency among the selected nodes.
    std::vector<std::vector<std::pair<int, int>>> adj(n);  // (nbr, label)
    int edges = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int c = g.at(v[i], v[j]);
            if (!c) continue;
            if (c == kWeight) return other();
            adj[i].push_back({j, c});
            adj[j].push_back({i, c});
            ++edges;
        }

    if (n == 2) {
        int c = adj[0][0].second;
        if (c == 3) return sph(IrreducibleType::A, 2);
        if (c == 4) return sph(IrreducibleType::B, 2);
        if (c == 5) return sph(IrreducibleType::H, 2);
        if (c == kInf) return aff(IrreducibleType::AffA1, 1);
        return sph(IrreducibleType::G2m, 2, c);
    }

    // Infinity edges occur only in ~A1.
    for (int i = 0; i < n; ++i)
        for (auto& [j, c] : adj[i])
            if (c == kInf) return other();

    if (edges >= n) {
        if (edges > n) return other();
        // Single cycle through all nodes with all labels 3 is ~A_{n-1}.
        for (int i = 0; i < n; ++i) {
            if (adj[i].size() != 2) return other();
            for (auto& [j, c] : adj[i])
                if (c != 3) return other();
        }
        return aff(IrreducibleType::AffA, n - 1);
    }

    // Tree (edges == n-1, connected by precondition).
    int maxdeg = 0, n_branch = 0, branch = -1;
    for (int i = 0; i < n; ++i) {
        int dgr = (int)adj[i].size();
        maxdeg = std::max(maxdeg, dgr);
        if (dgr >= 3) {
            ++n_branch;
            branch = i;
        }
    }
    bool all3 = true;
    for (int i = 0; i < n; ++i)
        for (auto& [j, c] : adj[i])
            if (c != 3) all3 = false;

    if (maxdeg >= 4) {
        // Only ~D4: a star with four plain edges.
        if (n == 5 && maxdeg == 4 && n_branch == 1 && all3)
            return aff(IrreducibleType::AffD, 4);
        return other();
    }

    if (n_branch >= 2) {
        // ~D_{n-1}: two fork vertices, each with two pendant leaves,
        // joined by a plain path.
        if (n_branch != 2 || !all3) return other();
        for (int i = 0; i < n; ++i) {
            if (adj[i].size() != 3) continue;
            int leaves = 0;
            for (auto& [j, c] : adj[i])
                if (adj[j].size() == 1) ++leaves;
            if (leaves < 2) return other();
        }
        return aff(IrreducibleType::AffD, n - 1);
    }

    if (n_branch == 1) {
        // Three legs from the unique branch vertex; record lengths and the
        // labels along each leg (from the branch outward).
        std::array<std::vector<int>, 3> legs;  // label sequences
        int li = 0;
        for (auto& [first, c0] : adj[branch]) {
            std::vector<int>& seq = legs[li++];
            seq.push_back(c0);
            int prev = branch, cur = first;
            while (adj[cur].size() == 2) {
                for (auto& [nxt, c] : adj[cur])
                    if (nxt != prev) {
                        seq.push_back(c);
                        prev = cur;
                        cur = nxt;
                        break;
                    }
                if (adj[cur].size() > 2) return other();  // second branch
            }
        }
        std::sort(legs.begin(), legs.end(),
                  [](const std::vector<int>& x, const std::vector<int>& y) {
                      return x.size() < y.size();
                  });
        int a = (int)legs[0].size(), b = (int)legs[1].size(),
            c = (int)legs[2].size();
        if (all3) {
            if (a == 1 && b == 1) return sph(IrreducibleType::D, n);
            if (a == 1 && b == 2 && c == 2) return sph(IrreducibleType::E, 6);
            if (a == 1 && b == 2 && c == 3) return sph(IrreducibleType::E, 7);
            if (a == 1 && b == 2 && c == 4) return sph(IrreducibleType::E, 8);
            if (a == 2 && b == 2 && c == 2) return aff(IrreducibleType::AffE, 6);
            if (a == 1 && b == 3 && c == 3) return aff(IrreducibleType::AffE, 7);
            if (a == 1 && b == 2 && c == 5) return aff(IrreducibleType::AffE, 8);
            return other();
        }
        // ~B_{n-1}: legs (1,1,c), all plain except a single 4 on the
        // outermost edge of one leg; the other two legs are single edges.
        for (int special = 0; special < 3; ++special) {
            bool ok = true;
            for (int k = 0; k < 3 && ok; ++k) {
                const std::vector<int>& leg = legs[k];
                if (k == special) {
                    for (size_t p = 0; p + 1 < leg.size(); ++p)
                        if (leg[p] != 3) ok = false;
                    if (leg.back() != 4) ok = false;
                } else {
                    if (leg.size() != 1 || leg[0] != 3) ok = false;
                }
            }
            if (ok) return aff(IrreducibleType::AffB, n - 1);
        }
        return other();
    }

    // Path: collect labels from one end.
    int end = -1;
    for (int i = 0; i < n; ++i)
        if (adj[i].size() == 1) end = i;
    std::vector<int> seq;
    {
        int prev = -1, cur = end;
        while ((int)seq.size() < n - 1) {
            for (auto& [nxt, c] : adj[cur])
                if (nxt != prev) {
                    seq.push_back(c);
                    prev = cur;
                    cur = nxt;
                    break;
                }
        }
    }
    const int L = n - 1;
    std::vector<int> marked;
    for (int p = 0; p < L; ++p)
        if (seq[p] != 3) marked.push_back(p);

    if (marked.empty()) return sph(IrreducibleType::A, n);
    if (marked.size() == 1) {
        int p = marked[0], m = seq[p];
        bool at_end = (p == 0 || p == L - 1);
        if (m == 4) {
            if (at_end) return sph(IrreducibleType::B, n);
            if (n == 4) return sph(IrreducibleType::F, 4);
            if (n == 5 && (p == 1 || p == 2))
                return aff(IrreducibleType::AffF4, 4);
            return other();
        }
        if (m == 5 && at_end && (n == 3 || n == 4))
            return sph(IrreducibleType::H, n);
        if (m == 6 && n == 3) return aff(IrreducibleType::AffG2, 2);
        return other();
    }
    if (marked.size() == 2 && seq[marked[0]] == 4 && seq[marked[1]] == 4 &&
        marked[0] == 0 && marked[1] == L - 1)
        return aff(IrreducibleType::AffC, n - 1);
    return other();
}

// Component of v inside subset `in` (flag array), nodes sorted.
std::vector<int> component_of(const Graph& g, const std::vector<char>& in,
                              int v) {
    std::vector<int> comp{v}, stack{v};
    std::vector<char> seen(g.n, 0);
    seen[v] = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w = 0; w < g.n; ++w)
            if (in[w] && !seen[w] && g.at(u, w)) {
                seen[w] = 1;
                stack.push_back(w);
                comp.push_back(w);
            }
    }
    std::sort(comp.begin(), comp.end());
    return comp;
}

int affine_nodes_for_rank(int rank) { return 2 * rank; }  // upper bound

}  // namespace

std::string IrreducibleType::str() const {
    switch (family) {
        case A: return "A" + std::to_string(rank);
        case B: return "B" + std::to_string(rank);
        case D: return "D" + std::to_string(rank);
        case E: return "E" + std::to_string(rank);
        case F: return "F4";
        case G2m:
            return m == 6 ? "G2" : "G2(" + std::to_string(m) + ")";
        case H: return "H" + std::to_string(rank);
        case AffA1: return "~A1";
        case AffA: return "~A" + std::to_string(rank);
        case AffB: return "~B" + std::to_string(rank);
        case AffC: return "~C" + std::to_string(rank);
        case AffD: return "~D" + std::to_string(rank);
        case AffE: return "~E" + std::to_string(rank);
        case AffF4: return "~F4";
        case AffG2: return "~G2";
    }
    return "?";
}

Classification classify_connected(const CoxeterDiagram& d) {
    if (d.size() == 0) throw std::invalid_argument("empty diagram");
    Graph g = build_graph(d);
    std::vector<int> all(d.size());
    for (int i = 0; i < d.size(); ++i) all[i] = i;
    return classify_nodes(g, all);
}

namespace {

// Shared DFS over subsets in ascending node order.  `want_affine` switches
// the hereditary predicate: for spherical enumeration every component must
// stay spherical; for affine enumeration components may be spherical (still
// growable) or affine.
struct SubsetDfs {
    const Graph& g;
    bool want_affine;
    int limit;  // max subset size (spherical) or max rank (affine)
    const std::function<void(const std::vector<int>&, int)>& emit;

    std::vector<int> cur;
    std::vector<char> in;
    // Per-component bookkeeping, recomputed on the component of the added
    // node only; comp_rank: affine components' (nodes-1), spherical's nodes.
    // For pruning we track (#affine components, their rank sum, spherical
    // node count).

    SubsetDfs(const Graph& g_, bool wa, int lim,
              const std::function<void(const std::vector<int>&, int)>& e)
        : g(g_), want_affine(wa), limit(lim), emit(e), in(g_.n, 0) {}

    void run() {
        if (g.n > kDefaultNodeCap)
            throw std::invalid_argument("diagram exceeds enumeration cap");
        for (int v = 0; v < g.n; ++v) extend(v);
    }

    void extend(int v) {
        cur.push_back(v);
        in[v] = 1;
        bool viable = check_and_emit();
        if (viable) {
            int max_nodes =
                want_affine ? affine_nodes_for_rank(limit) : limit;
            if ((int)cur.size() < max_nodes)
                for (int w = v + 1; w < g.n; ++w) extend(w);
        }
        in[v] = 0;
        cur.pop_back();
    }

    // Returns false when the current subset can be pruned.
    bool check_and_emit() {
        // Classify every component (subset sizes are small; recomputing is
        // simpler than caching and fast enough).
        std::vector<char> seen(g.n, 0);
        int rank_affine = 0, nodes_spherical = 0;
        bool all_spherical = true, all_affine = true;
        for (int v : cur) {
            if (seen[v]) continue;
            std::vector<int> comp = component_of(g, in, v);
            for (int u : comp) seen[u] = 1;
            Classification c = classify_nodes(g, comp);
            if (c.kind == Classification::Other) return false;
            if (c.affine()) {
                all_spherical = false;
                rank_affine += (int)comp.size() - 1;
            } else {
                all_affine = false;
                nodes_spherical += (int)comp.size();
            }
        }
        if (!want_affine) {
            if (!all_spherical) return false;
            emit(cur, (int)cur.size());
            return true;
        }
        // Lower bound on the total rank any completion can reach.
        if (rank_affine + nodes_spherical > limit) return false;
        if (all_affine && rank_affine <= limit) emit(cur, rank_affine);
        return true;
    }
};

TypedSubdiagram type_subset(const Graph& g, const std::vector<int>& nodes) {
    TypedSubdiagram t;
    t.nodes = nodes;
    std::vector<char> in(g.n, 0), seen(g.n, 0);
    for (int v : nodes) in[v] = 1;
    for (int v : nodes) {
        if (seen[v]) continue;
        std::vector<int> comp = component_of(g, in, v);
        for (int u : comp) seen[u] = 1;
        Classification c = classify_nodes(g, comp);
        int rank = c.affine() ? (int)comp.size() - 1 : (int)comp.size();
        t.total_rank += rank;
        t.components.push_back({c.type, comp});
    }
    return t;
}

}  // namespace

std::vector<TypedSubdiagram> enumerate_spherical(const CoxeterDiagram& d,
                                                 int rank) {
    Graph g = build_graph(d);
    std::vector<TypedSubdiagram> out;
    std::function<void(const std::vector<int>&, int)> emit =
        [&](const std::vector<int>& nodes, int r) {
            if (r == rank) out.push_back(type_subset(g, nodes));
        };
    SubsetDfs dfs(g, false, rank, emit);
    dfs.run();
    return out;
}

std::vector<TypedSubdiagram> enumerate_affine(const CoxeterDiagram& d,
                                              int rank) {
    Graph g = build_graph(d);
    std::vector<TypedSubdiagram> out;
    std::function<void(const std::vector<int>&, int)> emit =
        [&](const std::vector<int>& nodes, int r) {
            if (r == rank) out.push_back(type_subset(g, nodes));
        };
    SubsetDfs dfs(g, true, rank, emit);
    dfs.run();
    return out;
}

void for_each_spherical_subset(
    const CoxeterDiagram& d, int max_size,
    const std::function<void(const std::vector<int>&)>& fn) {
    Graph g = build_graph(d);
    std::function<void(const std::vector<int>&, int)> emit =
        [&](const std::vector<int>& nodes, int) { fn(nodes); };
    SubsetDfs dfs(g, false, max_size, emit);
    dfs.run();
}

void for_each_affine_subset(
    const CoxeterDiagram& d, int max_rank,
    const std::function<void(const std::vector<int>&, int rank)>& fn) {
    Graph g = build_graph(d);
    std::function<void(const std::vector<int>&, int)> emit =
        [&](const std::vector<int>& nodes, int r) { fn(nodes, r); };
    SubsetDfs dfs(g, true, max_rank, emit);
    dfs.run();
}

}  // namespace coxforge
