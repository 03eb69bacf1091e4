#include "coxforge/polytope.hpp"

#include <algorithm>
#include <unordered_set>

namespace coxforge {

namespace {

uint32_t mask_of(const std::vector<int>& nodes) {
    uint32_t m = 0;
    for (int v : nodes) m |= 1u << v;
    return m;
}

// Classification of every component of the induced diagram on `nodes`.
std::vector<std::pair<Classification, std::vector<int>>> typed_components(
    const CoxeterDiagram& d, const std::vector<int>& nodes) {
    std::vector<std::pair<Classification, std::vector<int>>> out;
    for (const auto& comp : d.components(nodes))
        out.push_back({classify_connected(induced_subdiagram(d, comp)), comp});
    return out;
}

bool all_spherical(const CoxeterDiagram& d, const std::vector<int>& nodes) {
    for (const auto& [c, comp] : typed_components(d, nodes))
        if (!c.spherical()) return false;
    return true;
}

TypedSubdiagram make_typed(const CoxeterDiagram& d,
                           const std::vector<int>& nodes) {
    TypedSubdiagram t;
    t.nodes = nodes;
    std::sort(t.nodes.begin(), t.nodes.end());
    for (const auto& [c, comp] : typed_components(d, t.nodes)) {
        int rank = c.affine() ? (int)comp.size() - 1 : (int)comp.size();
        t.total_rank += rank;
        t.components.push_back({c.type, comp});
    }
    return t;
}

}  // namespace

PolytopeReport vinberg_check(const CoxeterDiagram& d, int n) {
    if (n < 2) throw std::invalid_argument("ambient dimension must be >= 2");
    PolytopeReport r;
    r.connected = d.connected();
    try {
        r.sig = signature(gram_matrix(d));
        // Rank-(n+1) Lorentzian form; extra facets contribute zeros.
        r.is_hyperbolic = r.sig->positive == n && r.sig->negative == 1;
    } catch (const InexactLabel&) {
        // Criterion below is purely combinatorial; carry on without inertia.
    }

    std::vector<std::vector<int>> sph_corank1;
    std::unordered_set<uint32_t> sph_full;  // spherical rank-n node masks
    for_each_spherical_subset(d, n, [&](const std::vector<int>& s) {
        if ((int)s.size() == n - 1)
            sph_corank1.push_back(s);
        else if ((int)s.size() == n)
            sph_full.insert(mask_of(s));
    });
    std::vector<uint32_t> aff_masks;  // affine rank-(n-1) node masks
    for_each_affine_subset(d, n - 1, [&](const std::vector<int>& s, int rank) {
        if (rank == n - 1) aff_masks.push_back(mask_of(s));
    });

    r.has_vertex = !sph_full.empty() || !aff_masks.empty();
    if (!r.has_vertex) return r;

    r.finite_volume = true;
    for (const auto& sigma : sph_corank1) {
        uint32_t sm = mask_of(sigma);
        int extensions = 0;
        for (int v = 0; v < d.size(); ++v)
            if (!(sm & (1u << v)) && sph_full.count(sm | (1u << v)))
                ++extensions;
        for (uint32_t am : aff_masks)
            if ((sm & am) == sm) ++extensions;  // strict: |aff| >= n > n-1
        if (extensions != 2) {
            r.finite_volume = false;
            r.failure_witness = make_typed(d, sigma);
            break;
        }
    }
    r.compact = r.finite_volume && aff_masks.empty();
    return r;
}

FVector f_vector(const CoxeterDiagram& d, int n) {
    if (!vinberg_check(d, n).finite_volume)
        throw std::invalid_argument("diagram fails the finite-volume criterion");
    std::vector<long> by_rank(n + 1, 0);
    for_each_spherical_subset(d, n, [&](const std::vector<int>& s) {
        ++by_rank[s.size()];
    });
    long ideal = 0;
    for_each_affine_subset(d, n - 1, [&](const std::vector<int>&, int rank) {
        if (rank == n - 1) ++ideal;
    });
    FVector fv;
    fv.f.assign(n, 0);
    for (int k = 1; k < n; ++k) fv.f[n - k] = by_rank[k];
    fv.f[0] = by_rank[n] + ideal;
    fv.ideal_vertex_count = ideal;
    return fv;
}

std::vector<int> good_neighbors(const CoxeterDiagram& d,
                                const std::vector<int>& sigma) {
    std::vector<int> s = sigma;
    std::sort(s.begin(), s.end());
    if (s.empty() || !all_spherical(d, s))
        throw std::invalid_argument("sigma must be a spherical subdiagram");
    std::vector<char> in(d.size(), 0);
    for (int v : s) in[v] = 1;
    std::vector<int> good;
    for (int v = 0; v < d.size(); ++v) {
        if (in[v]) continue;
        std::vector<int> ext = s;
        ext.push_back(v);
        std::sort(ext.begin(), ext.end());
        if (all_spherical(d, ext)) good.push_back(v);
    }
    return good;
}

namespace {

// Shared state for face extraction: sigma's components and, per node of d,
// the set of component indices it attaches to.
struct FaceContext {
    const CoxeterDiagram& d;
    std::vector<int> sigma;                 // sorted
    std::vector<std::vector<int>> comps;    // components of sigma

    FaceContext(const CoxeterDiagram& d_, const std::vector<int>& sig)
        : d(d_), sigma(sig) {
        std::sort(sigma.begin(), sigma.end());
        for (const auto& [c, comp] : typed_components(d, sigma)) {
            if (!c.spherical())
                throw std::invalid_argument(
                    "sigma must be a spherical subdiagram");
            if (c.type.family == IrreducibleType::A ||
                (c.type.family == IrreducibleType::D && c.type.rank == 5))
                throw std::invalid_argument(
                    "face rule requires no component of type A_l or D5");
            comps.push_back(comp);
        }
    }

    std::vector<int> attach_set(int v) const {
        std::vector<int> out;
        for (size_t c = 0; c < comps.size(); ++c)
            for (int u : comps[c])
                if (d.edge(v, u)) {
                    out.push_back((int)c);
                    break;
                }
        return out;
    }

    // Type of the induced diagram on the listed components plus nu1, nu2.
    Classification joint_type(const std::vector<int>& comp_ids, int nu1,
                              int nu2) const {
        std::vector<int> nodes{nu1, nu2};
        for (int c : comp_ids)
            nodes.insert(nodes.end(), comps[c].begin(), comps[c].end());
        std::sort(nodes.begin(), nodes.end());
        CoxeterDiagram t = induced_subdiagram(d, nodes);
        if (!t.connected()) return Classification{};
        return classify_connected(t);
    }

    AngleOutcome angle(int nu1, int nu2) const {
        std::vector<int> a1 = attach_set(nu1), a2 = attach_set(nu2);
        const EdgeLabel* e = d.edge(nu1, nu2);
        if (a1.empty() && a2.empty()) return AngleOutcome::Unchanged;
        if (a1.empty() || a2.empty()) {
            // Exactly one attaches.
            if (!e) return AngleOutcome::Right;
            if (e->kind == EdgeLabel::Finite && e->m == 3) {
                Classification c =
                    joint_type(a1.empty() ? a2 : a1, nu1, nu2);
                if (c.spherical()) {
                    if (c.type.family == IrreducibleType::B ||
                        c.type.family == IrreducibleType::D)
                        return AngleOutcome::Quarter;
                    if (c.type.family == IrreducibleType::E &&
                        c.type.rank == 8)
                        return AngleOutcome::Sixth;
                    if (c.type.family == IrreducibleType::H &&
                        c.type.rank == 4)
                        return AngleOutcome::Tenth;
                }
            }
            return AngleOutcome::Disjoint;
        }
        // Both attach.  Shared component => "same component" rule.
        bool shared = false;
        for (int c : a1)
            if (std::find(a2.begin(), a2.end(), c) != a2.end()) shared = true;
        if (!shared) return e ? AngleOutcome::Disjoint : AngleOutcome::Right;
        if (e) return AngleOutcome::Disjoint;
        std::vector<int> un = a1;
        for (int c : a2)
            if (std::find(un.begin(), un.end(), c) == un.end())
                un.push_back(c);
        Classification c = joint_type(un, nu1, nu2);
        if (c.spherical()) {
            if (c.type.family == IrreducibleType::E && c.type.rank == 6)
                return AngleOutcome::Third;
            if ((c.type.family == IrreducibleType::E && c.type.rank == 8) ||
                c.type.family == IrreducibleType::F)
                return AngleOutcome::Quarter;
        }
        return AngleOutcome::Disjoint;
    }
};

}  // namespace

AngleOutcome allcock_angle(const CoxeterDiagram& d,
                           const std::vector<int>& sigma, int nu1, int nu2) {
    FaceContext ctx(d, sigma);
    return ctx.angle(nu1, nu2);
}

CoxeterDiagram allcock_face(const CoxeterDiagram& d,
                            const std::vector<int>& sigma) {
    FaceContext ctx(d, sigma);
    std::vector<int> good = good_neighbors(d, sigma);
    int dim = d.dim() > 0 ? d.dim() - (int)ctx.sigma.size() : 0;
    CoxeterDiagram face((int)good.size(), dim);
    for (size_t i = 0; i < good.size(); ++i)
        for (size_t j = i + 1; j < good.size(); ++j) {
            switch (ctx.angle(good[i], good[j])) {
                case AngleOutcome::Unchanged: {
                    const EdgeLabel* e = d.edge(good[i], good[j]);
                    if (e) face.add_edge((int)i, (int)j, *e);
                    break;
                }
                case AngleOutcome::Right:
                    break;
                case AngleOutcome::Third:
                    face.add_edge((int)i, (int)j, EdgeLabel::finite(3));
                    break;
                case AngleOutcome::Quarter:
                    face.add_edge((int)i, (int)j, EdgeLabel::finite(4));
                    break;
                case AngleOutcome::Sixth:
                    face.add_edge((int)i, (int)j, EdgeLabel::finite(6));
                    break;
                case AngleOutcome::Tenth:
                    face.add_edge((int)i, (int)j, EdgeLabel::finite(10));
                    break;
                case AngleOutcome::Disjoint:
                    face.add_edge((int)i, (int)j, EdgeLabel::infinity());
                    break;
            }
        }
    return face;
}

bool no_proper_finite_subdiagram(const CoxeterDiagram& d, int n) {
    const int N = d.size();
    // A finite-volume diagram in H^n has more than n nodes, so only proper
    // subsets of size n+1 .. N-1 can qualify; they must also be connected.
    std::vector<int> pick;
    std::function<bool(int, int)> any = [&](int start, int remaining) -> bool {
        if (remaining == 0) {
            CoxeterDiagram sub = induced_subdiagram(d, pick);
            if (!sub.connected()) return false;
            PolytopeReport r = vinberg_check(sub, n);
            return r.finite_volume && (!r.sig || r.is_hyperbolic);
        }
        for (int v = start; v <= N - remaining; ++v) {
            pick.push_back(v);
            if (any(v + 1, remaining - 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    for (int size = n + 1; size < N; ++size)
        if (any(0, size)) return false;
    return true;
}

}  // namespace coxforge
