#include "coxforge/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace coxforge {

bool EdgeLabel::operator<(const EdgeLabel& o) const {
    if (kind != o.kind) return kind < o.kind;
    if (kind == Finite) return m < o.m;
    if (kind == Weighted) {
        if (w.a != o.w.a) return w.a < o.w.a;
        return w.b < o.w.b;
    }
    return false;
}

std::string EdgeLabel::str() const {
    switch (kind) {
        case Finite:
            return std::to_string(m);
        case Infinity:
            return "inf";
        default:
            return "w(" + w.str() + ")";
    }
}

void CoxeterDiagram::add_edge(int i, int j, const EdgeLabel& l) {
    if (i == j) throw std::invalid_argument("self-loop");
    if (i < 0 || j < 0 || i >= nodes_ || j >= nodes_)
        throw std::out_of_range("node index out of range");
    if (i > j) std::swap(i, j);
    if (l.kind == EdgeLabel::Finite && l.m == 2) return;  // orthogonal
    edges_[{i, j}] = l;
}

const EdgeLabel* CoxeterDiagram::edge(int i, int j) const {
    if (i > j) std::swap(i, j);
    auto it = edges_.find({i, j});
    return it == edges_.end() ? nullptr : &it->second;
}

void CoxeterDiagram::set_name(int i, const std::string& n) {
    if (names_.empty()) names_.resize(nodes_);
    names_[i] = n;
}

std::vector<int> CoxeterDiagram::neighbors(int i) const {
    std::vector<int> out;
    for (const auto& [e, l] : edges_) {
        if (e.first == i) out.push_back(e.second);
        if (e.second == i) out.push_back(e.first);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> CoxeterDiagram::components(
    const std::vector<int>& nodes) const {
    std::vector<int> verts = nodes;
    if (verts.empty()) {
        verts.resize(nodes_);
        std::iota(verts.begin(), verts.end(), 0);
    }
    std::vector<int> in(nodes_, 0);
    for (int v : verts) in[v] = 1;
    std::vector<int> seen(nodes_, 0);
    std::vector<std::vector<int>> comps;
    for (int v : verts) {
        if (seen[v]) continue;
        std::vector<int> comp, stack{v};
        seen[v] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (const auto& [e, l] : edges_) {
                int w = -1;
                if (e.first == u) w = e.second;
                else if (e.second == u) w = e.first;
                if (w >= 0 && in[w] && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool CoxeterDiagram::connected() const {
    return nodes_ <= 1 || components().size() == 1;
}

CoxeterDiagram parse_diagram(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int nodes = -1, dim = 0;
    struct PendingEdge {
        int i, j, lineno;
        EdgeLabel l;
    };
    std::vector<PendingEdge> pend;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        auto need_int = [&](const char* what) {
            long v;
            if (!(ls >> v)) throw ParseError(lineno, std::string("expected ") + what);
            return (int)v;
        };
        if (kw == "dim") {
            dim = need_int("dimension");
            if (dim < 1) throw ParseError(lineno, "dim must be positive");
        } else if (kw == "nodes") {
            nodes = need_int("node count");
            if (nodes < 1) throw ParseError(lineno, "nodes must be positive");
        } else if (kw == "edge") {
            int i = need_int("node index");
            int j = need_int("node index");
            std::string lab;
            if (!(ls >> lab)) throw ParseError(lineno, "expected edge label");
            EdgeLabel l;
            if (lab == "inf") {
                l = EdgeLabel::infinity();
            } else {
                int m;
                try {
                    m = std::stoi(lab);
                } catch (...) {
                    throw ParseError(lineno, "malformed edge label '" + lab + "'");
                }
                if (m < 2) throw ParseError(lineno, "edge label must be >= 2");
                l = EdgeLabel::finite(m);
            }
            pend.push_back({i, j, lineno, l});
        } else if (kw == "weight") {
            int i = need_int("node index");
            int j = need_int("node index");
            std::string sa, sb;
            if (!(ls >> sa >> sb))
                throw ParseError(lineno, "expected two rationals");
            QS3 w;
            try {
                w = QS3(Rational(sa), Rational(sb));
                w.a.canonicalize();
                w.b.canonicalize();
            } catch (...) {
                throw ParseError(lineno, "malformed rational");
            }
            pend.push_back({i, j, lineno, EdgeLabel::weighted(-w)});
        } else {
            throw ParseError(lineno, "unknown keyword '" + kw + "'");
        }
    }
    if (nodes < 0) throw ParseError(lineno, "missing 'nodes' header");
    CoxeterDiagram d(nodes, dim);
    for (const auto& p : pend) {
        if (p.i < 1 || p.j < 1 || p.i > nodes || p.j > nodes)
            throw ParseError(p.lineno, "node index out of range");
        if (p.i == p.j) throw ParseError(p.lineno, "self-loop");
        if (d.edge(p.i - 1, p.j - 1))
            throw ParseError(p.lineno, "duplicate edge");
        d.add_edge(p.i - 1, p.j - 1, p.l);
    }
    return d;
}

std::string serialize_diagram(const CoxeterDiagram& d) {
    std::ostringstream out;
    if (d.dim() > 0) out << "dim " << d.dim() << "\n";
    out << "nodes " << d.size() << "\n";
    for (const auto& [e, l] : d.edges()) {
        if (l.kind == EdgeLabel::Weighted) {
            QS3 w = -l.w;
            out << "weight " << e.first + 1 << " " << e.second + 1 << " "
                << w.a.get_str() << " " << w.b.get_str() << "\n";
        } else {
            out << "edge " << e.first + 1 << " " << e.second + 1 << " "
                << l.str() << "\n";
        }
    }
    return out.str();
}

SymMatrix gram_matrix(const CoxeterDiagram& d) {
    SymMatrix g(d.size());
    for (int i = 0; i < d.size(); ++i) g.set(i, i, QS3(1));
    const QS3 half(Rational(1, 2));
    const QS3 half_s3(Rational(0), Rational(1, 2));
    for (const auto& [e, l] : d.edges()) {
        QS3 v;
        switch (l.kind) {
            case EdgeLabel::Finite:
                if (l.m == 3)
                    v = -half;
                else if (l.m == 6)
                    v = -half_s3;
                else
                    throw InexactLabel(l.m);
                break;
            case EdgeLabel::Infinity:
                v = QS3(-1);
                break;
            case EdgeLabel::Weighted:
                v = l.w;
                break;
        }
        g.set(e.first, e.second, v);
    }
    return g;
}

CoxeterDiagram induced_subdiagram(const CoxeterDiagram& d,
                                  const std::vector<int>& nodes) {
    if (nodes.empty()) throw std::invalid_argument("empty node subset");
    std::vector<int> sorted = nodes;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> back(d.size(), -1);
    for (size_t k = 0; k < sorted.size(); ++k) {
        int v = sorted[k];
        if (v < 0 || v >= d.size())
            throw std::out_of_range("node index out of range");
        if (back[v] >= 0) throw std::invalid_argument("duplicate node");
        back[v] = (int)k;
    }
    CoxeterDiagram sub((int)sorted.size(), d.dim());
    for (const auto& [e, l] : d.edges())
        if (back[e.first] >= 0 && back[e.second] >= 0)
            sub.add_edge(back[e.first], back[e.second], l);
    return sub;
}

namespace {

// Backtracking label-preserving bijection search with degree/label
// signature pruning; diagrams here have at most ~25 nodes.
struct IsoSearch {
    const CoxeterDiagram& a;
    const CoxeterDiagram& b;
    std::vector<int> map_ab;   // node of a -> node of b or -1
    std::vector<bool> used_b;

    IsoSearch(const CoxeterDiagram& a_, const CoxeterDiagram& b_)
        : a(a_), b(b_), map_ab(a_.size(), -1), used_b(b_.size(), false) {}

    bool compatible(int va, int vb) const {
        // All already-mapped neighbors must agree on labels.
        for (int u = 0; u < a.size(); ++u) {
            if (map_ab[u] < 0) continue;
            const EdgeLabel* ea = a.edge(va, u);
            const EdgeLabel* eb = b.edge(vb, map_ab[u]);
            if ((ea == nullptr) != (eb == nullptr)) return false;
            if (ea && *ea != *eb) return false;
        }
        return true;
    }

    bool search(int va) {
        if (va == a.size()) return true;
        for (int vb = 0; vb < b.size(); ++vb) {
            if (used_b[vb]) continue;
            if (!compatible(va, vb)) continue;
            map_ab[va] = vb;
            used_b[vb] = true;
            if (search(va + 1)) return true;
            map_ab[va] = -1;
            used_b[vb] = false;
        }
        return false;
    }
};

// Multiset of (label, count) signatures per node, a cheap invariant.
std::vector<std::string> node_signatures(const CoxeterDiagram& d) {
    std::vector<std::vector<std::string>> per(d.size());
    for (const auto& [e, l] : d.edges()) {
        per[e.first].push_back(l.str());
        per[e.second].push_back(l.str());
    }
    std::vector<std::string> sig;
    for (auto& v : per) {
        std::sort(v.begin(), v.end());
        std::string s;
        for (auto& x : v) s += x + ",";
        sig.push_back(s);
    }
    std::sort(sig.begin(), sig.end());
    return sig;
}

}  // namespace

bool isomorphic(const CoxeterDiagram& a, const CoxeterDiagram& b) {
    if (a.size() != b.size() || a.edge_count() != b.edge_count()) return false;
    if (node_signatures(a) != node_signatures(b)) return false;
    IsoSearch s(a, b);
    return s.search(0);
}

std::string to_dot(const CoxeterDiagram& d) {
    std::ostringstream out;
    out << "graph coxeter {\n  node [shape=circle];\n";
    for (int i = 0; i < d.size(); ++i) {
        out << "  n" << i + 1;
        if (!d.names().empty() && !d.names()[i].empty())
            out << " [label=\"" << d.names()[i] << "\"]";
        out << ";\n";
    }
    for (const auto& [e, l] : d.edges()) {
        out << "  n" << e.first + 1 << " -- n" << e.second + 1;
        if (l.kind == EdgeLabel::Infinity)
            out << " [label=\"∞\"]";
        else if (l.kind == EdgeLabel::Weighted)
            out << " [label=\"" << (-l.w).str() << "\", style=dotted]";
        else if (l.m != 3)
            out << " [label=\"" << l.m << "\"]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace coxforge
