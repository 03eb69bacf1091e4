// Coxeter diagram data model: parsing/serialization, Gram matrix
// construction, subdiagram extraction, isomorphism and DOT export.
#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coxforge/algebra.hpp"

namespace coxforge {

// Edge label of a Coxeter diagram.  m = 2 is never stored: absence of an
// edge means orthogonal hyperplanes.  Infinity covers parallel hyperplanes
// (Gram entry -1); Weighted covers ultraparallel ones (entry w < -1).
struct EdgeLabel {
    enum Kind { Finite, Infinity, Weighted };
    Kind kind = Finite;
    int m = 3;  // valid when kind == Finite, m >= 3
    QS3 w;      // valid when kind == Weighted; Gram entry (negative)

    static EdgeLabel finite(int m) {
        EdgeLabel e;
        e.kind = Finite;
        e.m = m;
        return e;
    }
    static EdgeLabel infinity() {
        EdgeLabel e;
        e.kind = Infinity;
        return e;
    }
    static EdgeLabel weighted(const QS3& w) {
        EdgeLabel e;
        e.kind = Weighted;
        e.w = w;
        return e;
    }

    bool operator==(const EdgeLabel& o) const {
        if (kind != o.kind) return false;
        if (kind == Finite) return m == o.m;
        if (kind == Weighted) return w == o.w;
        return true;
    }
    bool operator!=(const EdgeLabel& o) const { return !(*this == o); }
    // Deterministic order used by canonical forms.
    bool operator<(const EdgeLabel& o) const;

    std::string str() const;  // "3", "6", "inf", "w(a,b)"
};

// Labeled undirected graph on nodes 0..size-1 (file format is 1-based).
class CoxeterDiagram {
  public:
    CoxeterDiagram() = default;
    explicit CoxeterDiagram(int nodes, int dim = 0)
        : nodes_(nodes), dim_(dim) {}

    int size() const { return nodes_; }
    // Ambient dimension from the file header (0 when unset).
    int dim() const { return dim_; }
    void set_dim(int d) { dim_ = d; }

    void add_edge(int i, int j, const EdgeLabel& l);
    const EdgeLabel* edge(int i, int j) const;  // nullptr when orthogonal
    const std::map<std::pair<int, int>, EdgeLabel>& edges() const {
        return edges_;
    }
    int edge_count() const { return (int)edges_.size(); }

    const std::vector<std::string>& names() const { return names_; }
    void set_name(int i, const std::string& n);

    std::vector<int> neighbors(int i) const;
    bool connected() const;
    // Connected components of the induced subgraph on `nodes`
    // (all nodes when empty).
    std::vector<std::vector<int>> components(
        const std::vector<int>& nodes = {}) const;

    bool operator==(const CoxeterDiagram& o) const {
        return nodes_ == o.nodes_ && edges_ == o.edges_;
    }

  private:
    int nodes_ = 0;
    int dim_ = 0;
    std::map<std::pair<int, int>, EdgeLabel> edges_;
    std::vector<std::string> names_;
};

// Raised when an exact Gram entry -cos(pi/m) does not lie in Q(sqrt(3)).
struct InexactLabel : std::domain_error {
    int m;
    explicit InexactLabel(int m_)
        : std::domain_error("edge label " + std::to_string(m_) +
                            " has no exact Gram entry in Q(sqrt(3))"),
          m(m_) {}
};

// Raised on malformed diagram files; line is 1-based.
struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what),
          line(line_) {}
};

// Parse the line-based diagram format:
//   # comment
//   dim <n>
//   nodes <N>
//   edge <i> <j> <m|inf>
//   weight <i> <j> <a> <b>     (Gram entry -(a + b*sqrt(3)), a,b as p/q)
CoxeterDiagram parse_diagram(const std::string& text);
std::string serialize_diagram(const CoxeterDiagram& d);

// Gram matrix with 1 on the diagonal; -1/2 for label 3, -sqrt(3)/2 for
// label 6, -1 for infinity, w for weighted edges.  Throws InexactLabel for
// finite labels outside {2,3,6}.
SymMatrix gram_matrix(const CoxeterDiagram& d);

// Induced labeled subgraph; node k of the result corresponds to nodes[k]
// of d (nodes are sorted first).
CoxeterDiagram induced_subdiagram(const CoxeterDiagram& d,
                                  const std::vector<int>& nodes);

// True iff some node bijection preserves all edge labels.
bool isomorphic(const CoxeterDiagram& a, const CoxeterDiagram& b);

// Graphviz export: label-3 edges plain, other labels printed on the edge.
std::string to_dot(const CoxeterDiagram& d);

}  // namespace coxforge
