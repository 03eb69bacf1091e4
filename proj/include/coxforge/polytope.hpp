// Finite-volume/compactness criterion for hyperbolic Coxeter diagrams,
// face counting, and codimension-k face extraction with the four-case
// dihedral-angle rule.
#pragma once

#include <optional>

#include "coxforge/classify.hpp"

namespace coxforge {

// Verdict of the finite-volume criterion for a diagram in H^n.
struct PolytopeReport {
    bool connected = false;
    // Inertia of the cosine Gram matrix; absent when some label has no
    // exact Gram entry (the criterion itself is purely combinatorial).
    std::optional<Signature> sig;
    bool is_hyperbolic = false;  // signature (n, 1) up to zeros
    bool has_vertex = false;
    bool finite_volume = false;
    bool compact = false;
    // A spherical rank-(n-1) subdiagram with extension count != 2,
    // present when has_vertex holds but finite_volume fails.
    std::optional<TypedSubdiagram> failure_witness;
};

// Criterion: the polyhedron has finite volume iff some vertex exists
// (spherical rank-n or affine rank-(n-1) subdiagram) and every spherical
// rank-(n-1) subdiagram extends in exactly two ways to a strictly larger
// subdiagram that is spherical of rank n or affine of rank n-1.  Compact
// additionally requires that no affine rank-(n-1) subdiagram exists.
PolytopeReport vinberg_check(const CoxeterDiagram& d, int n);

// Face counts by dimension: f[k] = number of k-dimensional faces,
// k = 0..n-1.  Faces of dimension n-k correspond to spherical rank-k
// subdiagrams; ideal vertices to affine rank-(n-1) subdiagrams.
struct FVector {
    std::vector<long> f;
    long ideal_vertex_count = 0;
};

// Precondition: vinberg_check(d, n).finite_volume.
FVector f_vector(const CoxeterDiagram& d, int n);

// Nodes outside sigma that together with sigma span a spherical diagram.
// Throws std::invalid_argument when sigma itself is not spherical.
std::vector<int> good_neighbors(const CoxeterDiagram& d,
                                const std::vector<int>& sigma);

// Dihedral angle between the facets of the sigma-face carried by two good
// neighbors.  Unchanged means "copy the label between nu1 and nu2".
enum class AngleOutcome { Unchanged, Right, Third, Quarter, Sixth, Tenth, Disjoint };

// Four-case rule, keyed on how nu1/nu2 attach to the components of sigma.
// Precondition: sigma spherical with no component of type A_l or D5;
// nu1, nu2 good neighbors.  Throws std::invalid_argument otherwise.
AngleOutcome allcock_angle(const CoxeterDiagram& d,
                           const std::vector<int>& sigma, int nu1, int nu2);

// Coxeter diagram of the sigma-face: one node per good neighbor, edges
// from allcock_angle (Disjoint becomes an Infinity edge, Unchanged copies
// the original label).  dim of the result = d.dim() - rank(sigma) when
// d.dim() is set.
CoxeterDiagram allcock_face(const CoxeterDiagram& d,
                            const std::vector<int>& sigma);

// True iff no proper connected node subset induces a diagram that itself
// passes the finite-volume criterion in H^n (with hyperbolic signature,
// when the Gram matrix is exactly representable).
bool no_proper_finite_subdiagram(const CoxeterDiagram& d, int n);

}  // namespace coxforge
