// Recognition of connected spherical/affine Coxeter diagrams and
// enumeration of spherical/affine subdiagrams of a given rank.
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "coxforge/diagram.hpp"

namespace coxforge {

// Name of a connected diagram in the standard catalog.  The parameter m is
// meaningful for the two-node family G2m (G2^(m), any label m >= 5).
struct IrreducibleType {
    enum Family {
        A, B, D, E, F, G2m, H,          // spherical
        AffA1, AffA, AffB, AffC, AffD, AffE, AffF4, AffG2  // affine
    };
    Family family;
    int rank;
    int m = 0;

    bool affine() const { return family >= AffA1; }
    bool operator==(const IrreducibleType& o) const {
        return family == o.family && rank == o.rank && m == o.m;
    }
    bool operator<(const IrreducibleType& o) const {
        if (family != o.family) return family < o.family;
        if (rank != o.rank) return rank < o.rank;
        return m < o.m;
    }
    std::string str() const;  // "A5", "G2(7)", "~G2", "~D4", ...
};

// Result of recognizing one connected diagram.
struct Classification {
    enum Kind { Spherical, Affine, Other };
    Kind kind = Other;
    IrreducibleType type{};  // valid unless kind == Other

    bool spherical() const { return kind == Spherical; }
    bool affine() const { return kind == Affine; }
};

// Template match against the standard catalog of connected spherical and
// affine Coxeter diagrams; purely combinatorial (works for any labels).
// Precondition: d connected and nonempty.
Classification classify_connected(const CoxeterDiagram& d);

// A node subset whose induced diagram decomposes into recognized
// components.  Spherical components of k nodes have rank k; affine
// components of k nodes have rank k-1.
struct TypedSubdiagram {
    std::vector<int> nodes;  // sorted
    std::vector<std::pair<IrreducibleType, std::vector<int>>> components;
    int total_rank = 0;
};

// All node subsets whose induced diagram has every component spherical and
// total rank k, in lexicographic order of the node subset.
std::vector<TypedSubdiagram> enumerate_spherical(const CoxeterDiagram& d,
                                                 int rank);

// All node subsets whose induced diagram has every component affine
// (each of >= 2 nodes; ~A1 = the [inf] edge counts) and total rank k.
std::vector<TypedSubdiagram> enumerate_affine(const CoxeterDiagram& d,
                                              int rank);

// Streaming variants used by the polytope layer; the callback receives the
// node set (sorted ascending).  max_size bounds the subset size explored.
void for_each_spherical_subset(
    const CoxeterDiagram& d, int max_size,
    const std::function<void(const std::vector<int>&)>& fn);
void for_each_affine_subset(
    const CoxeterDiagram& d, int max_rank,
    const std::function<void(const std::vector<int>&, int rank)>& fn);

// Guard for pathological inputs; enumeration refuses larger diagrams.
inline constexpr int kDefaultNodeCap = 32;

}  // namespace coxforge
