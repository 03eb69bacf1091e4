// Root-system data for the affine components used by the admissibility
// engine: node norms, highest-root marks, and the pairwise s-coefficients
// derived from fundamental-weight inner products.
#pragma once

#include "coxforge/classify.hpp"
#include "coxforge/algebra.hpp"

namespace coxforge {

// Data for one irreducible system in its extended-diagram node ordering;
// index r (0-based) is the added node carrying the negated highest root.
struct RootSystemData {
    IrreducibleType type;   // normalized spherical type
    int rank = 0;           // r; the extended diagram has r+1 nodes
    std::vector<int> norms;         // r+1 squared root lengths, 2 or 6
    std::vector<long> marks;        // r+1 highest-root coefficients, last=1
    std::vector<std::vector<Rational>> s;  // (r+1)x(r+1), symmetric, s_ii=0
    // Inner products of the extended basis (added node included); encodes
    // the extended Dynkin diagram's adjacency.
    std::vector<std::vector<long>> ext_gram;
};

// Supported: A and D up to rank 17, E6..E8, G2 (label-6 two-node system).
// Affine family tags are accepted and mapped to their underlying finite
// system.
bool supported_root_type(const IrreducibleType& t);

// Cached lookup; throws std::invalid_argument for unsupported types.
const RootSystemData& root_data(const IrreducibleType& t);

// Convenience accessors (1-based i, j as in the printed tables).
std::vector<long> marks(const IrreducibleType& t);
std::vector<int> norms(const IrreducibleType& t);
Rational s_value(const IrreducibleType& t, int i, int j);

}  // namespace coxforge
