// Rational-cycle arithmeticity test: a non-cocompact hyperbolic
// reflection group is arithmetic and defined over Q iff every cycle in
// the matrix 2*Gram has a rational-integer product.
#pragma once

#include <optional>

#include "coxforge/diagram.hpp"

namespace coxforge {

struct CycleReport {
    bool arithmetic_over_Q = false;
    // Node sequence i1,...,ik (the cycle closes back to i1) whose product
    // of 2*Gram entries is not a rational integer, with that product.
    // Present iff the verdict is negative.
    std::optional<std::vector<int>> witness_cycle;
    std::optional<QS3> witness_product;
    // The criterion characterizes arithmeticity (over Q) only for
    // non-cocompact groups; when the diagram's header dimension is set
    // and the polyhedron is compact, a negative verdict merely means
    // "not defined over Q" and this flag is raised.
    bool compact_caveat = false;
};

// True iff every simple cycle in the support graph of the nonzero
// off-diagonal entries of 2*Gram(d) has integral product.  Length-2
// cycles (4*g_ij^2) are checked first, then longer simple cycles by
// depth-first search.  Throws InexactLabel for finite labels outside
// {2,3,6}.
CycleReport is_arithmetic_over_Q(const CoxeterDiagram& d);

}  // namespace coxforge
