// Admissibility engine: coefficient strings against a product of affine
// diagrams, Lambda-ratios, exact Lorentzian pair products, admissible-set
// enumeration, diagram assembly, and the classification driver.
#pragma once

#include "coxforge/polytope.hpp"
#include "coxforge/rootdata.hpp"

namespace coxforge {

// Product sigma_1 u ... u sigma_m of affine diagrams carried by an ideal
// vertex; the search driver uses sigma_1 = ~G2 and total rank n-1.
struct AffineProduct {
    std::vector<IrreducibleType> components;  // affine tags

    int total_rank() const;
    // Nodes of component p (= rank + 1).
    int component_size(int p) const;
    std::string str() const;  // "G2,A6" (tilde implied)
};

// Parse "G2,A6,E8": comma-separated affine components, tilde implied,
// rank appended for the A/D/E families.  Throws std::invalid_argument.
AffineProduct parse_affine_product(const std::string& text);

// Coefficient string of a norm-2 vector x against the product basis:
// coeffs[p][j] = |<x, e_j^p>| under the positive-magnitude convention.
// Allowed values: {0, 1, sqrt3} at a norm-2 node, {0, sqrt3, 3} at a
// norm-6 node.
using CoeffString = std::vector<std::vector<QS3>>;

// Parse "0,1,s3;3,0,0,..." (',' separates coefficients, ';' components;
// tokens 0, 1, s3, 3).  Validates shape and per-node domain against sp.
CoeffString parse_coeff_string(const AffineProduct& sp,
                               const std::string& text);
std::string format_coeff_string(const CoeffString& x);

// Strict ordering of equally shaped strings by the flattened coefficient
// sequence under the real embedding; used for deterministic output.
bool coeff_string_less(const CoeffString& x, const CoeffString& y);

// Per-component ratios Lambda_p = (sum_j c_j k_j) / (sum_j c_j l_j) with
// c the highest-root marks, k from x and l from y.  Empty result when any
// numerator or denominator vanishes (such a vector passes through the
// apex and is not a truncating hyperplane).  Throws on shape mismatch.
std::optional<std::vector<QS3>> lambda_ratios(const AffineProduct& sp,
                                              const CoeffString& x,
                                              const CoeffString& y);

// Exact product <x, y> = Lambda + 1/Lambda - sum_p Delta_p for norm-2
// vectors, with Delta_p the s-weighted cross sum of component p and
// Lambda := Lambda_1.  Throws std::domain_error when Lambda is undefined.
QS3 pair_product(const AffineProduct& sp, const CoeffString& x,
                 const CoeffString& y);

// True iff all Lambda_p are defined, equal, positive, and the product
// lies in {0, -1, -sqrt3}.
bool is_admissible(const AffineProduct& sp, const CoeffString& x,
                   const CoeffString& y);

struct EnumerationConstraints {
    // Require the first two component-1 coefficients to be not both zero
    // in every ~G2 component rather than only the first.
    bool bad_neighbor_all_g2 = false;
};

// All strings y over the coefficient domain with {fixed..., y} pairwise
// admissible, y not among fixed, and the bad-neighbor constraint on
// component 1 (its first two coefficients are not both zero).  Output is
// sorted by coeff_string_less.  Throws std::invalid_argument when fixed
// is empty or contains a malformed string.
std::vector<CoeffString> enumerate_admissible(
    const AffineProduct& sp, const std::vector<CoeffString>& fixed,
    const EnumerationConstraints& constraints = {});

// Extended Dynkin diagram of one component in the root-data node layout.
CoxeterDiagram extended_diagram(const IrreducibleType& t);

// Diagram on all e-nodes (components laid out per extended_diagram,
// mutually orthogonal) plus one node per string; edges string<->e-node
// decoded from the coefficients (norm-2 node: 1 -> 3, sqrt3 -> 6; norm-6
// node: sqrt3 -> 3, 3 -> 6) and string<->string from pair_product
// (0 -> none, -1 -> 3, -sqrt3 -> 6).  Throws when strings are not
// pairwise admissible.
CoxeterDiagram assemble_diagram(const AffineProduct& sp,
                                const std::vector<CoeffString>& strings,
                                int n);

// Labels within {2,3,6}, at least one 6, no Infinity/Weighted edges.
bool is_adeg(const CoxeterDiagram& d);

// Brute-force search over connected (n+1)-node diagrams with labels in
// {2,3,6}, at least one 6, Gram signature (n,1,0) and finite volume;
// deduped by isomorphism.
std::vector<CoxeterDiagram> enumerate_adeg_simplices(int n);

// Classification driver for n >= 5: enumerates ideal-vertex products
// sigma_infty = ~G2 u sigma_2 u ... of rank n-1 through their embeddings
// into the (n-2)-dimensional face catalog, derives the truncating
// strings, searches admissible extensions, and keeps every assembled
// diagram that bounds a finite-volume polyhedron with no proper
// finite-volume subdiagram; deduped by isomorphism.
std::vector<CoxeterDiagram> classify_dimension(
    int n, const std::vector<CoxeterDiagram>& face_catalog);

}  // namespace coxforge
