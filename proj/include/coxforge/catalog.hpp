// Bundled data: the 34 known ADE-polyhedra, the 24 known ADEG-polyhedra,
// and the admissible-pair expectation tables, with verification routines
// that re-derive every claim from the engine.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coxforge/diagram.hpp"

namespace coxforge {

struct CatalogEntry {
    enum Family { ADE, ADEG };
    std::string id;  // e.g. "adeg/n09_pstar"
    Family family = ADE;
    int dimension = 0;
    // simplex | pyramid | truncated-simplex | exceptional
    std::string tag;
    CoxeterDiagram diagram;
};

// One fixed-string block of an expectation table (a in {s3, 3}).
struct ExpectationBlock {
    std::string a;
    std::string x;  // fixed string, engine syntax
    // Admissible strings with their products against x, in enumeration
    // order; empty for pairwise-only companion tables.
    std::vector<std::pair<std::string, std::string>> strings;
    // Upper triangle: row i holds entries for columns i+1..; nullopt
    // marks an inadmissible pair.
    std::vector<std::vector<std::optional<std::string>>> pairwise;
    bool has_pairwise = false;
};

struct ExpectationTable {
    std::string id;      // "table12"
    std::string sigma;   // "G2,A6"
    // Id of the table holding this table's strings, when this one only
    // carries pairwise products.
    std::optional<std::string> companion;
    std::vector<ExpectationBlock> blocks;
};

// Root of the bundled data tree: the COXFORGE_DATA environment variable
// when set, otherwise the compiled-in source-tree location.
std::string data_dir();

// Load and parse the full diagram catalog / all expectation tables.
// Throws std::runtime_error on missing or malformed data.
std::vector<CatalogEntry> load_catalog();
std::vector<ExpectationTable> load_expectation_tables();

struct VerifyResult {
    std::string id;
    bool pass = false;
    std::string detail;  // reason on failure
};

// Per-entry re-verification of the diagram catalog: finite volume,
// compact exactly for the four 2-dimensional ADEG triangles, family
// label constraint, no proper finite-volume subdiagram, f_{n-1} = node
// count, and arithmeticity over Q for ADEG entries with n >= 3 (with
// the one documented tetrahedron exception, which must fail).
std::vector<VerifyResult> verify_catalog();

// Re-derives every expectation table from enumerate_admissible and
// pair_product and compares bit-exactly.
std::vector<VerifyResult> verify_expectations();

}  // namespace coxforge
