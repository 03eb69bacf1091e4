#include "coxforge/catalog.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "coxforge/arith.hpp"
#include "coxforge/prokhorov.hpp"

#ifndef COXFORGE_DATA_DIR
#define COXFORGE_DATA_DIR "data"
#endif

namespace coxforge {

namespace {

using nlohmann::json;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in.good())
        throw std::runtime_error("cannot open data file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json load_json(const std::string& rel) {
    return json::parse(slurp(data_dir() + "/" + rel));
}

// The one ADEG entry that is not arithmetic over Q: the 4-cycle
// tetrahedron crossing its single label-6 edge once.
constexpr const char* kNonArithmeticAdeg = "adeg/n03_06";

}  // namespace

std::string data_dir() {
    if (const char* env = std::getenv("COXFORGE_DATA"))
        if (*env) return env;
    return COXFORGE_DATA_DIR;
}

std::vector<CatalogEntry> load_catalog() {
    json idx = load_json("catalog.json");
    std::vector<CatalogEntry> out;
    for (const json& e : idx.at("entries")) {
        CatalogEntry c;
        c.id = e.at("id").get<std::string>();
        c.family = e.at("family").get<std::string>() == "ADEG"
                       ? CatalogEntry::ADEG
                       : CatalogEntry::ADE;
        c.dimension = e.at("dimension").get<int>();
        c.tag = e.at("tag").get<std::string>();
        c.diagram =
            parse_diagram(slurp(data_dir() + "/" + e.at("file").get<std::string>()));
        if (c.diagram.dim() != c.dimension)
            throw std::runtime_error(c.id + ": index/file dimension mismatch");
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<ExpectationTable> load_expectation_tables() {
    json idx = load_json("catalog.json");
    std::vector<ExpectationTable> out;
    for (const json& rel : idx.at("expectation_tables")) {
        json t = load_json(rel.get<std::string>() + ".json");
        ExpectationTable tab;
        tab.id = t.at("id").get<std::string>();
        tab.sigma = t.at("sigma").get<std::string>();
        if (t.contains("companion"))
            tab.companion = t.at("companion").get<std::string>();
        for (const json& b : t.at("blocks")) {
            ExpectationBlock blk;
            blk.a = b.at("a").get<std::string>();
            blk.x = b.at("x").get<std::string>();
            if (b.contains("strings"))
                for (const json& s : b.at("strings"))
                    blk.strings.emplace_back(s.at("y").get<std::string>(),
                                             s.at("product").get<std::string>());
            if (b.contains("pairwise")) {
                blk.has_pairwise = true;
                for (const json& row : b.at("pairwise")) {
                    std::vector<std::optional<std::string>> r;
                    for (const json& cell : row)
                        r.push_back(cell.is_null()
                                        ? std::nullopt
                                        : std::optional<std::string>(
                                              cell.get<std::string>()));
                    blk.pairwise.push_back(std::move(r));
                }
            }
            tab.blocks.push_back(std::move(blk));
        }
        out.push_back(std::move(tab));
    }
    return out;
}

std::vector<VerifyResult> verify_catalog() {
    std::vector<CatalogEntry> cat = load_catalog();
    std::vector<VerifyResult> out;
    for (const CatalogEntry& c : cat) {
        VerifyResult r;
        r.id = c.id;
        r.pass = true;
        auto fail = [&](const std::string& why) {
            r.pass = false;
            if (!r.detail.empty()) r.detail += "; ";
            r.detail += why;
        };

        const CoxeterDiagram& d = c.diagram;
        int n = c.dimension;

        // Family label constraint: ADE uses labels {2,3}; ADEG uses
        // {2,3,6} with at least one 6 (absent edges are label 2).
        int sixes = 0;
        for (const auto& [e, l] : d.edges()) {
            if (l.kind != EdgeLabel::Finite || (l.m != 3 && l.m != 6))
                fail("non-{3,6} edge");
            else if (l.m == 6)
                ++sixes;
        }
        if (c.family == CatalogEntry::ADE && sixes > 0)
            fail("ADE entry with a label-6 edge");
        if (c.family == CatalogEntry::ADEG && sixes == 0)
            fail("ADEG entry without a label-6 edge");

        PolytopeReport rep = vinberg_check(d, n);
        if (!rep.finite_volume) fail("not finite volume");
        if (!rep.is_hyperbolic) fail("not hyperbolic signature");
        bool triangle = c.family == CatalogEntry::ADEG && n == 2;
        if (rep.compact != triangle)
            fail(triangle ? "triangle not compact" : "unexpectedly compact");

        if (!no_proper_finite_subdiagram(d, n))
            fail("proper finite-volume subdiagram");

        FVector fv = f_vector(d, n);
        if (fv.f.empty() || fv.f.back() != d.size())
            fail("facet count != node count");

        if (c.family == CatalogEntry::ADEG && n >= 3) {
            bool arith = is_arithmetic_over_Q(d).arithmetic_over_Q;
            bool expected = c.id != kNonArithmeticAdeg;
            if (arith != expected)
                fail(expected ? "not arithmetic over Q"
                              : "expected the non-arithmetic exception");
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<VerifyResult> verify_expectations() {
    std::vector<ExpectationTable> tables = load_expectation_tables();
    std::vector<VerifyResult> out;
    for (const ExpectationTable& t : tables) {
        VerifyResult r;
        r.id = t.id;
        r.pass = true;
        auto fail = [&](const std::string& why) {
            r.pass = false;
            if (!r.detail.empty()) r.detail += "; ";
            r.detail += why;
        };
        AffineProduct sp = parse_affine_product(t.sigma);
        for (const ExpectationBlock& blk : t.blocks) {
            CoeffString x = parse_coeff_string(sp, blk.x);
            auto ys = enumerate_admissible(sp, {x});
            if (!t.companion) {
                if (ys.size() != blk.strings.size()) {
                    fail("a=" + blk.a + ": string count " +
                         std::to_string(ys.size()) + " != " +
                         std::to_string(blk.strings.size()));
                    continue;
                }
                for (size_t i = 0; i < ys.size(); ++i) {
                    if (format_coeff_string(ys[i]) != blk.strings[i].first)
                        fail("a=" + blk.a + ": string " + std::to_string(i));
                    if (pair_product(sp, x, ys[i]).str() !=
                        blk.strings[i].second)
                        fail("a=" + blk.a + ": product " + std::to_string(i));
                }
            }
            if (!blk.has_pairwise) continue;
            if (blk.pairwise.size() != ys.size()) {
                fail("a=" + blk.a + ": pairwise row count");
                continue;
            }
            for (size_t i = 0; i < ys.size(); ++i) {
                if (blk.pairwise[i].size() != ys.size() - i - 1) {
                    fail("a=" + blk.a + ": pairwise row width");
                    continue;
                }
                for (size_t j = i + 1; j < ys.size(); ++j) {
                    const auto& cell = blk.pairwise[i][j - i - 1];
                    bool adm = is_admissible(sp, ys[i], ys[j]);
                    if (adm != cell.has_value()) {
                        fail("a=" + blk.a + ": admissibility (" +
                             std::to_string(i) + "," + std::to_string(j) +
                             ")");
                        continue;
                    }
                    if (adm &&
                        pair_product(sp, ys[i], ys[j]).str() != *cell)
                        fail("a=" + blk.a + ": pairwise value (" +
                             std::to_string(i) + "," + std::to_string(j) +
                             ")");
                }
            }
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace coxforge
