#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "coxforge/catalog.hpp"
#include "coxforge/prokhorov.hpp"

using namespace coxforge;

namespace {

CoeffString cs(const AffineProduct& sp, const std::string& text) {
    return parse_coeff_string(sp, text);
}

// Enumerated admissible strings, formatted, in engine order.
std::vector<std::string> enum_fmt(const AffineProduct& sp,
                                  const std::vector<std::string>& fixed) {
    std::vector<CoeffString> fx;
    for (const auto& s : fixed) fx.push_back(cs(sp, s));
    std::vector<std::string> out;
    for (const auto& y : enumerate_admissible(sp, fx))
        out.push_back(format_coeff_string(y));
    return out;
}

std::string prod(const AffineProduct& sp, const std::string& x,
                 const std::string& y) {
    return pair_product(sp, cs(sp, x), cs(sp, y)).str();
}

bool adm(const AffineProduct& sp, const std::string& x,
         const std::string& y) {
    return is_admissible(sp, cs(sp, x), cs(sp, y));
}

CoxeterDiagram load(const std::string& rel) {
    std::ifstream in(std::string(COXFORGE_DATA_DIR) + "/" + rel);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_diagram(buf.str());
}

}  // namespace

TEST_CASE("coefficient string parse/format round trip and domain checks") {
    AffineProduct sp = parse_affine_product("G2,A5");
    CHECK(sp.total_rank() == 7);
    CHECK(sp.component_size(0) == 3);
    CHECK(sp.component_size(1) == 6);
    CHECK(sp.str() == "G2,A5");

    std::string s = "0,0,s3;1,0,0,0,0,0";
    CHECK(format_coeff_string(cs(sp, s)) == s);

    // Value 3 is only allowed at a norm-6 node; ~A5 has none.
    CHECK_THROWS_AS(cs(sp, "0,0,s3;3,0,0,0,0,0"), std::invalid_argument);
    // Value 1 is only allowed at a norm-2 node; the last two ~G2 nodes
    // carry norm 6.
    CHECK_THROWS_AS(cs(sp, "0,1,0;1,0,0,0,0,0"), std::invalid_argument);
    // Shape mismatch.
    CHECK_THROWS_AS(cs(sp, "0,0,s3;1,0,0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_affine_product("Q5"), std::invalid_argument);
}

TEST_CASE("self product is 2 for every valid string") {
    for (const auto& [sig, x] : std::vector<std::pair<std::string, std::string>>{
             {"G2,G2", "0,0,3;0,0,s3"},
             {"G2,A5", "0,0,s3;1,0,0,0,0,0"},
             {"G2,D4", "0,0,s3;0,1,0,0,0"},
             {"G2,G2,E8", "0,0,s3;0,0,s3;0,0,0,0,0,0,0,0,1"},
             {"G2,A8", "0,0,3;1,0,1,0,0,0,0,0,0"}}) {
        AffineProduct sp = parse_affine_product(sig);
        CHECK(prod(sp, x, x) == "2");
    }
}

TEST_CASE("lambda ratios: undefined when a component sum vanishes") {
    AffineProduct sp = parse_affine_product("G2,G2");
    auto x = cs(sp, "0,0,3;0,0,s3");
    // Any vanishing component sum leaves the ratio vector undefined...
    CHECK(!lambda_ratios(sp, x, cs(sp, "1,0,0;0,0,0")).has_value());
    // ...but the product only requires the first ratio.
    CHECK_THROWS_AS(pair_product(sp, x, cs(sp, "0,0,0;1,0,0")),
                    std::domain_error);
}

TEST_CASE("two ~G2 components: admissible pairs, all products 0") {
    AffineProduct sp = parse_affine_product("G2,G2");
    // The worked pyramid-apex example: unique admissible partner.
    CHECK(enum_fmt(sp, {"0,0,3;0,0,s3"}) ==
          std::vector<std::string>{"s3,0,0;1,0,0"});

    for (const auto& [x, y] : std::vector<std::pair<std::string, std::string>>{
             {"0,0,3;0,0,s3", "s3,0,0;1,0,0"},
             {"0,0,s3;1,0,0", "1,0,0;0,s3,s3"},
             {"0,0,3;1,0,0", "1,0,0;0,0,3"},
             {"0,0,3;0,0,3", "1,0,0;1,0,0"},
             {"0,0,3;0,s3,s3", "s3,0,0;1,3,0"}}) {
        CAPTURE(x);
        CHECK(adm(sp, x, y));
        CHECK(prod(sp, x, y) == "0");
    }
}

TEST_CASE("~G2 u ~A2: enumeration, and no admissible 3-set exists") {
    AffineProduct sp = parse_affine_product("G2,A2");
    CHECK(enum_fmt(sp, {"0,0,3;1,0,0"}) ==
          std::vector<std::string>{"s3,0,0;0,0,s3", "s3,0,0;0,s3,0"});
    CHECK(enum_fmt(sp, {"0,0,3;s3,0,0"}) ==
          std::vector<std::string>{"1,0,0;0,0,s3", "1,0,0;0,s3,0",
                                   "s3,0,0;1,1,1"});

    // Lambda equality pins the first component of the partner: with
    // x = (0,0,3;s3,0,0) the string (s3,0,0;0,0,s3) has ratios
    // (s3/3, 1) and is out, while (1,0,0;0,0,s3) has (1,1).
    auto lr_bad = lambda_ratios(sp, cs(sp, "0,0,3;s3,0,0"),
                                cs(sp, "s3,0,0;0,0,s3"));
    REQUIRE(lr_bad.has_value());
    CHECK((*lr_bad)[0] != (*lr_bad)[1]);
    CHECK(!adm(sp, "0,0,3;s3,0,0", "s3,0,0;0,0,s3"));
    CHECK(adm(sp, "0,0,3;s3,0,0", "1,0,0;0,0,s3"));

    // The two fixed strings are not admissible with each other, and no
    // admissible set of three strings exists for this product.
    CHECK(!adm(sp, "0,0,3;1,0,0", "0,0,3;s3,0,0"));
    for (const std::string& x : {"0,0,3;1,0,0", "0,0,3;s3,0,0"})
        for (const auto& y : enum_fmt(sp, {x}))
            CHECK(enum_fmt(sp, {x, y}).empty());
}

TEST_CASE("~G2 u ~A3: no admissible pair in dimension 6") {
    AffineProduct sp = parse_affine_product("G2,A3");
    CHECK(enum_fmt(sp, {"0,0,3;1,0,0,0"}).empty());
    CHECK(enum_fmt(sp, {"0,0,s3;1,0,1,0"}).empty());
    CHECK(enum_fmt(sp, {"0,0,3;1,0,1,0"}).empty());
}

TEST_CASE("dimension 7 products") {
    {
        AffineProduct sp = parse_affine_product("G2,D4");
        CHECK(enum_fmt(sp, {"0,0,s3;0,1,0,0,0"}) ==
              std::vector<std::string>{"0,s3,s3;1,1,1,1,1"});
        CHECK(prod(sp, "0,0,s3;0,1,0,0,0", "0,s3,s3;1,1,1,1,1") == "0");
    }
    {
        AffineProduct sp = parse_affine_product("G2,A2,A2");
        auto got = enum_fmt(sp, {"0,0,3;1,0,0;1,0,0"});
        CHECK(got == std::vector<std::string>{
                         "s3,0,0;0,0,s3;s3,0,0", "s3,0,0;0,s3,0;s3,0,0",
                         "s3,0,0;s3,0,0;0,0,s3", "s3,0,0;s3,0,0;0,s3,0"});
        for (const auto& y : got)
            CHECK(prod(sp, "0,0,3;1,0,0;1,0,0", y) == "0");
        CHECK(!adm(sp, "s3,0,0;0,0,s3;s3,0,0", "s3,0,0;0,s3,0;s3,0,0"));
    }
    {
        AffineProduct sp = parse_affine_product("G2,G2,A2");
        CHECK(adm(sp, "0,0,3;0,0,s3;1,0,0", "s3,0,0;1,0,0;s3,0,0"));
        CHECK(prod(sp, "0,0,3;0,0,s3;1,0,0", "s3,0,0;1,0,0;s3,0,0") == "0");
    }
    {
        // ~G2 u ~A4: two admissible partners for a = sqrt3, none for a = 3.
        AffineProduct sp = parse_affine_product("G2,A4");
        CHECK(enum_fmt(sp, {"0,0,s3;1,0,0,0,0"}) ==
              std::vector<std::string>{"0,s3,s3;1,1,0,0,1",
                                       "s3,s3,0;1,1,1,1,1"});
        for (const auto& y : enum_fmt(sp, {"0,0,s3;1,0,0,0,0"}))
            CHECK(prod(sp, "0,0,s3;1,0,0,0,0", y) == "0");
        CHECK(enum_fmt(sp, {"0,0,3;1,0,0,0,0"}).empty());
    }
}

TEST_CASE("three ~G2 components: simplex and doubly-truncated cases") {
    AffineProduct sp = parse_affine_product("G2,G2,G2");

    // Simplex face: two partners, mutually admissible.
    CHECK(enum_fmt(sp, {"0,0,3;0,0,s3;0,0,s3"}) ==
          std::vector<std::string>{"s3,0,0;0,0,3;1,0,0",
                                   "s3,0,0;1,0,0;0,0,3"});
    CHECK(prod(sp, "0,0,3;0,0,s3;0,0,s3", "s3,0,0;0,0,3;1,0,0") == "0");
    CHECK(prod(sp, "0,0,3;0,0,s3;0,0,s3", "s3,0,0;1,0,0;0,0,3") == "0");
    CHECK(adm(sp, "s3,0,0;0,0,3;1,0,0", "s3,0,0;1,0,0;0,0,3"));

    // First doubly-truncated case: Lambda equality forces the apex
    // coefficients a1 = s3, a2 = 3; one further admissible string.
    CHECK(adm(sp, "0,0,s3;0,0,s3;0,0,3", "0,0,3;1,0,0;s3,0,0"));
    CHECK(prod(sp, "0,0,s3;0,0,s3;0,0,3", "0,0,3;1,0,0;s3,0,0") == "0");
    CHECK(!adm(sp, "0,0,3;0,0,s3;0,0,3", "0,0,3;1,0,0;s3,0,0"));
    CHECK(!adm(sp, "0,0,s3;0,0,s3;0,0,3", "0,0,s3;1,0,0;s3,0,0"));
    CHECK(enum_fmt(sp, {"0,0,s3;0,0,s3;0,0,3", "0,0,3;1,0,0;s3,0,0"}) ==
          std::vector<std::string>{"1,0,0;0,0,3;s3,0,0"});

    // Second doubly-truncated case: equal apex coefficients forced.
    for (const std::string& a : {"s3", "3"}) {
        CHECK(adm(sp, "0,0," + a + ";1,0,0;0,0,3",
                  "0,0," + a + ";0,0,3;1,0,0"));
        CHECK(prod(sp, "0,0," + a + ";1,0,0;0,0,3",
                   "0,0," + a + ";0,0,3;1,0,0") == "0");
    }
    CHECK(!adm(sp, "0,0,s3;1,0,0;0,0,3", "0,0,3;0,0,3;1,0,0"));
    CHECK(enum_fmt(sp, {"0,0,s3;1,0,0;0,0,3", "0,0,s3;0,0,3;1,0,0"}) ==
          std::vector<std::string>{"1,0,0;s3,0,0;s3,0,0"});
    auto z = enum_fmt(sp, {"0,0,3;1,0,0;0,0,3", "0,0,3;0,0,3;1,0,0"});
    CHECK(z == std::vector<std::string>{"1,0,0;0,0,3;0,0,3",
                                        "1,0,0;1,0,0;1,0,0",
                                        "s3,0,s3;s3,0,s3;s3,0,s3"});
    CHECK(adm(sp, z[0], z[1]));
    CHECK(adm(sp, z[0], z[2]));
    CHECK(!adm(sp, z[1], z[2]));
}

TEST_CASE("dimension 8: ~G2 u ~A5 block with full pairwise grid") {
    AffineProduct sp = parse_affine_product("G2,A5");
    const std::string x = "0,0,s3;1,0,0,0,0,0";
    auto ys = enum_fmt(sp, {x});
    REQUIRE(ys == std::vector<std::string>{
                      "0,s3,s3;0,0,0,1,1,1", "0,s3,s3;0,1,1,1,0,0",
                      "0,s3,s3;1,1,0,0,0,1", "1,3,3;s3,0,0,s3,s3,s3",
                      "1,3,3;s3,s3,s3,s3,0,0", "s3,s3,0;1,1,1,0,1,1"});
    std::vector<std::string> products;
    for (const auto& y : ys) products.push_back(prod(sp, x, y));
    CHECK(products == std::vector<std::string>{"-1", "-1", "0", "0", "0",
                                               "0"});

    // Pairwise grid over y1..y6; "-" marks an inadmissible pair.
    const char* grid[6][6] = {
        {nullptr, "0", "0", "-", "-s3", "0"},
        {nullptr, nullptr, "0", "-s3", "-", "0"},
        {nullptr, nullptr, nullptr, "0", "0", "-"},
        {nullptr, nullptr, nullptr, nullptr, "-", "0"},
        {nullptr, nullptr, nullptr, nullptr, nullptr, "0"},
        {nullptr, nullptr, nullptr, nullptr, nullptr, nullptr}};
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) {
            CAPTURE(i);
            CAPTURE(j);
            bool a = adm(sp, ys[i], ys[j]);
            if (std::string(grid[i][j]) == "-")
                CHECK(!a);
            else {
                CHECK(a);
                CHECK(prod(sp, ys[i], ys[j]) == grid[i][j]);
            }
        }
}

TEST_CASE("dimension 8: remaining products") {
    {
        AffineProduct sp = parse_affine_product("G2,D5");
        CHECK(enum_fmt(sp, {"0,0,s3;1,0,0,0,0,0"}) ==
              std::vector<std::string>{"0,s3,s3;1,1,0,0,0,0",
                                       "s3,s3,0;1,1,0,1,1,0"});
    }
    {
        AffineProduct sp = parse_affine_product("G2,A2,A3");
        CHECK(enum_fmt(sp, {"0,0,3;1,0,0;1,0,0,0"}) ==
              std::vector<std::string>{"s3,0,0;0,0,s3;s3,0,0,0",
                                       "s3,0,0;0,s3,0;s3,0,0,0"});
    }
    {
        AffineProduct sp = parse_affine_product("G2,G2,A3");
        const std::string xa = "0,0,s3;0,0,s3;1,0,0,0";
        auto ga = enum_fmt(sp, {xa});
        CHECK(ga == std::vector<std::string>{"0,s3,s3;s3,0,0;1,1,0,1",
                                             "s3,0,0;0,s3,s3;1,1,0,1"});
        for (const auto& y : ga) CHECK(prod(sp, xa, y) == "-1");
        CHECK(enum_fmt(sp, {"0,0,3;0,0,s3;1,0,0,0"}) ==
              std::vector<std::string>{"s3,0,0;1,0,0;s3,0,0,0"});
    }
}

TEST_CASE("four ~G2 components assemble the exceptional 9-polyhedron") {
    AffineProduct sp = parse_affine_product("G2,G2,G2,G2");
    auto x = cs(sp, "0,0,s3;0,0,s3;0,0,s3;0,0,s3");
    auto ys = enumerate_admissible(sp, {x});
    REQUIRE(ys.size() == 1);
    CHECK(format_coeff_string(ys[0]) == "1,0,0;1,0,0;1,0,0;1,0,0");
    CHECK(pair_product(sp, x, ys[0]).str() == "0");

    CoxeterDiagram d = assemble_diagram(sp, {x, ys[0]}, 9);
    CHECK(d.size() == 14);
    CHECK(isomorphic(d, load("adeg/n09_pstar.cox")));
    PolytopeReport rep = vinberg_check(d, 9);
    CHECK(rep.finite_volume);
    CHECK(!rep.compact);
}

TEST_CASE("dimension 11: ~G2 u ~A8 with three fixed strings") {
    AffineProduct sp = parse_affine_product("G2,A8");
    for (const std::string& a : {"s3", "3"}) {
        std::string pre = "0,0," + a + ";";
        std::vector<std::string> fx = {pre + "1,0,1,0,0,0,0,0,0",
                                       pre + "0,0,0,1,0,1,0,0,0",
                                       pre + "0,0,0,0,0,0,1,0,1"};
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) CHECK(adm(sp, fx[i], fx[j]));

        auto ys = enum_fmt(sp, fx);
        if (a == "s3") {
            CHECK(ys == std::vector<std::string>{
                            "1,0,0;0,0,0,0,s3,0,0,s3,0",
                            "1,0,0;0,0,0,s3,0,0,0,0,s3",
                            "1,0,0;0,0,s3,0,0,0,s3,0,0",
                            "1,0,0;0,s3,0,0,0,0,0,s3,0",
                            "1,0,0;0,s3,0,0,s3,0,0,0,0",
                            "1,0,0;s3,0,0,0,0,s3,0,0,0",
                            "s3,0,0;0,1,1,0,1,1,0,1,1",
                            "s3,0,0;1,1,0,1,1,0,1,1,0"});
            // Nonzero products: y1 against x1, y4 against x2, y5 against
            // x3; everything else orthogonal.
            CHECK(prod(sp, fx[0], ys[0]) == "-s3");
            CHECK(prod(sp, fx[1], ys[3]) == "-s3");
            CHECK(prod(sp, fx[2], ys[4]) == "-s3");
            CHECK(prod(sp, fx[0], ys[1]) == "0");
            CHECK(prod(sp, fx[2], ys[7]) == "0");
            // Pairwise: -1 within y1..y6, 0 against y7/y8, and the pair
            // {y7, y8} is not admissible.
            for (int i = 0; i < 8; ++i)
                for (int j = i + 1; j < 8; ++j) {
                    CAPTURE(i);
                    CAPTURE(j);
                    if (i == 6 && j == 7)
                        CHECK(!adm(sp, ys[i], ys[j]));
                    else
                        CHECK(prod(sp, ys[i], ys[j]) ==
                              (j < 6 ? "-1" : "0"));
                }
        } else {
            CHECK(ys == std::vector<std::string>{
                            "1,0,0;0,0,0,0,1,0,0,1,0",
                            "1,0,0;0,0,0,1,0,0,0,0,1",
                            "1,0,0;0,0,1,0,0,0,1,0,0",
                            "1,0,0;0,1,0,0,0,0,0,1,0",
                            "1,0,0;0,1,0,0,1,0,0,0,0",
                            "1,0,0;1,0,0,0,0,1,0,0,0"});
            CHECK(prod(sp, fx[0], ys[0]) == "-1");
            CHECK(prod(sp, fx[1], ys[3]) == "-1");
            CHECK(prod(sp, fx[2], ys[4]) == "-1");
            for (int i = 0; i < 6; ++i)
                for (int j = i + 1; j < 6; ++j)
                    CHECK(!adm(sp, ys[i], ys[j]));
        }
    }
    // Mixed apex coefficients are never admissible.
    CHECK(!adm(sp, "0,0,s3;1,0,1,0,0,0,0,0,0", "0,0,3;0,0,0,1,0,1,0,0,0"));
}

TEST_CASE("dimension 11: five ~G2 components over the exceptional face") {
    AffineProduct sp = parse_affine_product("G2,G2,G2,G2,G2");
    const std::string x1 = "0,0,s3;0,0,s3;0,0,s3;0,0,s3;0,0,s3";
    const std::string x2 = "0,0,3;1,0,0;1,0,0;1,0,0;1,0,0";
    CHECK(adm(sp, x1, x2));
    CHECK(prod(sp, x1, x2) == "0");
    // The apex coefficients are forced: a1 = s3, a2 = 3.
    CHECK(!adm(sp, "0,0,3;0,0,s3;0,0,s3;0,0,s3;0,0,s3", x2));
    CHECK(!adm(sp, x1, "0,0,s3;1,0,0;1,0,0;1,0,0;1,0,0"));

    auto ys = enum_fmt(sp, {x1, x2});
    CHECK(ys == std::vector<std::string>{"1,0,0;0,0,3;1,0,0;1,0,0;1,0,0",
                                         "1,0,0;1,0,0;0,0,3;1,0,0;1,0,0",
                                         "1,0,0;1,0,0;1,0,0;0,0,3;1,0,0",
                                         "1,0,0;1,0,0;1,0,0;1,0,0;0,0,3"});
    for (const auto& y : ys) {
        CHECK(prod(sp, x1, y) == "0");
        CHECK(prod(sp, x2, y) == "0");
    }
    for (size_t i = 0; i < ys.size(); ++i)
        for (size_t j = i + 1; j < ys.size(); ++j)
            CHECK(adm(sp, ys[i], ys[j]));
}

TEST_CASE("dimension 13: products with an ~E8 component") {
    {
        AffineProduct sp = parse_affine_product("G2,G2,E8");
        const std::string xa = "0,0,s3;0,0,s3;0,0,0,0,0,0,0,0,1";
        auto ga = enum_fmt(sp, {xa});
        CHECK(ga == std::vector<std::string>{
                        "0,s3,s3;s3,0,0;0,0,0,0,0,0,0,1,1",
                        "s3,0,0;0,s3,s3;0,0,0,0,0,0,0,1,1",
                        "s3,0,0;s3,0,0;0,1,0,0,0,0,0,0,0"});
        CHECK(prod(sp, xa, ga[0]) == "-1");
        CHECK(prod(sp, xa, ga[1]) == "-1");
        CHECK(prod(sp, xa, ga[2]) == "0");

        const std::string xb = "0,0,3;0,0,s3;0,0,0,0,0,0,0,0,1";
        CHECK(enum_fmt(sp, {xb}) ==
              std::vector<std::string>{"s3,0,0;1,0,0;0,0,0,0,0,0,0,0,s3"});
        CHECK(prod(sp, xb, "s3,0,0;1,0,0;0,0,0,0,0,0,0,0,s3") == "0");
    }
    {
        AffineProduct sp = parse_affine_product("G2,A2,E8");
        auto ga = enum_fmt(sp, {"0,0,s3;1,0,0;0,0,0,0,0,0,0,0,1"});
        CHECK(ga == std::vector<std::string>{
                        "0,s3,s3;1,1,1;0,0,0,0,0,0,1,0,0"});
        CHECK(prod(sp, "0,0,s3;1,0,0;0,0,0,0,0,0,0,0,1", ga[0]) == "-1");
        CHECK(enum_fmt(sp, {"0,0,3;1,0,0;0,0,0,0,0,0,0,0,1"}) ==
              std::vector<std::string>{"s3,0,0;0,0,s3;0,0,0,0,0,0,0,0,s3",
                                       "s3,0,0;0,s3,0;0,0,0,0,0,0,0,0,s3"});
    }
}

TEST_CASE("extended diagrams and the ADEG predicate") {
    CoxeterDiagram g2 =
        extended_diagram(IrreducibleType{IrreducibleType::AffG2, 2});
    CHECK(g2.size() == 3);
    int sixes = 0;
    for (const auto& [e, l] : g2.edges())
        if (l.kind == EdgeLabel::Finite && l.m == 6) ++sixes;
    CHECK(sixes == 1);

    CoxeterDiagram a2 =
        extended_diagram(IrreducibleType{IrreducibleType::AffA, 2});
    CHECK(a2.size() == 3);
    CHECK(a2.edges().size() == 3);  // 3-cycle

    CHECK(is_adeg(load("adeg/n05_01.cox")));
    CHECK(!is_adeg(load("ade/n05_01.cox")));  // no label-6 edge
}

TEST_CASE("brute-force simplex search: 4 triangles, 7 tetrahedra, none above") {
    auto tri = enumerate_adeg_simplices(2);
    CHECK(tri.size() == 4);
    auto cat = load_catalog();
    for (const auto& t : tri) {
        bool found = false;
        for (const auto& c : cat)
            if (c.family == CatalogEntry::ADEG && c.dimension == 2 &&
                isomorphic(t, c.diagram))
                found = true;
        CHECK(found);
    }
    CHECK(enumerate_adeg_simplices(3).size() == 7);
    CHECK(enumerate_adeg_simplices(4).empty());
}

TEST_CASE("classification driver: dimensions 5 and 6 from the catalog faces") {
    auto cat = load_catalog();
    auto faces_of_dim = [&](int d) {
        std::vector<CoxeterDiagram> out;
        for (const auto& c : cat)
            if (c.dimension == d) out.push_back(c.diagram);
        return out;
    };
    auto in_catalog = [&](const CoxeterDiagram& d, int dim) {
        for (const auto& c : cat)
            if (c.family == CatalogEntry::ADEG && c.dimension == dim &&
                isomorphic(d, c.diagram))
                return true;
        return false;
    };

    auto d5 = classify_dimension(5, faces_of_dim(3));
    CHECK(d5.size() == 4);
    for (const auto& d : d5) CHECK(in_catalog(d, 5));

    auto d6 = classify_dimension(6, faces_of_dim(4));
    CHECK(d6.size() == 1);
    for (const auto& d : d6) CHECK(in_catalog(d, 6));
}
