// coxforge CLI: exposes diagram checking, face data, the admissibility
// engine, the classification driver, arithmeticity, rendering, and
// bundled-data verification.  Exit codes: 0 success, 1 check failure,
// 2 usage or parse error.
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "coxforge/arith.hpp"
#include "coxforge/catalog.hpp"
#include "coxforge/prokhorov.hpp"

using namespace coxforge;
using nlohmann::ordered_json;

namespace {

CoxeterDiagram load_diagram(const std::string& path, int dim_override,
                            bool need_dim = true) {
    std::ifstream in(path);
    if (!in.good()) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    CoxeterDiagram d = parse_diagram(buf.str());
    if (dim_override > 0) d.set_dim(dim_override);
    if (need_dim && d.dim() <= 0)
        throw std::runtime_error(path +
                                 ": no dimension (use --dim to set one)");
    return d;
}

ordered_json report_json(const CoxeterDiagram& d, const PolytopeReport& rep) {
    ordered_json j;
    j["dim"] = d.dim();
    j["nodes"] = d.size();
    j["connected"] = rep.connected;
    if (rep.sig)
        j["signature"] = {rep.sig->positive, rep.sig->negative,
                          rep.sig->zero};
    j["is_hyperbolic"] = rep.is_hyperbolic;
    j["has_vertex"] = rep.has_vertex;
    j["finite_volume"] = rep.finite_volume;
    j["compact"] = rep.compact;
    if (rep.finite_volume) {
        FVector fv = f_vector(d, d.dim());
        j["f_vector"] = fv.f;
        j["ideal_vertices"] = fv.ideal_vertex_count;
    }
    return j;
}

void print_report(const CoxeterDiagram& d, const PolytopeReport& rep) {
    std::cout << "dim             " << d.dim() << "\n";
    std::cout << "nodes           " << d.size() << "\n";
    std::cout << "connected       " << (rep.connected ? "yes" : "no") << "\n";
    if (rep.sig)
        std::cout << "signature       (" << rep.sig->positive << ","
                  << rep.sig->negative << "," << rep.sig->zero << ")\n";
    std::cout << "hyperbolic      " << (rep.is_hyperbolic ? "yes" : "no")
              << "\n";
    std::cout << "finite_volume   " << (rep.finite_volume ? "yes" : "no")
              << "\n";
    std::cout << "compact         " << (rep.compact ? "yes" : "no") << "\n";
    if (rep.finite_volume) {
        FVector fv = f_vector(d, d.dim());
        std::cout << "f_vector        (";
        for (size_t i = 0; i < fv.f.size(); ++i)
            std::cout << (i ? "," : "") << fv.f[i];
        std::cout << ")\n";
        std::cout << "ideal_vertices  " << fv.ideal_vertex_count << "\n";
    }
}

// All subsets of ys (size >= 2) that are pairwise admissible, as sorted
// index lists; fixed strings are admissible with every y by construction.
std::vector<std::vector<int>> admissible_sets(
    const AffineProduct& sp, const std::vector<CoeffString>& ys) {
    int n = (int)ys.size();
    std::vector<std::vector<char>> ok(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            ok[i][j] = ok[j][i] = is_admissible(sp, ys[i], ys[j]);
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if (cur.size() >= 2) out.push_back(cur);
        for (int k = start; k < n; ++k) {
            bool fits = true;
            for (int c : cur)
                if (!ok[c][k]) fits = false;
            if (!fits) continue;
            cur.push_back(k);
            rec(k + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic toolkit for hyperbolic Coxeter polyhedra"};
    app.require_subcommand(1);

    std::string file, sigma, out_path, catalog_dir;
    std::vector<std::string> fixed;
    int dim = 0;
    bool json = false, sets = false;

    auto* c_check = app.add_subcommand("check",
        "Finite-volume/compactness verdict and f-vector for a diagram");
    c_check->add_option("file", file)->required();
    c_check->add_option("--dim", dim, "Override the file's dimension");
    c_check->add_flag("--json", json);

    auto* c_fvec = app.add_subcommand("fvector",
        "Face counts by dimension and ideal vertex count");
    c_fvec->add_option("file", file)->required();
    c_fvec->add_option("--dim", dim);
    c_fvec->add_flag("--json", json);

    auto* c_face = app.add_subcommand("face",
        "Diagram of the face carried by a spherical subdiagram");
    c_face->add_option("file", file)->required();
    c_face->add_option("--sigma", sigma,
        "Comma-separated 1-based nodes of the spherical subdiagram")
        ->required();
    c_face->add_option("--dim", dim);
    c_face->add_flag("--json", json);

    auto* c_adm = app.add_subcommand("admissible",
        "Enumerate admissible strings against fixed ones");
    c_adm->add_option("--sigma", sigma,
        "Affine product, e.g. G2,A6 (tilde implied)")->required();
    c_adm->add_option("--fixed", fixed, "Fixed coefficient string(s)")
        ->required();
    c_adm->add_flag("--sets", sets,
        "Also list all pairwise-admissible subsets of the results");
    c_adm->add_flag("--json", json);

    auto* c_cls = app.add_subcommand("classify",
        "Run the classification search in one dimension");
    c_cls->add_option("--dim", dim)->required();
    c_cls->add_option("--catalog", catalog_dir,
        "Face-catalog data directory (default: bundled data)");
    c_cls->add_flag("--json", json);

    auto* c_ar = app.add_subcommand("arithmetic",
        "Integral-cycle arithmeticity test over Q");
    c_ar->add_option("file", file)->required();
    c_ar->add_flag("--json", json);

    auto* c_ren = app.add_subcommand("render", "Graphviz DOT export");
    c_ren->add_option("file", file)->required();
    c_ren->add_option("-o,--output", out_path)->required();

    auto* c_cat = app.add_subcommand("catalog",
        "Bundled-data operations (verify)");
    std::string cat_op;
    c_cat->add_option("op", cat_op, "verify")->required();
    c_cat->add_flag("--json", json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (*c_check || *c_fvec) {
        CoxeterDiagram d = load_diagram(file, dim);
        PolytopeReport rep = vinberg_check(d, d.dim());
        if (*c_fvec && !rep.finite_volume) {
            std::cerr << "not finite volume; no f-vector\n";
            return 1;
        }
        if (json)
            std::cout << report_json(d, rep).dump(2) << "\n";
        else
            print_report(d, rep);
        return rep.finite_volume ? 0 : 1;
    }

    if (*c_face) {
        CoxeterDiagram d = load_diagram(file, dim);
        std::vector<int> nodes;
        std::istringstream ss(sigma);
        std::string tok;
        while (std::getline(ss, tok, ','))
            nodes.push_back(std::stoi(tok) - 1);
        CoxeterDiagram f = allcock_face(d, nodes);
        if (json) {
            ordered_json j;
            j["dim"] = f.dim();
            j["nodes"] = f.size();
            j["diagram"] = serialize_diagram(f);
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << serialize_diagram(f);
        }
        return 0;
    }

    if (*c_adm) {
        AffineProduct sp = parse_affine_product(sigma);
        std::vector<CoeffString> fx;
        for (const auto& s : fixed) fx.push_back(parse_coeff_string(sp, s));
        auto ys = enumerate_admissible(sp, fx);
        ordered_json j;
        j["sigma"] = sp.str();
        j["fixed"] = fixed;
        j["strings"] = ordered_json::array();
        for (const auto& y : ys) {
            std::string fy = format_coeff_string(y);
            std::string p = pair_product(sp, fx[0], y).str();
            if (json) {
                ordered_json e;
                e["y"] = fy;
                e["product"] = p;
                j["strings"].push_back(e);
            } else {
                std::cout << fy << "  product=" << p << "\n";
            }
        }
        if (sets) {
            auto subsets = admissible_sets(sp, ys);
            if (json) j["sets"] = ordered_json::array();
            for (const auto& s : subsets) {
                if (json) {
                    j["sets"].push_back(s);
                } else {
                    std::cout << "set {";
                    for (size_t i = 0; i < s.size(); ++i)
                        std::cout << (i ? "," : "") << s[i] + 1;
                    std::cout << "}\n";
                }
            }
        }
        if (json) std::cout << j.dump(2) << "\n";
        return 0;
    }

    if (*c_cls) {
        if (!catalog_dir.empty()) setenv("COXFORGE_DATA", catalog_dir.c_str(), 1);
        std::vector<CoxeterDiagram> res;
        if (dim <= 1) {
            throw std::runtime_error("--dim must be >= 2");
        } else if (dim <= 3) {
            res = enumerate_adeg_simplices(dim);
        } else if (dim == 4) {
            res = enumerate_adeg_simplices(dim);  // empty
        } else {
            std::vector<CoxeterDiagram> faces;
            for (const auto& c : load_catalog())
                if (c.dimension == dim - 2) faces.push_back(c.diagram);
            res = classify_dimension(dim, faces);
        }
        if (json) {
            ordered_json j;
            j["dim"] = dim;
            j["count"] = res.size();
            j["diagrams"] = ordered_json::array();
            for (const auto& d : res) j["diagrams"].push_back(serialize_diagram(d));
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "# " << res.size() << " polyhedra in dimension "
                      << dim << "\n";
            for (const auto& d : res) std::cout << "\n" << serialize_diagram(d);
        }
        return 0;
    }

    if (*c_ar) {
        CoxeterDiagram d = load_diagram(file, -1, false);
        CycleReport r = is_arithmetic_over_Q(d);
        if (json) {
            ordered_json j;
            j["arithmetic_over_Q"] = r.arithmetic_over_Q;
            if (r.witness_cycle) {
                ordered_json cyc = ordered_json::array();
                for (int v : *r.witness_cycle) cyc.push_back(v + 1);
                j["witness_cycle"] = cyc;
                j["witness_product"] = r.witness_product->str();
            }
            j["compact_caveat"] = r.compact_caveat;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "arithmetic_over_Q  "
                      << (r.arithmetic_over_Q ? "yes" : "no") << "\n";
            if (r.witness_cycle) {
                std::cout << "witness_cycle      (";
                for (size_t i = 0; i < r.witness_cycle->size(); ++i)
                    std::cout << (i ? "," : "") << (*r.witness_cycle)[i] + 1;
                std::cout << ")\n";
                std::cout << "witness_product    "
                          << r.witness_product->str() << "\n";
            }
            if (r.compact_caveat)
                std::cout << "note: group is cocompact; the integral-cycle "
                             "test only decides definability over Q\n";
        }
        return r.arithmetic_over_Q ? 0 : 1;
    }

    if (*c_ren) {
        CoxeterDiagram d = load_diagram(file, -1, false);
        std::ofstream out(out_path);
        if (!out.good()) throw std::runtime_error("cannot write " + out_path);
        out << to_dot(d);
        return 0;
    }

    if (*c_cat) {
        if (cat_op != "verify")
            throw std::runtime_error("unknown catalog operation: " + cat_op);
        auto r1 = verify_catalog();
        auto r2 = verify_expectations();
        int failures = 0;
        ordered_json j = ordered_json::array();
        auto emit = [&](const VerifyResult& r) {
            if (!r.pass) ++failures;
            if (json) {
                ordered_json e;
                e["id"] = r.id;
                e["pass"] = r.pass;
                if (!r.pass) e["detail"] = r.detail;
                j.push_back(e);
            } else {
                std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.id;
                if (!r.pass) std::cout << "  (" << r.detail << ")";
                std::cout << "\n";
            }
        };
        for (const auto& r : r1) emit(r);
        for (const auto& r : r2) emit(r);
        if (json) std::cout << j.dump(2) << "\n";
        return failures == 0 ? 0 : 1;
    }

    return 2;  // unreachable: a subcommand is required
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
