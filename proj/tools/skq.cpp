// Command-line front end. Exit codes: 0 success / all checks pass,
// 1 a verification failed, 2 bad input.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "skq/sweeps.hpp"

using namespace skq;
using nlohmann::json;

namespace {

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw InputError(path + ": " + e.what());
    }
}

Triangulation load_tri(const std::string& path) {
    json j = read_json(path);
    try {
        return Triangulation::from_json(j);
    } catch (const json::exception& e) {
        throw InputError(path + ": " + e.what());
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

Lamination load_lam(const std::string& path, const Triangulation& t) {
    json j = read_json(path);
    try {
        return Lamination::from_json(j, t);
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

// lamination file with non-peripheral components and a "pinning" object
// mapping boundary edge ids to integers
PLamination load_plam(const std::string& path, const Triangulation& t) {
    json j = read_json(path);
    PLamination P;
    try {
        P.arcs = Lamination::from_json(j, t);
        auto bnd = t.boundary_edges();
        P.pinning.assign(bnd.size(), 0);
        if (j.contains("pinning"))
            for (auto& [id, v] : j["pinning"].items()) {
                int e = t.edge_index(id);
                auto it = std::find(bnd.begin(), bnd.end(), e);
                if (it == bnd.end()) throw InputError("pinning on unknown boundary edge " + id);
                P.pinning[it - bnd.begin()] = v.get<int>();
            }
    } catch (const json::exception& e) {
        throw InputError(path + ": " + e.what());
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
    return P;
}

json matrix_json(const Matrix& m) { return m; }

// one "path<TAB>value" line per leaf
void flatten(const json& j, const std::string& path, std::ostream& out) {
    if (j.is_object()) {
        for (auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, out);
    } else if (j.is_array() && !j.empty() && (j[0].is_object() || j[0].is_array())) {
        for (size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "." + std::to_string(i), out);
    } else {
        out << path << "\t" << j.dump() << "\n";
    }
}

struct Output {
    std::string format = "json";
    std::string path;

    void emit(const json& j) const {
        std::ostringstream s;
        if (format == "tsv") flatten(j, "", s);
        else s << j.dump(2) << "\n";
        if (path.empty()) {
            std::cout << s.str();
        } else {
            std::ofstream f(path);
            if (!f) throw InputError("cannot write " + path);
            f << s.str();
        }
    }
};

json torus_json(const TorusElement& x) {
    json j = x.to_json();
    j["text"] = x.str();
    return j;
}

std::vector<SweepResult> run_suite(const std::string& suite, const SweepBounds& b, int bound_a) {
    auto one = [](SweepResult r) { return std::vector<SweepResult>{std::move(r)}; };
    if (suite == "anchor") return one(sweep_anchor());
    if (suite == "matrices") return one(sweep_matrices(std::max(4, b.min_n), b.max_n));
    if (suite == "tropical") return one(sweep_tropical(b));
    if (suite == "flip-transport") return one(sweep_flip_transport());
    if (suite == "lowest-term") return one(sweep_lowest_term(b));
    if (suite == "pointed-x") return one(sweep_pointed_x(b));
    if (suite == "square") return one(sweep_square(b));
    if (suite == "trace-cut") return one(sweep_trace_cut(b));
    if (suite == "annulus-formulas") return sweep_annulus_formulas(6);
    if (suite == "positivity") return one(sweep_positivity(b));
    if (suite == "ptolemy") return one(sweep_ptolemy(std::max(4, b.min_n), b.max_n));
    if (suite == "containing-monomial") return one(sweep_containing_monomial(b));
    if (suite == "spanning") return one(sweep_spanning(bound_a));
    throw InputError("unknown suite " + suite);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum trace, skein and cluster computations on disks and the annulus"};
    app.require_subcommand(1);
    app.fallthrough();
    Output out;
    app.add_option("--format", out.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
    app.add_option("--out", out.path, "write output to a file");

    std::string tri_path, lam_path, lam2_path, edge_id, suite;
    auto need_tri = [&](CLI::App* c) { c->add_option("--tri", tri_path, "triangulation JSON")->required(); };
    auto need_lam = [&](CLI::App* c, const char* what) { c->add_option("--lam", lam_path, what)->required(); };

    auto* matrices = app.add_subcommand("matrices", "exchange, compatibility and p matrices with identity checks");
    need_tri(matrices);
    auto* flip = app.add_subcommand("flip", "flip an interior edge");
    need_tri(flip);
    flip->add_option("--edge", edge_id, "edge id")->required();
    auto* coords = app.add_subcommand("coords", "a-coordinates and shear coordinates of the ensemble image");
    need_tri(coords);
    need_lam(coords, "lamination JSON");
    auto* trace = app.add_subcommand("trace", "quantum trace of the stated lift of a lamination");
    need_tri(trace);
    need_lam(trace, "lamination JSON");
    auto* dua = app.add_subcommand("duality-a", "duality map of a congruent lamination (X-torus)");
    need_tri(dua);
    need_lam(dua, "lamination JSON");
    auto* dux = app.add_subcommand("duality-x", "duality map of a P-lamination (A-torus)");
    need_tri(dux);
    need_lam(dux, "P-lamination JSON (components plus pinning)");
    auto* cut = app.add_subcommand("cut", "cut the bracelets element of a lamination into the A-torus");
    need_tri(cut);
    need_lam(cut, "lamination JSON");
    auto* sc = app.add_subcommand("structure-constants", "product of two bracelets basis elements");
    need_tri(sc);
    need_lam(sc, "first factor (lamination JSON)");
    sc->add_option("--lam2", lam2_path, "second factor (lamination JSON)")->required();

    auto* verify = app.add_subcommand("verify", "run a verification sweep");
    SweepBounds b;
    int bound_a = 2;
    verify->add_option("suite", suite,
                       "anchor | matrices | tropical | flip-transport | lowest-term | pointed-x | square | trace-cut | "
                       "annulus-formulas | positivity | ptolemy | containing-monomial | spanning")
        ->required();
    verify->add_option("--seed", b.seed, "seed for sampled suites");
    verify->add_option("--samples", b.samples, "disk samples");
    verify->add_option("--samples-annulus", b.samples_annulus, "annulus samples");
    verify->add_option("--bound-weight", b.max_weight, "parallel copies in basis enumerations");
    verify->add_option("--bound-winding", b.max_winding, "annulus winding");
    verify->add_option("--bound-cheb", b.max_cheb, "annulus bracelets degree");
    verify->add_option("--bound-boundary", b.max_boundary, "annulus boundary exponent");
    verify->add_option("--bound-min-n", b.min_n, "smallest disk");
    verify->add_option("--bound-n", b.max_n, "largest disk");
    verify->add_option("--bound-a", bound_a, "a-coordinate bound for spanning");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*verify) {
            auto parts = run_suite(suite, b, bound_a);
            bool pass = suite_passes(parts);
            json results = json::array();
            for (auto& p : parts) results.push_back(p.to_json());
            out.emit({{"suite", suite},
                      {"seed", b.seed},
                      {"bounds",
                       {{"samples", b.samples},
                        {"samples_annulus", b.samples_annulus},
                        {"weight", b.max_weight},
                        {"winding", b.max_winding},
                        {"cheb", b.max_cheb},
                        {"boundary", b.max_boundary},
                        {"min_n", b.min_n},
                        {"n", b.max_n},
                        {"a", bound_a}}},
                      {"results", results},
                      {"pass", pass}});
            return pass ? 0 : 1;
        }

        Triangulation t = load_tri(tri_path);
        if (*matrices) {
            Matrix eps = t.exchange_matrix(), pi = t.compatibility_matrix(), p = t.p_matrix();
            size_t n = t.size();
            bool anti = true, ppp = true;
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j) {
                    anti = anti && eps[i][j] == -eps[j][i] && pi[i][j] == -pi[j][i];
                    long long s = 0;
                    for (size_t k = 0; k < n; ++k)
                        for (size_t l = 0; l < n; ++l) s += (long long)p[i][k] * pi[k][l] * p[j][l];
                    ppp = ppp && s == -4LL * eps[i][j];
                }
            out.emit({{"labels", t.labels()},
                      {"exchange", matrix_json(eps)},
                      {"compatibility", matrix_json(pi)},
                      {"p", matrix_json(p)},
                      {"checks", {{"antisymmetric", anti}, {"p_pi_pT_eq_minus4_eps", ppp}}}});
            return anti && ppp ? 0 : 1;
        }
        if (*flip) {
            int k = t.edge_index(edge_id);
            if (k < 0) throw InputError("unknown edge " + edge_id);
            auto [N, rc] = t.flip(k);
            out.emit({{"triangulation", N.to_json()},
                      {"receipt", {{"edge", rc.kappa}, {"old_id", rc.old_id}, {"new_id", rc.new_id}}},
                      {"exchange", matrix_json(N.exchange_matrix())}});
            return 0;
        }
        if (*sc) {
            SkSurface s = SkSurface::of(t);
            SkeinEngine eng(s);
            Mono x = mono_of_lamination(load_lam(lam_path, t)), y = mono_of_lamination(load_lam(lam2_path, t));
            auto p = to_bracelets(eng.multiply(from_bracelets(SkeinElement::basis(s, x, true)),
                                               from_bracelets(SkeinElement::basis(s, y, true))));
            out.emit({{"b1", mono_str(x)}, {"b2", mono_str(y)}, {"product", p.to_json()}, {"positive", p.positive()}});
            return 0;
        }
        if (*dux) {
            PLamination P = load_plam(lam_path, t);
            TorusElement x = duality_X(P, t);
            Vec lead = shear_coords(P, t);
            out.emit({{"element", torus_json(x)},
                      {"pointed", {{"lowest_exponents", lead}, {"verified", pointed_over_ensemble(x, lead, t)}}}});
            return 0;
        }
        Lamination L = load_lam(lam_path, t);
        if (*coords) {
            json j{{"a_coords2", a_coords2(L, t)}, {"congruent", is_congruent(L, t)}};
            if (is_congruent(L, t)) j["a_coords"] = a_coords(L, t);
            j["shear_of_ensemble_image"] = shear_coords(tropical_ensemble(L, t), t);
            out.emit(j);
        } else if (*trace) {
            out.emit({{"element", torus_json(trace_stated(stated_lift(L), t))}});
        } else if (*dua) {
            auto r = duality_A(L, t);
            Vec minus_a = a_coords(L, t);
            for (int& v : minus_a) v = -v;
            out.emit({{"element", torus_json(r.x)},
                      {"pointed", {{"lowest_exponents", r.lowest}, {"verified", r.lowest == minus_a}}}});
        } else if (*cut) {
            SkeinEngine eng(SkSurface::of(t));
            Cutter c(t, eng);
            Mono m = mono_of_lamination(L);
            out.emit({{"curves", mono_str(m)}, {"element", torus_json(c.cut(SkeinElement::basis(SkSurface::of(t), m, true)))}});
        }
        return 0;
    } catch (const InputError& e) {
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return 2;
    } catch (const OddExponent& e) {
        std::cerr << json{{"error", std::string("lamination is not congruent: ") + e.what()}}.dump() << "\n";
        return 2;
    } catch (const FlipNotAllowed& e) {
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return 2;
    }
}
