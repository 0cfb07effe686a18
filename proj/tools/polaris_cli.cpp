#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "polaris/homology.hpp"
#include "polaris/hypersimplex.hpp"
#include "polaris/json_io.hpp"
#include "polaris/morse.hpp"
#include "polaris/tableaux.hpp"

namespace fs = std::filesystem;
using namespace polaris;

namespace {

constexpr int kExitVerdictFail = 1;
constexpr int kExitParseError = 2;
constexpr int kExitGuard = 3;
constexpr int kExitDisagreement = 4;

struct ReportBuilder {
    Json report;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    bool timings = false;
    bool all_pass = true;

    explicit ReportBuilder(const std::string& command) {
        report["command"] = command;
        report["inputs"] = Json::object();
        report["verdicts"] = Json::object();
        report["witnesses"] = Json::object();
    }
    void input(const std::string& name, const Json& j) {
        report["inputs"][name] = fnv1a_hex(j.dump());
    }
    void verdict(const std::string& name, bool pass) {
        report["verdicts"][name] = pass;
        all_pass = all_pass && pass;
    }
    void note(const std::string& name, const Json& j) { report[name] = j; }
    void witness(const std::string& name, const Json& j) { report["witnesses"][name] = j; }
    int finish() {
        if (timings) {
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
            report["timings"] = Json{{"total_ms", ms}};
        }
        std::cout << report.dump(2) << "\n";
        return all_pass ? 0 : kExitVerdictFail;
    }
};

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    Json j;
    in >> j;
    return j;
}

Json exponents_json(const std::vector<Exponent>& v) {
    Json j = Json::array();
    for (const auto& a : v) j.push_back(exponent_json(a));
    return j;
}

std::string dot_skeleton(int n, int d, const std::optional<Exponent>& u,
                         const std::optional<SyzygyGraph>& ls) {
    std::ostringstream os;
    os << "graph skeleton {\n  node [shape=plaintext];\n";
    auto label = [](const Exponent& a) {
        std::string s = "\"";
        for (size_t t = 0; t < a.size(); ++t) s += (t ? "," : "") + std::to_string(a[t]);
        return s + "\"";
    };
    for (const Exponent& a : restricted_generators(n, d, u)) os << "  " << label(a) << ";\n";
    for (const DownEdge& e : full_skeleton(n, d, u).edges) {
        Exponent va = plus(e.apex, e.i, -1), vb = plus(e.apex, e.j, -1);
        os << "  " << label(va) << " -- " << label(vb);
        if (ls && !ls->has(e)) os << " [style=dashed]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

void write_out(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
    } else {
        std::ofstream(path) << text;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact combinatorics of polarizations of powers of the maximal ideal"};
    app.require_subcommand(1);

    uint64_t seed = 0;
    int jobs = 1;
    int guard = 0;
    bool timings = false;
    app.add_option("--seed", seed, "seed for sampled operations");
    app.add_option("--jobs", jobs, "upper bound on internal parallelism");
    app.add_option("--guard", guard, "override the generator-count guard");
    app.add_flag("--timings", timings, "include timings in the report");

    auto* c_check = app.add_subcommand("check", "decide whether a family is a polarization");
    std::string check_file;
    bool cross = false;
    c_check->add_option("--family", check_file, "family JSON")->required();
    c_check->add_flag("--cross-check", cross, "also run the tableau and brute-force criteria");

    auto* c_infer = app.add_subcommand("infer", "infer an isotone family from a syzygy graph");
    std::string infer_file;
    c_infer->add_option("--graph", infer_file, "graph JSON (list of edges)")->required();

    auto* c_enum = app.add_subcommand("enumerate", "enumerate all polarizations at desk scale");
    int en = 0, ed = 0;
    std::vector<int> eu;
    bool by_family = false;
    std::string out_dir;
    c_enum->add_option("--n", en)->required();
    c_enum->add_option("--d", ed)->required();
    c_enum->add_option("--u", eu, "bound vector");
    c_enum->add_flag("--by-family", by_family, "list every family, not one per graph");
    c_enum->add_option("--out", out_dir, "output directory")->required();

    auto* c_morse = app.add_subcommand("morse", "matching, critical cells, Morse complex");
    int mn = 0, md = 0;
    bool check_iso = false;
    c_morse->add_option("--n", mn)->required();
    c_morse->add_option("--d", md)->required();
    c_morse->add_flag("--check-iso", check_iso, "verify the isomorphism with the L-complex");

    auto* c_l = app.add_subcommand("lcomplex", "build the L-complex and check exactness");
    int ln = 0, ld = 0;
    bool check_exact = false;
    c_l->add_option("--n", ln)->required();
    c_l->add_option("--d", ld)->required();
    c_l->add_flag("--check-exact", check_exact, "verify exactness strand by strand");

    auto* c_h = app.add_subcommand("hypersimplex", "cell census of the hypersimplicial complex");
    int hn = 0, hd = 0;
    std::vector<int> hu;
    c_h->add_option("--n", hn)->required();
    c_h->add_option("--d", hd)->required();
    c_h->add_option("--u", hu, "bound vector");

    auto* c_b = app.add_subcommand("betti", "brute-force Betti numbers of a monomial ideal");
    std::string ideal_file;
    int bn = 0, bd = 0;
    std::vector<int> bu;
    c_b->add_option("--ideal", ideal_file, "ideal JSON ({\"generators\":[[..],..]})");
    c_b->add_option("--n", bn);
    c_b->add_option("--d", bd);
    c_b->add_option("--u", bu, "bound vector");

    auto* c_r = app.add_subcommand("restricted", "restricted power setup");
    int rn = 0, rd = 0;
    std::vector<int> ru;
    c_r->add_option("--n", rn)->required();
    c_r->add_option("--d", rd)->required();
    c_r->add_option("--u", ru, "bound vector")->required();

    auto* c_e = app.add_subcommand("export", "emit a complex as JSON or the one-skeleton as DOT");
    std::string what = "hypersimplex", format = "json", export_out, export_family;
    int xn = 0, xd = 0;
    std::vector<int> xu;
    c_e->add_option("--what", what)->check(CLI::IsMember({"hypersimplex", "lcomplex", "morse"}));
    c_e->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));
    c_e->add_option("--n", xn)->required();
    c_e->add_option("--d", xd)->required();
    c_e->add_option("--u", xu, "bound vector");
    c_e->add_option("--family", export_family, "family JSON for edge styling");
    c_e->add_option("--out", export_out, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);
    (void)seed;
    (void)jobs;

    try {
        if (*c_check) {
            ReportBuilder rb("check");
            rb.timings = timings;
            Json jf;
            IsotoneFamily f;
            try {
                jf = load_json(check_file);
                f = family_from(jf);
                if (auto err = validate_family(f)) throw std::invalid_argument(*err);
            } catch (const std::exception& e) {
                std::cerr << "parse error: " << e.what() << "\n";
                return kExitParseError;
            }
            rb.input("family", jf);
            PolarizationVerdict v = is_polarization(f, cross, guard);
            rb.verdict("spanning_tree", v.spanning);
            if (v.tab_span) rb.verdict("tab_spanning", *v.tab_span);
            if (v.oracle) rb.verdict("oracle", *v.oracle);
            if (!v.spanning) {
                SpanCheck sc = spanning_tree_check(ls_edges(f), f.u);
                rb.witness("failing_apex", exponent_json(sc.witness_apex));
            }
            return rb.finish();
        }

        if (*c_infer) {
            ReportBuilder rb("infer");
            rb.timings = timings;
            Json jg;
            SyzygyGraph g;
            try {
                jg = load_json(infer_file);
                g = graph_from(jg);
            } catch (const std::exception& e) {
                std::cerr << "parse error: " << e.what() << "\n";
                return kExitParseError;
            }
            rb.input("graph", jg);
            auto diags = check_conditions_all(g);
            rb.verdict("conditions", diags.empty());
            if (!diags.empty()) {
                Json jd = Json::array();
                for (const auto& d : diags) jd.push_back(diagnostic_json(d));
                rb.witness("diagnostics", jd);
                return rb.finish();
            }
            InferenceResult inf = infer_family(g);
            StarCheck star = verify_star(g, inf.family);
            rb.verdict("star", star.ok);
            if (!star.ok && star.witness) rb.witness("edge", edge_json(*star.witness));
            rb.note("family", family_json(inf.family));
            return rb.finish();
        }

        if (*c_enum) {
            ReportBuilder rb("enumerate");
            rb.timings = timings;
            std::optional<Exponent> u;
            if (!eu.empty()) u = Exponent(eu.begin(), eu.end());
            Enumeration e = enumerate_polarizations(en, ed, u, by_family, guard);
            fs::create_directories(out_dir);
            Json manifest;
            manifest["provenance"] = Json{
                {"tool", "polaris enumerate"},
                {"oracle", "taylor-betti homology oracle v1"},
                {"derivation",
                 "counts are derived output; every emitted class is verified against the "
                 "brute-force Betti oracle"},
                {"deterministic_order", true}};
            manifest["n"] = en;
            manifest["d"] = ed;
            if (u) manifest["u"] = exponent_json(*u);
            manifest["mode"] = by_family ? "by-family" : "by-graph";
            manifest["graph_classes"] = e.classes.size();
            manifest["total_families"] = e.total_families;
            Json hashes = Json::array();
            bool all_verified = true;
            for (size_t t = 0; t < e.classes.size(); ++t) {
                const auto& cls = e.classes[t];
                Json jr;
                jr["id"] = t;
                jr["edges"] = graph_json(cls.graph);
                jr["family"] = family_json(cls.family);
                jr["family_count"] = cls.family_count;
                jr["oracle_verified"] = cls.oracle_verified;
                all_verified = all_verified && cls.oracle_verified;
                char name[32];
                snprintf(name, sizeof(name), "result_%03zu.json", t);
                std::string text = jr.dump(2) + "\n";
                std::ofstream(fs::path(out_dir) / name) << text;
                hashes.push_back(Json{{"file", name}, {"fnv1a", fnv1a_hex(text)}});
            }
            manifest["oracle_hashes"] = hashes;
            std::ofstream(fs::path(out_dir) / "manifest.json") << manifest.dump(2) << "\n";
            rb.verdict("oracle_verified", all_verified);
            rb.note("graph_classes", e.classes.size());
            rb.note("total_families", e.total_families);
            return rb.finish();
        }

        if (*c_morse) {
            ReportBuilder rb("morse");
            rb.timings = timings;
            ComplexDesc H = hypersimplex_complex(mn, md);
            Matching m = l_matching(mn, md);
            MatchingReport mr = validate_matching(H, m);
            rb.verdict("acyclic", mr.acyclic);
            rb.verdict("homogeneous", mr.homogeneous);
            ComplexDesc M = morse_complex(H, m);
            Json ranks = Json::array();
            auto r = M.ranks();
            for (size_t h = 1; h < r.size(); ++h) ranks.push_back(r[h]);
            rb.note("critical_by_degree", ranks);
            Json lranks = Json::array();
            for (int a = 0; a <= mn - 1; ++a) lranks.push_back((long)l_rank(a, md, mn));
            rb.note("l_ranks", lranks);
            rb.verdict("critical_counts_match", ranks == lranks);
            if (check_iso) {
                IsoReport iso = verify_l_isomorphism(mn, md);
                rb.verdict("isomorphic_to_l_complex", iso.ok);
                if (!iso.ok) rb.witness("iso", iso.witness);
            }
            return rb.finish();
        }

        if (*c_l) {
            ReportBuilder rb("lcomplex");
            rb.timings = timings;
            ComplexDesc L = build_l_complex(ln, ld);
            Json ranks = Json::array();
            auto r = L.ranks();
            for (size_t h = 1; h < r.size(); ++h) ranks.push_back(r[h]);
            rb.note("ranks", ranks);
            validate_square_zero(L);
            rb.verdict("square_zero", true);
            if (check_exact) {
                auto res = is_cellular_resolution(homogenize(L), guard);
                rb.verdict("exact", res.ok);
                if (!res.ok)
                    rb.witness("strand",
                               Json{{"multidegree", exponent_json(res.witness_multidegree)},
                                    {"homology_degree", res.homology_degree},
                                    {"dimension", res.dimension}});
            }
            return rb.finish();
        }

        if (*c_h) {
            ReportBuilder rb("hypersimplex");
            rb.timings = timings;
            std::optional<Exponent> u;
            if (!hu.empty()) u = Exponent(hu.begin(), hu.end());
            HypersimplexCensus cen = hypersimplex_census(hn, hd, u);
            rb.note("cells_by_dim", cen.cells_by_dim);
            rb.note("down_by_dim", cen.down_by_dim);
            rb.note("up_by_dim", cen.up_by_dim);
            rb.note("hypersimplex_by_dim", cen.proper_by_dim);
            rb.note("full_support_down_apexes", exponents_json(cen.full_support_down_apexes));
            ComplexDesc H = hypersimplex_complex(hn, hd, u);
            validate_square_zero(H);
            rb.verdict("square_zero", true);
            return rb.finish();
        }

        if (*c_b) {
            ReportBuilder rb("betti");
            rb.timings = timings;
            BettiTable table;
            if (!ideal_file.empty()) {
                Json j;
                std::vector<Exponent> gens;
                try {
                    j = load_json(ideal_file);
                    for (const auto& g : j.at("generators")) gens.push_back(exponent_from(g));
                } catch (const std::exception& e) {
                    std::cerr << "parse error: " << e.what() << "\n";
                    return kExitParseError;
                }
                rb.input("ideal", j);
                table = taylor_betti(gens, guard);
            } else {
                if (bn < 1 || bd < 1) {
                    std::cerr << "parse error: need --ideal or --n/--d\n";
                    return kExitParseError;
                }
                std::optional<Exponent> u;
                if (!bu.empty()) u = Exponent(bu.begin(), bu.end());
                table = taylor_betti(restricted_generators(bn, bd, u), guard);
            }
            rb.note("betti", betti_json(table));
            rb.verdict("computed", true);
            return rb.finish();
        }

        if (*c_r) {
            ReportBuilder rb("restricted");
            rb.timings = timings;
            Exponent u(ru.begin(), ru.end());
            RestrictedSetup setup = restricted_power_setup(rn, rd, u);
            rb.note("generators", exponents_json(setup.generators));
            rb.verdict("nonempty", !setup.empty);
            if (!setup.empty) {
                rb.note("hypersimplex_ranks", setup.hypersimplex.ranks());
                rb.note("morse_ranks", setup.morse.ranks());
                rb.note("l_ranks", setup.l_ranks);
            }
            return rb.finish();
        }

        if (*c_e) {
            std::optional<Exponent> u;
            if (!xu.empty()) u = Exponent(xu.begin(), xu.end());
            if (format == "dot") {
                std::optional<SyzygyGraph> ls;
                if (!export_family.empty()) {
                    IsotoneFamily f = family_from(load_json(export_family));
                    ls = ls_edges(f);
                }
                write_out(export_out, dot_skeleton(xn, xd, u, ls));
                return 0;
            }
            ComplexDesc cx;
            if (what == "hypersimplex")
                cx = hypersimplex_complex(xn, xd, u);
            else if (what == "lcomplex")
                cx = build_l_complex(xn, xd);
            else
                cx = morse_complex(hypersimplex_complex(xn, xd, u), l_matching(xn, xd));
            write_out(export_out, complex_json(cx).dump(2) + "\n");
            return 0;
        }
    } catch (const GuardError& e) {
        std::cerr << "guard: " << e.what() << "\n";
        return kExitGuard;
    } catch (const CriterionDisagreement& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitDisagreement;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParseError;
    }
    return 0;
}
