// Command line front end: classify, build, verify, render, gen, oracle.
// stdout carries exactly one JSON object per successful run; everything else
// goes to stderr. Exit codes: 0 ok, 1 negative verdict, 2 usage, 3 input
// error, 4 internal invariant failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "epg/b2m.hpp"
#include "epg/cactus.hpp"
#include "epg/embedding.hpp"
#include "epg/generators.hpp"
#include "epg/graph.hpp"
#include "epg/grid_io.hpp"
#include "epg/maxouterplanar.hpp"
#include "epg/oracle.hpp"
#include "epg/render.hpp"

using json = nlohmann::ordered_json;

namespace {

struct CmdError {
    int code;
    std::string msg;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CmdError{3, "cannot read " + path};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

epg::Graph load_graph(const std::string& path) {
    try {
        return epg::parse_graph(slurp(path));
    } catch (const epg::ParseError& e) {
        throw CmdError{3, path + ": " + e.what()};
    } catch (const std::invalid_argument& e) {
        throw CmdError{3, path + ": " + e.what()};
    }
}

epg::EpgRepresentation load_rep(const std::string& path) {
    try {
        return epg::rep_from_json(slurp(path));
    } catch (const std::invalid_argument& e) {
        throw CmdError{3, path + ": " + e.what()};
    }
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw CmdError{3, "cannot write " + path};
    out << text;
    if (text.empty() || text.back() != '\n') out << '\n';
}

void emit(const json& j) { std::cout << j.dump() << '\n'; }

json witness_json(const epg::Witness& w) {
    json j;
    j["kind"] = epg::witness_kind_name(w.kind);
    j["vertices"] = w.vertex_map;
    if (w.kind == epg::WitnessKind::M1_ELL) j["ell"] = w.ell;
    return j;
}

enum class Family { MaxOuterplanar, Cactus, Outerplanar };

const char* family_name(Family f) {
    switch (f) {
        case Family::MaxOuterplanar: return "maximal-outerplanar";
        case Family::Cactus: return "cactus";
        default: return "outerplanar";
    }
}

// auto precedence: maximal outerplanar, then cactus, then plain outerplanar.
Family detect_family(const epg::Graph& g) {
    if (epg::is_maximal_outerplanar(g)) return Family::MaxOuterplanar;
    if (std::holds_alternative<epg::CactusDecomposition>(epg::decompose_cactus(g)))
        return Family::Cactus;
    if (epg::is_outerplanar(g)) return Family::Outerplanar;
    throw CmdError{1, "graph is not outerplanar"};
}

void run_classify(const std::string& gpath, const std::string& family) {
    epg::Graph g = load_graph(gpath);
    Family fam;
    if (family == "auto") {
        fam = detect_family(g);
    } else if (family == "maximal-outerplanar") {
        if (!epg::is_maximal_outerplanar(g))
            throw CmdError{3, "graph is not maximal outerplanar"};
        fam = Family::MaxOuterplanar;
    } else if (family == "cactus") {
        auto d = epg::decompose_cactus(g);
        if (std::holds_alternative<epg::NotCactus>(d))
            throw CmdError{3, "not a cactus: " + std::get<epg::NotCactus>(d).reason};
        fam = Family::Cactus;
    } else {
        if (!epg::is_outerplanar(g)) throw CmdError{3, "graph is not outerplanar"};
        fam = Family::Outerplanar;
    }

    json out;
    out["family"] = family_name(fam);
    if (fam == Family::MaxOuterplanar) {
        auto cl = epg::classify_max_outerplanar(g);
        out["b"] = cl.b;
        out["bm"] = cl.bm;
        if (cl.s3) out["s3"] = witness_json(*cl.s3);
        if (cl.m_obstruction) out["m_obstruction"] = witness_json(*cl.m_obstruction);
    } else if (fam == Family::Cactus) {
        auto cl = epg::classify_cactus(g);
        out["b"] = cl.b;
        out["bm"] = cl.bm;
        if (cl.obstruction) out["obstruction"] = witness_json(*cl.obstruction);
    } else {
        out["b_upper"] = 2;
        out["bm_upper"] = 2;
        if (g.num_vertices() <= 10) {
            bool iv = epg::is_interval(g);
            out["interval"] = iv;
            if (iv) {
                out["b"] = 0;
                out["bm"] = 0;
            }
        }
    }
    emit(out);
}

void run_build(const std::string& gpath, const std::string& cls, const std::string& opath) {
    epg::Graph g = load_graph(gpath);
    Family fam = detect_family(g);

    epg::EpgRepresentation rep;
    int cap = 2;
    bool need_mono = false;
    std::string note;

    auto build_maxout_b1 = [&](const epg::DualTree& dual) {
        auto asg = epg::compute_assignment(g, dual);
        if (std::holds_alternative<epg::NotMFree>(asg))
            throw CmdError{1, "graph needs two bends; no single-bend representation"};
        return epg::build_b1(g, dual, std::get<epg::Assignment>(asg));
    };

    if (cls == "b0") {
        if (fam == Family::MaxOuterplanar) {
            auto dual = epg::almost_dual(g);
            if (!epg::s3_centers(dual).empty())
                throw CmdError{1, "graph contains a sun; no bend-free representation"};
            rep = epg::build_b0(g, dual);
        } else if (fam == Family::Cactus) {
            auto dec = std::get<epg::CactusDecomposition>(epg::decompose_cactus(g));
            if (epg::is_mc_free(g, dec))
                throw CmdError{1, "cactus holds an obstruction; no bend-free representation"};
            rep = epg::build_b0_cactus(g, dec);
        } else {
            throw CmdError{1, "bend-free construction covers maximal outerplanar graphs and cacti"};
        }
        cap = 0;
    } else if (cls == "b1") {
        if (fam == Family::MaxOuterplanar) {
            rep = build_maxout_b1(epg::almost_dual(g));
        } else if (fam == Family::Cactus) {
            auto dec = std::get<epg::CactusDecomposition>(epg::decompose_cactus(g));
            rep = epg::build_b1m_cactus(g, dec);
        } else {
            throw CmdError{1, "single-bend construction covers maximal outerplanar graphs and cacti"};
        }
        cap = 1;
    } else if (cls == "b1m") {
        if (fam == Family::MaxOuterplanar) {
            auto dual = epg::almost_dual(g);
            if (!epg::s3_centers(dual).empty())
                throw CmdError{1, "graph contains a sun; its monotone bend number is two"};
            rep = epg::build_b0(g, dual);
        } else if (fam == Family::Cactus) {
            auto dec = std::get<epg::CactusDecomposition>(epg::decompose_cactus(g));
            rep = epg::build_b1m_cactus(g, dec);
        } else {
            throw CmdError{1, "single-bend monotone construction covers maximal outerplanar graphs and cacti"};
        }
        cap = 1;
        need_mono = true;
    } else if (cls == "b2m") {
        rep = epg::build_b2m(g);
        cap = 2;
        need_mono = true;
    } else if (cls == "min" || cls == "min-monotonic") {
        bool mono = cls == "min-monotonic";
        if (fam == Family::MaxOuterplanar) {
            auto dual = epg::almost_dual(g);
            if (epg::s3_centers(dual).empty()) {
                rep = epg::build_b0(g, dual);
                cap = 0;
            } else if (mono) {
                rep = epg::build_b2m(g);
                cap = 2;
            } else {
                auto asg = epg::compute_assignment(g, dual);
                if (std::holds_alternative<epg::Assignment>(asg)) {
                    rep = epg::build_b1(g, dual, std::get<epg::Assignment>(asg));
                    cap = 1;
                } else {
                    rep = epg::build_b2m(g);
                    cap = 2;
                }
            }
        } else if (fam == Family::Cactus) {
            auto dec = std::get<epg::CactusDecomposition>(epg::decompose_cactus(g));
            if (!epg::is_mc_free(g, dec)) {
                rep = epg::build_b0_cactus(g, dec);
                cap = 0;
            } else {
                rep = epg::build_b1m_cactus(g, dec);
                cap = 1;
            }
        } else {
            rep = epg::build_b2m(g);
            cap = 2;
            note = "exact minimum is not computed for general outerplanar input; "
                   "using the two-bend monotone construction";
        }
        need_mono = mono;
    }

    auto rpt = epg::verify_representation(g, rep);
    if (!rpt.ok || rpt.max_bends > cap || (need_mono && !rpt.monotonic_all))
        throw CmdError{4, "internal error: construction failed verification"};
    write_file(opath, epg::rep_to_json(rep));

    json out;
    out["written"] = opath;
    out["class"] = cls;
    out["family"] = family_name(fam);
    out["max_bends"] = rpt.max_bends;
    out["monotonic"] = rpt.monotonic_all;
    out["grid"] = {{"cols", rep.cols()}, {"rows", rep.rows()}};
    if (!note.empty()) {
        out["note"] = note;
        std::cerr << note << '\n';
    }
    emit(out);
}

void run_verify(const std::string& gpath, const std::string& rpath, int max_bends, bool mono) {
    epg::Graph g = load_graph(gpath);
    epg::EpgRepresentation rep = load_rep(rpath);
    auto rpt = epg::verify_representation(g, rep);
    bool ok = rpt.ok && (max_bends < 0 || rpt.max_bends <= max_bends) &&
              (!mono || rpt.monotonic_all);
    json out;
    out["ok"] = ok;
    out["intersections_ok"] = rpt.ok;
    out["max_bends"] = rpt.max_bends;
    out["monotonic"] = rpt.monotonic_all;
    out["missing_vertices"] = rpt.missing_vertices;
    out["unknown_vertices"] = rpt.unknown_vertices;
    json mi = json::array(), ei = json::array();
    for (auto [a, b] : rpt.missing_intersections) mi.push_back({a, b});
    for (auto [a, b] : rpt.extra_intersections) ei.push_back({a, b});
    out["missing_intersections"] = mi;
    out["extra_intersections"] = ei;
    emit(out);
    if (!ok) throw CmdError{1, ""};
}

void run_render(const std::string& rpath, const std::string& format, const std::string& opath) {
    epg::EpgRepresentation rep = load_rep(rpath);
    std::string text = format == "ascii" ? epg::render_ascii(rep) : epg::render_svg(rep);
    write_file(opath, text);
    json out;
    out["written"] = opath;
    out["format"] = format;
    emit(out);
}

void run_gen(const std::string& family, int n, int ell, std::uint64_t seed,
             const std::string& opath) {
    epg::Graph g;
    try {
        if (family == "nsun") {
            g = epg::gen_nsun(n);
        } else if (family == "cycle") {
            g = epg::gen_cycle(n);
        } else if (family == "path") {
            g = epg::gen_path(n);
        } else if (family == "m1") {
            g = epg::gen_m1();
        } else if (family == "m1l") {
            g = epg::gen_m1_ell(ell);
        } else if (family == "m2") {
            g = epg::gen_m2();
        } else if (family == "m3") {
            g = epg::gen_m3();
        } else if (family == "rand-maxout") {
            g = epg::gen_rand_maximal_outerplanar(n, seed);
        } else if (family == "rand-cactus") {
            g = epg::gen_rand_cactus(n, seed);
        } else {
            g = epg::gen_rand_connected_outerplanar(n, seed);
        }
    } catch (const std::invalid_argument& e) {
        throw CmdError{3, e.what()};
    }
    write_file(opath, epg::format_graph(g));
    json out;
    out["written"] = opath;
    out["family"] = family;
    out["n"] = g.num_vertices();
    out["m"] = g.num_edges();
    emit(out);
}

void run_oracle(const std::string& mode, const std::string& gpath, int grid, long long budget) {
    epg::Graph g = load_graph(gpath);
    if (mode == "exact") {
        auto r = epg::bend_number_exact(g, budget);
        json out;
        out["b"] = r.b ? json(*r.b) : json(nullptr);
        out["bm"] = r.bm ? json(*r.bm) : json(nullptr);
        out["nodes"] = r.nodes_expanded;
        emit(out);
        return;
    }
    int k = mode == "b0" ? 0 : 1;
    bool mono = mode == "b1m";
    auto r = epg::bounded_grid_search(g, k, mono, grid, budget);
    json out;
    switch (r.status) {
        case epg::SearchStatus::FOUND: out["status"] = "found"; break;
        case epg::SearchStatus::NONE_WITHIN_BOUND: out["status"] = "none_within_bound"; break;
        default: out["status"] = "budget_exceeded"; break;
    }
    out["bound"] = r.bound;
    out["nodes"] = r.nodes_expanded;
    if (r.rep) out["max_bends"] = epg::verify_representation(g, *r.rep).max_bends;
    emit(out);
    if (r.status == epg::SearchStatus::NONE_WITHIN_BOUND) throw CmdError{1, ""};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"minimal-bend edge-intersection grid paths for outerplanar graphs"};
    app.require_subcommand(1);

    std::string cl_graph, cl_family = "auto";
    auto* ccl = app.add_subcommand("classify", "bend classification of a graph");
    ccl->add_option("graph", cl_graph, "graph file")->required();
    ccl->add_option("--family", cl_family, "family to classify under")
        ->check(CLI::IsMember({"auto", "maximal-outerplanar", "cactus", "outerplanar"}));

    std::string b_graph, b_class, b_out;
    auto* cb = app.add_subcommand("build", "construct a representation");
    cb->add_option("graph", b_graph, "graph file")->required();
    cb->add_option("--class", b_class, "target class")
        ->required()
        ->check(CLI::IsMember({"b0", "b1", "b1m", "b2m", "min", "min-monotonic"}));
    cb->add_option("-o,--output", b_out, "representation file to write")->required();

    std::string v_graph, v_rep;
    int v_max = -1;
    bool v_mono = false;
    auto* cv = app.add_subcommand("verify", "check a representation against a graph");
    cv->add_option("graph", v_graph, "graph file")->required();
    cv->add_option("rep", v_rep, "representation file")->required();
    cv->add_option("--max-bends", v_max, "largest bend count to accept");
    cv->add_flag("--monotonic", v_mono, "require monotonic paths");

    std::string r_rep, r_format = "svg", r_out;
    auto* cr = app.add_subcommand("render", "draw a representation");
    cr->add_option("rep", r_rep, "representation file")->required();
    cr->add_option("--format", r_format, "output format")
        ->check(CLI::IsMember({"svg", "ascii"}));
    cr->add_option("-o,--output", r_out, "file to write")->required();

    std::string g_family, g_out;
    int g_n = 0, g_l = 0;
    std::uint64_t g_seed = 0;
    auto* cg = app.add_subcommand("gen", "generate a graph");
    cg->add_option("--family", g_family, "graph family")
        ->required()
        ->check(CLI::IsMember({"nsun", "cycle", "path", "m1", "m1l", "m2", "m3", "rand-maxout",
                               "rand-cactus", "rand-outerplanar"}));
    cg->add_option("--n", g_n, "size parameter");
    cg->add_option("--l", g_l, "chain length for m1l");
    cg->add_option("--seed", g_seed, "random seed");
    cg->add_option("-o,--output", g_out, "graph file to write")->required();

    std::string o_mode, o_graph;
    int o_grid = 0;
    long long o_budget = 50'000'000;
    auto* co = app.add_subcommand("oracle", "independent exhaustive checks");
    co->add_option("mode", o_mode, "b0, b1, b1m or exact")
        ->required()
        ->check(CLI::IsMember({"b0", "b1", "b1m", "exact"}));
    co->add_option("graph", o_graph, "graph file")->required();
    co->add_option("--grid", o_grid, "grid lines allowed per axis, 0 for automatic");
    co->add_option("--budget", o_budget, "candidate budget");

    ccl->callback([&] { run_classify(cl_graph, cl_family); });
    cb->callback([&] { run_build(b_graph, b_class, b_out); });
    cv->callback([&] { run_verify(v_graph, v_rep, v_max, v_mono); });
    cr->callback([&] { run_render(r_rep, r_format, r_out); });
    cg->callback([&] { run_gen(g_family, g_n, g_l, g_seed, g_out); });
    co->callback([&] { run_oracle(o_mode, o_graph, o_grid, o_budget); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int c = app.exit(e);
        return c == 0 ? 0 : 2;
    } catch (const CmdError& e) {
        if (!e.msg.empty()) std::cerr << e.msg << '\n';
        return e.code;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return 3;
    }
    return 0;
}
