#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "epg/generators.hpp"
#include "epg/graph.hpp"
#include "json.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(EPG_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {};
    RunResult r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int st = pclose(pipe);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

const std::string& dir() {
    static std::string d = [] {
        char tmpl[] = "/tmp/epg_cli_XXXXXX";
        char* p = mkdtemp(tmpl);
        if (!p) std::abort();
        return std::string(p);
    }();
    return d;
}

std::string file(const std::string& name) { return dir() + "/" + name; }

void write_text(const std::string& path, const std::string& content) {
    std::ofstream f(path);
    f << content;
}

std::string read_text(const std::string& path) {
    std::ifstream f(path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void write_graph(const std::string& path, const epg::Graph& g) {
    write_text(path, epg::format_graph(g));
}

json out_json(const RunResult& r) { return json::parse(r.out); }

}  // namespace

TEST_CASE("gen writes a parseable graph and reports its size") {
    auto r = run_cli("gen --family nsun --n 3 -o " + file("s3.g"));
    REQUIRE(r.code == 0);
    json j = out_json(r);
    CHECK(j["family"] == "nsun");
    CHECK(j["n"] == 6);
    CHECK(j["m"] == 9);
    CHECK(epg::parse_graph(read_text(file("s3.g"))) == epg::gen_nsun(3));

    auto r2 = run_cli("gen --family m1l --l 2 --n 0 -o " + file("m1l.g"));
    REQUIRE(r2.code == 0);
    CHECK(out_json(r2)["n"] == 11);

    auto r3 = run_cli("gen --family cycle --n 2 -o " + file("bad.g"));
    CHECK(r3.code == 3);  // generator rejects r < 3
}

TEST_CASE("classify the three families") {
    write_graph(file("fan.g"),
                epg::Graph::from_edges(6, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6},
                                           {2, 3}, {3, 4}, {4, 5}, {5, 6}}));
    auto rf = run_cli("classify " + file("fan.g"));
    REQUIRE(rf.code == 0);
    json jf = out_json(rf);
    CHECK(jf["family"] == "maximal-outerplanar");
    CHECK(jf["b"] == 0);
    CHECK(jf["bm"] == 0);
    CHECK_FALSE(jf.contains("s3"));

    auto rs = run_cli("classify " + file("s3.g"));
    REQUIRE(rs.code == 0);
    json js = out_json(rs);
    CHECK(js["family"] == "maximal-outerplanar");
    CHECK(js["b"] == 1);
    CHECK(js["bm"] == 2);
    CHECK(js["s3"]["kind"] == "S3");
    CHECK(js["s3"]["vertices"].size() == 6);
    CHECK_FALSE(js.contains("m_obstruction"));

    REQUIRE(run_cli("gen --family cycle --n 7 -o " + file("c7.g")).code == 0);
    auto rc = run_cli("classify " + file("c7.g"));
    REQUIRE(rc.code == 0);
    json jc = out_json(rc);
    CHECK(jc["family"] == "cactus");
    CHECK(jc["b"] == 1);
    CHECK(jc["bm"] == 1);
    CHECK(jc["obstruction"]["kind"] == "CYCLE_GE4");

    REQUIRE(run_cli("gen --family path --n 5 -o " + file("p5.g")).code == 0);
    json jp = out_json(run_cli("classify " + file("p5.g")));
    CHECK(jp["family"] == "cactus");
    CHECK(jp["b"] == 0);

    // Diamond with a pendant: outerplanar but neither maximal nor a cactus.
    write_graph(file("dia.g"),
                epg::Graph::from_edges(5, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}, {1, 5}}));
    auto rd = run_cli("classify " + file("dia.g"));
    REQUIRE(rd.code == 0);
    json jd = out_json(rd);
    CHECK(jd["family"] == "outerplanar");
    CHECK(jd["b_upper"] == 2);
    CHECK(jd["bm_upper"] == 2);
    CHECK(jd["interval"] == true);
    CHECK(jd["b"] == 0);

    // Chorded hexagon: generic outerplanar and not interval.
    write_graph(file("hex.g"), epg::Graph::from_edges(
                                   6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}, {1, 4}}));
    json jh = out_json(run_cli("classify " + file("hex.g")));
    CHECK(jh["family"] == "outerplanar");
    CHECK(jh["interval"] == false);
    CHECK_FALSE(jh.contains("b"));
}

TEST_CASE("classify rejections and family mismatches") {
    write_graph(file("k4.g"), epg::Graph::from_edges(
                                  4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}));
    CHECK(run_cli("classify " + file("k4.g")).code == 1);
    CHECK(run_cli("classify " + file("k4.g") + " --family cactus").code == 3);
    CHECK(run_cli("classify " + file("c7.g") + " --family maximal-outerplanar").code == 3);
    CHECK(run_cli("classify " + file("missing.g")).code == 3);
}

TEST_CASE("build, verify and render round trip") {
    auto rb = run_cli("build " + file("s3.g") + " --class b1 -o " + file("s3_b1.json"));
    REQUIRE(rb.code == 0);
    json jb = out_json(rb);
    CHECK(jb["class"] == "b1");
    CHECK(jb["family"] == "maximal-outerplanar");
    CHECK(jb["max_bends"] == 1);
    CHECK(jb["grid"]["cols"].get<int>() > 0);

    auto rv = run_cli("verify " + file("s3.g") + " " + file("s3_b1.json") + " --max-bends 1");
    REQUIRE(rv.code == 0);
    json jv = out_json(rv);
    CHECK(jv["ok"] == true);
    CHECK(jv["intersections_ok"] == true);
    CHECK(jv["max_bends"] == 1);

    auto rr = run_cli("render " + file("s3_b1.json") + " -o " + file("s3.svg"));
    REQUIRE(rr.code == 0);
    CHECK(out_json(rr)["format"] == "svg");
    CHECK(read_text(file("s3.svg")).find("<svg") != std::string::npos);

    auto ra = run_cli("render " + file("s3_b1.json") + " --format ascii -o " + file("s3.txt"));
    REQUIRE(ra.code == 0);
    CHECK_FALSE(read_text(file("s3.txt")).empty());
}

TEST_CASE("build respects the class hierarchy") {
    CHECK(run_cli("build " + file("s3.g") + " --class b0 -o " + file("no.json")).code == 1);
    CHECK(run_cli("build " + file("s3.g") + " --class b1m -o " + file("no.json")).code == 1);
    CHECK(run_cli("build " + file("c7.g") + " --class b0 -o " + file("no.json")).code == 1);
    CHECK(run_cli("build " + file("k4.g") + " --class b2m -o " + file("no.json")).code == 1);

    auto rmin = run_cli("build " + file("fan.g") + " --class min -o " + file("fan_min.json"));
    REQUIRE(rmin.code == 0);
    json jm = out_json(rmin);
    CHECK(jm["class"] == "min");
    CHECK(jm["max_bends"] == 0);

    auto rs = run_cli("build " + file("s3.g") + " --class min -o " + file("s3_min.json"));
    REQUIRE(rs.code == 0);
    CHECK(out_json(rs)["max_bends"] == 1);

    auto rsm = run_cli("build " + file("s3.g") + " --class min-monotonic -o " +
                       file("s3_minm.json"));
    REQUIRE(rsm.code == 0);
    json jsm = out_json(rsm);
    CHECK(jsm["max_bends"] == 2);
    CHECK(jsm["monotonic"] == true);

    auto rc = run_cli("build " + file("c7.g") + " --class b1m -o " + file("c7_b1m.json"));
    REQUIRE(rc.code == 0);
    CHECK(run_cli("verify " + file("c7.g") + " " + file("c7_b1m.json") +
                  " --max-bends 1 --monotonic")
              .code == 0);

    auto rdia = run_cli("build " + file("dia.g") + " --class min -o " + file("dia_min.json"));
    REQUIRE(rdia.code == 0);
    CHECK(run_cli("verify " + file("dia.g") + " " + file("dia_min.json")).code == 0);
}

TEST_CASE("verify detects mismatches and enforces caps") {
    // A cycle drawing checked against the path on the same vertices has one
    // intersection too many.
    write_graph(file("p7.g"), epg::gen_path(7));
    auto rv = run_cli("verify " + file("p7.g") + " " + file("c7_b1m.json"));
    REQUIRE(rv.code == 1);
    json jv = out_json(rv);
    CHECK(jv["ok"] == false);
    CHECK(jv["intersections_ok"] == false);
    CHECK(jv["extra_intersections"].size() == 1);

    auto rcap = run_cli("verify " + file("c7.g") + " " + file("c7_b1m.json") + " --max-bends 0");
    REQUIRE(rcap.code == 1);
    json jc = out_json(rcap);
    CHECK(jc["intersections_ok"] == true);
    CHECK(jc["ok"] == false);

    write_text(file("broken.json"), "{\"grid\":{}}");
    CHECK(run_cli("verify " + file("c7.g") + " " + file("broken.json")).code == 3);
}

TEST_CASE("oracle subcommand") {
    auto rp = run_cli("oracle b0 " + file("p5.g"));
    REQUIRE(rp.code == 0);
    json jp = out_json(rp);
    CHECK(jp["status"] == "found");
    CHECK(jp["max_bends"] == 0);

    REQUIRE(run_cli("gen --family cycle --n 4 -o " + file("c4.g")).code == 0);
    auto rc = run_cli("oracle b0 " + file("c4.g"));
    CHECK(rc.code == 1);
    CHECK(out_json(rc)["status"] == "none_within_bound");

    auto rb1 = run_cli("oracle b1m " + file("c4.g"));
    REQUIRE(rb1.code == 0);
    CHECK(out_json(rb1)["status"] == "found");

    auto re = run_cli("oracle exact " + file("c4.g"));
    REQUIRE(re.code == 0);
    json je = out_json(re);
    CHECK(je["b"] == 1);
    CHECK(je["bm"] == 1);

    auto rt = run_cli("oracle exact " + file("s3.g") + " --budget 200");
    REQUIRE(rt.code == 0);
    CHECK(out_json(rt)["b"].is_null());

    auto rbudget = run_cli("oracle b1 " + file("c4.g") + " --budget 2");
    REQUIRE(rbudget.code == 0);
    CHECK(out_json(rbudget)["status"] == "budget_exceeded");
}

TEST_CASE("usage errors exit with code two") {
    CHECK(run_cli("").code == 2);
    CHECK(run_cli("frobnicate").code == 2);
    CHECK(run_cli("classify").code == 2);
    CHECK(run_cli("build " + file("s3.g") + " -o x.json").code == 2);
    CHECK(run_cli("build " + file("s3.g") + " --class b9 -o x.json").code == 2);
    CHECK(run_cli("gen --family nsun --n 3").code == 2);  // missing -o
    CHECK(run_cli("--help").code == 0);
}

TEST_CASE("stdout is a single JSON document") {
    auto r = run_cli("classify " + file("fan.g"));
    REQUIRE(r.code == 0);
    REQUIRE_FALSE(r.out.empty());
    CHECK(r.out.back() == '\n');
    CHECK(r.out.find('\n') == r.out.size() - 1);
    CHECK(json::accept(r.out));
}
