#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace {

std::string g_cli;  // path to the evs binary, from argv[1]
std::string g_dir;  // scratch directory

struct RunResult {
    int rc;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string out_path = g_dir + "/stdout.txt";
    int status = std::system((g_cli + " " + args + " > " + out_path + " 2>&1").c_str());
    std::ifstream f(out_path);
    std::stringstream ss;
    ss << f.rdbuf();
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, ss.str()};
}

void write_file(const std::string& name, const std::string& content) {
    std::ofstream f(g_dir + "/" + name);
    f << content;
}

std::string slurp(const std::string& name) {
    std::ifstream f(g_dir + "/" + name);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

nlohmann::json parse(const std::string& text) { return nlohmann::json::parse(text); }

}  // namespace

TEST_CASE("catalog list and emit round-trip through validate") {
    auto list = run("catalog list");
    CHECK(list.rc == 0);
    CHECK(list.out.find("heisenberg") != std::string::npos);
    CHECK(list.out.find("sp4-defining") != std::string::npos);

    auto emit = run("catalog emit heisenberg --out-dir " + g_dir);
    REQUIRE(emit.rc == 0);
    auto val = run("validate " + g_dir + "/heisenberg.algebra.json " + g_dir +
                   "/heisenberg.module.json");
    CHECK(val.rc == 0);
    CHECK(parse(val.out)["algebra"]["pass"].get<bool>());

    CHECK(run("catalog emit no-such-id").rc == 1);
}

TEST_CASE("validate rejects a perturbed algebra and a non-restricted module") {
    // x^{[p]} = y contradicts ad(x)^p = 0 in the Heisenberg algebra
    write_file("bad.algebra.json", R"({
        "p": 5, "dim": 3, "labels": ["x", "y", "z"],
        "brackets": [[0, 1, [[2, 1]]]],
        "p_powers": [[0, [[1, 1]]]]
    })");
    auto bad = run("validate " + g_dir + "/bad.algebra.json");
    CHECK(bad.rc == 1);
    CHECK(!parse(bad.out)["algebra"]["pass"].get<bool>());
    CHECK(!parse(bad.out)["algebra"]["failures"].empty());

    // rho(z) = 1 breaks both [rho x, rho y] = rho(z) and rho(z)^p = rho(z^{[p]})
    write_file("good.algebra.json", R"({
        "p": 5, "dim": 3, "labels": ["x", "y", "z"],
        "brackets": [[0, 1, [[2, 1]]]],
        "p_powers": []
    })");
    write_file("bad.module.json", R"({
        "label": "bad", "dim": 1,
        "actions": [[[0]], [[0]], [[1]]]
    })");
    auto badm = run("validate " + g_dir + "/good.algebra.json " + g_dir + "/bad.module.json");
    CHECK(badm.rc == 1);
    CHECK(parse(badm.out)["algebra"]["pass"].get<bool>());
    CHECK(!parse(badm.out)["module"]["pass"].get<bool>());

    write_file("malformed.json", "{ not json");
    CHECK(run("validate " + g_dir + "/malformed.json").rc == 1);
}

TEST_CASE("splitting: Heisenberg kernel {0,-1}, semidirect image {-2}, deterministic") {
    REQUIRE(run("catalog emit heisenberg --out-dir " + g_dir).rc == 0);
    const std::string base = " --algebra " + g_dir + "/heisenberg.algebra.json --module " +
                             g_dir + "/heisenberg.module.json --locus " + g_dir +
                             "/heisenberg.locus.json";
    auto r = run("splitting" + base + " --j 1 --out " + g_dir + "/s1.json");
    REQUIRE(r.rc == 0);
    auto s1 = parse(slurp("s1.json"));
    CHECK(s1["twists"] == nlohmann::json({0, -1}));
    CHECK(s1["rank"] == 2);
    // byte-identical output on a rerun
    REQUIRE(run("splitting" + base + " --j 1 --out " + g_dir + "/s2.json").rc == 0);
    CHECK(slurp("s1.json") == slurp("s2.json"));

    REQUIRE(run("catalog emit semidirect-n2-N2 --out-dir " + g_dir).rc == 0);
    auto rn = run("splitting --algebra " + g_dir + "/semidirect-n2-N2.algebra.json --module " +
                  g_dir + "/semidirect-n2-N2.module.json --locus " + g_dir +
                  "/semidirect-n2-N2.locus.json --j 2 --sheaf image");
    REQUIRE(rn.rc == 0);
    CHECK(parse(rn.out)["twists"] == nlohmann::json({-2}));
}

TEST_CASE("scan: Heisenberg certifies (exit 0), the jumping fixture does not (exit 2)") {
    REQUIRE(run("catalog emit heisenberg --out-dir " + g_dir).rc == 0);
    const std::string base = " --algebra " + g_dir + "/heisenberg.algebra.json --module " +
                             g_dir + "/heisenberg.module.json --locus " + g_dir +
                             "/heisenberg.locus.json";
    auto r = run("scan" + base + " --j 1");
    CHECK(r.rc == 0);
    auto j = parse(r.out);
    CHECK(j["certificates"][0]["constant"].get<bool>());
    CHECK(j["certificates"][0]["generic_soc_rank"] == 2);

    // two commuting operators with a socle jump at T = 0
    write_file("jump.algebra.json", R"({
        "p": 5, "dim": 2, "labels": ["x1", "x2"], "brackets": [], "p_powers": []
    })");
    write_file("jump.module.json", R"({
        "label": "jump", "dim": 4,
        "actions": [
          [[0,0,0,0],[0,0,0,0],[0,0,0,0],[1,0,0,0]],
          [[0,0,0,0],[0,0,0,0],[1,0,0,0],[0,1,0,0]]
        ]
    })");
    write_file("jump.locus.json", R"json({
        "sigma": [0], "params": 1,
        "coords": [{"i": 1, "j": 0, "poly": [[[1], 1]]}],
        "label": "span(x1 + T x2)"
    })json");
    auto rj = run("scan --algebra " + g_dir + "/jump.algebra.json --module " + g_dir +
                  "/jump.module.json --locus " + g_dir + "/jump.locus.json --j 1");
    CHECK(rj.rc == 2);
    auto jj = parse(rj.out);
    CHECK(!jj["certificates"][0]["constant"].get<bool>());
    CHECK(jj["certificates"][0]["deviating"].size() == 1);
    CHECK(jj["certificates"][0]["generic_soc_rank"] == 2);
}

TEST_CASE("generic-rank and fiber") {
    REQUIRE(run("catalog emit heisenberg --out-dir " + g_dir).rc == 0);
    const std::string base = " --algebra " + g_dir + "/heisenberg.algebra.json --module " +
                             g_dir + "/heisenberg.module.json --locus " + g_dir +
                             "/heisenberg.locus.json";
    auto r = run("generic-rank" + base + " --j 1");
    REQUIRE(r.rc == 0);
    auto j = parse(r.out);
    CHECK(j["ker"] == 2);
    CHECK(j["im"] == 1);

    auto rf = run("fiber" + base + " --j 1 --point 0");
    REQUIRE(rf.rc == 0);
    auto jf = parse(rf.out);
    CHECK(jf["certified"].get<bool>());
    CHECK(jf["points"][0]["agree"].get<bool>());
}

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: test_cli <path-to-evs-binary>\n");
        return 1;
    }
    g_cli = argv[1];
    g_dir = "/tmp/evs_cli_test";
    std::system(("rm -rf " + g_dir + " && mkdir -p " + g_dir).c_str());
    doctest::Context ctx;
    ctx.applyCommandLine(1, argv);
    return ctx.run();
}
