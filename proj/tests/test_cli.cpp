#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "signbal/edge_list.hpp"
#include "signbal/generate.hpp"
#include "signbal/json.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch() {
    static const fs::path dir = [] {
        auto d = fs::temp_directory_path() / ("signbal_cli_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

void write_file(const fs::path& p, const std::string& text) {
    std::ofstream(p) << text;
}

Run run(const std::string& args) {
    const auto out = scratch() / "stdout.txt";
    const auto err = scratch() / "stderr.txt";
    const std::string cmd = std::string(SIGNBAL_CLI_PATH) + " " + args + " >" + out.string() + " 2>" + err.string();
    const int status = std::system(cmd.c_str());
    Run r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("classify reports the verdict and certificates") {
    const auto g = scratch() / "tri.txt";
    write_file(g, "# negative triangle\n0 1 -1\n1 2 -1\n0 2 -1\n");
    const auto r = run("classify --input " + g.string());
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["verdict"] == "Antibalanced");
    CHECK(j["antibalanced_partition"] == json::array({1, 1, 1}));
    CHECK(j["nodes"] == 3);
    CHECK(std::abs(j["d_a"].get<double>()) < 1e-12);
    CHECK(j["d_b"].get<double>() == doctest::Approx(0.5));
    CHECK_FALSE(j.contains("labels"));

    const auto named = scratch() / "named.txt";
    write_file(named, "alpha beta 1\nbeta gamma -1\n");
    const auto jn = json::parse(run("classify --input " + named.string()).out);
    CHECK(jn["labels"] == json::array({"alpha", "beta", "gamma"}));
    CHECK(jn["verdict"] == "Both");
}

TEST_CASE("exit codes") {
    CHECK(run("").code == 1);
    CHECK(run("classify").code == 1);
    CHECK(run("frobnicate").code == 1);
    CHECK(run("simulate spin --input x").code == 1);
    const auto missing = run("classify --input " + (scratch() / "nope.txt").string());
    CHECK(missing.code == 2);
    CHECK(missing.err.find("IoError") != std::string::npos);

    const auto bad = scratch() / "bad.txt";
    write_file(bad, "0 1 1\n1 2\n");
    const auto parse = run("classify --input " + bad.string());
    CHECK(parse.code == 2);
    CHECK(parse.err.find(":2:") != std::string::npos);

    const auto split = scratch() / "split.txt";
    write_file(split, "0 1 1\n2 3 1\n");
    CHECK(run("classify --input " + split.string()).err.find("Disconnected") != std::string::npos);

    const auto cfg = scratch() / "typo.json";
    write_file(cfg, R"({"etaa": 0.2})");
    const auto typo = run("generate ssbm --config " + cfg.string());
    CHECK(typo.code == 2);
    CHECK(typo.err.find("InvalidConfig") != std::string::npos);
}

TEST_CASE("generate is deterministic and round-trips through the loader") {
    const auto a = run("generate ssbm --seed 5");
    const auto b = run("generate ssbm --seed 5");
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out != run("generate ssbm --seed 6").out);

    std::istringstream in(a.out);
    const auto loaded = signbal::read_edge_list(in, "generated");
    signbal::SSBMParams p;
    p.seed = 5;
    std::ostringstream direct;
    signbal::write_edge_list(direct, signbal::ssbm(p), {});
    std::ostringstream reloaded;
    signbal::write_edge_list(reloaded, loaded.graph, {});
    CHECK(reloaded.str() == direct.str());

    const auto file = scratch() / "lattice.txt";
    const auto cfg = scratch() / "lattice.json";
    write_file(cfg, R"({"n": 20, "plan": {"kind": "antibalanced", "rule": {"kind": "arc"}}})");
    REQUIRE(run("generate lattice --config " + cfg.string() + " --output " + file.string()).code == 0);
    CHECK(json::parse(run("classify --input " + file.string()).out)["verdict"] == "Antibalanced");

    const auto tree = scratch() / "tree.txt";
    REQUIRE(run("generate tree --seed 3 --output " + tree.string()).code == 0);
    CHECK(json::parse(run("classify --input " + tree.string()).out)["verdict"] == "Both");
}

TEST_CASE("measure reports frustration and spectral checks") {
    const auto g = scratch() / "four.txt";
    write_file(g, "0 1 1\n0 2 1\n1 2 1\n1 3 1\n2 3 -1\n");
    const auto r = run("measure --input " + g.string());
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["verdict"] == "StrictlyUnbalanced");
    CHECK(j["frustration"]["balanced"]["flip_count"] == 1);
    CHECK(j["measures"]["contraction"].get<double>() > 1e-9);
    CHECK_FALSE(j.contains("spectral_theorem"));

    const auto cfg = scratch() / "heuristic.json";
    write_file(cfg, R"({"frustration_mode": "heuristic"})");
    const auto h = json::parse(run("measure --input " + g.string() + " --config " + cfg.string()).out);
    CHECK(h["frustration"]["balanced"]["exact"] == false);
}

TEST_CASE("simulate writes trajectories and the rw prediction") {
    const auto g = scratch() / "ssbm.txt";
    REQUIRE(run("generate ssbm --seed 2 --output " + g.string()).code == 0);
    const auto cfg = scratch() / "rw.json";
    write_file(cfg, R"({"horizon": 400, "init": "node:0=1,3=-0.5"})");
    const auto csv = scratch() / "rw.csv";
    const auto summary = scratch() / "rw_summary.json";
    const auto r = run("simulate rw --input " + g.string() + " --config " + cfg.string() + " --output " + csv.string() +
                       " --summary " + summary.string());
    REQUIRE(r.code == 0);
    const auto text = slurp(csv);
    CHECK(text.rfind("t,node,value\n", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 1 + 401 * 16);

    const auto s = json::parse(slurp(summary));
    CHECK(s["verdict"] == "Balanced");
    REQUIRE(s["prediction"]["kind"] == "Fixed");
    const auto predicted = s["prediction"]["state"];
    const auto final_state = s["final_state"];
    for (std::size_t j = 0; j < 16; ++j) {
        CHECK(std::abs(predicted[j].get<double>() - final_state[j].get<double>()) < 1e-6);
    }

    const auto js = run("simulate linear --input " + g.string() + " --format json");
    REQUIRE(js.code == 0);
    const auto traj = json::parse(js.out);
    CHECK(traj["model"] == "linear");
    CHECK(traj["states"].size() == 51);
}

TEST_CASE("simulate elt on a lattice") {
    const auto g = scratch() / "ring.txt";
    const auto lattice_cfg = scratch() / "ring.json";
    write_file(lattice_cfg, R"({"n": 30, "plan": {"kind": "balanced", "rule": {"kind": "blocks", "size": 2}}})");
    REQUIRE(run("generate lattice --config " + lattice_cfg.string() + " --output " + g.string()).code == 0);
    const auto cfg = scratch() / "elt.json";
    write_file(cfg, R"({"horizon": 20, "init": "neighbourhood:4", "lattice": true, "mode": "balanced"})");
    const auto out = scratch() / "elt.csv";
    const auto r = run("simulate elt --input " + g.string() + " --config " + cfg.string() + " --output " + out.string());
    REQUIRE(r.code == 0);
    const auto s = json::parse(r.out);
    CHECK(s["model"] == "elt");
    const auto last = s["activation"].back();
    CHECK(last["positive"].size() + last["negative"].size() == 30);
}

TEST_CASE("verify exits 3 when a check fails") {
    const auto ok = run("verify --criterion 1");
    CHECK(ok.code == 0);
    CHECK(json::parse(ok.out)["passed"] == true);
    const auto injected = run("verify --criterion 2 --inject-sign-error");
    CHECK(injected.code == 3);
    CHECK(json::parse(injected.out)["passed"] == false);
}

}  // TEST_SUITE
