#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "polycon/generators.hpp"
#include "polycon/graph.hpp"
#include "polycon/operators.hpp"
#include "polycon/planar_code.hpp"
#include "support/oracle.hpp"

using namespace polycon;

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string dir = "cli_scratch";
    [[maybe_unused]] int rc = std::system(("mkdir -p " + dir).c_str());
    const std::string out_path = dir + "/stdout.bin";
    const std::string cmd = std::string(POLYCON_CLI_PATH) + " " + args + " > " + out_path + " 2> " +
                            dir + "/stderr.txt";
    const int status = std::system(cmd.c_str());
    std::ifstream in(out_path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return {WEXITSTATUS(status), ss.str()};
}

std::string scratch_file(const std::string& name, const std::string& bytes) {
    [[maybe_unused]] int rc = std::system("mkdir -p cli_scratch");
    const std::string path = "cli_scratch/" + name;
    std::ofstream out(path, std::ios::binary);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    return path;
}

} // namespace

TEST_CASE("gen triangulations matches the library") {
    const auto r = run_cli("gen triangulations -n 7 -o -");
    CHECK(r.exit_code == 0);
    const auto maps = read_planar_code(r.output);
    CHECK(maps.size() == 5);
    CHECK(r.output == to_planar_code_stream(triangulations(7)));
}

TEST_CASE("op facecon emits the octahedron edge list for the prism") {
    const std::string input = scratch_file("prism3.pc", to_planar_code_stream({family("prism", 3)}));
    const auto r = run_cli("op facecon " + input + " --emit -");
    CHECK(r.exit_code == 0);
    const Graph got = from_edge_json(r.output);
    CHECK(isomorphic(got, underlying_graph(family("antiprism", 3))));
}

TEST_CASE("convert round trip is byte identical") {
    const std::string pc = to_planar_code_stream(triangulations(7));
    const std::string input = scratch_file("t7.pc", pc);
    const auto as_json = run_cli("convert " + input + " --format json -o -");
    CHECK(as_json.exit_code == 0);
    const std::string json_path = scratch_file("t7.json", as_json.output);
    const auto back = run_cli("convert " + json_path + " --format pc -o -");
    CHECK(back.exit_code == 0);
    CHECK(back.output == pc);
}

TEST_CASE("convert to DOT counts nodes and edges") {
    const std::string input = scratch_file("cube.pc", to_planar_code_stream({family("prism", 4)}));
    const auto r = run_cli("convert " + input + " --format dot -o -");
    CHECK(r.exit_code == 0);
    size_t nodes = 0, edges = 0, pos = 0;
    while ((pos = r.output.find(";\n", pos)) != std::string::npos) {
        ++pos;
        ++nodes;
    }
    pos = 0;
    while ((pos = r.output.find(" -- ", pos)) != std::string::npos) {
        ++pos;
        ++edges;
    }
    CHECK(edges == 12);
    CHECK(nodes - edges == 8); // node statements plus edge statements end with ';'
}

TEST_CASE("truncated planar_code input is a usage error") {
    std::string pc = to_planar_code_stream({family("prism", 4)});
    pc.pop_back();
    const std::string input = scratch_file("broken.pc", pc);
    const auto r = run_cli("check planar " + input);
    CHECK(r.exit_code == 2);
}

TEST_CASE("unknown flags are rejected") {
    const auto r = run_cli("gen triangulations -n 6 --frobnicate");
    CHECK(r.exit_code == 2);
}

TEST_CASE("check agrees with library predicates on a randomized corpus") {
    std::mt19937 rng(20240820);
    std::vector<PlaneMap> corpus;
    for (int n = 4; n <= 6; ++n) {
        for (const auto& m : polyhedra(n)) {
            corpus.push_back(testsupport::relabel_map(
                m, testsupport::random_permutation(rng, m.vertex_count())));
        }
    }
    std::shuffle(corpus.begin(), corpus.end(), rng);
    const std::string input = scratch_file("corpus.pc", to_planar_code_stream(corpus));
    for (const std::string what : {"planar", "bipartite", "polyhedral", "maximal-planar", "cubic"}) {
        const auto r = run_cli("check " + what + " " + input);
        REQUIRE(r.exit_code == 0);
        std::istringstream lines(r.output);
        std::string line;
        size_t i = 0;
        while (std::getline(lines, line)) {
            REQUIRE(i < corpus.size());
            const auto j = nlohmann::json::parse(line);
            const Graph g = underlying_graph(corpus[i]);
            bool expected = false;
            if (what == "planar") expected = is_planar(g);
            if (what == "bipartite") expected = is_bipartite(g);
            if (what == "polyhedral") expected = is_polyhedral(g);
            if (what == "maximal-planar") expected = is_maximal_planar(g);
            if (what == "cubic") {
                expected = true;
                for (int v = 0; v < g.order(); ++v) expected = expected && g.degree(v) == 3;
            }
            CHECK(j["value"].get<bool>() == expected);
            ++i;
        }
        CHECK(i == corpus.size());
    }
}

TEST_CASE("verify writes a report and returns the aggregate status") {
    const std::string report = "cli_scratch/thm1.json";
    const auto r = run_cli("verify thm1 --max-faces 8 --report " + report);
    CHECK(r.exit_code == 0);
    std::ifstream in(report);
    REQUIRE(in.good());
    nlohmann::json j;
    in >> j;
    CHECK(j["claim"] == "THM1");
    CHECK(j["pass"] == true);
    CHECK(j["counterexamples"].empty());
}

TEST_CASE("budget cap maps to a usage error") {
    const std::string saved = []() {
        const char* v = std::getenv("POLYCON_BUDGET");
        return v ? std::string(v) : std::string();
    }();
    setenv("POLYCON_BUDGET", "10", 1);
    const auto r = run_cli("verify thm1 --max-faces 8");
    if (saved.empty()) {
        unsetenv("POLYCON_BUDGET");
    } else {
        setenv("POLYCON_BUDGET", saved.c_str(), 1);
    }
    CHECK(r.exit_code == 2);
}

TEST_CASE("gen is reproducible byte for byte") {
    const auto a = run_cli("gen polyhedra -n 6 -o -");
    const auto b = run_cli("gen polyhedra -n 6 -o -");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
}
