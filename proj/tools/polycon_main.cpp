// polycon: generation, operator application, predicate checks, claim
// verification and format conversion for spherical polyhedral maps.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "polycon/generators.hpp"
#include "polycon/graph.hpp"
#include "polycon/operators.hpp"
#include "polycon/planar_code.hpp"
#include "polycon/verifier.hpp"

namespace {

using namespace polycon;

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    require(in.good(), "MalformedInput", "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spill(const std::string& path, const std::string& bytes) {
    if (path == "-" || path.empty()) {
        std::cout.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        return;
    }
    std::ofstream out(path, std::ios::binary);
    require(out.good(), "MalformedInput", "cannot open " + path + " for writing");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

std::vector<PlaneMap> load_maps(const std::string& path) {
    const std::string bytes = slurp(path);
    // Rotation-JSON starts with '[' or '{'; planar_code with its header or a
    // record byte.
    size_t i = 0;
    while (i < bytes.size() && std::isspace(static_cast<unsigned char>(bytes[i]))) ++i;
    if (i < bytes.size() && (bytes[i] == '[' || bytes[i] == '{')) {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(bytes);
        } catch (const std::exception& e) {
            fail("MalformedInput", std::string("bad rotation JSON: ") + e.what());
        }
        if (j.is_object()) j = nlohmann::json::array({j});
        std::vector<PlaneMap> out;
        for (const auto& item : j) {
            require(item.contains("rotations"), "MalformedInput",
                    "rotation JSON objects need a 'rotations' field");
            std::vector<std::vector<int>> rot;
            for (const auto& row : item["rotations"]) {
                rot.push_back(row.get<std::vector<int>>());
            }
            out.push_back(PlaneMap::from_rotation(rot));
        }
        return out;
    }
    return read_planar_code(bytes);
}

std::string maps_to_rotation_json(const std::vector<PlaneMap>& maps) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& m : maps) {
        nlohmann::json rot = nlohmann::json::array();
        for (const auto& row : m.rotations()) rot.push_back(row);
        arr.push_back({{"rotations", std::move(rot)}});
    }
    return arr.dump();
}

std::string graph_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

std::string maps_out(const std::vector<PlaneMap>& maps, const std::string& format) {
    if (format == "pc") return to_planar_code_stream(maps);
    if (format == "json") return maps_to_rotation_json(maps);
    if (format == "dot") {
        std::string out;
        for (const auto& m : maps) out += graph_dot(underlying_graph(m));
        return out;
    }
    fail("MalformedInput", "unknown format '" + format + "'");
}

std::string graphs_out(const std::vector<Graph>& graphs, const std::string& format) {
    std::string out;
    for (const auto& g : graphs) {
        if (format == "dot") {
            out += graph_dot(g);
        } else {
            out += to_edge_json(g);
            out += '\n';
        }
    }
    return out;
}

int cmd_gen(const std::string& what, int n, const std::string& output,
            const std::string& format, const std::string& cert_path) {
    std::vector<PlaneMap> maps;
    std::string certs;
    if (what == "triangulations") {
        maps = triangulations(n);
    } else if (what == "polyhedra") {
        maps = polyhedra(n);
    } else if (what == "constructible") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& c : enumerate_constructible(n)) {
            maps.push_back(c.map);
            arr.push_back(nlohmann::json::parse(script_json(c.script)));
        }
        certs = arr.dump(2);
    } else {
        maps.push_back(family(what, n));
    }
    spill(output, maps_out(maps, format));
    if (!cert_path.empty()) {
        require(what == "constructible", "MalformedInput",
                "--certificates applies to gen constructible");
        spill(cert_path, certs);
    }
    return 0;
}

int cmd_op(const std::string& name, const std::string& input, const std::string& output,
           const std::string& format) {
    const auto maps = load_maps(input);
    if (name == "con" || name == "facecon") {
        std::vector<Graph> out;
        for (const auto& m : maps) {
            out.push_back(name == "con" ? con(underlying_graph(m)) : facecon(m));
        }
        spill(output, graphs_out(out, format == "dot" ? "dot" : "json"));
        return 0;
    }
    if (name == "odd-dual") {
        std::string out;
        for (const auto& m : maps) {
            const auto [g, cls] = odd_dual(m);
            nlohmann::json j;
            j["tag"] = odd_dual_tag_name(cls.tag);
            j["odd_faces"] = cls.odd_face_ids;
            j["subgraph"] = nlohmann::json::parse(to_edge_json(g));
            out += j.dump();
            out += '\n';
        }
        spill(output, out);
        return 0;
    }
    std::vector<PlaneMap> out;
    for (const auto& m : maps) {
        if (name == "dual") {
            out.push_back(m.dual());
        } else if (name == "radial") {
            out.push_back(radial(m));
        } else if (name == "medial") {
            out.push_back(medial(m));
        } else if (name == "evenise") {
            out.push_back(evenise(m));
        } else {
            fail("MalformedInput", "unknown operator '" + name + "'");
        }
    }
    spill(output, maps_out(out, format));
    return 0;
}

int cmd_check(const std::string& what, int k, const std::string& input,
              const std::string& output) {
    const auto maps = load_maps(input);
    std::string out;
    int index = 0;
    for (const auto& m : maps) {
        const Graph g = underlying_graph(m);
        nlohmann::json j;
        j["index"] = index++;
        if (what == "planar") {
            j["value"] = is_planar(g);
        } else if (what == "bipartite") {
            j["value"] = is_bipartite(g);
        } else if (what == "polyhedral") {
            j["value"] = is_polyhedral(g);
        } else if (what == "maximal-planar") {
            j["value"] = is_maximal_planar(g);
        } else if (what == "connected") {
            j["value"] = is_connected(g);
        } else if (what == "k-connected") {
            j["value"] = is_k_connected(g, k);
        } else if (what == "cubic") {
            bool cubic = true;
            for (int v = 0; v < g.order(); ++v) cubic = cubic && g.degree(v) == 3;
            j["value"] = cubic;
        } else if (what == "predict-con-planar") {
            j["value"] = predict_con_planar(m);
        } else {
            fail("MalformedInput", "unknown predicate '" + what + "'");
        }
        out += j.dump();
        out += '\n';
    }
    spill(output, out);
    return 0;
}

int cmd_stats(const std::string& input, const std::string& output) {
    const auto maps = load_maps(input);
    std::string out;
    int index = 0;
    for (const auto& m : maps) {
        const FaceProfile fp = face_profile(m);
        nlohmann::json j;
        j["index"] = index++;
        j["p"] = fp.vertex_count;
        j["q"] = fp.edge_count;
        j["f"] = m.face_count();
        nlohmann::json fbl;
        for (const auto& [len, count] : fp.f_by_length) fbl[std::to_string(len)] = count;
        j["f_by_length"] = std::move(fbl);
        nlohmann::json qbp;
        for (const auto& [pair, count] : fp.q_by_pair) {
            qbp[std::to_string(pair.first) + "," + std::to_string(pair.second)] = count;
        }
        j["q_by_pair"] = std::move(qbp);
        j["odd_faces"] = std::vector<int>(fp.odd_faces.begin(), fp.odd_faces.end());
        j["canonical_code_hex"] = to_hex(m.canonical_code());
        out += j.dump();
        out += '\n';
    }
    spill(output, out);
    return 0;
}

int cmd_verify(const std::string& claim, const ClaimLimits& limits, const std::string& report_path) {
    std::vector<VerificationReport> reports;
    if (claim == "all") {
        reports = run_suite(limits);
    } else {
        std::string id = claim;
        std::transform(id.begin(), id.end(), id.begin(), ::toupper);
        reports.push_back(run_claim(id, limits));
    }
    bool all_pass = true;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& rep : reports) {
        all_pass = all_pass && rep.pass();
        std::cerr << (rep.pass() ? "pass " : "FAIL ") << rep.claim << "  checked="
                  << rep.checked << "  counterexamples=" << rep.counterexamples.size()
                  << "  (" << rep.elapsed_s << " s)\n";
        arr.push_back(nlohmann::json::parse(rep.to_json()));
    }
    if (!report_path.empty()) {
        spill(report_path, reports.size() == 1 ? reports.front().to_json() : arr.dump(2));
    }
    return all_pass ? 0 : 1;
}

int cmd_convert(const std::string& input, const std::string& output, const std::string& format) {
    spill(output, maps_out(load_maps(input), format));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"combinatorial maps, neighbourhood operators and exhaustive claim checks"};
    app.require_subcommand(1);

    std::string what, input, output = "-", format = "pc", report_path, cert_path, claim;
    int n = 0, k = 3;
    ClaimLimits limits;
    if (const char* budget = std::getenv("POLYCON_BUDGET")) {
        limits.budget = std::atoll(budget);
    }

    auto* gen = app.add_subcommand("gen", "generate families or exhaustive streams");
    gen->add_option("what", what,
                    "triangulations|polyhedra|constructible|pyramid|prism|antiprism|platonic")
        ->required();
    gen->add_option("-n,--vertices", n, "vertex count / family size")->required();
    gen->add_option("-o,--output", output, "output path, - for stdout");
    gen->add_option("--format", format, "pc|json|dot")->check(CLI::IsMember({"pc", "json", "dot"}));
    gen->add_option("--certificates", cert_path, "write construction scripts (constructible only)");

    auto* op = app.add_subcommand("op", "apply an operator to each input map");
    op->add_option("name", what, "con|facecon|dual|radial|medial|evenise|odd-dual")->required();
    op->add_option("input", input, "planar_code or rotation-JSON file, - for stdin")->required();
    op->add_option("-o,--output,--emit", output, "output path");
    op->add_option("--format", format, "pc|json|dot")->check(CLI::IsMember({"pc", "json", "dot"}));

    auto* check = app.add_subcommand("check", "evaluate a predicate on each input map");
    check->add_option("what", what,
                      "planar|bipartite|polyhedral|maximal-planar|connected|k-connected|cubic|"
                      "predict-con-planar")
        ->required();
    check->add_option("input", input)->required();
    check->add_option("-k", k, "k for k-connected (1..3)");
    check->add_option("-o,--output", output);

    auto* stats = app.add_subcommand("stats", "face profile and canonical code per map");
    stats->add_option("input", input)->required();
    stats->add_option("-o,--output", output);

    auto* verify = app.add_subcommand("verify", "scan a claim universe for counterexamples");
    verify->add_option("claim", claim, "claim id or 'all'")->required();
    verify->add_option("--vertices,--max-vertices", limits.max_vertices);
    verify->add_option("--max-faces", limits.max_faces);
    verify->add_option("--max-constructible", limits.max_constructible);
    verify->add_option("--max-radial-vertices", limits.max_radial_vertices);
    verify->add_option("--workers", limits.workers);
    verify->add_option("--budget", limits.budget);
    verify->add_option("--report", report_path, "write the JSON report here");

    auto* convert = app.add_subcommand("convert", "translate between pc, rotation-JSON and DOT");
    convert->add_option("input", input)->required();
    convert->add_option("-o,--output", output);
    convert->add_option("--format", format, "pc|json|dot")
        ->check(CLI::IsMember({"pc", "json", "dot"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) return cmd_gen(what, n, output, format, cert_path);
        if (op->parsed()) return cmd_op(what, input, output, format);
        if (check->parsed()) return cmd_check(what, k, input, output);
        if (stats->parsed()) return cmd_stats(input, output);
        if (verify->parsed()) return cmd_verify(claim, limits, report_path);
        if (convert->parsed()) return cmd_convert(input, output, format);
    } catch (const polycon::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        const bool usage = e.code() == "MalformedInput" || e.code() == "UnknownFamily" ||
                           e.code() == "LimitTooLarge" || e.code() == "KTooLarge";
        return usage ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
