#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "impart/cli.hpp"
#include "impart/io.hpp"

namespace {

struct CliRun {
    int status;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.push_back("impart");
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int status =
        impart::cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {status, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream file(path);
    file << content;
    return path.string();
}

}  // namespace

TEST_CASE("cli computes parameters from files") {
    std::string c4 = write_temp("impart_c4.txt", "4 4\n0 1\n1 2\n2 3\n0 3\n");
    auto r = run({"param", "treewidth", c4});
    CHECK(r.status == 0);
    CHECK(r.out.find("value: 2") != std::string::npos);
    CHECK(r.out.find("wall_time_ms: 0") != std::string::npos);
}

TEST_CASE("cli pk subcommand") {
    std::string k4 = write_temp("impart_k4.txt", "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    auto r = run({"pk", "--param", "order", "--k", "2", k4});
    CHECK(r.status == 0);
    CHECK(r.out.find("value: 2") != std::string::npos);
}

TEST_CASE("cli solver subcommands emit verified witnesses") {
    std::string c5 = write_temp("impart_c5.txt", "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n");
    auto fpt = run({"large-fpt", "--param", "independence_number", "--k", "2", "--ell", "2",
                    "--m", "1", c5});
    CHECK(fpt.status == 0);
    CHECK(fpt.out.find("verdict: yes") != std::string::npos);
    CHECK(fpt.out.find("witness: 0") != std::string::npos);

    auto oracle = run({"large-oracle", "--param", "independence_number", "--k", "2", "--ell",
                       "2", "--m", "1", c5});
    CHECK(oracle.status == 0);
    CHECK(oracle.out.find("verdict: yes") != std::string::npos);

    auto ik = run({"ikpsp", "--param", "order", "--k", "2", "--ell", "4", c5});
    CHECK(ik.status == 0);
    CHECK(ik.out.find("verdict: yes") != std::string::npos);
}

TEST_CASE("cli json reports carry the schema version") {
    std::string c5 = write_temp("impart_c5b.txt", "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n");
    auto r = run({"param", "independence_number", c5, "--json"});
    CHECK(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["schema"] == 1);
    CHECK(j["value"] == 2);
    CHECK(j["witness"] == nlohmann::json::array({0, 2}));
    CHECK(j["wall_time_ms"] == 0);
}

TEST_CASE("cli output bytes are deterministic") {
    std::string pet = write_temp("impart_pet.txt",
                                 impart::io::emit_edge_list(impart::io::gen(
                                     {.kind = "gnp", .n = 9, .p = 0.4}, 11)));
    auto first = run({"pk", "--param", "treewidth", "--k", "2", pet, "--json"});
    auto second = run({"pk", "--param", "treewidth", "--k", "2", pet, "--json"});
    CHECK(first.status == 0);
    CHECK(first.out == second.out);
}

TEST_CASE("cli reduce subcommands") {
    std::string p3 = write_temp("impart_p3.txt", "3 2\n0 1\n1 2\n");
    auto lex = run({"reduce", "lex", "--param", "independence_number", "--k", "2", "--m", "2",
                    p3});
    CHECK(lex.status == 0);
    CHECK(lex.out.find("trace.threshold: 2") != std::string::npos);
    CHECK(lex.out.find("trace.produced_graph6:") != std::string::npos);

    auto tmd4 = run({"reduce", "tmd4", "--param", "chromatic_index", p3});
    CHECK(tmd4.status == 0);
    CHECK(tmd4.out.find("trace.instance_ell: 5") != std::string::npos);

    auto thm1 = run({"verify-thm1", "--param", "order", "--k", "2", p3});
    CHECK(thm1.status == 0);
    CHECK(thm1.out.find("verdict: yes") != std::string::npos);
}

TEST_CASE("cli gen subcommand") {
    auto g6 = run({"gen", "cycle", "--n", "5", "--format", "graph6"});
    CHECK(g6.status == 0);
    CHECK(g6.out == "Dhc\n");

    auto el = run({"gen", "path", "--n", "3"});
    CHECK(el.out == "3 2\n0 1\n1 2\n");

    auto twice_a = run({"gen", "gnp", "--n", "8", "--p", "0.5", "--seed", "3"});
    auto twice_b = run({"gen", "gnp", "--n", "8", "--p", "0.5", "--seed", "3"});
    CHECK(twice_a.out == twice_b.out);
}

TEST_CASE("cli exit codes") {
    CHECK(run({"nonsense"}).status == 2);
    CHECK(run({"param", "no_such_parameter", "/dev/null"}).status == 2);
    std::string p3 = write_temp("impart_p3x.txt", "3 2\n0 1\n1 2\n");
    CHECK(run({"large-fpt", "--param", "min_degree", "--k", "2", "--ell", "1", "--m", "1", p3})
              .status == 2);  // no FPT routine exists for the para-NP-hard family

    std::string bad = write_temp("impart_bad.txt", "2 1\n0 5\n");
    CHECK(run({"param", "order", bad}).status == 3);
    CHECK(run({"param", "order", "/no/such/file"}).status == 3);

    std::string big = write_temp("impart_big.txt", impart::io::emit_edge_list(
                                                       impart::io::gen({.kind = "path", .n = 30}, 0)));
    CHECK(run({"param", "treewidth", big}).status == 4);

    std::string k6 = write_temp("impart_k6.txt",
                                impart::io::emit_edge_list(impart::io::gen({.kind = "complete", .n = 6}, 0)));
    CHECK(run({"reduce", "tmd4", "--param", "max_degree", k6}).status == 3);
}

TEST_CASE("cli help exits cleanly") {
    CHECK(run({"--help"}).status == 0);
}
