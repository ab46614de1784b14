#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "json.hpp"

#ifndef HYP_CLI_PATH
#error "HYP_CLI_PATH must point at the built binary"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(HYP_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) res.out.append(buf.data(), got);
    res.exit_code = WEXITSTATUS(pclose(pipe));
    return res;
}

std::string temp_path(const std::string& name) {
    return std::string("/tmp/hyp_cli_test_") + name;
}

}  // namespace

TEST_CASE("generate then compute round trip") {
    std::string file = temp_path("c9.edges");
    auto gen = run("generate --family cycle --length 9 -o " + file);
    CHECK(gen.exit_code == 0);

    auto brute = run("compute " + file + " --algo brute --json");
    CHECK(brute.exit_code == 0);
    auto parsed = nlohmann::json::parse(brute.out);
    CHECK(parsed["schema"] == 1);
    CHECK(parsed["delta"] == 3);

    for (const char* algo : {"paths", "feedback-edge", "degree3", "vertex-cover", "cograph"}) {
        auto res = run("compute " + file + " --algo " + algo + " --json");
        CHECK(res.exit_code == 0);
        CHECK(nlohmann::json::parse(res.out)["delta"] == 3);
    }
    std::remove(file.c_str());
}

TEST_CASE("decision variant flag") {
    std::string file = temp_path("c6.edges");
    run("generate --family cycle --length 6 -o " + file);
    auto yes = run("compute " + file + " --algo brute --json --at-most 2");
    CHECK(nlohmann::json::parse(yes.out)["at_most"]["answer"] == true);
    auto no = run("compute " + file + " --algo brute --json --at-most 1");
    CHECK(nlohmann::json::parse(no.out)["at_most"]["answer"] == false);
    std::remove(file.c_str());
}

TEST_CASE("reduce emits a parsable graph and trace") {
    std::string file = temp_path("tree.edges");
    run("generate --family tree --n 40 --seed 5 -o " + file);
    std::string out = temp_path("reduced.edges"), trace = temp_path("trace.json");
    auto res = run("reduce " + file + " --rules 1 -o " + out + " --trace " + trace);
    CHECK(res.exit_code == 0);
    std::ifstream tf(trace);
    nlohmann::json parsed;
    tf >> parsed;
    CHECK(parsed[0]["rule"] == 1);
    std::ifstream rf(out);
    std::string first;
    std::getline(rf, first);
    CHECK(first.substr(0, 4) == "p 4 ");  // tree collapsed to the floor
    for (const auto& p : {file, out, trace}) std::remove(p.c_str());
}

TEST_CASE("malformed input reports the line") {
    std::string file = temp_path("bad.edges");
    {
        std::ofstream f(file);
        f << "0 1\n1 2 3\n";
    }
    auto res = run("compute " + file + " --algo brute");
    CHECK(res.exit_code == 2);
    std::remove(file.c_str());
}

TEST_CASE("verify runs clean and is reproducible") {
    auto a = run("verify --trials 6 --max-n 14 --seed 3");
    CHECK(a.exit_code == 0);
    CHECK(a.out.find("PASS") != std::string::npos);
    auto b = run("verify --trials 6 --max-n 14 --seed 3");
    CHECK(a.out == b.out);
}

TEST_CASE("bench prints csv") {
    auto res = run("bench --family cycle --sizes 16,32 --repeats 1 --algos paths,brute");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("family,size,algo,wall_ms,parameter") != std::string::npos);
    CHECK(res.out.find("cycle,16,paths") != std::string::npos);
    CHECK(res.out.find("cycle,32,brute") != std::string::npos);
}

TEST_CASE("ilp dump emits model json") {
    std::string file = temp_path("theta.edges"), dump = temp_path("models.json");
    run("generate --family theta --lengths 2,3,4 -o " + file);
    auto res = run("compute " + file + " --algo paths --ilp-dump " + dump);
    CHECK(res.exit_code == 0);
    std::ifstream df(dump);
    nlohmann::json parsed;
    df >> parsed;
    CHECK(parsed.contains("cover"));
    REQUIRE(parsed["models"].is_array());
    CHECK(!parsed["models"].empty());
    CHECK(parsed["models"][0].contains("vars"));
    CHECK(parsed["models"][0].contains("rows"));
    CHECK(parsed["models"][0].contains("objective"));
    std::remove(file.c_str());
    std::remove(dump.c_str());
}

TEST_CASE("generate sidecar carries ground truth") {
    std::string file = temp_path("ov.edges"), side = temp_path("ov.json");
    auto res = run("generate --family ov --n 4 --ell 4 --seed 7 -o " + file + " --sidecar " + side);
    CHECK(res.exit_code == 0);
    std::ifstream sf(side);
    nlohmann::json parsed;
    sf >> parsed;
    CHECK(parsed["family"] == "ov");
    CHECK(parsed["ground_truth"].contains("orthogonal_pair"));
    std::remove(file.c_str());
    std::remove(side.c_str());
}
