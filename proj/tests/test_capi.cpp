#include "doctest.h"

#include <cstring>
#include <string>

#include "hyperbolicity.h"
#include "json.hpp"

namespace {

struct Cleanup {
    hyp_graph* g = nullptr;
    hyp_result* r = nullptr;
    char* s = nullptr;
    ~Cleanup() {
        hyp_graph_free(g);
        hyp_result_free(r);
        hyp_string_free(s);
    }
};

}  // namespace

TEST_CASE("build, inspect, round-trip") {
    const uint32_t edges[] = {0, 1, 1, 2, 2, 3, 3, 0};
    Cleanup c;
    REQUIRE(hyp_graph_build(4, edges, 4, &c.g) == HYP_OK);
    CHECK(hyp_graph_vertex_count(c.g) == 4);
    CHECK(hyp_graph_edge_count(c.g) == 4);

    REQUIRE(hyp_graph_write_edge_list(c.g, &c.s) == HYP_OK);
    hyp_graph* back = nullptr;
    REQUIRE(hyp_graph_parse(c.s, &back) == HYP_OK);
    CHECK(hyp_graph_vertex_count(back) == 4);
    CHECK(hyp_graph_edge_count(back) == 4);
    hyp_graph_free(back);
}

TEST_CASE("error paths set status and message") {
    hyp_graph* g = nullptr;
    const uint32_t bad[] = {0, 9};
    CHECK(hyp_graph_build(3, bad, 1, &g) == HYP_ERR_INVALID_ARGUMENT);
    CHECK(std::strlen(hyp_last_error()) > 0);

    CHECK(hyp_graph_parse("0 1\nbroken\n", &g) == HYP_ERR_PARSE);
    CHECK(std::string(hyp_last_error()).find("line 2") != std::string::npos);

    CHECK(hyp_graph_read_file("/nonexistent/input.edges", &g) == HYP_ERR_IO);
    CHECK(hyp_graph_parse(nullptr, &g) == HYP_ERR_INVALID_ARGUMENT);
}

TEST_CASE("compute across all algorithms on one graph") {
    Cleanup c;
    REQUIRE(hyp_generate("cycle", "{\"length\":6}", 1, &c.g, nullptr) == HYP_OK);
    for (int algo = HYP_ALGO_BRUTE; algo <= HYP_ALGO_COGRAPH; ++algo) {
        hyp_result* r = nullptr;
        REQUIRE(hyp_compute(c.g, static_cast<hyp_algorithm>(algo), nullptr, &r) == HYP_OK);
        CHECK(hyp_result_delta(r) == 2);
        uint32_t w[4];
        CHECK(hyp_result_witness(r, w) == 1);
        char* json = nullptr;
        REQUIRE(hyp_result_report_json(r, &json) == HYP_OK);
        auto parsed = nlohmann::json::parse(json);
        CHECK(parsed["schema"] == 1);
        CHECK(parsed["delta"] == 2);
        hyp_string_free(json);
        hyp_result_free(r);
    }
}

TEST_CASE("oversize guard surfaces as too-large") {
    Cleanup c;
    REQUIRE(hyp_generate("cycle", "{\"length\":64}", 1, &c.g, nullptr) == HYP_OK);
    hyp_options opts;
    hyp_options_init(&opts);
    opts.max_matrix_bytes = 16;
    hyp_result* r = nullptr;
    CHECK(hyp_compute(c.g, HYP_ALGO_BRUTE, &opts, &r) == HYP_ERR_TOO_LARGE);
}

TEST_CASE("reduce applies the requested rules in order") {
    Cleanup c;
    REQUIRE(hyp_generate("tree", "{\"n\":30}", 3, &c.g, nullptr) == HYP_OK);
    hyp_graph* reduced = nullptr;
    char* trace = nullptr;
    REQUIRE(hyp_reduce(c.g, "1,3", &reduced, &trace) == HYP_OK);
    CHECK(hyp_graph_vertex_count(reduced) == 4);  // a tree collapses to the floor
    auto parsed = nlohmann::json::parse(trace);
    REQUIRE(parsed.is_array());
    CHECK(parsed.size() == 2);
    CHECK(parsed[0]["rule"] == 1);
    CHECK(parsed[1]["rule"] == 3);
    hyp_string_free(trace);
    hyp_graph_free(reduced);

    hyp_graph* dummy = nullptr;
    CHECK(hyp_reduce(c.g, "7", &dummy, nullptr) == HYP_ERR_INVALID_ARGUMENT);
}

TEST_CASE("generators emit sidecar ground truth") {
    Cleanup c;
    char* sidecar = nullptr;
    REQUIRE(hyp_generate("ov", "{\"n\":4,\"ell\":4}", 9, &c.g, &sidecar) == HYP_OK);
    auto parsed = nlohmann::json::parse(sidecar);
    CHECK(parsed["family"] == "ov");
    CHECK(parsed["seed"] == 9);
    CHECK(parsed["ground_truth"].contains("orthogonal_pair"));
    CHECK(parsed["landmarks"].contains("u_a"));
    CHECK(hyp_graph_vertex_count(c.g) == 2 * 4 + 2 * 4 + 6);
    hyp_string_free(sidecar);

    hyp_graph* g2 = nullptr;
    CHECK(hyp_generate("nope", "{}", 1, &g2, nullptr) == HYP_ERR_INVALID_ARGUMENT);
}

TEST_CASE("api version is stable") { CHECK(hyp_api_version() == 1); }
