#include "hyperbolicity.h"

#include <cstring>
#include <fstream>
#include <sstream>

#include "hyp/generators.hpp"
#include "hyp/report.hpp"
#include "json.hpp"

struct hyp_graph {
    hyp::Graph g;
};

struct hyp_result {
    hyp::RunReport report;
};

namespace {

thread_local std::string g_last_error;

hyp_status fail(hyp_status code, const std::string& message) {
    g_last_error = message;
    return code;
}

template <class F>
hyp_status guarded(F&& f) {
    try {
        return f();
    } catch (const hyp::ParseError& e) {
        return fail(HYP_ERR_PARSE, e.what());
    } catch (const std::length_error& e) {
        return fail(HYP_ERR_TOO_LARGE, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(HYP_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(HYP_ERR_INTERNAL, e.what());
    }
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

}  // namespace

unsigned hyp_api_version(void) { return 1; }

const char* hyp_status_name(hyp_status status) {
    switch (status) {
        case HYP_OK: return "ok";
        case HYP_ERR_INVALID_ARGUMENT: return "invalid-argument";
        case HYP_ERR_PARSE: return "parse-error";
        case HYP_ERR_IO: return "io-error";
        case HYP_ERR_TOO_LARGE: return "too-large";
        case HYP_ERR_INTERNAL: return "internal-error";
    }
    return "?";
}

const char* hyp_last_error(void) { return g_last_error.c_str(); }

void hyp_string_free(char* s) { std::free(s); }

hyp_status hyp_graph_build(uint32_t n, const uint32_t* edges, size_t edge_count, hyp_graph** out) {
    if (!out || (edge_count && !edges))
        return fail(HYP_ERR_INVALID_ARGUMENT, "null pointer argument");
    return guarded([&] {
        std::vector<std::pair<hyp::vertex_id, hyp::vertex_id>> list;
        list.reserve(edge_count);
        for (size_t i = 0; i < edge_count; ++i) list.emplace_back(edges[2 * i], edges[2 * i + 1]);
        *out = new hyp_graph{hyp::build_graph(list, n)};
        return HYP_OK;
    });
}

hyp_status hyp_graph_parse(const char* text, hyp_graph** out) {
    if (!text || !out) return fail(HYP_ERR_INVALID_ARGUMENT, "null pointer argument");
    return guarded([&] {
        *out = new hyp_graph{hyp::parse_edge_list(text)};
        return HYP_OK;
    });
}

hyp_status hyp_graph_read_file(const char* path, hyp_graph** out) {
    if (!path || !out) return fail(HYP_ERR_INVALID_ARGUMENT, "null pointer argument");
    std::ifstream in(path);
    if (!in) return fail(HYP_ERR_IO, std::string("cannot open '") + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return hyp_graph_parse(buf.str().c_str(), out);
}

hyp_status hyp_graph_write_edge_list(const hyp_graph* g, char** text_out) {
    if (!g || !text_out) return fail(HYP_ERR_INVALID_ARGUMENT, "null pointer argument");
    return guarded([&] {
        *text_out = copy_string(hyp::write_edge_list(g->g));
        return HYP_OK;
    });
}

uint32_t hyp_graph_vertex_count(const hyp_graph* g) { return g ? g->g.vertex_count() : 0; }
uint64_t hyp_graph_edge_count(const hyp_graph* g) { return g ? g->g.edge_count() : 0; }
void hyp_graph_free(hyp_graph* g) { delete g; }

void hyp_options_init(hyp_options* opts) {
    if (!opts) return;
    opts->threads = 0;
    opts->max_matrix_bytes = 0;
}

hyp_status hyp_compute(const hyp_graph* g, hyp_algorithm algorithm, const hyp_options* opts,
                       hyp_result** out) {
    if (!g || !out) return fail(HYP_ERR_INVALID_ARGUMENT, "null pointer argument");
    if (algorithm < HYP_ALGO_BRUTE || algorithm > HYP_ALGO_COGRAPH)
        return fail(HYP_ERR_INVALID_ARGUMENT, "unknown algorithm id");
    return guarded([&] {
        hyp::ComputeOptions copts;
        if (opts) {
            if (opts->threads) copts.threads = opts->threads;
            if (opts->max_matrix_bytes) copts.max_matrix_bytes = opts->max_matrix_bytes;
        }
        static const hyp::Algorithm table[] = {
            hyp::Algorithm::brute,        hyp::Algorithm::paths,
            hyp::Algorithm::feedback_edge, hyp::Algorithm::degree3,
            hyp::Algorithm::vertex_cover, hyp::Algorithm::cograph};
        *out = new hyp_result{hyp::run_algorithm(g->g, table[algorithm], copts)};
        return HYP_OK;
    });
}

int64_t hyp_result_delta(const hyp_result* r) { return r ? r->report.result.delta : 0; }

int hyp_result_witness(const hyp_result* r, uint32_t out[4]) {
    if (!r || !r->report.result.witness) return 0;
    for (int i = 0; i < 4; ++i) out[i] = r->report.result.witness->vertices[i];
    return 1;
}

hyp_status hyp_result_report_json(const hyp_result* r, char** json_out) {
    if (!r || !json_out) return fail(HYP_ERR_INVALID_ARGUMENT, "null pointer argument");
    return guarded([&] {
        *json_out = copy_string(r->report.to_json());
        return HYP_OK;
    });
}

void hyp_result_free(hyp_result* r) { delete r; }

hyp_status hyp_reduce(const hyp_graph* g, const char* rules, hyp_graph** reduced_out,
                      char** trace_json_out) {
    if (!g || !rules || !reduced_out)
        return fail(HYP_ERR_INVALID_ARGUMENT, "null pointer argument");
    return guarded([&] {
        hyp::Graph cur = g->g;
        nlohmann::json traces = nlohmann::json::array();
        std::stringstream ss(rules);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            hyp::ReducedGraph red;
            if (tok == "1")
                red = hyp::rule1_prune_degree_one(cur);
            else if (tok == "2")
                red = hyp::rule2_prune_parallel_paths(cur);
            else if (tok == "3")
                red = hyp::rule3_twin_reduce(cur);
            else
                throw std::invalid_argument("unknown rule '" + tok + "' (expected 1, 2 or 3)");
            traces.push_back(nlohmann::json::parse(red.trace.to_json()));
            cur = std::move(red.graph);
        }
        *reduced_out = new hyp_graph{std::move(cur)};
        if (trace_json_out) *trace_json_out = copy_string(traces.dump());
        return HYP_OK;
    });
}

hyp_status hyp_path_engine_debug_json(const hyp_graph* g, size_t max_models, char** json_out) {
    if (!g || !json_out) return fail(HYP_ERR_INVALID_ARGUMENT, "null pointer argument");
    return guarded([&] {
        nlohmann::json out;
        out["models"] = nlohmann::json::array();
        auto reduced = hyp::rule1_prune_degree_one(g->g);
        std::vector<hyp::vertex_id> largest;
        for (const auto& comp : hyp::connected_components(reduced.graph))
            if (comp.size() > largest.size()) largest = comp;
        if (largest.size() >= 4 && reduced.graph.vertex_count() > 4) {
            auto [sub, remap] = hyp::induced_subgraph(reduced.graph, largest);
            bool cycle = true;
            for (hyp::vertex_id v = 0; v < sub.vertex_count() && cycle; ++v)
                cycle = sub.degree(v) == 2;
            if (!cycle) {
                hyp::PathCover cover = hyp::greedy_path_cover(sub);
                auto table = hyp::endpoint_distance_table(sub, cover);
                auto& jc = out["cover"];
                for (const auto& p : cover.paths) jc.push_back(p.vertices);
                const std::size_t k = cover.paths.size();
                std::size_t emitted = 0;
                std::array<std::size_t, 4> asn{};
                for (asn[0] = 0; asn[0] < k && emitted < max_models; ++asn[0])
                    for (asn[1] = asn[0]; asn[1] < k && emitted < max_models; ++asn[1])
                        for (asn[2] = asn[1]; asn[2] < k && emitted < max_models; ++asn[2])
                            for (asn[3] = asn[2]; asn[3] < k && emitted < max_models; ++asn[3]) {
                                hyp::PathAssignment assign;
                                assign.path_of = asn;
                                std::vector<std::vector<int>> groups;
                                for (int l = 0; l < 4; ++l) {
                                    bool placed = false;
                                    for (auto& grp : groups)
                                        if (asn[grp.front()] == asn[l]) {
                                            grp.push_back(l);
                                            placed = true;
                                            break;
                                        }
                                    if (!placed) groups.push_back({l});
                                }
                                for (auto& grp : groups)
                                    if (grp.size() >= 2) assign.colocated_order.push_back(grp);
                                for (const auto& m :
                                     hyp::build_case_ilps(cover, assign, table)) {
                                    if (emitted++ >= max_models) break;
                                    out["models"].push_back(nlohmann::json::parse(m.to_json()));
                                }
                            }
            }
        }
        *json_out = copy_string(out.dump());
        return HYP_OK;
    });
}

hyp_status hyp_generate(const char* family, const char* params_json, uint64_t seed,
                        hyp_graph** graph_out, char** sidecar_json_out) {
    if (!family || !graph_out) return fail(HYP_ERR_INVALID_ARGUMENT, "null pointer argument");
    return guarded([&] {
        nlohmann::json params = nlohmann::json::object();
        if (params_json && *params_json) params = nlohmann::json::parse(params_json);
        nlohmann::json sidecar;
        sidecar["family"] = family;
        sidecar["seed"] = seed;
        sidecar["params"] = params;
        std::string fam = family;
        hyp::Graph g;

        if (fam == "ov") {
            std::size_t n = params.value("n", 8);
            std::size_t ell = params.value("ell", 8);
            bool force_no = params.value("force_no", false);
            auto inst = hyp::gen_ov_instance(n, ell, seed, force_no ? 1 : 0);
            auto built = hyp::gen_ov_graph(inst);
            g = std::move(built.graph);
            sidecar["ground_truth"] = {{"orthogonal_pair", hyp::solve_ov_bruteforce(inst)}};
            sidecar["landmarks"] = {{"a0", built.layout.a0},   {"b0", built.layout.b0},
                                    {"c0", built.layout.c0},   {"d0", built.layout.d0},
                                    {"u_a", built.layout.u_a}, {"u", built.layout.u},
                                    {"u_b", built.layout.u_b}, {"v_a", built.layout.v_a},
                                    {"v", built.layout.v},     {"v_b", built.layout.v_b}};
        } else if (fam == "4is") {
            std::array<std::size_t, 4> parts{2, 2, 2, 2};
            if (params.contains("parts")) {
                auto p = params["parts"];
                for (int i = 0; i < 4; ++i) parts[i] = p.at(i).get<std::size_t>();
            }
            double p = params.value("p", 0.3);
            auto inst = hyp::gen_4is_instance(parts, p, seed);
            auto built = hyp::gen_4is_graph(inst);
            g = std::move(built.graph);
            sidecar["ground_truth"] = {{"colored_independent_set", hyp::solve_4is_bruteforce(inst)}};
            sidecar["landmarks"] = {{"w", built.layout.w},
                                    {"x", built.layout.x},
                                    {"trivial_no_instance", built.layout.trivial_no_instance}};
        } else if (fam == "cycle") {
            g = hyp::gen_cycle(params.value("length", 9));
        } else if (fam == "tree") {
            g = hyp::gen_random_tree(params.value("n", 30), seed);
        } else if (fam == "gnp") {
            g = hyp::gen_gnp(params.value("n", 20), params.value("p", 0.1), seed);
        } else if (fam == "theta") {
            std::vector<std::size_t> lengths{2, 3, 4};
            if (params.contains("lengths")) lengths = params["lengths"].get<std::vector<std::size_t>>();
            g = hyp::gen_theta(lengths);
        } else {
            throw std::invalid_argument("unknown family '" + fam +
                                        "' (expected ov|4is|cycle|tree|gnp|theta)");
        }
        sidecar["n"] = g.vertex_count();
        sidecar["m"] = g.edge_count();
        *graph_out = new hyp_graph{std::move(g)};
        if (sidecar_json_out) *sidecar_json_out = copy_string(sidecar.dump());
        return HYP_OK;
    });
}
