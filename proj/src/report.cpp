#include "hyp/report.hpp"

#include <chrono>
#include <stdexcept>

#include "json.hpp"

namespace hyp {

const char* algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::brute: return "brute";
        case Algorithm::paths: return "paths";
        case Algorithm::feedback_edge: return "feedback-edge";
        case Algorithm::degree3: return "degree3";
        case Algorithm::vertex_cover: return "vertex-cover";
        case Algorithm::cograph: return "cograph";
    }
    return "?";
}

Algorithm algorithm_from_name(const std::string& name) {
    for (Algorithm a : {Algorithm::brute, Algorithm::paths, Algorithm::feedback_edge,
                        Algorithm::degree3, Algorithm::vertex_cover, Algorithm::cograph})
        if (name == algorithm_name(a)) return a;
    throw std::invalid_argument("unknown algorithm '" + name +
                                "' (expected brute|paths|feedback-edge|degree3|vertex-cover|cograph)");
}

bool validate_result(const Graph& g, const HyperbolicityResult& r) {
    if (!r.witness) return r.delta == 0;
    const auto& q = r.witness->vertices;
    DistanceRow rows[3] = {bfs_distances(g, q[0]), bfs_distances(g, q[1]), bfs_distances(g, q[2])};
    DistanceSums s;
    s.d1 = rows[0].distances[q[1]] + rows[2].distances[q[3]];
    s.d2 = rows[0].distances[q[2]] + rows[1].distances[q[3]];
    s.d3 = rows[0].distances[q[3]] + rows[1].distances[q[2]];
    if (s.d1 == kInfDist || s.d2 == kInfDist || s.d3 == kInfDist) return false;
    return delta_of_sums(s) == r.delta;
}

RunReport run_algorithm(const Graph& g, Algorithm algo, const ComputeOptions& opts,
                        const std::string& input_name) {
    RunReport rep;
    rep.algorithm = algo;
    rep.input = input_name;
    rep.n = g.vertex_count();
    rep.m = g.edge_count();

    auto t0 = std::chrono::steady_clock::now();
    switch (algo) {
        case Algorithm::brute: {
            BruteForceOptions b;
            b.threads = opts.threads;
            b.max_matrix_bytes = opts.max_matrix_bytes;
            rep.result = brute_force_delta(g, b);
            break;
        }
        case Algorithm::paths:
            rep.result = hyperbolicity_via_path_cover(g, &rep.engine);
            break;
        case Algorithm::feedback_edge:
            rep.result = hyperbolicity_feedback_edge(g, &rep.engine);
            break;
        case Algorithm::degree3:
            rep.result = hyperbolicity_degree3(g, &rep.engine);
            break;
        case Algorithm::vertex_cover: {
            BruteForceOptions b;
            b.threads = opts.threads;
            b.max_matrix_bytes = opts.max_matrix_bytes;
            rep.result = hyperbolicity_vc(g, &rep.kernel, b);
            break;
        }
        case Algorithm::cograph:
            rep.result = hyperbolicity_cograph_distance(g, &rep.cograph);
            break;
    }
    auto t1 = std::chrono::steady_clock::now();
    rep.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

    if (!validate_result(g, rep.result))
        throw std::logic_error("computed delta disagrees with its witness");
    return rep;
}

std::string RunReport::to_json() const {
    nlohmann::json j;
    j["schema"] = 1;
    j["algorithm"] = algorithm_name(algorithm);
    if (!input.empty()) j["input"] = input;
    j["n"] = n;
    j["m"] = m;
    j["delta"] = result.delta;
    if (result.witness) {
        j["witness"] = result.witness->vertices;
        j["sums"] = {result.witness->sums.d1, result.witness->sums.d2, result.witness->sums.d3};
    } else {
        j["witness"] = nullptr;
    }
    j["wall_ms"] = wall_ms;

    nlohmann::json params;
    switch (algorithm) {
        case Algorithm::brute: break;
        case Algorithm::paths:
            params["cover_size"] = engine.cover_size;
            params["rule1_removed"] = engine.rule1_removed;
            params["isolated_cycles"] = engine.isolated_cycle_count;
            break;
        case Algorithm::feedback_edge:
            params["feedback_edges"] = engine.feedback_edge_count;
            params["maximal_paths"] = engine.maximal_path_count;
            params["path_bound_7k_ok"] = engine.path_bound_7k_ok;
            params["cover_size"] = engine.cover_size;
            break;
        case Algorithm::degree3:
            params["high_degree_vertices"] = engine.high_degree_count;
            params["max_parallel_paths"] = engine.max_parallel_paths;
            params["rule2_removed"] = engine.rule2_removed;
            params["cover_size"] = engine.cover_size;
            break;
        case Algorithm::vertex_cover:
            params["cover_size"] = kernel.cover_size;
            params["kernel_vertices"] = kernel.kernel_vertices;
            params["kernel_edges"] = kernel.kernel_edges;
            params["bound_ok"] = kernel.bound_ok;
            break;
        case Algorithm::cograph:
            params["deletion_set_size"] = cograph.deletion_set_size;
            params["distinct_types"] = cograph.type_count;
            params["shapes_examined"] = cograph.shapes_examined;
            break;
    }
    j["parameters"] = params;
    return j.dump();
}

}  // namespace hyp
