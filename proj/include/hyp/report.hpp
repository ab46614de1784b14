#pragma once

#include <string>

#include "hyp/cograph.hpp"
#include "hyp/path_engine.hpp"
#include "hyp/vc_algorithm.hpp"

namespace hyp {

enum class Algorithm { brute, paths, feedback_edge, degree3, vertex_cover, cograph };

const char* algorithm_name(Algorithm a);
Algorithm algorithm_from_name(const std::string& name);  // throws on unknown names

struct ComputeOptions {
    unsigned threads = 1;
    std::uint64_t max_matrix_bytes = DistanceMatrix::kDefaultMaxBytes;
};

/// Result of one algorithm run: delta, witness, observed parameter values,
/// wall time. The witness is re-validated against fresh BFS distances
/// before the report is serialized.
struct RunReport {
    Algorithm algorithm = Algorithm::brute;
    std::string input;
    vertex_id n = 0;
    std::uint64_t m = 0;
    HyperbolicityResult result;
    double wall_ms = 0;

    EngineStats engine;    // paths / feedback_edge / degree3
    KernelReport kernel;   // vertex_cover
    CographStats cograph;  // cograph

    std::string to_json() const;
};

RunReport run_algorithm(const Graph& g, Algorithm algo, const ComputeOptions& opts = {},
                        const std::string& input_name = "");

/// Recompute the witness quadruple's distance sums with BFS and compare
/// with the reported delta; null witness requires delta zero.
bool validate_result(const Graph& g, const HyperbolicityResult& r);

}  // namespace hyp
