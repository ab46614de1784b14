#pragma once

#include <array>
#include <functional>
#include <unordered_map>

#include "hyp/hyperbolicity.hpp"
#include "hyp/ilp.hpp"
#include "hyp/reductions.hpp"

namespace hyp {

/// Assignment of the four quadruple labels (a,b,c,d = 0..3) to cover paths,
/// with a linear order along the path for labels that share one.
struct PathAssignment {
    std::array<std::size_t, 4> path_of{};           // label -> index into cover.paths
    std::vector<std::vector<int>> colocated_order;  // shared-path label groups, in on-path order
};

/// Exact graph distances between all cover-path endpoints.
struct EndpointDistanceTable {
    std::vector<vertex_id> endpoints;
    std::vector<std::vector<dist_t>> dist;  // endpoints x endpoints
    std::unordered_map<vertex_id, std::size_t> index;

    dist_t between(vertex_id u, vertex_id v) const { return dist[index.at(u)][index.at(v)]; }
};

EndpointDistanceTable endpoint_distance_table(const Graph& g, const PathCover& cover);

/// One linear model per (choice of the two largest distance sums, solved in
/// both directions) x (joint selection of the active min-term for each of
/// the six pairs). Selections whose term-dominance constraints already
/// contradict the variable boxes are pruned. Labels sharing a path get the
/// gap variables and the path-length chain equality.
std::vector<IlpModel> build_case_ilps(const PathCover& cover, const PathAssignment& assign,
                                      const EndpointDistanceTable& table);

void for_each_case_ilp(const PathCover& cover, const PathAssignment& assign,
                       const EndpointDistanceTable& table,
                       const std::function<void(const IlpModel&)>& sink);

/// delta of the cycle C_length: exhaustive below the cap (quadruples pinned
/// to vertex 0 by symmetry), closed form 2*floor(L/4) - [L = 1 mod 4] above
/// it. The closed form is validated against the exhaustive table in tests.
dist_t cycle_hyperbolicity(std::size_t length, std::size_t cycle_cap = 64);

struct EngineStats {
    std::size_t rule1_removed = 0;
    std::size_t rule2_removed = 0;
    std::size_t cover_size = 0;  // summed over components
    std::size_t isolated_cycle_count = 0;
    std::size_t largest_cycle = 0;
    std::size_t maximal_path_count = 0;
    std::size_t feedback_edge_count = 0;
    bool path_bound_7k_ok = true;
    std::size_t high_degree_count = 0;
    std::size_t max_parallel_paths = 0;
    std::size_t assignments_total = 0;
    std::size_t assignments_pruned = 0;
    std::size_t models_solved = 0;
};

struct EngineOptions {
    IlpSolveOptions ilp;
    std::size_t cycle_cap = 64;
    // assignments whose position-box product is at most this are evaluated
    // by direct integer enumeration instead of the case ILPs
    std::uint64_t assignment_enum_threshold = 1024;
};

/// Parameter: minimum maximal paths cover number. Rule 1, isolated-cycle
/// split, greedy cover, then the assignment/ILP sweep.
HyperbolicityResult hyperbolicity_via_path_cover(const Graph& g, EngineStats* stats = nullptr,
                                                 const EngineOptions& opts = {});

/// Parameter: feedback edge number. Same pipeline; additionally records the
/// maximal-path count against the 7k bound.
HyperbolicityResult hyperbolicity_feedback_edge(const Graph& g, EngineStats* stats = nullptr,
                                                const EngineOptions& opts = {});

/// Parameter: number of degree->=3 vertices. Rule 1 + Rule 2, then the
/// path-cover pipeline; at most nine parallel paths survive per pair.
HyperbolicityResult hyperbolicity_degree3(const Graph& g, EngineStats* stats = nullptr,
                                          const EngineOptions& opts = {});

}  // namespace hyp
