#pragma once

#include <string>

#include "hyp/graph.hpp"

namespace hyp {

/// Record of one reduction-rule application, in host-graph (original) ids.
/// Replaying `removed` on the input graph reproduces the reduced graph.
struct ReductionTrace {
    int rule = 0;
    std::vector<vertex_id> removed;
    std::vector<std::string> steps;
    std::string to_json() const;
};

struct ReducedGraph {
    Graph graph;
    VertexRemap remap;
    ReductionTrace trace;
};

/// Rule 1: while more than four vertices remain, remove degree-one vertices.
/// Worklist implementation, O(n+m).
ReducedGraph rule1_prune_degree_one(const Graph& g);

/// Partition of V into classes of equal open neighborhood (false twins).
/// Classes are sorted internally and by smallest member. O(n+m) refinement.
std::vector<std::vector<vertex_id>> twin_partition(const Graph& g);

/// Rule 3: keep at most four vertices per twin class (smallest ids), repeat
/// until no class exceeds four.
ReducedGraph rule3_twin_reduce(const Graph& g);

/// Path whose inner vertices all have degree two in the host graph; at
/// least one endpoint has degree >= 3 (the other may have degree 2 when a
/// chain closes back on its branching vertex).
struct MaximalPath {
    std::vector<vertex_id> vertices;  // oriented: lexicographically smaller endpoint first

    vertex_id first() const { return vertices.front(); }
    vertex_id last() const { return vertices.back(); }
    std::size_t length() const { return vertices.size() - 1; }  // edge count
};

/// All maximal paths, each reported once in canonical orientation.
/// Requires a graph with no degree-one vertices; throws std::invalid_argument
/// naming the component if an isolated cycle is present.
std::vector<MaximalPath> enumerate_maximal_paths(const Graph& g);

struct PathCover {
    std::vector<MaximalPath> paths;  // union of vertex sets covers V
};

/// Greedy 2-approximation of the minimum maximal paths cover: phase one
/// covers degree-two vertices, phase two covers leftover branching vertices.
/// Requires minimum degree two and no isolated cycles.
PathCover greedy_path_cover(const Graph& g);

/// Rule 2: for every pair of branching vertices keep only the shortest plus
/// the four longest even and four longest odd parallel maximal paths;
/// inner vertices of the rest are deleted. Ties keep the lexicographically
/// smaller inner sequence.
ReducedGraph rule2_prune_parallel_paths(const Graph& g);

/// Minimum feedback edge set: the non-forest edges of a spanning forest,
/// |X| = m - n + #components.
std::vector<std::pair<vertex_id, vertex_id>> feedback_edge_set(const Graph& g);

/// Connected components that are simple cycles (every vertex of degree 2),
/// each as its vertex sequence in cycle order starting from the smallest id.
std::vector<std::vector<vertex_id>> isolated_cycles(const Graph& g);

}  // namespace hyp
