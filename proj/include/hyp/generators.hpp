#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "hyp/graph.hpp"

namespace hyp {

/// Orthogonal-vectors instance: two sets of n binary vectors of length ell.
struct OvInstance {
    std::vector<std::vector<std::uint8_t>> a;
    std::vector<std::vector<std::uint8_t>> b;

    std::size_t dim() const { return a.empty() ? 0 : a.front().size(); }
};

/// Reserved-id layout of the OV graph, so tests can address landmarks
/// without searching. Vertices: A-block, B-block, C-clique, D-clique,
/// then u_a, u, u_b, v_a, v, v_b.
struct OvLayout {
    vertex_id a0 = 0, b0 = 0, c0 = 0, d0 = 0;
    vertex_id u_a = 0, u = 0, u_b = 0;
    vertex_id v_a = 0, v = 0, v_b = 0;
    std::size_t n = 0, ell = 0;
};

struct OvGraph {
    Graph graph;
    OvLayout layout;
};

/// Hard-instance construction: orthogonal pair in the instance iff the
/// graph has delta >= 4. Always diameter 4 with {u_a, u_b, v} dominating.
OvGraph gen_ov_graph(const OvInstance& inst);

bool solve_ov_bruteforce(const OvInstance& inst);

/// 4-partite independent-set instance: a graph plus a 4-partition.
struct FourPartiteInstance {
    Graph graph;
    std::array<std::vector<vertex_id>, 4> parts;
};

struct FourIsLayout {
    // base ids of the blocks, in construction order
    std::array<vertex_id, 4> x;        // X_1..X_4
    std::array<vertex_id, 4> x_copy;   // X'_1..X'_4
    std::array<vertex_id, 2> y;        // Y_1, Y_2
    std::array<vertex_id, 2> z;        // Z_1, Z_2
    std::array<vertex_id, 8> u;        // connection vertices
    vertex_id w = 0;
    std::array<std::size_t, 4> part_size{};
    bool trivial_no_instance = false;  // every V1-V3 pair adjacent
};

struct FourIsGraph {
    Graph graph;
    FourIsLayout layout;
};

/// Hard-instance construction: colored independent set of size 4 iff the
/// graph has delta >= 4. |V'| = 2|V| + 2(n1+n2) + 9.
FourIsGraph gen_4is_graph(const FourPartiteInstance& inst);

bool solve_4is_bruteforce(const FourPartiteInstance& inst);

// Standard families for tests and benchmarks; deterministic given the seed.
Graph gen_cycle(std::size_t length);
Graph gen_path(std::size_t n);
Graph gen_complete(std::size_t n);
Graph gen_star(std::size_t leaves);
Graph gen_complete_bipartite(std::size_t a, std::size_t b);
Graph gen_random_tree(std::size_t n, std::uint64_t seed);
Graph gen_gnp(std::size_t n, double p, std::uint64_t seed);
Graph gen_theta(const std::vector<std::size_t>& lengths);  // hub-to-hub path lengths
Graph gen_subdivided(const Graph& g, std::size_t factor);

/// Uniform random instances for the hard-instance generators.
OvInstance gen_ov_instance(std::size_t n, std::size_t ell, std::uint64_t seed, int force = 0);
// force > 0 plants an all-ones dimension (no orthogonal pair can exist)
FourPartiteInstance gen_4is_instance(const std::array<std::size_t, 4>& part_sizes, double p,
                                     std::uint64_t seed);

}  // namespace hyp
