#pragma once

#include <algorithm>
#include <array>
#include <vector>

#include "hyp/graph.hpp"

namespace hyp::test {

// Straight-line reference for delta: all quadruples, no pruning, distances
// from per-source BFS. Kept independent of the library's oracle on purpose.
inline dist_t naive_delta(const Graph& g) {
    const vertex_id n = g.vertex_count();
    std::vector<std::vector<dist_t>> d(n);
    for (vertex_id v = 0; v < n; ++v) d[v] = bfs_distances(g, v).distances;
    dist_t best = 0;
    for (vertex_id a = 0; a < n; ++a)
        for (vertex_id b = a + 1; b < n; ++b)
            for (vertex_id c = b + 1; c < n; ++c)
                for (vertex_id e = c + 1; e < n; ++e) {
                    if (d[a][b] == kInfDist || d[a][c] == kInfDist || d[a][e] == kInfDist ||
                        d[b][c] == kInfDist || d[b][e] == kInfDist || d[c][e] == kInfDist)
                        continue;
                    std::array<dist_t, 3> s{d[a][b] + d[c][e], d[a][c] + d[b][e],
                                            d[a][e] + d[b][c]};
                    std::sort(s.begin(), s.end());
                    best = std::max(best, s[2] - s[1]);
                }
    return best;
}

inline dist_t naive_delta_quadruple(const std::vector<std::vector<dist_t>>& d, vertex_id a,
                                    vertex_id b, vertex_id c, vertex_id e) {
    std::array<dist_t, 3> s{d[a][b] + d[c][e], d[a][c] + d[b][e], d[a][e] + d[b][c]};
    std::sort(s.begin(), s.end());
    return s[2] - s[1];
}

inline std::vector<std::vector<dist_t>> all_pairs(const Graph& g) {
    std::vector<std::vector<dist_t>> d(g.vertex_count());
    for (vertex_id v = 0; v < g.vertex_count(); ++v) d[v] = bfs_distances(g, v).distances;
    return d;
}

}  // namespace hyp::test
