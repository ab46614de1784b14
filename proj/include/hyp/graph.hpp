#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyp {

using vertex_id = std::uint32_t;
using dist_t = std::int64_t;

// Sentinel for "no path"; never mixed into arithmetic without a prior check.
inline constexpr dist_t kInfDist = std::numeric_limits<dist_t>::max();

/// Immutable undirected simple graph in compressed adjacency form.
/// Neighbor lists are strictly increasing; the structure is symmetric and
/// free of self-loops and duplicate edges by construction.
class Graph {
public:
    Graph() = default;

    vertex_id vertex_count() const { return n_; }
    std::uint64_t edge_count() const { return m_; }

    std::span<const vertex_id> neighbors(vertex_id v) const {
        return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
    }
    std::uint32_t degree(vertex_id v) const {
        return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
    }
    bool has_edge(vertex_id u, vertex_id v) const;

    /// Edges in canonical order: (u, v) with u < v, lexicographic.
    std::vector<std::pair<vertex_id, vertex_id>> edges() const;

private:
    vertex_id n_ = 0;
    std::uint64_t m_ = 0;
    std::vector<std::size_t> offsets_{0};
    std::vector<vertex_id> adj_;

    friend Graph build_graph(const std::vector<std::pair<vertex_id, vertex_id>>&, vertex_id);
};

/// Canonical construction from an edge list. Duplicate edges (in either
/// orientation) collapse; self-loops and out-of-range ids are errors.
Graph build_graph(const std::vector<std::pair<vertex_id, vertex_id>>& edge_list, vertex_id n);

/// Single-source BFS distances.
struct DistanceRow {
    vertex_id source = 0;
    std::vector<dist_t> distances;  // kInfDist for unreachable vertices
};

DistanceRow bfs_distances(const Graph& g, vertex_id source);

/// Dense n x n distance table for the brute-force oracle. Entries are
/// uint16 to keep n^2 tables affordable; kInfCell marks unreachable pairs.
class DistanceMatrix {
public:
    using cell = std::uint16_t;
    static constexpr cell kInfCell = std::numeric_limits<cell>::max();

    // throws std::length_error when n^2 cells exceed max_bytes
    static DistanceMatrix build(const Graph& g, std::uint64_t max_bytes = kDefaultMaxBytes);

    static constexpr std::uint64_t kDefaultMaxBytes = 1ull << 30;

    vertex_id size() const { return n_; }
    dist_t at(vertex_id u, vertex_id v) const {
        cell c = cells_[static_cast<std::size_t>(u) * n_ + v];
        return c == kInfCell ? kInfDist : static_cast<dist_t>(c);
    }
    bool reachable(vertex_id u, vertex_id v) const {
        return cells_[static_cast<std::size_t>(u) * n_ + v] != kInfCell;
    }

private:
    vertex_id n_ = 0;
    std::vector<cell> cells_;
};

std::vector<std::vector<vertex_id>> connected_components(const Graph& g);

/// Vertices of degree at least three (the branching vertices).
std::vector<vertex_id> high_degree_vertices(const Graph& g);

/// Translation record from a vertex deletion: new dense ids back to the
/// ids of the host graph.
struct VertexRemap {
    std::vector<vertex_id> new_to_old;
    std::vector<vertex_id> old_to_new;  // kDeleted for removed vertices
    static constexpr vertex_id kDeleted = std::numeric_limits<vertex_id>::max();
};

std::pair<Graph, VertexRemap> delete_vertices(const Graph& g, const std::vector<vertex_id>& to_delete);

/// Induced subgraph on `keep` (order-insensitive); same remap contract.
std::pair<Graph, VertexRemap> induced_subgraph(const Graph& g, const std::vector<vertex_id>& keep);

// Edge-list text format: one "u v" pair per line, '#' comment lines,
// optional "p n m" header. Parse errors carry 1-based line numbers.
Graph parse_edge_list(const std::string& text);
std::string write_edge_list(const Graph& g);

struct ParseError : std::runtime_error {
    explicit ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_number(line) {}
    std::size_t line_number;
};

}  // namespace hyp
