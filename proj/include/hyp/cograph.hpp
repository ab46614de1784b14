#pragma once

#include <map>
#include <optional>

#include "hyp/hyperbolicity.hpp"

namespace hyp {

/// Rooted union/join decomposition of a cograph. Internal nodes have at
/// least two children and alternate labels; children are ordered by their
/// smallest leaf.
struct Cotree {
    enum class Kind { leaf, union_node, join_node };
    struct Node {
        Kind kind = Kind::leaf;
        vertex_id leaf = 0;           // valid for leaves
        std::vector<int> children;    // valid for internal nodes
    };
    std::vector<Node> nodes;
    int root = -1;

    /// u,w adjacent iff their lowest common ancestor is a join node.
    Graph reconstruct(vertex_id n) const;
    std::string to_json() const;
};

/// Ordered four vertices forming an induced path.
using P4Witness = std::array<vertex_id, 4>;

struct RecognitionResult {
    std::optional<Cotree> cotree;  // exactly one of the two is set
    std::optional<P4Witness> p4;
};

/// Recursive union/complement-component decomposition; returns the cotree
/// or an induced P4 certificate.
RecognitionResult cograph_recognize(const Graph& g);

/// Delete all four vertices of a returned P4 until the rest is a cograph;
/// at most 4x the minimum deletion distance.
std::vector<vertex_id> cograph_deletion_set(const Graph& g);

/// Per-vertex length-k distance signature toward the deletion set, entries
/// in {1,2,3,inf}: distance to x_i inside the vertex's own component plus
/// x_i. Also carries components, type ids, representatives, and true
/// graph distances from each deletion vertex.
struct TypeAnalysis {
    std::vector<vertex_id> x;                       // deletion set, sorted
    std::vector<int> comp_of;                       // -1 for members of x
    std::vector<std::vector<vertex_id>> comps;      // components of g - x
    std::vector<std::vector<dist_t>> vectors;       // per vertex (empty for x members)
    std::vector<int> type_of;                       // -1 for members of x
    std::vector<std::vector<dist_t>> distinct;      // type id -> vector
    std::vector<vertex_id> rep_of_type;             // lowest-id vertex of the type
    std::vector<std::vector<dist_t>> x_distances;   // |x| rows of true distances in g
};

TypeAnalysis compute_type_vectors(const Graph& g, const std::vector<vertex_id>& x_set);

/// Pattern for the colored induced-subgraph query; order is capped because
/// the dynamic program is exponential in it.
struct ColoredPattern {
    Graph h;
    std::vector<int> colors;
};

/// Cotree dynamic program: is some induced subgraph of the cograph host
/// color-isomorphic to the pattern? Returns the host vertex chosen for each
/// pattern vertex.
std::optional<std::vector<vertex_id>> colored_isi(const Graph& host, const Cotree& cotree,
                                                  const std::vector<int>& host_colors,
                                                  const ColoredPattern& pattern,
                                                  std::size_t pattern_cap = 10);

/// Six prescribed pairwise distances, order d_ab,d_ac,d_ad,d_bc,d_bd,d_cd;
/// entries must lie in [1, 4k+2].
struct DistanceConstraints {
    std::array<dist_t, 6> values{};
};

/// Four distinct vertices realizing the six distances under some labeling,
/// or nothing. Branches over deletion-set subsets, type multisets and
/// component partitions, finishing with the colored subgraph query.
std::optional<std::array<vertex_id, 4>> distance_constrained_4tuple(const Graph& g,
                                                                    const TypeAnalysis& types,
                                                                    const DistanceConstraints& dc);

struct CographStats {
    std::size_t deletion_set_size = 0;  // summed over components
    std::size_t type_count = 0;
    std::size_t shapes_examined = 0;
    std::size_t isi_calls = 0;
};

/// Parameter: vertex deletion distance to cographs. Per component:
/// enumerate the realizable distance six-tuples through their defining
/// shapes and maximize delta over the feasible ones.
HyperbolicityResult hyperbolicity_cograph_distance(const Graph& g, CographStats* stats = nullptr);

}  // namespace hyp
