#pragma once

#include <array>
#include <optional>

#include "hyp/graph.hpp"

namespace hyp {

/// The three pairwise distance sums of a quadruple (a,b,c,d):
/// d(a,b)+d(c,d), d(a,c)+d(b,d), d(a,d)+d(b,c).
struct DistanceSums {
    dist_t d1 = 0;
    dist_t d2 = 0;
    dist_t d3 = 0;
};

/// delta of a quadruple: difference of the two largest sums.
/// All sums must be finite; a quadruple spanning components has no delta.
dist_t delta_of_sums(const DistanceSums& s);

DistanceSums quadruple_sums(const DistanceMatrix& dm, vertex_id a, vertex_id b, vertex_id c,
                            vertex_id d);
dist_t delta_quadruple(const DistanceMatrix& dm, vertex_id a, vertex_id b, vertex_id c, vertex_id d);

struct Witness {
    std::array<vertex_id, 4> vertices{};
    DistanceSums sums;
};

struct HyperbolicityResult {
    dist_t delta = 0;
    std::optional<Witness> witness;  // absent when no component has 4 vertices
};

struct BruteForceOptions {
    unsigned threads = 1;
    bool use_distance_prune = true;  // skip pairs that cannot beat the current best
    std::uint64_t max_matrix_bytes = DistanceMatrix::kDefaultMaxBytes;
};

/// O(n^4) oracle. Quadruples spanning components are skipped; the witness is
/// the lexicographically smallest maximizer, independent of thread count.
HyperbolicityResult brute_force_delta(const Graph& g, const BruteForceOptions& opts = {});
HyperbolicityResult brute_force_delta(const Graph& g, const DistanceMatrix& dm,
                                      const BruteForceOptions& opts = {});

/// delta(a,b,c,d) <= 2 * min pairwise distance.
bool check_lemma1(const DistanceMatrix& dm, vertex_id a, vertex_id b, vertex_id c, vertex_id d);

/// When delta of a component equals its diameter h, every maximizing
/// quadruple has exactly two disjoint pairs at distance h and all other
/// pairs at h/2. Vacuously true for components where delta != diameter.
bool check_lemma2(const Graph& g);

}  // namespace hyp
