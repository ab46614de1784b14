#pragma once

#include "hyp/hyperbolicity.hpp"
#include "hyp/reductions.hpp"

namespace hyp {

struct KernelReport {
    std::size_t cover_size = 0;  // the 2-approximate vertex cover size used as k
    std::size_t kernel_vertices = 0;
    std::size_t kernel_edges = 0;
    bool bound_ok = false;  // vertices <= k + 4*2^k and edges <= 4k*2^k

    std::string to_json() const;
};

/// Maximal-matching 2-approximation of a minimum vertex cover.
std::vector<vertex_id> approx_vertex_cover_2(const Graph& g);

struct KernelizeResult {
    Graph kernel;
    VertexRemap remap;
    KernelReport report;
    ReductionTrace trace;
};

/// Exhaustive twin reduction; the report checks the kernel size against the
/// k + 4*2^k vertex and 4k*2^k edge bounds for k = |2-approx cover|.
KernelizeResult kernelize_vc(const Graph& g);

/// Parameter: vertex cover number. Twin kernel, then the brute-force oracle
/// on the kernel.
HyperbolicityResult hyperbolicity_vc(const Graph& g, KernelReport* report = nullptr,
                                     const BruteForceOptions& brute = {});

}  // namespace hyp
