#include "hyp/vc_algorithm.hpp"

#include "json.hpp"

namespace hyp {

std::string KernelReport::to_json() const {
    nlohmann::json j;
    j["cover_size"] = cover_size;
    j["kernel_vertices"] = kernel_vertices;
    j["kernel_edges"] = kernel_edges;
    j["bound_ok"] = bound_ok;
    return j.dump();
}

std::vector<vertex_id> approx_vertex_cover_2(const Graph& g) {
    std::vector<bool> matched(g.vertex_count(), false);
    std::vector<vertex_id> cover;
    for (auto [u, v] : g.edges())
        if (!matched[u] && !matched[v]) {
            matched[u] = matched[v] = true;
            cover.push_back(u);
            cover.push_back(v);
        }
    return cover;
}

KernelizeResult kernelize_vc(const Graph& g) {
    auto reduced = rule3_twin_reduce(g);
    KernelizeResult res{std::move(reduced.graph), std::move(reduced.remap), {},
                        std::move(reduced.trace)};
    const std::size_t k = approx_vertex_cover_2(g).size();
    res.report.cover_size = k;
    res.report.kernel_vertices = res.kernel.vertex_count();
    res.report.kernel_edges = res.kernel.edge_count();
    // k + 4*2^k vertices and 4k*2^k edges; saturate instead of overflowing
    long double vertex_bound = k >= 60 ? 1e30L : static_cast<long double>(k) + 4.0L * (1ull << k);
    long double edge_bound = k >= 60 ? 1e30L : 4.0L * k * (1ull << k);
    res.report.bound_ok = res.report.kernel_vertices <= vertex_bound &&
                          res.report.kernel_edges <= edge_bound;
    return res;
}

HyperbolicityResult hyperbolicity_vc(const Graph& g, KernelReport* report,
                                     const BruteForceOptions& brute) {
    auto kr = kernelize_vc(g);
    if (report) *report = kr.report;
    auto res = brute_force_delta(kr.kernel, brute);
    if (res.witness) {
        for (auto& v : res.witness->vertices) v = kr.remap.new_to_old[v];
    }
    return res;
}

}  // namespace hyp
