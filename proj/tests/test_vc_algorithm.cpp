#include "doctest.h"

#include <random>

#include "helpers.hpp"
#include "hyp/generators.hpp"
#include "hyp/vc_algorithm.hpp"

using namespace hyp;

TEST_CASE("matching-based cover is valid and within factor two") {
    auto star = approx_vertex_cover_2(gen_star(5));
    CHECK(star.size() <= 2);

    auto c4 = approx_vertex_cover_2(gen_cycle(4));
    CHECK(c4.size() <= 4);

    CHECK(approx_vertex_cover_2(build_graph({}, 6)).empty());

    std::mt19937_64 rng(12);
    for (int it = 0; it < 30; ++it) {
        Graph g = gen_gnp(4 + rng() % 20, 0.3, rng());
        auto cover = approx_vertex_cover_2(g);
        std::vector<bool> in(g.vertex_count(), false);
        for (vertex_id v : cover) in[v] = true;
        for (auto [u, v] : g.edges()) CHECK((in[u] || in[v]));
    }
}

TEST_CASE("kernelization examples") {
    auto big_star = kernelize_vc(gen_star(100));
    CHECK(big_star.kernel.vertex_count() == 5);
    CHECK(big_star.report.bound_ok);

    auto kb = kernelize_vc(gen_complete_bipartite(5, 5));
    CHECK(kb.kernel.vertex_count() == 8);
    CHECK(kb.kernel.edge_count() == 16);
    CHECK(kb.report.bound_ok);

    auto c4 = kernelize_vc(gen_cycle(4));
    CHECK(c4.kernel.vertex_count() == 4);
}

TEST_CASE("kernelization is idempotent and preserves delta") {
    std::mt19937_64 rng(77);
    for (int it = 0; it < 100; ++it) {
        std::size_t n = 5 + rng() % 36;
        Graph g = gen_gnp(n, 0.06 + 0.02 * (it % 12), rng());
        auto k1 = kernelize_vc(g);
        auto k2 = kernelize_vc(k1.kernel);
        CHECK(k2.trace.removed.empty());
        CHECK(k1.report.bound_ok);
        CHECK(brute_force_delta(k1.kernel).delta == brute_force_delta(g).delta);
    }
}

TEST_CASE("vertex cover algorithm equals the oracle") {
    CHECK(hyperbolicity_vc(gen_complete_bipartite(5, 5)).delta ==
          brute_force_delta(gen_complete_bipartite(5, 5)).delta);
    CHECK(hyperbolicity_vc(gen_star(100)).delta == 0);

    std::mt19937_64 rng(31);
    for (int it = 0; it < 40; ++it) {
        Graph g = gen_gnp(6 + rng() % 25, 0.3, rng());
        auto res = hyperbolicity_vc(g);
        CHECK(res.delta == brute_force_delta(g).delta);
        if (res.witness) {
            auto d = test::all_pairs(g);
            const auto& q = res.witness->vertices;
            CHECK(test::naive_delta_quadruple(d, q[0], q[1], q[2], q[3]) == res.delta);
        }
    }

    // split graphs: a clique plus an independent set with random cross edges
    for (int it = 0; it < 10; ++it) {
        std::size_t clique = 6, indep = 24;
        std::vector<std::pair<vertex_id, vertex_id>> edges;
        for (vertex_id i = 0; i < clique; ++i)
            for (vertex_id j = i + 1; j < clique; ++j) edges.emplace_back(i, j);
        for (vertex_id i = 0; i < clique; ++i)
            for (vertex_id j = 0; j < indep; ++j)
                if (rng() % 3 == 0) edges.emplace_back(i, static_cast<vertex_id>(clique + j));
        Graph g = build_graph(edges, static_cast<vertex_id>(clique + indep));
        CHECK(hyperbolicity_vc(g).delta == brute_force_delta(g).delta);
    }
}

TEST_CASE("kernel report serializes") {
    KernelReport r;
    r.cover_size = 3;
    r.kernel_vertices = 10;
    r.bound_ok = true;
    auto j = r.to_json();
    CHECK(j.find("\"cover_size\":3") != std::string::npos);
    CHECK(j.find("\"bound_ok\":true") != std::string::npos);
}
