#include "hyp/generators.hpp"

#include <random>
#include <stdexcept>

namespace hyp {

namespace {

using EdgeList = std::vector<std::pair<vertex_id, vertex_id>>;

// mt19937_64 output mapped through an explicit threshold so results are
// bit-identical across standard libraries.
bool coin(std::mt19937_64& rng, double p) {
    return (rng() >> 11) * 0x1.0p-53 < p;
}

std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) {
    return rng() % bound;
}

}  // namespace

OvGraph gen_ov_graph(const OvInstance& inst) {
    if (inst.a.empty() || inst.b.empty()) throw std::invalid_argument("empty vector set");
    const std::size_t n = inst.a.size(), ell = inst.dim();
    if (inst.b.size() != n) throw std::invalid_argument("vector sets must have equal size");
    for (const auto& v : inst.a)
        if (v.size() != ell) throw std::invalid_argument("ragged vector length");
    for (const auto& v : inst.b)
        if (v.size() != ell) throw std::invalid_argument("ragged vector length");

    OvLayout lay;
    lay.n = n;
    lay.ell = ell;
    lay.a0 = 0;
    lay.b0 = static_cast<vertex_id>(n);
    lay.c0 = static_cast<vertex_id>(2 * n);
    lay.d0 = static_cast<vertex_id>(2 * n + ell);
    vertex_id base = static_cast<vertex_id>(2 * n + 2 * ell);
    lay.u_a = base;
    lay.u = base + 1;
    lay.u_b = base + 2;
    lay.v_a = base + 3;
    lay.v = base + 4;
    lay.v_b = base + 5;
    const vertex_id total = base + 6;

    EdgeList e;
    auto c_at = [&](std::size_t i) { return lay.c0 + static_cast<vertex_id>(i); };
    auto d_at = [&](std::size_t i) { return lay.d0 + static_cast<vertex_id>(i); };
    // C and D cliques, matched across dimensions
    for (std::size_t i = 0; i < ell; ++i) {
        for (std::size_t j = i + 1; j < ell; ++j) {
            e.emplace_back(c_at(i), c_at(j));
            e.emplace_back(d_at(i), d_at(j));
        }
        e.emplace_back(c_at(i), d_at(i));
    }
    // vector incidences
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < ell; ++k) {
            if (inst.a[i][k]) e.emplace_back(lay.a0 + static_cast<vertex_id>(i), c_at(k));
            if (inst.b[i][k]) e.emplace_back(lay.b0 + static_cast<vertex_id>(i), d_at(k));
        }
    // the two length-2 paths
    e.emplace_back(lay.u_a, lay.u);
    e.emplace_back(lay.u, lay.u_b);
    e.emplace_back(lay.v_a, lay.v);
    e.emplace_back(lay.v, lay.v_b);
    // u_a, v_a cover A and C; u_b, v_b cover B and D
    for (std::size_t i = 0; i < n; ++i) {
        e.emplace_back(lay.u_a, lay.a0 + static_cast<vertex_id>(i));
        e.emplace_back(lay.v_a, lay.a0 + static_cast<vertex_id>(i));
        e.emplace_back(lay.u_b, lay.b0 + static_cast<vertex_id>(i));
        e.emplace_back(lay.v_b, lay.b0 + static_cast<vertex_id>(i));
    }
    for (std::size_t k = 0; k < ell; ++k) {
        e.emplace_back(lay.u_a, c_at(k));
        e.emplace_back(lay.v_a, c_at(k));
        e.emplace_back(lay.u_b, d_at(k));
        e.emplace_back(lay.v_b, d_at(k));
    }
    return {build_graph(e, total), lay};
}

bool solve_ov_bruteforce(const OvInstance& inst) {
    for (const auto& va : inst.a)
        for (const auto& vb : inst.b) {
            bool shares = false;
            for (std::size_t k = 0; k < va.size() && !shares; ++k) shares = va[k] && vb[k];
            if (!shares) return true;
        }
    return false;
}

FourIsGraph gen_4is_graph(const FourPartiteInstance& inst) {
    std::array<std::size_t, 4> sz{};
    for (int i = 0; i < 4; ++i) {
        sz[i] = inst.parts[i].size();
        if (sz[i] == 0) throw std::invalid_argument("part " + std::to_string(i + 1) + " is empty");
    }
    FourIsLayout lay;
    lay.part_size = sz;
    vertex_id next = 0;
    auto block = [&](std::size_t count) {
        vertex_id b = next;
        next += static_cast<vertex_id>(count);
        return b;
    };
    for (int i = 0; i < 4; ++i) lay.x[i] = block(sz[i]);
    for (int i = 0; i < 4; ++i) lay.x_copy[i] = block(sz[i]);
    for (int i = 0; i < 2; ++i) lay.y[i] = block(sz[i]);
    for (int i = 0; i < 2; ++i) lay.z[i] = block(sz[i]);
    for (int i = 0; i < 8; ++i) lay.u[i] = next + static_cast<vertex_id>(i);
    next += 8;
    lay.w = next++;
    const vertex_id total = next;

    EdgeList e;
    auto clique = [&](vertex_id base, std::size_t count) {
        for (std::size_t i = 0; i < count; ++i)
            for (std::size_t j = i + 1; j < count; ++j)
                e.emplace_back(base + static_cast<vertex_id>(i), base + static_cast<vertex_id>(j));
    };
    auto matching = [&](vertex_id from, vertex_id to, std::size_t count) {
        for (std::size_t i = 0; i < count; ++i)
            e.emplace_back(from + static_cast<vertex_id>(i), to + static_cast<vertex_id>(i));
    };
    // every block of original or copied part vertices is a clique
    for (int i = 0; i < 4; ++i) {
        clique(lay.x[i], sz[i]);
        clique(lay.x_copy[i], sz[i]);
    }
    for (int i = 0; i < 2; ++i) {
        clique(lay.y[i], sz[i]);
        clique(lay.z[i], sz[i]);
    }
    for (int i = 0; i < 4; ++i) matching(lay.x[i], lay.x_copy[i], sz[i]);
    for (int i = 0; i < 2; ++i) {
        matching(lay.x[i], lay.y[i], sz[i]);
        matching(lay.y[i], lay.z[i], sz[i]);
    }
    auto original_adjacent = [&](int pi, std::size_t i, int pj, std::size_t j) {
        return inst.graph.has_edge(inst.parts[pi][i], inst.parts[pj][j]);
    };
    // X'_i to X_{i+1}: complement of the original adjacency
    for (int i = 0; i < 4; ++i) {
        int ni = (i + 1) % 4;
        for (std::size_t a = 0; a < sz[i]; ++a)
            for (std::size_t b = 0; b < sz[ni]; ++b)
                if (!original_adjacent(i, a, ni, b))
                    e.emplace_back(lay.x_copy[i] + static_cast<vertex_id>(a),
                                   lay.x[ni] + static_cast<vertex_id>(b));
    }
    // Z_i to X_{i+2}: the original adjacency
    for (int i = 0; i < 2; ++i) {
        int ni = i + 2;
        for (std::size_t a = 0; a < sz[i]; ++a)
            for (std::size_t b = 0; b < sz[ni]; ++b)
                if (original_adjacent(i, a, ni, b))
                    e.emplace_back(lay.z[i] + static_cast<vertex_id>(a),
                                   lay.x[ni] + static_cast<vertex_id>(b));
    }
    // connection vertices u_{i,j}^i -- u_{i,j}^j around the 4-cycle of parts
    const std::array<std::pair<int, int>, 4> ring{{{0, 1}, {1, 2}, {2, 3}, {3, 0}}};
    for (int r = 0; r < 4; ++r) {
        auto [i, j] = ring[r];
        vertex_id ui = lay.u[2 * r], uj = lay.u[2 * r + 1];
        e.emplace_back(ui, uj);
        for (std::size_t a = 0; a < sz[i]; ++a) e.emplace_back(ui, lay.x[i] + static_cast<vertex_id>(a));
        for (std::size_t b = 0; b < sz[j]; ++b) e.emplace_back(uj, lay.x[j] + static_cast<vertex_id>(b));
    }
    // w rules everything except the X_i blocks
    for (int i = 0; i < 4; ++i) {
        for (std::size_t a = 0; a < sz[i]; ++a)
            e.emplace_back(lay.w, lay.x_copy[i] + static_cast<vertex_id>(a));
    }
    for (int i = 0; i < 2; ++i)
        for (std::size_t a = 0; a < sz[i]; ++a) {
            e.emplace_back(lay.w, lay.y[i] + static_cast<vertex_id>(a));
            e.emplace_back(lay.w, lay.z[i] + static_cast<vertex_id>(a));
        }
    for (int i = 0; i < 8; ++i) e.emplace_back(lay.w, lay.u[i]);

    // the diameter-4 argument needs a non-adjacent V1-V3 pair
    lay.trivial_no_instance = true;
    for (std::size_t a = 0; a < sz[0] && lay.trivial_no_instance; ++a)
        for (std::size_t b = 0; b < sz[2]; ++b)
            if (!original_adjacent(0, a, 2, b)) {
                lay.trivial_no_instance = false;
                break;
            }
    return {build_graph(e, total), lay};
}

bool solve_4is_bruteforce(const FourPartiteInstance& inst) {
    const auto& g = inst.graph;
    for (vertex_id a : inst.parts[0])
        for (vertex_id b : inst.parts[1]) {
            if (g.has_edge(a, b)) continue;
            for (vertex_id c : inst.parts[2]) {
                if (g.has_edge(a, c) || g.has_edge(b, c)) continue;
                for (vertex_id d : inst.parts[3])
                    if (!g.has_edge(a, d) && !g.has_edge(b, d) && !g.has_edge(c, d)) return true;
            }
        }
    return false;
}

Graph gen_cycle(std::size_t length) {
    if (length < 3) throw std::invalid_argument("cycle length must be >= 3");
    EdgeList e;
    for (std::size_t i = 0; i < length; ++i)
        e.emplace_back(static_cast<vertex_id>(i), static_cast<vertex_id>((i + 1) % length));
    return build_graph(e, static_cast<vertex_id>(length));
}

Graph gen_path(std::size_t n) {
    EdgeList e;
    for (std::size_t i = 0; i + 1 < n; ++i)
        e.emplace_back(static_cast<vertex_id>(i), static_cast<vertex_id>(i + 1));
    return build_graph(e, static_cast<vertex_id>(n));
}

Graph gen_complete(std::size_t n) {
    EdgeList e;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            e.emplace_back(static_cast<vertex_id>(i), static_cast<vertex_id>(j));
    return build_graph(e, static_cast<vertex_id>(n));
}

Graph gen_star(std::size_t leaves) {
    EdgeList e;
    for (std::size_t i = 1; i <= leaves; ++i) e.emplace_back(0, static_cast<vertex_id>(i));
    return build_graph(e, static_cast<vertex_id>(leaves + 1));
}

Graph gen_complete_bipartite(std::size_t a, std::size_t b) {
    EdgeList e;
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < b; ++j)
            e.emplace_back(static_cast<vertex_id>(i), static_cast<vertex_id>(a + j));
    return build_graph(e, static_cast<vertex_id>(a + b));
}

Graph gen_random_tree(std::size_t n, std::uint64_t seed) {
    EdgeList e;
    std::mt19937_64 rng(seed);
    for (std::size_t i = 1; i < n; ++i)
        e.emplace_back(static_cast<vertex_id>(below(rng, i)), static_cast<vertex_id>(i));
    return build_graph(e, static_cast<vertex_id>(n));
}

Graph gen_gnp(std::size_t n, double p, std::uint64_t seed) {
    EdgeList e;
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (coin(rng, p)) e.emplace_back(static_cast<vertex_id>(i), static_cast<vertex_id>(j));
    return build_graph(e, static_cast<vertex_id>(n));
}

Graph gen_theta(const std::vector<std::size_t>& lengths) {
    if (lengths.size() < 2) throw std::invalid_argument("theta graph needs >= 2 parallel paths");
    std::size_t ones = 0;
    for (std::size_t l : lengths) {
        if (l < 1) throw std::invalid_argument("path length must be >= 1");
        if (l == 1 && ++ones > 1)
            throw std::invalid_argument("at most one direct edge between the hubs");
    }
    EdgeList e;
    vertex_id next = 2;  // hubs are 0 and 1
    for (std::size_t l : lengths) {
        vertex_id prev = 0;
        for (std::size_t i = 1; i < l; ++i) {
            e.emplace_back(prev, next);
            prev = next++;
        }
        e.emplace_back(prev, 1);
    }
    return build_graph(e, next);
}

Graph gen_subdivided(const Graph& g, std::size_t factor) {
    if (factor < 1) throw std::invalid_argument("subdivision factor must be >= 1");
    EdgeList e;
    vertex_id next = g.vertex_count();
    for (auto [u, v] : g.edges()) {
        vertex_id prev = u;
        for (std::size_t i = 1; i < factor; ++i) {
            e.emplace_back(prev, next);
            prev = next++;
        }
        e.emplace_back(prev, v);
    }
    return build_graph(e, next);
}

OvInstance gen_ov_instance(std::size_t n, std::size_t ell, std::uint64_t seed, int force) {
    std::mt19937_64 rng(seed);
    OvInstance inst;
    auto vec = [&]() {
        std::vector<std::uint8_t> v(ell);
        for (auto& bit : v) bit = coin(rng, 0.5) ? 1 : 0;
        return v;
    };
    for (std::size_t i = 0; i < n; ++i) inst.a.push_back(vec());
    for (std::size_t i = 0; i < n; ++i) inst.b.push_back(vec());
    if (force > 0 && ell > 0) {
        for (auto& v : inst.a) v[0] = 1;
        for (auto& v : inst.b) v[0] = 1;
    }
    return inst;
}

FourPartiteInstance gen_4is_instance(const std::array<std::size_t, 4>& part_sizes, double p,
                                     std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    FourPartiteInstance inst;
    vertex_id next = 0;
    for (int i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < part_sizes[i]; ++j) inst.parts[i].push_back(next++);
    EdgeList e;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (vertex_id a : inst.parts[i])
                for (vertex_id b : inst.parts[j])
                    if (coin(rng, p)) e.emplace_back(a, b);
    inst.graph = build_graph(e, next);
    return inst;
}

}  // namespace hyp
