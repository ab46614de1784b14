#include "hyp/hyperbolicity.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace hyp {

dist_t delta_of_sums(const DistanceSums& s) {
    if (s.d1 == kInfDist || s.d2 == kInfDist || s.d3 == kInfDist)
        throw std::invalid_argument("quadruple spans components");
    std::array<dist_t, 3> v{s.d1, s.d2, s.d3};
    std::sort(v.begin(), v.end());
    return v[2] - v[1];
}

DistanceSums quadruple_sums(const DistanceMatrix& dm, vertex_id a, vertex_id b, vertex_id c,
                            vertex_id d) {
    auto sum = [&](vertex_id x, vertex_id y, vertex_id z, vertex_id w) -> dist_t {
        dist_t p = dm.at(x, y), q = dm.at(z, w);
        return (p == kInfDist || q == kInfDist) ? kInfDist : p + q;
    };
    return {sum(a, b, c, d), sum(a, c, b, d), sum(a, d, b, c)};
}

dist_t delta_quadruple(const DistanceMatrix& dm, vertex_id a, vertex_id b, vertex_id c,
                       vertex_id d) {
    return delta_of_sums(quadruple_sums(dm, a, b, c, d));
}

namespace {

struct Best {
    dist_t delta = -1;
    std::array<vertex_id, 4> q{};
    bool any = false;
};

// Scans quadruples a<b<c<d for a in [a_lo, a_hi). Local pruning may skip
// quadruples that tie the local best; the first achiever of any value is
// recorded before ties get pruned, so the local witness is the lex-least
// maximizer within the range. The shared bound only prunes strictly
// dominated pairs, which keeps the combined result thread-count invariant.
void scan_range(const DistanceMatrix& dm, vertex_id a_lo, vertex_id a_hi, bool prune,
                std::atomic<dist_t>* shared_bound, Best& best) {
    const vertex_id n = dm.size();
    auto cell = [&](vertex_id u, vertex_id v) { return dm.at(u, v); };
    auto prune_bound = [&]() {
        dist_t bound = best.delta;
        if (shared_bound)
            bound = std::max(bound, shared_bound->load(std::memory_order_relaxed) - 1);
        return bound;
    };
    for (vertex_id a = a_lo; a < a_hi; ++a) {
        for (vertex_id b = a + 1; b < n; ++b) {
            dist_t dab = cell(a, b);
            if (dab == kInfDist) continue;
            if (prune && 2 * dab <= prune_bound()) continue;
            for (vertex_id c = b + 1; c < n; ++c) {
                dist_t dac = cell(a, c), dbc = cell(b, c);
                if (dac == kInfDist || dbc == kInfDist) continue;
                if (prune && 2 * std::min({dab, dac, dbc}) <= prune_bound()) continue;
                for (vertex_id d = c + 1; d < n; ++d) {
                    dist_t dad = cell(a, d);
                    if (dad == kInfDist) continue;
                    dist_t dbd = cell(b, d), dcd = cell(c, d);
                    dist_t s1 = dab + dcd, s2 = dac + dbd, s3 = dad + dbc;
                    dist_t hi = std::max({s1, s2, s3});
                    dist_t lo = std::min({s1, s2, s3});
                    dist_t delta = hi - (s1 + s2 + s3 - hi - lo);
                    if (delta > best.delta) {
                        best.delta = delta;
                        best.q = {a, b, c, d};
                        best.any = true;
                        if (shared_bound) {
                            dist_t cur = shared_bound->load(std::memory_order_relaxed);
                            while (delta > cur &&
                                   !shared_bound->compare_exchange_weak(cur, delta)) {
                            }
                        }
                    }
                }
            }
        }
    }
}

}  // namespace

HyperbolicityResult brute_force_delta(const Graph& g, const DistanceMatrix& dm,
                                      const BruteForceOptions& opts) {
    const vertex_id n = g.vertex_count();
    HyperbolicityResult res;
    if (n < 4) return res;

    unsigned threads = std::max(1u, opts.threads);
    threads = std::min<unsigned>(threads, std::max<vertex_id>(1, n / 4));

    std::vector<Best> bests(threads);
    if (threads == 1) {
        scan_range(dm, 0, n, opts.use_distance_prune, nullptr, bests[0]);
    } else {
        // Static split weighted by the number of quadruples per leading vertex.
        std::vector<vertex_id> cuts{0};
        double total = 0;
        for (vertex_id a = 0; a < n; ++a) total += double(n - a - 1) * (n - a - 1) * (n - a - 1);
        double per = total / threads, acc = 0;
        for (vertex_id a = 0; a < n && cuts.size() < threads; ++a) {
            acc += double(n - a - 1) * (n - a - 1) * (n - a - 1);
            if (acc >= per * cuts.size()) cuts.push_back(a + 1);
        }
        while (cuts.size() <= threads) cuts.push_back(n);
        std::atomic<dist_t> shared{-1};
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                scan_range(dm, cuts[t], cuts[t + 1], opts.use_distance_prune,
                           opts.use_distance_prune ? &shared : nullptr, bests[t]);
            });
        }
        for (auto& th : pool) th.join();
    }

    Best combined;
    for (const auto& b : bests) {
        if (!b.any) continue;
        if (!combined.any || b.delta > combined.delta ||
            (b.delta == combined.delta && b.q < combined.q)) {
            combined = b;
        }
    }
    if (combined.any) {
        res.delta = combined.delta;
        auto [a, b, c, d] = combined.q;
        res.witness = Witness{combined.q, quadruple_sums(dm, a, b, c, d)};
    }
    return res;
}

HyperbolicityResult brute_force_delta(const Graph& g, const BruteForceOptions& opts) {
    if (g.vertex_count() < 4) return {};
    DistanceMatrix dm = DistanceMatrix::build(g, opts.max_matrix_bytes);
    return brute_force_delta(g, dm, opts);
}

bool check_lemma1(const DistanceMatrix& dm, vertex_id a, vertex_id b, vertex_id c, vertex_id d) {
    std::array<vertex_id, 4> q{a, b, c, d};
    dist_t min_pair = kInfDist;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) min_pair = std::min(min_pair, dm.at(q[i], q[j]));
    if (min_pair == kInfDist) return true;  // spanning quadruples carry no delta
    return delta_quadruple(dm, a, b, c, d) <= 2 * min_pair;
}

bool check_lemma2(const Graph& g) {
    for (const auto& comp : connected_components(g)) {
        if (comp.size() < 4) continue;
        auto [sub, remap] = induced_subgraph(g, comp);
        DistanceMatrix dm = DistanceMatrix::build(sub);
        const vertex_id n = sub.vertex_count();
        dist_t diam = 0;
        for (vertex_id u = 0; u < n; ++u)
            for (vertex_id v = u + 1; v < n; ++v) diam = std::max(diam, dm.at(u, v));
        dist_t delta = brute_force_delta(sub, dm).delta;
        if (delta != diam) continue;  // vacuous for this component
        const dist_t h = diam;
        for (vertex_id a = 0; a < n; ++a)
            for (vertex_id b = a + 1; b < n; ++b)
                for (vertex_id c = b + 1; c < n; ++c)
                    for (vertex_id d = c + 1; d < n; ++d) {
                        if (delta_quadruple(dm, a, b, c, d) != h) continue;
                        // exactly two disjoint pairs at distance h, rest at h/2
                        std::array<std::array<vertex_id, 2>, 6> pairs{
                            {{a, b}, {c, d}, {a, c}, {b, d}, {a, d}, {b, c}}};
                        int at_h = 0;
                        bool ok = true;
                        std::array<dist_t, 6> dd{};
                        for (int i = 0; i < 6; ++i) dd[i] = dm.at(pairs[i][0], pairs[i][1]);
                        for (int i = 0; i < 6; ++i) {
                            if (dd[i] == h)
                                ++at_h;
                            else if (2 * dd[i] != h)
                                ok = false;
                        }
                        // the two h-pairs must be one of the disjoint pairings
                        bool disjoint = (dd[0] == h && dd[1] == h) || (dd[2] == h && dd[3] == h) ||
                                        (dd[4] == h && dd[5] == h);
                        if (!ok || at_h != 2 || !disjoint) return false;
                    }
    }
    return true;
}

}  // namespace hyp
