#include "hyp/cograph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "json.hpp"

namespace hyp {

Graph Cotree::reconstruct(vertex_id n) const {
    std::vector<std::pair<vertex_id, vertex_id>> edges;
    std::vector<std::vector<vertex_id>> leaves(nodes.size());
    // children precede parents by construction, so one forward pass works
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const Node& nd = nodes[i];
        if (nd.kind == Kind::leaf) {
            leaves[i] = {nd.leaf};
            continue;
        }
        for (int c : nd.children)
            leaves[i].insert(leaves[i].end(), leaves[c].begin(), leaves[c].end());
        if (nd.kind == Kind::join_node) {
            for (std::size_t a = 0; a < nd.children.size(); ++a)
                for (std::size_t b = a + 1; b < nd.children.size(); ++b)
                    for (vertex_id u : leaves[nd.children[a]])
                        for (vertex_id w : leaves[nd.children[b]]) edges.emplace_back(u, w);
        }
    }
    return build_graph(edges, n);
}

namespace {

nlohmann::json cotree_node_json(const Cotree& t, int id) {
    const auto& nd = t.nodes[id];
    nlohmann::json j;
    if (nd.kind == Cotree::Kind::leaf) {
        j["kind"] = "leaf";
        j["vertex"] = nd.leaf;
        return j;
    }
    j["kind"] = nd.kind == Cotree::Kind::union_node ? "union" : "join";
    for (int c : nd.children) j["children"].push_back(cotree_node_json(t, c));
    return j;
}

}  // namespace

std::string Cotree::to_json() const {
    if (root < 0) return "null";
    return cotree_node_json(*this, root).dump();
}

namespace {

// Recursive union/complement-component decomposition working on id subsets.
struct Recognizer {
    const Graph& g;
    Cotree tree;
    std::optional<P4Witness> p4;
    std::vector<int> stamp;
    int epoch = 0;

    explicit Recognizer(const Graph& graph) : g(graph), stamp(graph.vertex_count(), 0) {}

    std::vector<std::vector<vertex_id>> components_of(const std::vector<vertex_id>& verts) {
        ++epoch;
        for (vertex_id v : verts) stamp[v] = epoch;
        std::vector<std::vector<vertex_id>> comps;
        std::vector<bool>& seen = seen_;
        seen.assign(g.vertex_count(), false);  // only entries of verts are touched
        std::vector<vertex_id> stack;
        for (vertex_id s : verts) {
            if (seen[s]) continue;
            comps.emplace_back();
            seen[s] = true;
            stack.assign(1, s);
            while (!stack.empty()) {
                vertex_id u = stack.back();
                stack.pop_back();
                comps.back().push_back(u);
                for (vertex_id w : g.neighbors(u))
                    if (stamp[w] == epoch && !seen[w]) {
                        seen[w] = true;
                        stack.push_back(w);
                    }
            }
            std::sort(comps.back().begin(), comps.back().end());
        }
        return comps;
    }

    std::vector<std::vector<vertex_id>> co_components_of(const std::vector<vertex_id>& verts) {
        std::vector<vertex_id> remaining = verts;
        std::vector<std::vector<vertex_id>> comps;
        std::vector<vertex_id> queue;
        while (!remaining.empty()) {
            vertex_id seed = remaining.front();
            remaining.erase(remaining.begin());
            comps.push_back({seed});
            queue.assign(1, seed);
            while (!queue.empty()) {
                vertex_id u = queue.back();
                queue.pop_back();
                ++epoch;
                for (vertex_id w : g.neighbors(u)) stamp[w] = epoch;
                std::vector<vertex_id> keep;
                for (vertex_id w : remaining) {
                    if (stamp[w] == epoch) {
                        keep.push_back(w);  // adjacent in g, not a complement neighbor
                    } else {
                        comps.back().push_back(w);
                        queue.push_back(w);
                    }
                }
                remaining.swap(keep);
            }
            std::sort(comps.back().begin(), comps.back().end());
        }
        return comps;
    }

    void find_p4(const std::vector<vertex_id>& verts) {
        ++epoch;
        for (vertex_id v : verts) stamp[v] = epoch;
        const int sub_epoch = epoch;
        for (vertex_id b : verts) {
            for (vertex_id c : g.neighbors(b)) {
                if (stamp[c] != sub_epoch) continue;
                std::vector<vertex_id> left, right;
                for (vertex_id a : g.neighbors(b))
                    if (stamp[a] == sub_epoch && a != c && !g.has_edge(a, c)) left.push_back(a);
                if (left.empty()) continue;
                for (vertex_id d : g.neighbors(c))
                    if (stamp[d] == sub_epoch && d != b && !g.has_edge(d, b)) right.push_back(d);
                for (vertex_id a : left)
                    for (vertex_id d : right)
                        if (a != d && !g.has_edge(a, d)) {
                            p4 = P4Witness{a, b, c, d};
                            return;
                        }
            }
        }
        throw std::logic_error("connected co-connected subgraph without an induced path of 4");
    }

    int leaf_min(int id) const { return leaf_min_[id]; }

    int add_node(Cotree::Kind kind, vertex_id leaf, std::vector<int> children) {
        Cotree::Node nd;
        nd.kind = kind;
        nd.leaf = leaf;
        if (!children.empty()) {
            std::sort(children.begin(), children.end(),
                      [&](int a, int b) { return leaf_min_[a] < leaf_min_[b]; });
            nd.children = std::move(children);
        }
        int id = static_cast<int>(tree.nodes.size());
        leaf_min_.push_back(nd.kind == Cotree::Kind::leaf
                                ? static_cast<int>(leaf)
                                : leaf_min_[nd.children.front()]);
        tree.nodes.push_back(std::move(nd));
        return id;
    }

    // returns the subtree root, or -1 once a P4 was found
    int build(const std::vector<vertex_id>& verts) {
        if (verts.size() == 1) return add_node(Cotree::Kind::leaf, verts.front(), {});
        auto comps = components_of(verts);
        if (comps.size() >= 2) {
            std::vector<int> children;
            for (const auto& c : comps) {
                int id = build(c);
                if (id < 0) return -1;
                children.push_back(id);
            }
            return add_node(Cotree::Kind::union_node, 0, std::move(children));
        }
        auto cocomps = co_components_of(verts);
        if (cocomps.size() >= 2) {
            std::vector<int> children;
            for (const auto& c : cocomps) {
                int id = build(c);
                if (id < 0) return -1;
                children.push_back(id);
            }
            return add_node(Cotree::Kind::join_node, 0, std::move(children));
        }
        find_p4(verts);
        return -1;
    }

private:
    std::vector<bool> seen_;
    std::vector<int> leaf_min_;
};

}  // namespace

RecognitionResult cograph_recognize(const Graph& g) {
    RecognitionResult res;
    if (g.vertex_count() == 0) {
        Cotree t;
        res.cotree = std::move(t);
        return res;
    }
    Recognizer rec(g);
    std::vector<vertex_id> all(g.vertex_count());
    std::iota(all.begin(), all.end(), 0);
    int root = rec.build(all);
    if (root < 0) {
        res.p4 = rec.p4;
        return res;
    }
    rec.tree.root = root;
    res.cotree = std::move(rec.tree);
    return res;
}

std::vector<vertex_id> cograph_deletion_set(const Graph& g) {
    std::vector<vertex_id> x;
    std::vector<vertex_id> alive(g.vertex_count());
    std::iota(alive.begin(), alive.end(), 0);
    for (;;) {
        auto [sub, remap] = induced_subgraph(g, alive);
        auto rec = cograph_recognize(sub);
        if (rec.cotree) break;
        std::vector<vertex_id> gone;
        for (vertex_id v : *rec.p4) {
            x.push_back(remap.new_to_old[v]);
            gone.push_back(remap.new_to_old[v]);
        }
        std::vector<vertex_id> next;
        for (vertex_id v : alive)
            if (std::find(gone.begin(), gone.end(), v) == gone.end()) next.push_back(v);
        alive = std::move(next);
    }
    std::sort(x.begin(), x.end());
    return x;
}

TypeAnalysis compute_type_vectors(const Graph& g, const std::vector<vertex_id>& x_set) {
    const vertex_id n = g.vertex_count();
    TypeAnalysis t;
    t.x = x_set;
    std::sort(t.x.begin(), t.x.end());
    const std::size_t k = t.x.size();
    std::vector<bool> in_x(n, false);
    for (vertex_id v : t.x) in_x[v] = true;

    t.comp_of.assign(n, -1);
    std::vector<vertex_id> stack;
    for (vertex_id s = 0; s < n; ++s) {
        if (in_x[s] || t.comp_of[s] >= 0) continue;
        int cid = static_cast<int>(t.comps.size());
        t.comps.emplace_back();
        t.comp_of[s] = cid;
        stack.assign(1, s);
        while (!stack.empty()) {
            vertex_id u = stack.back();
            stack.pop_back();
            t.comps[cid].push_back(u);
            for (vertex_id w : g.neighbors(u))
                if (!in_x[w] && t.comp_of[w] < 0) {
                    t.comp_of[w] = cid;
                    stack.push_back(w);
                }
        }
        std::sort(t.comps[cid].begin(), t.comps[cid].end());
    }

    t.vectors.assign(n, {});
    for (vertex_id v = 0; v < n; ++v)
        if (!in_x[v]) t.vectors[v].assign(k, kInfDist);

    // one restricted BFS per deletion vertex gives the i-th entry everywhere
    std::vector<dist_t> dist(n);
    std::vector<vertex_id> frontier, next;
    for (std::size_t i = 0; i < k; ++i) {
        std::fill(dist.begin(), dist.end(), kInfDist);
        vertex_id src = t.x[i];
        dist[src] = 0;
        frontier.assign(1, src);
        dist_t d = 0;
        while (!frontier.empty()) {
            ++d;
            next.clear();
            for (vertex_id u : frontier)
                for (vertex_id w : g.neighbors(u)) {
                    if (in_x[w] || dist[w] != kInfDist) continue;
                    dist[w] = d;
                    next.push_back(w);
                }
            frontier.swap(next);
        }
        for (vertex_id v = 0; v < n; ++v) {
            if (in_x[v] || dist[v] == kInfDist) continue;
            if (dist[v] > 3)
                throw std::invalid_argument("deletion set does not leave a cograph");
            t.vectors[v][i] = dist[v];
        }
    }

    t.type_of.assign(n, -1);
    std::map<std::vector<dist_t>, int> ids;
    for (vertex_id v = 0; v < n; ++v) {
        if (in_x[v]) continue;
        auto [it, fresh] = ids.emplace(t.vectors[v], static_cast<int>(t.distinct.size()));
        if (fresh) {
            t.distinct.push_back(t.vectors[v]);
            t.rep_of_type.push_back(v);
        }
        t.type_of[v] = it->second;
    }

    t.x_distances.resize(k);
    for (std::size_t i = 0; i < k; ++i) t.x_distances[i] = bfs_distances(g, t.x[i]).distances;
    return t;
}

namespace {

struct IsiDp {
    const Cotree& tree;
    const std::vector<int>& host_colors;
    const ColoredPattern& pattern;
    std::size_t k;
    std::uint32_t full;
    std::vector<std::uint32_t> adj;         // pattern adjacency masks
    std::vector<std::uint32_t> common_adj;  // intersection of adj over mask members
    std::vector<std::uint32_t> union_adj;
    std::vector<std::vector<char>> table;   // node -> mask -> feasible
    // back-pointers: per node, per combine step, per mask: prefix submask
    std::vector<std::vector<std::vector<std::uint32_t>>> back;

    IsiDp(const Cotree& t, const std::vector<int>& hc, const ColoredPattern& p)
        : tree(t), host_colors(hc), pattern(p), k(p.h.vertex_count()), full((1u << k) - 1) {
        adj.assign(k, 0);
        for (auto [u, v] : p.h.edges()) {
            adj[u] |= 1u << v;
            adj[v] |= 1u << u;
        }
        common_adj.assign(full + 1, full);
        union_adj.assign(full + 1, 0);
        for (std::uint32_t m = 1; m <= full; ++m) {
            std::uint32_t low = m & (~m + 1);
            int b = std::countr_zero(low);
            common_adj[m] = common_adj[m ^ low] & adj[b];
            union_adj[m] = union_adj[m ^ low] | adj[b];
        }
        table.resize(tree.nodes.size());
        back.resize(tree.nodes.size());
    }

    void run() {
        for (std::size_t id = 0; id < tree.nodes.size(); ++id) {
            const auto& nd = tree.nodes[id];
            auto& D = table[id];
            D.assign(full + 1, 0);
            if (nd.kind == Cotree::Kind::leaf) {
                D[0] = 1;
                for (std::size_t q = 0; q < k; ++q)
                    if (pattern.colors[q] == host_colors[nd.leaf]) D[1u << q] = 1;
                continue;
            }
            bool join = nd.kind == Cotree::Kind::join_node;
            std::vector<char> cur = table[nd.children[0]];
            back[id].resize(nd.children.size());
            for (std::size_t ci = 1; ci < nd.children.size(); ++ci) {
                const auto& child = table[nd.children[ci]];
                std::vector<char> nxt(full + 1, 0);
                auto& bp = back[id][ci];
                bp.assign(full + 1, 0);
                for (std::uint32_t m = 0; m <= full; ++m) {
                    // split m into prefix part s and child part m^s
                    for (std::uint32_t s = m;; s = (s - 1) & m) {
                        if (cur[s] && child[m ^ s]) {
                            std::uint32_t rest = m ^ s;
                            bool ok = join ? (rest & ~common_adj[s]) == 0 && (s & ~common_adj[rest]) == 0
                                           : (union_adj[s] & rest) == 0;
                            if (s == 0 || rest == 0) ok = true;
                            if (ok) {
                                nxt[m] = 1;
                                bp[m] = s;
                                break;
                            }
                        }
                        if (s == 0) break;
                    }
                }
                cur.swap(nxt);
            }
            D = std::move(cur);
        }
    }

    void reconstruct(int id, std::uint32_t mask, std::vector<vertex_id>& out) const {
        if (mask == 0) return;
        const auto& nd = tree.nodes[id];
        if (nd.kind == Cotree::Kind::leaf) {
            out[static_cast<std::size_t>(std::countr_zero(mask))] = nd.leaf;
            return;
        }
        std::uint32_t m = mask;
        for (std::size_t ci = nd.children.size(); ci-- > 1;) {
            std::uint32_t s = back[id][ci][m];
            reconstruct(nd.children[ci], m ^ s, out);
            m = s;
        }
        reconstruct(nd.children[0], m, out);
    }
};

}  // namespace

std::optional<std::vector<vertex_id>> colored_isi(const Graph& host, const Cotree& cotree,
                                                  const std::vector<int>& host_colors,
                                                  const ColoredPattern& pattern,
                                                  std::size_t pattern_cap) {
    const std::size_t k = pattern.h.vertex_count();
    if (k > pattern_cap)
        throw std::invalid_argument("pattern order " + std::to_string(k) + " exceeds the cap " +
                                    std::to_string(pattern_cap));
    if (k == 0) return std::vector<vertex_id>{};
    if (host.vertex_count() == 0) return std::nullopt;
    if (host_colors.size() != host.vertex_count())
        throw std::invalid_argument("host coloring size mismatch");

    IsiDp dp(cotree, host_colors, pattern);
    dp.run();
    if (!dp.table[dp.tree.root][dp.full]) return std::nullopt;
    std::vector<vertex_id> out(k, 0);
    dp.reconstruct(dp.tree.root, dp.full, out);
    return out;
}

namespace {

constexpr std::array<std::array<int, 2>, 6> kLabelPairs{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

int pair_index(int i, int j) {
    if (i > j) std::swap(i, j);
    for (int p = 0; p < 6; ++p)
        if (kLabelPairs[p][0] == i && kLabelPairs[p][1] == j) return p;
    throw std::logic_error("bad pair");
}

// delta of a six-tuple attached to four slots
dist_t delta_of_tuple(const std::array<dist_t, 6>& d) {
    dist_t s1 = d[pair_index(0, 1)] + d[pair_index(2, 3)];
    dist_t s2 = d[pair_index(0, 2)] + d[pair_index(1, 3)];
    dist_t s3 = d[pair_index(0, 3)] + d[pair_index(1, 2)];
    dist_t hi = std::max({s1, s2, s3}), lo = std::min({s1, s2, s3});
    return hi - (s1 + s2 + s3 - hi - lo);
}

// host graph for the subgraph query: g - x plus one dominating vertex per
// component; colors: 0 for the added component-vertices, 1 + type id else
struct IsiHost {
    Graph graph;
    Cotree cotree;
    std::vector<int> colors;
    std::vector<vertex_id> to_host;  // query-graph id -> original id (components only)
};

IsiHost build_isi_host(const Graph& g, const TypeAnalysis& types) {
    std::vector<bool> in_x(g.vertex_count(), false);
    for (vertex_id v : types.x) in_x[v] = true;
    IsiHost host;
    std::vector<vertex_id> keep;
    for (vertex_id v = 0; v < g.vertex_count(); ++v)
        if (!in_x[v]) keep.push_back(v);
    auto [stripped, remap] = induced_subgraph(g, keep);
    host.to_host = remap.new_to_old;

    const vertex_id base = stripped.vertex_count();
    auto edges = stripped.edges();
    for (std::size_t c = 0; c < types.comps.size(); ++c)
        for (vertex_id v : types.comps[c])
            edges.emplace_back(remap.old_to_new[v], base + static_cast<vertex_id>(c));
    host.graph = build_graph(edges, base + static_cast<vertex_id>(types.comps.size()));
    host.colors.assign(host.graph.vertex_count(), 0);
    for (vertex_id v = 0; v < base; ++v)
        host.colors[v] = 1 + types.type_of[host.to_host[v]];
    auto rec = cograph_recognize(host.graph);
    if (!rec.cotree) throw std::logic_error("component host is not a cograph");
    host.cotree = std::move(*rec.cotree);
    return host;
}

// pattern: one color-0 vertex per part plus the parts' type vertices;
// in-part edges where the required distance is one
ColoredPattern build_pattern(const std::vector<std::vector<int>>& parts,
                             const std::vector<int>& slot_type,
                             const std::array<std::array<dist_t, 4>, 4>& dist) {
    ColoredPattern pat;
    std::vector<std::pair<vertex_id, vertex_id>> edges;
    vertex_id next = 0;
    std::vector<vertex_id> comp_vertex(parts.size());
    std::vector<int> colors;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        comp_vertex[p] = next++;
        colors.push_back(0);
    }
    for (std::size_t p = 0; p < parts.size(); ++p) {
        std::vector<vertex_id> members;
        for (int slot : parts[p]) {
            vertex_id mv = next++;
            colors.push_back(1 + slot_type[slot]);
            edges.emplace_back(comp_vertex[p], mv);
            members.push_back(mv);
        }
        for (std::size_t i = 0; i < parts[p].size(); ++i)
            for (std::size_t j = i + 1; j < parts[p].size(); ++j)
                if (dist[parts[p][i]][parts[p][j]] == 1) edges.emplace_back(members[i], members[j]);
    }
    pat.h = build_graph(edges, next);
    pat.colors = std::move(colors);
    return pat;
}

std::vector<std::vector<std::vector<int>>> set_partitions(int m) {
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<std::vector<int>> cur;
    auto rec = [&](auto&& self, int i) -> void {
        if (i == m) {
            out.push_back(cur);
            return;
        }
        // recursion grows cur at the back; plain indices stay valid
        std::size_t existing = cur.size();
        for (std::size_t b = 0; b < existing; ++b) {
            cur[b].push_back(i);
            self(self, i + 1);
            cur[b].pop_back();
        }
        cur.push_back({i});
        self(self, i + 1);
        cur.pop_back();
    };
    if (m == 0)
        out.push_back({});
    else
        rec(rec, 0);
    return out;
}

}  // namespace

std::optional<std::array<vertex_id, 4>> distance_constrained_4tuple(const Graph& g,
                                                                    const TypeAnalysis& types,
                                                                    const DistanceConstraints& dc) {
    const std::size_t k = types.x.size();
    const dist_t max_allowed = static_cast<dist_t>(4 * k + 2);
    for (dist_t v : dc.values)
        if (v < 1 || v > max_allowed) return std::nullopt;

    auto need = [&](int i, int j) { return dc.values[pair_index(i, j)]; };
    const std::size_t tau = types.distinct.size();

    // true distance between two vertices of different components, via any
    // deletion vertex; type-determined, so representatives suffice
    auto cross_type = [&](int t1, int t2) {
        dist_t best = kInfDist;
        for (std::size_t i = 0; i < k; ++i) {
            dist_t a = types.x_distances[i][types.rep_of_type[t1]];
            dist_t b = types.x_distances[i][types.rep_of_type[t2]];
            if (a != kInfDist && b != kInfDist) best = std::min(best, a + b);
        }
        return best;
    };

    std::optional<IsiHost> host;  // built lazily

    // assignment[l]: either an index into types.x (x_pick) or a type (t_pick)
    std::array<int, 4> x_pick{-1, -1, -1, -1};
    std::array<int, 4> t_pick{-1, -1, -1, -1};

    std::optional<std::array<vertex_id, 4>> found;

    auto check_partition = [&](const std::vector<int>& free_labels,
                               const std::vector<std::vector<int>>& parts) -> bool {
        // cross-part pairs are fixed by the types; in-part pairs must be 1 or 2
        for (std::size_t p = 0; p < parts.size(); ++p)
            for (std::size_t q = p + 1; q < parts.size(); ++q)
                for (int l1 : parts[p])
                    for (int l2 : parts[q])
                        if (cross_type(t_pick[l1], t_pick[l2]) != need(l1, l2)) return false;
        for (const auto& part : parts)
            for (std::size_t i = 0; i < part.size(); ++i)
                for (std::size_t j = i + 1; j < part.size(); ++j) {
                    dist_t d = need(part[i], part[j]);
                    if (d != 1 && d != 2) return false;
                }
        if (free_labels.empty()) {
            found = std::array<vertex_id, 4>{};
            for (int l = 0; l < 4; ++l) (*found)[l] = types.x[x_pick[l]];
            return true;
        }
        if (!host) host = build_isi_host(g, types);

        std::array<std::array<dist_t, 4>, 4> dist{};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) dist[i][j] = i == j ? 0 : need(i, j);
        std::vector<int> slot_type(4, -1);
        for (int l : free_labels) slot_type[l] = t_pick[l];
        ColoredPattern pat = build_pattern(parts, slot_type, dist);
        auto wit = colored_isi(host->graph, host->cotree, host->colors, pat);
        if (!wit) return false;

        found = std::array<vertex_id, 4>{};
        for (int l = 0; l < 4; ++l)
            if (x_pick[l] >= 0) (*found)[l] = types.x[x_pick[l]];
        vertex_id pv = static_cast<vertex_id>(parts.size());  // type vertices follow comp vertices
        for (const auto& part : parts)
            for (int slot : part) (*found)[slot] = host->to_host[(*wit)[pv++]];
        return true;
    };

    auto try_types = [&](const std::vector<int>& free_labels) -> bool {
        // assign a type to every free label, checking x-to-type distances
        auto rec = [&](auto&& self, std::size_t idx) -> bool {
            if (idx == free_labels.size()) {
                for (const auto& parts : set_partitions(static_cast<int>(free_labels.size()))) {
                    std::vector<std::vector<int>> blocks;
                    for (const auto& b : parts) {
                        std::vector<int> blk;
                        for (int i : b) blk.push_back(free_labels[i]);
                        blocks.push_back(blk);
                    }
                    if (check_partition(free_labels, blocks)) return true;
                }
                return false;
            }
            int l = free_labels[idx];
            for (std::size_t t = 0; t < tau; ++t) {
                bool ok = true;
                for (int other = 0; other < 4 && ok; ++other) {
                    if (x_pick[other] >= 0)
                        ok = types.x_distances[x_pick[other]][types.rep_of_type[t]] == need(l, other);
                }
                if (!ok) continue;
                t_pick[l] = static_cast<int>(t);
                if (self(self, idx + 1)) return true;
                t_pick[l] = -1;
            }
            return false;
        };
        return rec(rec, 0);
    };

    // which labels sit on deletion vertices, and where
    auto rec_x = [&](auto&& self, int l, std::vector<int>& free_labels) -> bool {
        if (l == 4) return try_types(free_labels);
        // option: label l is a free (component) label
        free_labels.push_back(l);
        if (self(self, l + 1, free_labels)) return true;
        free_labels.pop_back();
        // option: label l maps to a deletion vertex
        for (std::size_t i = 0; i < k; ++i) {
            bool used = false;
            for (int other = 0; other < l; ++other) used |= x_pick[other] == static_cast<int>(i);
            if (used) continue;
            bool ok = true;
            for (int other = 0; other < l && ok; ++other)
                if (x_pick[other] >= 0)
                    ok = types.x_distances[i][types.x[x_pick[other]]] == need(l, other);
            if (!ok) continue;
            x_pick[l] = static_cast<int>(i);
            if (self(self, l + 1, free_labels)) return true;
            x_pick[l] = -1;
        }
        return false;
    };

    std::vector<int> free_labels;
    rec_x(rec_x, 0, free_labels);
    return found;
}

namespace {

struct CompPairTables {
    // per component: which types occur; adjacency structure per type pair
    std::size_t comp_count = 0;
    std::size_t words = 0;
    std::vector<std::vector<std::uint64_t>> single;        // type -> comp bitmask
    std::map<std::tuple<int, int, int>, std::vector<std::uint64_t>> pair_masks;  // (t1,t2,dist1?) -> mask

    const std::vector<std::uint64_t>* pair_mask(int t1, int t2, bool adjacent) const {
        if (t1 > t2) std::swap(t1, t2);
        auto it = pair_masks.find({t1, t2, adjacent ? 1 : 0});
        return it == pair_masks.end() ? nullptr : &it->second;
    }
};

CompPairTables build_pair_tables(const Graph& g, const TypeAnalysis& types) {
    CompPairTables t;
    t.comp_count = types.comps.size();
    t.words = (t.comp_count + 63) / 64;
    t.single.assign(types.distinct.size(), std::vector<std::uint64_t>(t.words, 0));

    auto set_bit = [&](std::vector<std::uint64_t>& mask, std::size_t c) {
        mask[c / 64] |= 1ull << (c % 64);
    };
    for (std::size_t c = 0; c < types.comps.size(); ++c) {
        std::map<int, std::size_t> count;
        for (vertex_id v : types.comps[c]) count[types.type_of[v]] += 1;
        for (auto [tp, cnt] : count) set_bit(t.single[tp], c);
        // adjacent pairs present in this component
        std::map<std::pair<int, int>, std::size_t> adj_count;
        for (vertex_id v : types.comps[c])
            for (vertex_id w : g.neighbors(v)) {
                if (w < v || types.comp_of[w] != static_cast<int>(c)) continue;
                int t1 = types.type_of[v], t2 = types.type_of[w];
                if (t1 > t2) std::swap(t1, t2);
                adj_count[{t1, t2}] += 1;
                auto key = std::make_tuple(t1, t2, 1);
                auto [it, fresh] = t.pair_masks.try_emplace(key, std::vector<std::uint64_t>(t.words, 0));
                set_bit(it->second, c);
            }
        // a non-adjacent pair exists iff the pair count is below the maximum
        for (auto [t1, c1] : count)
            for (auto [t2, c2] : count) {
                if (t1 > t2) continue;
                std::size_t pairs = t1 == t2 ? c1 * (c1 - 1) / 2 : c1 * c2;
                if (pairs == 0) continue;
                std::size_t adjacent = 0;
                auto it = adj_count.find({t1, t2});
                if (it != adj_count.end()) adjacent = it->second;
                if (adjacent < pairs) {
                    auto key = std::make_tuple(t1, t2, 0);
                    auto [mit, fresh] =
                        t.pair_masks.try_emplace(key, std::vector<std::uint64_t>(t.words, 0));
                    set_bit(mit->second, c);
                }
            }
    }
    return t;
}

bool hall_sdr(const std::vector<const std::vector<std::uint64_t>*>& sets, std::size_t words) {
    const std::size_t m = sets.size();
    for (std::uint32_t sel = 1; sel < (1u << m); ++sel) {
        std::size_t members = std::popcount(sel);
        std::size_t covered = 0;
        for (std::size_t w = 0; w < words; ++w) {
            std::uint64_t u = 0;
            for (std::size_t i = 0; i < m; ++i)
                if (sel & (1u << i)) u |= (*sets[i])[w];
            covered += std::popcount(u);
        }
        if (covered < members) return false;
    }
    return true;
}

// One connected component's shape sweep: maximize delta over realizable
// six-tuples of quadruple distances.
struct ComponentDriver {
    const Graph& sub;
    const TypeAnalysis& types;
    CographStats& stats;
    CompPairTables tables;
    std::optional<IsiHost> isi_host;
    std::map<std::string, bool> isi_cache;

    dist_t best_delta = -1;
    DistanceConstraints best_tuple;

    std::vector<std::vector<dist_t>> xx;      // deletion-vertex distances
    std::vector<std::vector<dist_t>> xt;      // deletion vertex x type
    std::vector<std::vector<dist_t>> tt;      // cross-component type pair distance

    ComponentDriver(const Graph& s, const TypeAnalysis& ty, CographStats& st)
        : sub(s), types(ty), stats(st), tables(build_pair_tables(s, ty)) {
        const std::size_t k = types.x.size(), tau = types.distinct.size();
        xx.assign(k, std::vector<dist_t>(k, 0));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) xx[i][j] = types.x_distances[i][types.x[j]];
        xt.assign(k, std::vector<dist_t>(tau, 0));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t t = 0; t < tau; ++t)
                xt[i][t] = types.x_distances[i][types.rep_of_type[t]];
        tt.assign(tau, std::vector<dist_t>(tau, kInfDist));
        for (std::size_t a = 0; a < tau; ++a)
            for (std::size_t b = a; b < tau; ++b) {
                dist_t best = kInfDist;
                for (std::size_t i = 0; i < k; ++i)
                    if (xt[i][a] != kInfDist && xt[i][b] != kInfDist)
                        best = std::min(best, xt[i][a] + xt[i][b]);
                tt[a][b] = tt[b][a] = best;
            }
    }

    bool parts_realizable(const std::vector<std::vector<int>>& parts,
                          const std::vector<int>& slot_type,
                          const std::array<std::array<dist_t, 4>, 4>& dist) {
        bool big = false;
        for (const auto& p : parts) big |= p.size() >= 3;
        if (!big) {
            std::vector<const std::vector<std::uint64_t>*> sets;
            for (const auto& p : parts) {
                if (p.size() == 1) {
                    sets.push_back(&tables.single[slot_type[p[0]]]);
                } else {
                    const auto* m = tables.pair_mask(slot_type[p[0]], slot_type[p[1]],
                                                     dist[p[0]][p[1]] == 1);
                    if (!m) return false;
                    sets.push_back(m);
                }
            }
            return hall_sdr(sets, tables.words);
        }
        // some part needs three or more vertices: full subgraph query
        ColoredPattern pat = build_pattern(parts, slot_type, dist);
        std::ostringstream key;
        for (const auto& v : pat.colors) key << v << ',';
        key << '|';
        for (auto [u, v] : pat.h.edges()) key << u << '-' << v << ',';
        auto it = isi_cache.find(key.str());
        if (it != isi_cache.end()) return it->second;
        if (!isi_host) isi_host = build_isi_host(sub, types);
        stats.isi_calls += 1;
        bool ok = colored_isi(isi_host->graph, isi_host->cotree, isi_host->colors, pat).has_value();
        isi_cache.emplace(key.str(), ok);
        return ok;
    }

    // slots: x-slot indices into types.x, then type slots
    void examine(const std::vector<int>& x_slots, const std::vector<int>& type_slots,
                 const std::vector<std::vector<int>>& parts) {
        stats.shapes_examined += 1;
        const int nx = static_cast<int>(x_slots.size());
        std::array<std::array<dist_t, 4>, 4> dist{};
        std::vector<int> slot_type(4, -1);
        for (std::size_t i = 0; i < type_slots.size(); ++i) slot_type[nx + i] = type_slots[i];

        std::vector<std::array<int, 2>> free_pairs;
        dist_t min_fixed = kInfDist;
        // fixed entries: x-x, x-type, cross-part type pairs
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) {
                dist_t d;
                if (i < nx && j < nx)
                    d = xx[x_slots[i]][x_slots[j]];
                else if (i < nx)
                    d = xt[x_slots[i]][slot_type[j]];
                else {
                    // same part: free in {1,2}; different parts: determined
                    int pi = -1, pj = -1;
                    for (std::size_t p = 0; p < parts.size(); ++p)
                        for (int s : parts[p]) {
                            if (s == i) pi = static_cast<int>(p);
                            if (s == j) pj = static_cast<int>(p);
                        }
                    if (pi == pj) {
                        free_pairs.push_back({i, j});
                        continue;
                    }
                    d = tt[slot_type[i]][slot_type[j]];
                }
                if (d == kInfDist || d == 0) return;  // unusable shape
                dist[i][j] = dist[j][i] = d;
                min_fixed = std::min(min_fixed, d);
            }
        dist_t cap = 2 * std::min(min_fixed, free_pairs.empty() ? kInfDist / 2 : dist_t(2));
        if (cap <= best_delta) return;

        const std::size_t combos = 1ull << free_pairs.size();
        for (std::size_t c = 0; c < combos; ++c) {
            for (std::size_t b = 0; b < free_pairs.size(); ++b) {
                dist_t d = (c >> b) & 1 ? 2 : 1;
                dist[free_pairs[b][0]][free_pairs[b][1]] = d;
                dist[free_pairs[b][1]][free_pairs[b][0]] = d;
            }
            std::array<dist_t, 6> tuple{};
            for (int p = 0; p < 6; ++p) tuple[p] = dist[kLabelPairs[p][0]][kLabelPairs[p][1]];
            dist_t delta = delta_of_tuple(tuple);
            if (delta <= best_delta) continue;
            if (!parts.empty() && !parts_realizable(parts, slot_type, dist)) continue;
            best_delta = delta;
            best_tuple.values = tuple;
        }
    }

    void run() {
        const std::size_t k = types.x.size(), tau = types.distinct.size();
        std::vector<int> x_slots;
        // choose up to four deletion vertices, then a type multiset for the rest
        auto rec_types = [&](auto&& self, std::vector<int>& type_slots, std::size_t min_type) -> void {
            if (x_slots.size() + type_slots.size() == 4) {
                for (const auto& pidx : set_partitions(static_cast<int>(type_slots.size()))) {
                    std::vector<std::vector<int>> parts;
                    for (const auto& b : pidx) {
                        std::vector<int> blk;
                        for (int i : b) blk.push_back(static_cast<int>(x_slots.size()) + i);
                        parts.push_back(blk);
                    }
                    examine(x_slots, type_slots, parts);
                }
                return;
            }
            for (std::size_t t = min_type; t < tau; ++t) {
                type_slots.push_back(static_cast<int>(t));
                self(self, type_slots, t);
                type_slots.pop_back();
            }
        };
        auto rec_x = [&](auto&& self, std::size_t min_x) -> void {
            if (x_slots.size() <= 4) {
                std::vector<int> type_slots;
                rec_types(rec_types, type_slots, 0);
            }
            if (x_slots.size() == 4) return;
            for (std::size_t i = min_x; i < k; ++i) {
                x_slots.push_back(static_cast<int>(i));
                self(self, i + 1);
                x_slots.pop_back();
            }
        };
        rec_x(rec_x, 0);
    }
};

}  // namespace

HyperbolicityResult hyperbolicity_cograph_distance(const Graph& g, CographStats* stats) {
    CographStats local;
    CographStats& s = stats ? *stats : local;
    HyperbolicityResult res;
    dist_t best = -1;
    std::optional<Witness> witness;

    for (const auto& comp : connected_components(g)) {
        if (comp.size() < 4) continue;
        auto [sub, remap] = induced_subgraph(g, comp);
        auto x = cograph_deletion_set(sub);
        s.deletion_set_size += x.size();
        auto types = compute_type_vectors(sub, x);
        s.type_count = std::max(s.type_count, types.distinct.size());

        ComponentDriver driver(sub, types, s);
        driver.run();
        if (driver.best_delta > best) {
            auto wit = distance_constrained_4tuple(sub, types, driver.best_tuple);
            if (!wit) throw std::logic_error("winning tuple lost its witness");
            best = driver.best_delta;
            Witness w;
            for (int l = 0; l < 4; ++l) w.vertices[l] = remap.new_to_old[(*wit)[l]];
            std::sort(w.vertices.begin(), w.vertices.end());
            DistanceRow rows[3] = {bfs_distances(g, w.vertices[0]), bfs_distances(g, w.vertices[1]),
                                   bfs_distances(g, w.vertices[2])};
            w.sums.d1 = rows[0].distances[w.vertices[1]] + rows[2].distances[w.vertices[3]];
            w.sums.d2 = rows[0].distances[w.vertices[2]] + rows[1].distances[w.vertices[3]];
            w.sums.d3 = rows[0].distances[w.vertices[3]] + rows[1].distances[w.vertices[2]];
            witness = std::move(w);
        }
    }
    res.delta = best < 0 ? 0 : best;
    res.witness = std::move(witness);
    return res;
}

}  // namespace hyp
