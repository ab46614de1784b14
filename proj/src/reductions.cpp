#include "hyp/reductions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace hyp {

std::string ReductionTrace::to_json() const {
    nlohmann::json j;
    j["rule"] = rule;
    j["removed"] = removed;
    j["steps"] = steps;
    return j.dump();
}

ReducedGraph rule1_prune_degree_one(const Graph& g) {
    const vertex_id n = g.vertex_count();
    std::vector<std::uint32_t> deg(n);
    for (vertex_id v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::vector<bool> removed(n, false);
    std::priority_queue<vertex_id, std::vector<vertex_id>, std::greater<>> work;
    for (vertex_id v = 0; v < n; ++v)
        if (deg[v] == 1) work.push(v);

    ReductionTrace trace;
    trace.rule = 1;
    vertex_id remaining = n;
    while (remaining > 4 && !work.empty()) {
        vertex_id v = work.top();
        work.pop();
        if (removed[v] || deg[v] != 1) continue;
        removed[v] = true;
        --remaining;
        trace.removed.push_back(v);
        trace.steps.push_back("rule1: removed degree-one vertex " + std::to_string(v));
        for (vertex_id w : g.neighbors(v)) {
            if (removed[w]) continue;
            if (--deg[w] == 1) work.push(w);
        }
    }
    auto [reduced, remap] = delete_vertices(g, trace.removed);
    return {std::move(reduced), std::move(remap), std::move(trace)};
}

std::vector<std::vector<vertex_id>> twin_partition(const Graph& g) {
    const vertex_id n = g.vertex_count();
    std::vector<std::vector<vertex_id>> classes;
    if (n == 0) return classes;

    // Partition refinement over one element array with [begin,end) class ranges.
    std::vector<vertex_id> elems(n);
    std::iota(elems.begin(), elems.end(), 0);
    std::vector<vertex_id> pos(n);
    std::iota(pos.begin(), pos.end(), 0);
    std::vector<std::uint32_t> cls(n, 0);
    std::vector<std::size_t> begin{0}, end{n};
    std::vector<std::size_t> moved_count(1, 0);

    std::vector<std::uint32_t> touched;
    for (vertex_id pivot = 0; pivot < n; ++pivot) {
        touched.clear();
        for (vertex_id u : g.neighbors(pivot)) {
            std::uint32_t c = cls[u];
            if (moved_count[c] == 0) touched.push_back(c);
            // swap u to the front segment of its class
            std::size_t target = begin[c] + moved_count[c];
            vertex_id other = elems[target];
            std::swap(elems[pos[u]], elems[target]);
            std::swap(pos[u], pos[other]);
            ++moved_count[c];
        }
        for (std::uint32_t c : touched) {
            std::size_t cnt = moved_count[c];
            moved_count[c] = 0;
            if (begin[c] + cnt == end[c]) continue;  // whole class adjacent to pivot
            // split off the adjacent prefix as a new class
            std::uint32_t nc = static_cast<std::uint32_t>(begin.size());
            begin.push_back(begin[c]);
            end.push_back(begin[c] + cnt);
            moved_count.push_back(0);
            for (std::size_t i = begin[c]; i < begin[c] + cnt; ++i) cls[elems[i]] = nc;
            begin[c] += cnt;
        }
    }

    std::map<vertex_id, std::vector<vertex_id>> by_min;
    for (std::size_t c = 0; c < begin.size(); ++c) {
        if (begin[c] == end[c]) continue;
        std::vector<vertex_id> members(elems.begin() + begin[c], elems.begin() + end[c]);
        std::sort(members.begin(), members.end());
        by_min[members.front()] = std::move(members);
    }
    for (auto& [k, v] : by_min) classes.push_back(std::move(v));
    return classes;
}

ReducedGraph rule3_twin_reduce(const Graph& g) {
    ReductionTrace trace;
    trace.rule = 3;
    Graph cur = g;
    std::vector<vertex_id> cur_to_orig(g.vertex_count());
    std::iota(cur_to_orig.begin(), cur_to_orig.end(), 0);

    // Deleting twins can merge the neighborhoods of the survivors' peers,
    // so iterate until no class exceeds four.
    for (;;) {
        std::vector<vertex_id> drop;
        for (const auto& cl : twin_partition(cur)) {
            if (cl.size() <= 4) continue;
            std::ostringstream step;
            step << "rule3: class {" << cur_to_orig[cl[0]] << ",...} of size " << cl.size()
                 << " truncated to 4";
            trace.steps.push_back(step.str());
            for (std::size_t i = 4; i < cl.size(); ++i) drop.push_back(cl[i]);
        }
        if (drop.empty()) break;
        std::sort(drop.begin(), drop.end());
        for (vertex_id v : drop) trace.removed.push_back(cur_to_orig[v]);
        auto [next, remap] = delete_vertices(cur, drop);
        std::vector<vertex_id> next_to_orig(next.vertex_count());
        for (vertex_id v = 0; v < next.vertex_count(); ++v)
            next_to_orig[v] = cur_to_orig[remap.new_to_old[v]];
        cur = std::move(next);
        cur_to_orig = std::move(next_to_orig);
    }
    std::sort(trace.removed.begin(), trace.removed.end());
    auto [reduced, remap] = delete_vertices(g, trace.removed);
    return {std::move(reduced), std::move(remap), std::move(trace)};
}

namespace {

// Walk from `from` along its edge to `via` through degree-two vertices.
// Returns the vertex sequence; it ends at the first vertex of degree != 2
// (which may be `from` again when the chain closes a cycle on it).
std::vector<vertex_id> walk_chain(const Graph& g, vertex_id from, vertex_id via) {
    std::vector<vertex_id> seq{from, via};
    vertex_id prev = from, cur = via;
    while (g.degree(cur) == 2 && cur != from) {
        auto nb = g.neighbors(cur);
        vertex_id next = (nb[0] == prev) ? nb[1] : nb[0];
        seq.push_back(next);
        prev = cur;
        cur = next;
    }
    return seq;
}

MaximalPath canonical_path(std::vector<vertex_id> seq) {
    if (seq.back() < seq.front()) std::reverse(seq.begin(), seq.end());
    return MaximalPath{std::move(seq)};
}

void require_no_isolated_cycles(const Graph& g) {
    for (const auto& comp : connected_components(g)) {
        bool all_two = comp.size() >= 3;
        for (vertex_id v : comp)
            if (g.degree(v) != 2) {
                all_two = false;
                break;
            }
        if (all_two)
            throw std::invalid_argument("isolated cycle component of length " +
                                        std::to_string(comp.size()) + " at vertex " +
                                        std::to_string(comp.front()));
    }
}

// Maximal paths whose walks start at branching vertices. Skips isolated
// cycles silently; callers that must reject them check separately.
std::vector<MaximalPath> collect_paths_from_branching(const Graph& g) {
    std::set<std::vector<vertex_id>> seen;
    std::vector<MaximalPath> out;
    for (vertex_id v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) < 3) continue;
        for (vertex_id w : g.neighbors(v)) {
            auto seq = walk_chain(g, v, w);
            if (g.degree(seq.back()) == 1) continue;  // dangles; not a maximal path
            if (seq.back() == v) seq.pop_back();      // chain closed back on v
            MaximalPath p = canonical_path(std::move(seq));
            if (seen.insert(p.vertices).second) out.push_back(std::move(p));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const MaximalPath& a, const MaximalPath& b) { return a.vertices < b.vertices; });
    return out;
}

}  // namespace

std::vector<MaximalPath> enumerate_maximal_paths(const Graph& g) {
    for (vertex_id v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 1)
            throw std::invalid_argument("graph has a degree-one vertex (" + std::to_string(v) +
                                        "); apply rule 1 first");
    require_no_isolated_cycles(g);
    return collect_paths_from_branching(g);
}

PathCover greedy_path_cover(const Graph& g) {
    for (vertex_id v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 1 || g.degree(v) == 0)
            throw std::invalid_argument("greedy_path_cover requires minimum degree two");
    require_no_isolated_cycles(g);

    const vertex_id n = g.vertex_count();
    std::vector<bool> covered(n, false);
    PathCover cover;
    auto take = [&](std::vector<vertex_id> seq) {
        for (vertex_id u : seq) covered[u] = true;
        cover.paths.push_back(canonical_path(std::move(seq)));
    };

    // Phase 1: every degree-two vertex lies on a unique chain; walk it out
    // to the branching vertices on both sides.
    for (vertex_id v = 0; v < n; ++v) {
        if (covered[v] || g.degree(v) != 2) continue;
        auto nb = g.neighbors(v);
        auto left = walk_chain(g, v, nb[0]);
        auto right = walk_chain(g, v, nb[1]);
        std::vector<vertex_id> seq(left.rbegin(), left.rend());  // ends at v
        seq.insert(seq.end(), right.begin() + 1, right.end());
        if (left.back() == right.back()) seq.pop_back();  // chain closes a cycle on one branch vertex
        take(std::move(seq));
    }

    // Phase 2: cover leftover branching vertices; prefer pairing two
    // uncovered ones with a single edge.
    for (vertex_id v = 0; v < n; ++v) {
        if (covered[v] || g.degree(v) < 3) continue;
        vertex_id via = g.neighbors(v)[0];
        for (vertex_id w : g.neighbors(v))
            if (!covered[w] && g.degree(w) >= 3) {
                via = w;
                break;
            }
        auto seq = walk_chain(g, v, via);
        if (seq.back() == v) seq.pop_back();  // chain closed a cycle on v
        take(std::move(seq));
    }
    return cover;
}

ReducedGraph rule2_prune_parallel_paths(const Graph& g) {
    ReductionTrace trace;
    trace.rule = 2;

    auto paths = collect_paths_from_branching(g);
    std::map<std::pair<vertex_id, vertex_id>, std::vector<const MaximalPath*>> by_pair;
    for (const auto& p : paths) {
        if (g.degree(p.first()) < 3 || g.degree(p.last()) < 3) continue;
        by_pair[{p.first(), p.last()}].push_back(&p);
    }

    auto inner_of = [](const MaximalPath& p) {
        return std::vector<vertex_id>(p.vertices.begin() + 1, p.vertices.end() - 1);
    };

    std::vector<vertex_id> drop;
    for (auto& [pair, list] : by_pair) {
        if (list.size() <= 1) continue;
        std::set<const MaximalPath*> keep;

        auto lex_less = [&](const MaximalPath* a, const MaximalPath* b) {
            return a->vertices < b->vertices;
        };
        // the shortest path (ties: lexicographically smaller inner sequence)
        keep.insert(*std::min_element(list.begin(), list.end(),
                                      [&](const MaximalPath* a, const MaximalPath* b) {
                                          if (a->length() != b->length())
                                              return a->length() < b->length();
                                          return lex_less(a, b);
                                      }));
        // four longest of each parity (ties: lexicographically smaller first)
        for (int parity = 0; parity <= 1; ++parity) {
            std::vector<const MaximalPath*> side;
            for (const auto* p : list)
                if (static_cast<int>(p->length() % 2) == parity) side.push_back(p);
            std::sort(side.begin(), side.end(), [&](const MaximalPath* a, const MaximalPath* b) {
                if (a->length() != b->length()) return a->length() > b->length();
                return lex_less(a, b);
            });
            for (std::size_t i = 0; i < side.size() && i < 4; ++i) keep.insert(side[i]);
        }
        std::size_t removed_here = 0;
        for (const auto* p : list)
            if (!keep.count(p)) {
                for (vertex_id u : inner_of(*p)) drop.push_back(u);
                ++removed_here;
            }
        if (removed_here) {
            std::ostringstream step;
            step << "rule2: pair (" << pair.first << "," << pair.second << ") had " << list.size()
                 << " parallel paths; removed " << removed_here;
            trace.steps.push_back(step.str());
        }
    }

    std::sort(drop.begin(), drop.end());
    drop.erase(std::unique(drop.begin(), drop.end()), drop.end());
    trace.removed = drop;
    auto [reduced, remap] = delete_vertices(g, drop);
    return {std::move(reduced), std::move(remap), std::move(trace)};
}

std::vector<std::pair<vertex_id, vertex_id>> feedback_edge_set(const Graph& g) {
    const vertex_id n = g.vertex_count();
    std::vector<bool> visited(n, false);
    std::set<std::pair<vertex_id, vertex_id>> tree;
    std::vector<vertex_id> stack;
    for (vertex_id s = 0; s < n; ++s) {
        if (visited[s]) continue;
        visited[s] = true;
        stack.assign(1, s);
        while (!stack.empty()) {
            vertex_id u = stack.back();
            stack.pop_back();
            for (vertex_id w : g.neighbors(u))
                if (!visited[w]) {
                    visited[w] = true;
                    tree.insert({std::min(u, w), std::max(u, w)});
                    stack.push_back(w);
                }
        }
    }
    std::vector<std::pair<vertex_id, vertex_id>> feedback;
    for (auto e : g.edges())
        if (!tree.count(e)) feedback.push_back(e);
    return feedback;
}

std::vector<std::vector<vertex_id>> isolated_cycles(const Graph& g) {
    std::vector<std::vector<vertex_id>> cycles;
    for (const auto& comp : connected_components(g)) {
        if (comp.size() < 3) continue;
        bool all_two = true;
        for (vertex_id v : comp)
            if (g.degree(v) != 2) {
                all_two = false;
                break;
            }
        if (!all_two) continue;
        // walk in cycle order from the smallest id toward its smaller neighbor
        std::vector<vertex_id> order;
        vertex_id start = comp.front();
        vertex_id prev = start, cur = std::min(g.neighbors(start)[0], g.neighbors(start)[1]);
        order.push_back(start);
        while (cur != start) {
            order.push_back(cur);
            auto nb = g.neighbors(cur);
            vertex_id next = (nb[0] == prev) ? nb[1] : nb[0];
            prev = cur;
            cur = next;
        }
        cycles.push_back(std::move(order));
    }
    return cycles;
}

}  // namespace hyp
