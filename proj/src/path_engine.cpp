#include "hyp/path_engine.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace hyp {

EndpointDistanceTable endpoint_distance_table(const Graph& g, const PathCover& cover) {
    EndpointDistanceTable t;
    for (const auto& p : cover.paths)
        for (vertex_id e : {p.first(), p.last()})
            if (!t.index.count(e)) {
                t.index.emplace(e, t.endpoints.size());
                t.endpoints.push_back(e);
            }
    t.dist.resize(t.endpoints.size());
    for (std::size_t i = 0; i < t.endpoints.size(); ++i) {
        auto row = bfs_distances(g, t.endpoints[i]);
        t.dist[i].resize(t.endpoints.size());
        for (std::size_t j = 0; j < t.endpoints.size(); ++j) t.dist[i][j] = row.distances[t.endpoints[j]];
    }
    return t;
}

namespace {

constexpr std::array<std::array<int, 2>, 6> kPairs{{{0, 1}, {2, 3}, {0, 2}, {1, 3}, {0, 3}, {1, 2}}};
constexpr char kLabelName[4] = {'a', 'b', 'c', 'd'};

// Variable layout and side expressions for one assignment.
struct AssignmentFrame {
    const PathCover& cover;
    const EndpointDistanceTable& table;
    std::array<std::size_t, 4> path_of;
    std::vector<IlpVar> vars;
    std::vector<IlpRow> base_rows;                  // chain equalities
    std::array<LinExpr, 4> side_front, side_back;   // per label
    std::array<std::vector<int>, 4> group_of;       // label -> ordered labels of its path group
    std::array<std::size_t, 4> order_pos{};         // label -> position in its group
    std::array<std::size_t, 4> gap_base{};          // label -> first gap var of its group
    // per-pair candidate terms for the distance minimum
    std::array<std::vector<LinExpr>, 6> terms;
    bool feasible = true;

    AssignmentFrame(const PathCover& c, const PathAssignment& a, const EndpointDistanceTable& t)
        : cover(c), table(t), path_of(a.path_of) {
        // group labels by path, honoring the requested co-location order
        std::array<bool, 4> grouped{};
        std::vector<std::vector<int>> groups;
        for (const auto& grp : a.colocated_order) {
            groups.push_back(grp);
            for (int l : grp) grouped[l] = true;
        }
        for (int l = 0; l < 4; ++l)
            if (!grouped[l]) groups.push_back({l});
        std::sort(groups.begin(), groups.end(),
                  [&](const auto& x, const auto& y) { return x.front() < y.front(); });

        for (const auto& grp : groups) {
            const MaximalPath& path = cover.paths[path_of[grp.front()]];
            const dist_t len = static_cast<dist_t>(path.length());
            if (grp.size() == 1) {
                int l = grp.front();
                std::size_t vi = vars.size();
                vars.push_back({std::string("d(") + kLabelName[l] + "1," + kLabelName[l] + ")", 0, len});
                gap_base[l] = vi;
                group_of[l] = grp;
                order_pos[l] = 0;
                continue;
            }
            // gap variables g0..gt with the chain equality sum = length
            std::size_t base = vars.size();
            char lead = kLabelName[grp.front()];
            for (std::size_t i = 0; i <= grp.size(); ++i) {
                std::string name;
                if (i == 0)
                    name = std::string("d(") + lead + "1," + kLabelName[grp[0]] + ")";
                else if (i == grp.size())
                    name = std::string("d(") + kLabelName[grp.back()] + "," + lead + "2)";
                else
                    name = std::string("d(") + kLabelName[grp[i - 1]] + "," + kLabelName[grp[i]] + ")";
                vars.push_back({std::move(name), 0, len});
            }
            IlpRow chain;
            chain.rel = Rel::EQ;
            chain.tag = std::string("l(P_") + lead + ") = chain";
            chain.expr = LinExpr(0, -len);
            for (std::size_t i = 0; i <= grp.size(); ++i) {
                chain.expr.coeffs.resize(vars.size(), 0);
                chain.expr.coeffs[base + i] = 1;
            }
            base_rows.push_back(std::move(chain));
            for (std::size_t i = 0; i < grp.size(); ++i) {
                group_of[grp[i]] = grp;
                order_pos[grp[i]] = i;
                gap_base[grp[i]] = base;
            }
        }

        const std::size_t nv = vars.size();
        for (auto& row : base_rows) row.expr.coeffs.resize(nv, 0);
        for (int l = 0; l < 4; ++l) {
            const MaximalPath& path = cover.paths[path_of[l]];
            const dist_t len = static_cast<dist_t>(path.length());
            LinExpr front(nv), back(nv, len);
            if (group_of[l].size() == 1) {
                front.coeffs[gap_base[l]] = 1;
                back.coeffs[gap_base[l]] = -1;
            } else {
                for (std::size_t i = 0; i <= order_pos[l]; ++i) front.coeffs[gap_base[l] + i] = 1;
                for (std::size_t i = 0; i <= order_pos[l]; ++i) back.coeffs[gap_base[l] + i] = -1;
            }
            side_front[l] = std::move(front);
            side_back[l] = std::move(back);
        }

        for (int pi = 0; pi < 6; ++pi) {
            int x = kPairs[pi][0], y = kPairs[pi][1];
            const MaximalPath &px = cover.paths[path_of[x]], &py = cover.paths[path_of[y]];
            if (path_of[x] == path_of[y]) {
                // direct along-path term between the two ordered labels
                std::size_t lo = std::min(order_pos[x], order_pos[y]);
                std::size_t hi = std::max(order_pos[x], order_pos[y]);
                LinExpr direct(nv);
                for (std::size_t i = lo; i < hi; ++i) direct.coeffs[gap_base[x] + 1 + i] = 1;
                terms[pi].push_back(std::move(direct));
            }
            for (int ex = 0; ex < 2; ++ex)
                for (int ey = 0; ey < 2; ++ey) {
                    dist_t d = table.between(ex ? px.last() : px.first(), ey ? py.last() : py.first());
                    if (d == kInfDist) continue;
                    LinExpr t = (ex ? side_back[x] : side_front[x]);
                    t += (ey ? side_back[y] : side_front[y]);
                    t.constant += d;
                    terms[pi].push_back(std::move(t));
                }
            if (terms[pi].empty()) feasible = false;  // pair spans components
        }
    }
};

dist_t floor_div(dist_t a, dist_t b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

// The engine's per-assignment models use the max-min form
//   delta = max_i min_{j != i} (D_i - D_j):
// route choices are enumerated only for the four subtracted pairs, while the
// two pairs of D_i keep their exact minimum through an auxiliary objective
// variable z with one row per term combination. The max over these models
// equals the max over the full case split (any single route term only
// overestimates a subtracted distance, and the true routes are among the
// enumerated choices).
void for_each_aggregated_ilp(const AssignmentFrame& frame, dist_t z_cap,
                             const std::function<void(const IlpModel&)>& sink) {
    static constexpr std::array<std::array<int, 2>, 3> kSumPairs{{{0, 1}, {2, 3}, {4, 5}}};
    const std::size_t nv = frame.vars.size();
    for (int i = 0; i < 3; ++i) {
        const auto& own = kSumPairs[i];
        std::array<int, 4> neg{};
        int nn = 0;
        for (int p = 0; p < 6; ++p)
            if (p != own[0] && p != own[1]) neg[nn++] = p;

        std::array<std::size_t, 4> pick{};
        for (;;) {
            IlpModel m;
            m.vars = frame.vars;
            m.vars.push_back({"z", -z_cap, z_cap});
            m.rows = frame.base_rows;
            for (auto& row : m.rows) row.expr.coeffs.resize(nv + 1, 0);

            LinExpr dj1 = frame.terms[neg[0]][pick[0]] + frame.terms[neg[1]][pick[1]];
            LinExpr dj2 = frame.terms[neg[2]][pick[2]] + frame.terms[neg[3]][pick[3]];
            for (const auto& t1 : frame.terms[own[0]])
                for (const auto& t2 : frame.terms[own[1]]) {
                    LinExpr cap = t1 + t2;  // z + D_j <= t1 + t2
                    for (const LinExpr* dj : {&dj1, &dj2}) {
                        IlpRow row;
                        row.expr = *dj;
                        row.expr -= cap;
                        row.expr.coeffs.resize(nv + 1, 0);
                        row.expr.coeffs[nv] = 1;
                        row.rel = Rel::LE;
                        m.rows.push_back(std::move(row));
                    }
                }
            m.objective = LinExpr(nv + 1);
            m.objective.coeffs[nv] = 1;
            m.label = "maxmin sum D" + std::to_string(i + 1);
            sink(m);

            std::size_t q = 0;
            for (; q < 4; ++q) {
                if (++pick[q] < frame.terms[neg[q]].size()) break;
                pick[q] = 0;
            }
            if (q == 4) break;
        }
    }
}

// Upper bound on max distance between points of paths p and q via the
// balanced exit-route argument; exact table distances, O(1).
dist_t pair_distance_upper_bound(const PathCover& cover, const EndpointDistanceTable& t,
                                 std::size_t p, std::size_t q) {
    const MaximalPath &P = cover.paths[p], &Q = cover.paths[q];
    const dist_t lp = static_cast<dist_t>(P.length()), lq = static_cast<dist_t>(Q.length());
    dist_t dff = t.between(P.first(), Q.first()), dfb = t.between(P.first(), Q.last());
    dist_t dbf = t.between(P.last(), Q.first()), dbb = t.between(P.last(), Q.last());
    if (dff == kInfDist) return kInfDist;
    dist_t cf = floor_div(dff + dfb + lq, 2);
    dist_t cb = floor_div(dbf + dbb + lq, 2);
    dist_t ub = floor_div(cf + cb + lp, 2);
    if (p == q) ub = std::min(ub, lp);
    return ub;
}

struct CaseContext {
    const AssignmentFrame& frame;
    const std::function<void(const IlpModel&)>& sink;
    std::array<int, 6> chosen{};
    std::vector<IlpRow> rows;
    std::vector<dist_t> lo, hi;

    CaseContext(const AssignmentFrame& f, const std::function<void(const IlpModel&)>& s)
        : frame(f), sink(s), rows(f.base_rows) {
        lo.reserve(f.vars.size());
        hi.reserve(f.vars.size());
        for (const auto& v : f.vars) {
            lo.push_back(v.lo);
            hi.push_back(v.hi);
        }
    }

    void emit_models() {
        // distance of each pair under the chosen terms
        std::array<LinExpr, 6> d;
        for (int pi = 0; pi < 6; ++pi) d[pi] = frame.terms[pi][chosen[pi]];
        std::array<LinExpr, 3> sums{d[0] + d[1], d[2] + d[3], d[4] + d[5]};
        std::ostringstream cases;
        for (int pi = 0; pi < 6; ++pi) cases << chosen[pi];
        // three choices of which two sums are the largest pair, both directions
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                if (i == j) continue;
                int k = 3 - i - j;
                IlpModel m;
                m.vars = frame.vars;
                m.rows = rows;
                IlpRow order;
                order.expr = sums[k] - sums[j];
                order.rel = Rel::LE;
                order.tag = "D" + std::to_string(k + 1) + " <= D" + std::to_string(j + 1);
                m.rows.push_back(std::move(order));
                m.objective = sums[i] - sums[j];
                m.label = "largest=D" + std::to_string(i + 1) + ";second=D" + std::to_string(j + 1) +
                          ";cases=" + cases.str();
                sink(m);
            }
    }

    void rec(int pi) {
        if (pi == 6) {
            emit_models();
            return;
        }
        const auto& cand = frame.terms[pi];
        std::size_t saved_rows = rows.size();
        for (int c = 0; c < static_cast<int>(cand.size()); ++c) {
            chosen[pi] = c;
            rows.resize(saved_rows);
            for (int o = 0; o < static_cast<int>(cand.size()); ++o) {
                if (o == c) continue;
                IlpRow r;
                r.expr = cand[c] - cand[o];
                r.rel = Rel::LE;
                r.tag = "min-case pair " + std::to_string(pi);
                rows.push_back(std::move(r));
            }
            auto plo = lo, phi = hi;
            if (!propagate_bounds(rows, plo, phi, 3)) continue;
            // interval reasoning misses joint contradictions on wide boxes;
            // there the exact relaxation pays for itself
            bool wide = false;
            for (std::size_t j = 0; j < plo.size(); ++j) wide |= phi[j] - plo[j] > 16;
            if (wide && !lp_feasible(rows, plo, phi)) continue;
            auto keep_lo = lo, keep_hi = hi;
            lo = std::move(plo);
            hi = std::move(phi);
            rec(pi + 1);
            lo = std::move(keep_lo);
            hi = std::move(keep_hi);
        }
        rows.resize(saved_rows);
    }
};

}  // namespace

void for_each_case_ilp(const PathCover& cover, const PathAssignment& assign,
                       const EndpointDistanceTable& table,
                       const std::function<void(const IlpModel&)>& sink) {
    AssignmentFrame frame(cover, assign, table);
    if (!frame.feasible) return;
    CaseContext ctx(frame, sink);
    ctx.rec(0);
}

std::vector<IlpModel> build_case_ilps(const PathCover& cover, const PathAssignment& assign,
                                      const EndpointDistanceTable& table) {
    std::vector<IlpModel> out;
    for_each_case_ilp(cover, assign, table, [&](const IlpModel& m) { out.push_back(m); });
    return out;
}

dist_t cycle_hyperbolicity(std::size_t length, std::size_t cycle_cap) {
    if (length < 4) return 0;
    const dist_t L = static_cast<dist_t>(length);
    if (length <= cycle_cap) {
        auto cd = [&](dist_t i, dist_t j) {
            dist_t d = j > i ? j - i : i - j;
            return std::min(d, L - d);
        };
        dist_t best = 0;
        for (dist_t b = 1; b < L; ++b)
            for (dist_t c = b + 1; c < L; ++c)
                for (dist_t d = c + 1; d < L; ++d) {
                    dist_t s1 = cd(0, b) + cd(c, d);
                    dist_t s2 = cd(0, c) + cd(b, d);
                    dist_t s3 = cd(0, d) + cd(b, c);
                    dist_t hi = std::max({s1, s2, s3}), lo = std::min({s1, s2, s3});
                    best = std::max(best, hi - (s1 + s2 + s3 - hi - lo));
                }
        return best;
    }
    return 2 * (L / 4) - (L % 4 == 1 ? 1 : 0);
}

namespace {

struct BestTracker {
    dist_t delta = 0;
    std::optional<std::array<vertex_id, 4>> witness;  // original ids

    void offer(dist_t d, std::array<vertex_id, 4> w) {
        if (!witness || d > delta) {
            delta = d;
            std::sort(w.begin(), w.end());
            witness = w;
        }
    }
};

// Positions of an evenly spread quadruple on a cycle of the given length.
std::array<std::size_t, 4> spread_positions(std::size_t length) {
    std::size_t q = length / 4, r = length % 4;
    std::array<std::size_t, 4> gaps{q, q, q, q};
    for (std::size_t i = 0; i < r; ++i) ++gaps[i];
    return {0, gaps[0], gaps[0] + gaps[1], gaps[0] + gaps[1] + gaps[2]};
}

// Direct integer evaluation of one assignment: every placement of the four
// labels on their paths, distances through the endpoint-route minimum.
// Equivalent to the case-ILP sweep; used below the enumeration threshold.
void enumerate_assignment(const PathCover& cover, const EndpointDistanceTable& table,
                          const std::array<std::size_t, 4>& asn,
                          const std::vector<vertex_id>& sub_to_orig, BestTracker& best) {
    std::array<const MaximalPath*, 4> paths{};
    std::array<dist_t, 4> len{};
    for (int l = 0; l < 4; ++l) {
        paths[l] = &cover.paths[asn[l]];
        len[l] = static_cast<dist_t>(paths[l]->length());
    }
    auto route = [&](int x, int y, dist_t px, dist_t py) {
        dist_t d = kInfDist;
        if (asn[x] == asn[y]) d = px > py ? px - py : py - px;
        for (int ex = 0; ex < 2; ++ex)
            for (int ey = 0; ey < 2; ++ey) {
                dist_t mid = table.between(ex ? paths[x]->last() : paths[x]->first(),
                                           ey ? paths[y]->last() : paths[y]->first());
                if (mid == kInfDist) continue;
                dist_t sx = ex ? len[x] - px : px;
                dist_t sy = ey ? len[y] - py : py;
                d = std::min(d, sx + mid + sy);
            }
        return d;
    };
    std::array<dist_t, 4> pos{};
    for (pos[0] = 0; pos[0] <= len[0]; ++pos[0])
        for (pos[1] = 0; pos[1] <= len[1]; ++pos[1]) {
            dist_t d01 = route(0, 1, pos[0], pos[1]);
            if (d01 == kInfDist) continue;
            for (pos[2] = 0; pos[2] <= len[2]; ++pos[2]) {
                dist_t d02 = route(0, 2, pos[0], pos[2]);
                dist_t d12 = route(1, 2, pos[1], pos[2]);
                if (d02 == kInfDist || d12 == kInfDist) continue;
                for (pos[3] = 0; pos[3] <= len[3]; ++pos[3]) {
                    dist_t d03 = route(0, 3, pos[0], pos[3]);
                    dist_t d13 = route(1, 3, pos[1], pos[3]);
                    dist_t d23 = route(2, 3, pos[2], pos[3]);
                    if (d03 == kInfDist || d13 == kInfDist || d23 == kInfDist) continue;
                    dist_t s1 = d01 + d23, s2 = d02 + d13, s3 = d03 + d12;
                    dist_t hi = std::max({s1, s2, s3}), lo = std::min({s1, s2, s3});
                    dist_t delta = hi - (s1 + s2 + s3 - hi - lo);
                    if (!best.witness || delta > best.delta) {
                        best.offer(delta,
                                   {sub_to_orig[paths[0]->vertices[pos[0]]],
                                    sub_to_orig[paths[1]->vertices[pos[1]]],
                                    sub_to_orig[paths[2]->vertices[pos[2]]],
                                    sub_to_orig[paths[3]->vertices[pos[3]]]});
                    }
                }
            }
        }
}

// delta and witness for one component that is not an isolated cycle.
void engine_on_component(const Graph& sub, const std::vector<vertex_id>& sub_to_orig,
                         const EngineOptions& opts, EngineStats& stats, BestTracker& best) {
    PathCover cover = greedy_path_cover(sub);
    EndpointDistanceTable table = endpoint_distance_table(sub, cover);
    const std::size_t k = cover.paths.size();
    stats.cover_size += k;

    std::vector<std::vector<dist_t>> pair_ub(k, std::vector<dist_t>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            pair_ub[i][j] = pair_distance_upper_bound(cover, table, i, j);

    struct Item {
        dist_t ub;
        std::array<std::size_t, 4> asn;
    };
    std::vector<Item> items;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j)
            for (std::size_t l = j; l < k; ++l)
                for (std::size_t m = l; m < k; ++m) {
                    std::array<std::size_t, 4> asn{i, j, l, m};
                    dist_t ub = kInfDist;
                    for (const auto& pr : kPairs)
                        ub = std::min(ub, pair_ub[asn[pr[0]]][asn[pr[1]]]);
                    items.push_back({ub == kInfDist ? kInfDist : 2 * ub, asn});
                }
    std::stable_sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
        if (a.ub != b.ub) return a.ub > b.ub;
        return a.asn < b.asn;
    });
    stats.assignments_total += items.size();

    std::map<std::vector<dist_t>, dist_t> seen_signatures;
    DistanceRow quad_rows[4];
    for (const auto& item : items) {
        if (best.witness && item.ub <= best.delta) {
            stats.assignments_pruned += 1;
            continue;
        }

        std::uint64_t box_product = 1;
        bool small_box = true;
        for (int l = 0; l < 4 && small_box; ++l) {
            box_product *= cover.paths[item.asn[l]].length() + 1;
            if (box_product > opts.assignment_enum_threshold) small_box = false;
        }
        if (small_box) {
            enumerate_assignment(cover, table, item.asn, sub_to_orig, best);
            continue;
        }

        // structurally identical assignments (same lengths, same endpoint
        // distance pattern) solve to the same value; skip repeats
        std::vector<dist_t> sig;
        for (int l = 0; l < 4; ++l) sig.push_back(static_cast<dist_t>(cover.paths[item.asn[l]].length()));
        for (int x = 0; x < 4; ++x)
            for (int y = x; y < 4; ++y) {
                sig.push_back(item.asn[x] == item.asn[y] ? 1 : 0);
                for (int ex = 0; ex < 2; ++ex)
                    for (int ey = 0; ey < 2; ++ey)
                        sig.push_back(table.between(
                            ex ? cover.paths[item.asn[x]].last() : cover.paths[item.asn[x]].first(),
                            ey ? cover.paths[item.asn[y]].last() : cover.paths[item.asn[y]].first()));
            }
        if (!seen_signatures.emplace(std::move(sig), 0).second) {
            stats.assignments_pruned += 1;
            continue;
        }

        // group labels sharing a path; enumerate their orders along it
        std::vector<std::vector<int>> groups;
        for (int l = 0; l < 4; ++l) {
            bool placed = false;
            for (auto& grp : groups)
                if (item.asn[grp.front()] == item.asn[l]) {
                    grp.push_back(l);
                    placed = true;
                    break;
                }
            if (!placed) groups.push_back({l});
        }
        std::vector<std::vector<int>> shared;
        for (auto& grp : groups)
            if (grp.size() >= 2) shared.push_back(grp);

        std::vector<std::vector<std::vector<int>>> order_choices;  // per shared group
        for (auto& grp : shared) {
            std::vector<std::vector<int>> perms;
            std::sort(grp.begin(), grp.end());
            do perms.push_back(grp);
            while (std::next_permutation(grp.begin(), grp.end()));
            order_choices.push_back(std::move(perms));
        }

        std::vector<std::size_t> pick(order_choices.size(), 0);
        for (;;) {
            PathAssignment assign;
            assign.path_of = item.asn;
            for (std::size_t gi = 0; gi < pick.size(); ++gi)
                assign.colocated_order.push_back(order_choices[gi][pick[gi]]);

            AssignmentFrame frame(cover, assign, table);
            if (!frame.feasible) {
                std::size_t gi = 0;
                for (; gi < pick.size(); ++gi) {
                    if (++pick[gi] < order_choices[gi].size()) break;
                    pick[gi] = 0;
                }
                if (gi == pick.size()) break;
                continue;
            }
            const dist_t z_cap = 4 * static_cast<dist_t>(sub.vertex_count());
            for_each_aggregated_ilp(frame, z_cap, [&](const IlpModel& model) {
                stats.models_solved += 1;
                IlpSolveOptions solve_opts = opts.ilp;
                if (best.witness) solve_opts.objective_cutoff = best.delta;
                IlpSolution sol = solve_fixed_dim_ilp(model, solve_opts);
                if (sol.status != IlpStatus::optimal) return;
                if (best.witness && sol.objective <= best.delta) return;
                // reconstruct the concrete quadruple from the gap values
                std::array<vertex_id, 4> sub_q{};
                for (int l = 0; l < 4; ++l) {
                    dist_t front = 0;
                    if (frame.group_of[l].size() == 1) {
                        front = sol.values[frame.gap_base[l]];
                    } else {
                        for (std::size_t i = 0; i <= frame.order_pos[l]; ++i)
                            front += sol.values[frame.gap_base[l] + i];
                    }
                    const auto& path = cover.paths[item.asn[l]].vertices;
                    sub_q[l] = path[static_cast<std::size_t>(front)];
                }
                // the model value never exceeds the true delta of the point
                for (int l = 0; l < 4; ++l) quad_rows[l] = bfs_distances(sub, sub_q[l]);
                dist_t s1 = quad_rows[0].distances[sub_q[1]] + quad_rows[2].distances[sub_q[3]];
                dist_t s2 = quad_rows[0].distances[sub_q[2]] + quad_rows[1].distances[sub_q[3]];
                dist_t s3 = quad_rows[0].distances[sub_q[3]] + quad_rows[1].distances[sub_q[2]];
                dist_t hi = std::max({s1, s2, s3}), lo = std::min({s1, s2, s3});
                dist_t true_delta = hi - (s1 + s2 + s3 - hi - lo);
                if (true_delta < sol.objective)
                    throw std::logic_error("model value exceeds the witness delta");
                if (!best.witness || true_delta > best.delta)
                    best.offer(true_delta, {sub_to_orig[sub_q[0]], sub_to_orig[sub_q[1]],
                                            sub_to_orig[sub_q[2]], sub_to_orig[sub_q[3]]});
            });

            // advance the order picks
            std::size_t gi = 0;
            for (; gi < pick.size(); ++gi) {
                if (++pick[gi] < order_choices[gi].size()) break;
                pick[gi] = 0;
            }
            if (gi == pick.size()) break;
        }
    }
}

HyperbolicityResult run_engine(const Graph& input, bool apply_rule2, EngineStats& stats,
                               const EngineOptions& opts) {
    auto r1 = rule1_prune_degree_one(input);
    stats.rule1_removed = r1.trace.removed.size();
    Graph g = std::move(r1.graph);
    std::vector<vertex_id> to_orig = r1.remap.new_to_old;

    if (apply_rule2) {
        auto r2 = rule2_prune_parallel_paths(g);
        stats.rule2_removed = r2.trace.removed.size();
        std::vector<vertex_id> next(r2.graph.vertex_count());
        for (vertex_id v = 0; v < r2.graph.vertex_count(); ++v)
            next[v] = to_orig[r2.remap.new_to_old[v]];
        g = std::move(r2.graph);
        to_orig = std::move(next);
    }

    BestTracker best;
    if (g.vertex_count() <= 4) {
        // the rule-1 floor; brute force the leftover directly
        auto res = brute_force_delta(g);
        if (res.witness) {
            auto w = res.witness->vertices;
            best.offer(res.delta, {to_orig[w[0]], to_orig[w[1]], to_orig[w[2]], to_orig[w[3]]});
        }
    } else {
        for (const auto& comp : connected_components(g)) {
            if (comp.size() < 4) continue;
            auto [sub, remap] = induced_subgraph(g, comp);
            std::vector<vertex_id> sub_to_orig(sub.vertex_count());
            for (vertex_id v = 0; v < sub.vertex_count(); ++v)
                sub_to_orig[v] = to_orig[remap.new_to_old[v]];

            bool cycle = true;
            for (vertex_id v = 0; v < sub.vertex_count() && cycle; ++v)
                cycle = sub.degree(v) == 2;
            if (cycle) {
                stats.isolated_cycle_count += 1;
                stats.largest_cycle = std::max(stats.largest_cycle, comp.size());
                dist_t delta = cycle_hyperbolicity(comp.size(), opts.cycle_cap);
                auto order = isolated_cycles(sub).at(0);
                auto pos = spread_positions(comp.size());
                best.offer(delta, {sub_to_orig[order[pos[0]]], sub_to_orig[order[pos[1]]],
                                   sub_to_orig[order[pos[2]]], sub_to_orig[order[pos[3]]]});
                continue;
            }
            engine_on_component(sub, sub_to_orig, opts, stats, best);
        }
    }
    HyperbolicityResult res;
    res.delta = best.witness ? best.delta : 0;
    if (best.witness) {
        Witness w;
        w.vertices = *best.witness;
        DistanceRow rows[4];
        for (int l = 0; l < 4; ++l) rows[l] = bfs_distances(input, w.vertices[l]);
        w.sums.d1 = rows[0].distances[w.vertices[1]] + rows[2].distances[w.vertices[3]];
        w.sums.d2 = rows[0].distances[w.vertices[2]] + rows[1].distances[w.vertices[3]];
        w.sums.d3 = rows[0].distances[w.vertices[3]] + rows[1].distances[w.vertices[2]];
        res.witness = std::move(w);
    }
    return res;
}

}  // namespace

HyperbolicityResult hyperbolicity_via_path_cover(const Graph& g, EngineStats* stats,
                                                 const EngineOptions& opts) {
    EngineStats local;
    EngineStats& s = stats ? *stats : local;
    return run_engine(g, false, s, opts);
}

HyperbolicityResult hyperbolicity_feedback_edge(const Graph& g, EngineStats* stats,
                                                const EngineOptions& opts) {
    EngineStats local;
    EngineStats& s = stats ? *stats : local;

    auto r1 = rule1_prune_degree_one(g);
    s.feedback_edge_count = feedback_edge_set(r1.graph).size();
    if (r1.graph.vertex_count() > 4) {
        // count maximal paths outside isolated cycles against the 7k bound
        std::vector<vertex_id> cycle_vertices;
        for (const auto& cyc : isolated_cycles(r1.graph))
            cycle_vertices.insert(cycle_vertices.end(), cyc.begin(), cyc.end());
        auto [stripped, remap] = delete_vertices(r1.graph, cycle_vertices);
        s.maximal_path_count = enumerate_maximal_paths(stripped).size();
        s.path_bound_7k_ok = s.maximal_path_count <= 7 * s.feedback_edge_count;
    }
    return run_engine(g, false, s, opts);
}

HyperbolicityResult hyperbolicity_degree3(const Graph& g, EngineStats* stats,
                                          const EngineOptions& opts) {
    EngineStats local;
    EngineStats& s = stats ? *stats : local;
    s.high_degree_count = high_degree_vertices(g).size();

    auto res = run_engine(g, true, s, opts);

    // post-reduction parallel-path bound, for reporting
    auto r1 = rule1_prune_degree_one(g);
    auto r2 = rule2_prune_parallel_paths(r1.graph);
    if (r2.graph.vertex_count() > 4) {
        std::vector<vertex_id> cycle_vertices;
        for (const auto& cyc : isolated_cycles(r2.graph))
            cycle_vertices.insert(cycle_vertices.end(), cyc.begin(), cyc.end());
        auto [stripped, remap] = delete_vertices(r2.graph, cycle_vertices);
        std::map<std::pair<vertex_id, vertex_id>, std::size_t> counts;
        for (const auto& p : enumerate_maximal_paths(stripped))
            if (stripped.degree(p.first()) >= 3 && stripped.degree(p.last()) >= 3)
                counts[{p.first(), p.last()}] += 1;
        for (const auto& [pr, c] : counts) s.max_parallel_paths = std::max(s.max_parallel_paths, c);
    }
    return res;
}

}  // namespace hyp
