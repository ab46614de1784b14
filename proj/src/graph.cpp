#include "hyp/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace hyp {

bool Graph::has_edge(vertex_id u, vertex_id v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<vertex_id, vertex_id>> Graph::edges() const {
    std::vector<std::pair<vertex_id, vertex_id>> out;
    out.reserve(m_);
    for (vertex_id u = 0; u < n_; ++u)
        for (vertex_id v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph build_graph(const std::vector<std::pair<vertex_id, vertex_id>>& edge_list, vertex_id n) {
    std::vector<std::pair<vertex_id, vertex_id>> dir;
    dir.reserve(edge_list.size() * 2);
    for (auto [u, v] : edge_list) {
        if (u >= n || v >= n)
            throw std::invalid_argument("edge id out of range: (" + std::to_string(u) + "," +
                                        std::to_string(v) + ") with n=" + std::to_string(n));
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        dir.emplace_back(u, v);
        dir.emplace_back(v, u);
    }
    std::sort(dir.begin(), dir.end());
    dir.erase(std::unique(dir.begin(), dir.end()), dir.end());

    Graph g;
    g.n_ = n;
    g.m_ = dir.size() / 2;
    g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (auto& [u, v] : dir) g.offsets_[u + 1]++;
    for (vertex_id u = 0; u < n; ++u) g.offsets_[u + 1] += g.offsets_[u];
    g.adj_.reserve(dir.size());
    for (auto& [u, v] : dir) g.adj_.push_back(v);
    return g;
}

DistanceRow bfs_distances(const Graph& g, vertex_id source) {
    if (source >= g.vertex_count()) throw std::invalid_argument("bfs source out of range");
    DistanceRow row;
    row.source = source;
    row.distances.assign(g.vertex_count(), kInfDist);
    row.distances[source] = 0;
    std::vector<vertex_id> frontier{source}, next;
    dist_t d = 0;
    while (!frontier.empty()) {
        ++d;
        next.clear();
        for (vertex_id u : frontier)
            for (vertex_id w : g.neighbors(u))
                if (row.distances[w] == kInfDist) {
                    row.distances[w] = d;
                    next.push_back(w);
                }
        frontier.swap(next);
    }
    return row;
}

DistanceMatrix DistanceMatrix::build(const Graph& g, std::uint64_t max_bytes) {
    const std::uint64_t n = g.vertex_count();
    if (n * n * sizeof(cell) > max_bytes)
        throw std::length_error("instance too large for oracle: " + std::to_string(n) +
                                "^2 distance table exceeds " + std::to_string(max_bytes) + " bytes");
    DistanceMatrix dm;
    dm.n_ = g.vertex_count();
    dm.cells_.assign(n * n, kInfCell);
    std::vector<vertex_id> frontier, next;
    for (vertex_id s = 0; s < dm.n_; ++s) {
        cell* row = dm.cells_.data() + static_cast<std::size_t>(s) * dm.n_;
        row[s] = 0;
        frontier.assign(1, s);
        cell d = 0;
        while (!frontier.empty()) {
            ++d;
            next.clear();
            for (vertex_id u : frontier)
                for (vertex_id w : g.neighbors(u))
                    if (row[w] == kInfCell) {
                        row[w] = d;
                        next.push_back(w);
                    }
            frontier.swap(next);
        }
    }
    return dm;
}

std::vector<std::vector<vertex_id>> connected_components(const Graph& g) {
    std::vector<std::vector<vertex_id>> comps;
    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<vertex_id> stack;
    for (vertex_id s = 0; s < g.vertex_count(); ++s) {
        if (seen[s]) continue;
        comps.emplace_back();
        auto& comp = comps.back();
        seen[s] = true;
        stack.assign(1, s);
        while (!stack.empty()) {
            vertex_id u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (vertex_id w : g.neighbors(u))
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
    }
    return comps;
}

std::vector<vertex_id> high_degree_vertices(const Graph& g) {
    std::vector<vertex_id> out;
    for (vertex_id v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) >= 3) out.push_back(v);
    return out;
}

std::pair<Graph, VertexRemap> delete_vertices(const Graph& g, const std::vector<vertex_id>& to_delete) {
    std::vector<bool> del(g.vertex_count(), false);
    for (vertex_id v : to_delete) {
        if (v >= g.vertex_count()) throw std::invalid_argument("delete id out of range");
        del[v] = true;
    }
    VertexRemap remap;
    remap.old_to_new.assign(g.vertex_count(), VertexRemap::kDeleted);
    for (vertex_id v = 0; v < g.vertex_count(); ++v)
        if (!del[v]) {
            remap.old_to_new[v] = static_cast<vertex_id>(remap.new_to_old.size());
            remap.new_to_old.push_back(v);
        }
    std::vector<std::pair<vertex_id, vertex_id>> kept;
    for (auto [u, v] : g.edges())
        if (!del[u] && !del[v]) kept.emplace_back(remap.old_to_new[u], remap.old_to_new[v]);
    return {build_graph(kept, static_cast<vertex_id>(remap.new_to_old.size())), std::move(remap)};
}

std::pair<Graph, VertexRemap> induced_subgraph(const Graph& g, const std::vector<vertex_id>& keep) {
    std::vector<bool> in(g.vertex_count(), false);
    for (vertex_id v : keep) in[v] = true;
    std::vector<vertex_id> drop;
    for (vertex_id v = 0; v < g.vertex_count(); ++v)
        if (!in[v]) drop.push_back(v);
    return delete_vertices(g, drop);
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> parts;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) parts.push_back(line.substr(i, j - i));
        i = j;
    }
    return parts;
}

std::uint64_t parse_u64(std::string_view tok, std::size_t line_no) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(line_no, "expected a decimal id, got '" + std::string(tok) + "'");
    return value;
}

}  // namespace

Graph parse_edge_list(const std::string& text) {
    std::vector<std::pair<vertex_id, vertex_id>> edges;
    std::uint64_t declared_n = 0;
    bool have_header = false;
    vertex_id max_id = 0;
    bool any_vertex = false;

    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto parts = split_ws(line);
        if (parts.empty() || parts[0].front() == '#') continue;
        if (parts[0] == "p") {
            if (have_header) throw ParseError(line_no, "duplicate header");
            if (parts.size() != 3) throw ParseError(line_no, "header must be 'p n m'");
            declared_n = parse_u64(parts[1], line_no);
            parse_u64(parts[2], line_no);  // m is informational
            have_header = true;
            continue;
        }
        if (parts.size() != 2) throw ParseError(line_no, "expected 'u v'");
        std::uint64_t u = parse_u64(parts[0], line_no);
        std::uint64_t v = parse_u64(parts[1], line_no);
        if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
        if (u > std::numeric_limits<vertex_id>::max() - 1 || v > std::numeric_limits<vertex_id>::max() - 1)
            throw ParseError(line_no, "vertex id too large");
        any_vertex = true;
        max_id = std::max({max_id, static_cast<vertex_id>(u), static_cast<vertex_id>(v)});
        edges.emplace_back(static_cast<vertex_id>(u), static_cast<vertex_id>(v));
    }
    std::uint64_t n = have_header ? declared_n : (any_vertex ? std::uint64_t(max_id) + 1 : 0);
    if (any_vertex && max_id >= n)
        throw ParseError(1, "header declares n=" + std::to_string(n) + " but saw id " +
                                std::to_string(max_id));
    return build_graph(edges, static_cast<vertex_id>(n));
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace hyp
