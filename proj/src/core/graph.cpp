#include "core/graph.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <sstream>

#include "core/error.hpp"

namespace cs {

NodeSet::NodeSet(std::vector<int> v) : ids(std::move(v)) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
}

bool NodeSet::contains(int v) const {
    return std::binary_search(ids.begin(), ids.end(), v);
}

Graph Graph::from_edges(int n, std::vector<Edge> edges) {
    require(n > 0, ErrorCode::invalid_argument, "graph needs at least one node");
    for (auto& [u, v] : edges) {
        require(u != v, ErrorCode::invalid_argument, "self-loop rejected");
        require(u >= 0 && v >= 0 && u < n && v < n, ErrorCode::invalid_argument,
                "edge endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    require(dup == edges.end(), ErrorCode::invalid_argument, "duplicate edge rejected");

    Graph g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    std::vector<int> deg(n, 0);
    for (auto [u, v] : g.edges_) {
        deg[u]++;
        deg[v]++;
    }
    g.offsets_.assign(n + 1, 0);
    for (int v = 0; v < n; v++) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
    g.adj_.resize(g.offsets_[n]);
    std::vector<int> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (auto [u, v] : g.edges_) {
        g.adj_[cursor[u]++] = v;
        g.adj_[cursor[v]++] = u;
    }
    for (int v = 0; v < n; v++)
        std::sort(g.adj_.begin() + g.offsets_[v], g.adj_.begin() + g.offsets_[v + 1]);
    return g;
}

std::span<const int> Graph::neighbors(int v) const {
    return {adj_.data() + offsets_[v], size_t(offsets_[v + 1] - offsets_[v])};
}

int Graph::degree(int v) const { return offsets_[v + 1] - offsets_[v]; }

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
    if (it == edges_.end() || *it != Edge{u, v}) return -1;
    return int(it - edges_.begin());
}

std::vector<int> bfs_distances(const Graph& g, int source, const NodeSet* allowed) {
    require(source >= 0 && source < g.node_count(), ErrorCode::invalid_argument,
            "bfs source out of range");
    if (allowed)
        require(allowed->contains(source), ErrorCode::invalid_argument,
                "bfs source not in allowed set");
    std::vector<int> dist(g.node_count(), kUnreached);
    std::queue<int> q;
    dist[source] = 0;
    q.push(source);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int u : g.neighbors(v)) {
            if (dist[u] != kUnreached) continue;
            if (allowed && !allowed->contains(u)) continue;
            dist[u] = dist[v] + 1;
            q.push(u);
        }
    }
    return dist;
}

std::optional<int> diameter(const Graph& g, const NodeSet* restrict_to) {
    std::vector<int> sources;
    if (restrict_to) {
        sources = restrict_to->ids;
        if (sources.empty()) return 0;
    } else {
        sources.resize(g.node_count());
        for (int v = 0; v < g.node_count(); v++) sources[v] = v;
    }
    size_t want = sources.size();
    int best = 0;
    for (int s : sources) {
        auto dist = bfs_distances(g, s, restrict_to);
        size_t reached = 0;
        for (int v : sources) {
            if (dist[v] == kUnreached) return std::nullopt;
            reached++;
            best = std::max(best, dist[v]);
        }
        if (reached != want) return std::nullopt;
    }
    return best;
}

bool is_connected(const Graph& g, const NodeSet& s) {
    require(!s.empty(), ErrorCode::invalid_argument, "is_connected on empty set");
    auto dist = bfs_distances(g, s.ids.front(), &s);
    for (int v : s.ids)
        if (dist[v] == kUnreached) return false;
    return true;
}

std::vector<Edge> edge_set_between(const Graph& g, const NodeSet& x, const NodeSet& y) {
    std::vector<Edge> out;
    for (int u : x.ids) {
        for (int v : g.neighbors(u)) {
            if (!y.contains(v)) continue;
            out.push_back(u < v ? Edge{u, v} : Edge{v, u});
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

NodeSet neighborhood(const Graph& g, const NodeSet& s) {
    std::vector<int> out;
    for (int v : s.ids)
        for (int u : g.neighbors(v)) out.push_back(u);
    return NodeSet(std::move(out));
}

NodeSet closed_neighborhood(const Graph& g, const NodeSet& s) {
    NodeSet n = neighborhood(g, s);
    std::vector<int> out = n.ids;
    out.insert(out.end(), s.ids.begin(), s.ids.end());
    return NodeSet(std::move(out));
}

Graph read_edge_list(std::istream& in) {
    std::string line;
    long n = -1, m = -1;
    std::vector<Edge> edges;
    long seen = 0;
    while (std::getline(in, line)) {
        size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> m) || n <= 0 || m < 0)
                fail(ErrorCode::parse_error, "bad edge-list header: " + line);
            edges.reserve(size_t(m));
            continue;
        }
        long u, v;
        if (!(ls >> u >> v)) fail(ErrorCode::parse_error, "bad edge line: " + line);
        if (u >= v) fail(ErrorCode::parse_error, "edge lines require u < v: " + line);
        edges.push_back({int(u), int(v)});
        seen++;
    }
    if (n < 0) fail(ErrorCode::parse_error, "empty edge-list input");
    if (seen != m) fail(ErrorCode::parse_error, "edge count does not match header");
    return Graph::from_edges(int(n), std::move(edges));
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::parse_error, "cannot open graph file: " + path);
    return read_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << g.node_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_edge_list_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) fail(ErrorCode::invalid_argument, "cannot write graph file: " + path);
    write_edge_list(g, out);
}

} // namespace cs
