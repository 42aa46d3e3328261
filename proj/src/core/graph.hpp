#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cs {

using Edge = std::pair<int, int>; // stored normalized, first < second

// Sorted, duplicate-free set of node ids.
struct NodeSet {
    std::vector<int> ids;

    NodeSet() = default;
    explicit NodeSet(std::vector<int> v);

    bool contains(int v) const;
    bool empty() const { return ids.empty(); }
    size_t size() const { return ids.size(); }
};

// Immutable simple undirected graph, nodes 0..n-1, CSR adjacency.
// Safe to share across threads once built.
class Graph {
public:
    Graph() = default;
    static Graph from_edges(int n, std::vector<Edge> edges);

    int node_count() const { return n_; }
    int edge_count() const { return int(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    std::span<const int> neighbors(int v) const;
    int degree(int v) const;
    bool has_edge(int u, int v) const;
    // index into edges() for normalized (u,v), or -1
    int edge_index(int u, int v) const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;       // sorted lexicographically, u < v
    std::vector<int> adj_;          // flattened sorted neighbor lists
    std::vector<int> offsets_;      // n_+1 entries
};

inline constexpr int kUnreached = -1;

// Hop distances from source; kUnreached where not reachable. If `allowed`
// is given the walk stays inside the induced subgraph on that set.
std::vector<int> bfs_distances(const Graph& g, int source,
                               const NodeSet* allowed = nullptr);

// Exact diameter of g (or of the induced subgraph on `restrict_to`).
// nullopt means disconnected (INFINITE); single node gives 0.
std::optional<int> diameter(const Graph& g, const NodeSet* restrict_to = nullptr);

// True iff the induced subgraph on s is connected. s must be nonempty.
bool is_connected(const Graph& g, const NodeSet& s);

// E(X, Y) = {(u,v) in E | u in X, v in Y}, normalized and deduplicated.
std::vector<Edge> edge_set_between(const Graph& g, const NodeSet& x, const NodeSet& y);

NodeSet neighborhood(const Graph& g, const NodeSet& s);        // N(S)
NodeSet closed_neighborhood(const Graph& g, const NodeSet& s); // N+(S)

// Edge-list text format: "n m" header, then "u v" per line with u < v.
// Lines starting with '#' are comments.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(const Graph& g, std::ostream& out);
void write_edge_list_file(const Graph& g, const std::string& path);

} // namespace cs
