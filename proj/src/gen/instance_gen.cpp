#include "gen/instance_gen.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "core/error.hpp"
#include "core/rng.hpp"

namespace cs {

using nlohmann::json;

Partition Partition::from_parts(const Graph& g, std::vector<NodeSet> in_parts) {
    Partition p;
    p.part_of.assign(g.node_count(), kNoPart);
    for (size_t i = 0; i < in_parts.size(); i++) {
        const NodeSet& s = in_parts[i];
        require(!s.empty(), ErrorCode::invalid_argument, "empty part rejected");
        for (int v : s.ids) {
            require(v >= 0 && v < g.node_count(), ErrorCode::invalid_argument,
                    "part node out of range");
            require(p.part_of[v] == kNoPart, ErrorCode::invalid_argument,
                    "parts must be disjoint");
            p.part_of[v] = int(i);
        }
        require(is_connected(g, s), ErrorCode::invalid_argument,
                "part " + std::to_string(i) + " is not connected");
    }
    p.parts = std::move(in_parts);
    return p;
}

bool Partition::covers_all() const {
    for (int x : part_of)
        if (x == kNoPart) return false;
    return true;
}

int IdMap::id(const std::string& name) const {
    auto it = name_to_id.find(name);
    require(it != name_to_id.end(), ErrorCode::invalid_argument,
            "unknown vertex name: " + name);
    return it->second;
}

std::string IdMap::to_json(const std::string& family,
                           const std::map<std::string, long>& params) const {
    json j;
    j["version"] = 1;
    j["family"] = family;
    j["params"] = params;
    j["names"] = name_to_id;
    return j.dump(2);
}

// ---------------------------------------------------------------------------
// G(k,x,N)

int KChordalInstance::row1_id(int j) const {
    require(j >= 0 && j <= x, ErrorCode::invalid_argument, "row-1 index out of range");
    return j;
}

int KChordalInstance::row_id(int i, int j) const {
    require(i >= 2 && i <= N && j >= 0 && j <= x * K, ErrorCode::invalid_argument,
            "row index out of range");
    return (x + 1) + (i - 2) * (x * K + 1) + j;
}

KChordalInstance gen_k_chordal(int k, int x, int N) {
    require(k >= 4, ErrorCode::unsupported_parameter, "k must be at least 4");
    require(k % 2 == 0, ErrorCode::unsupported_parameter,
            "odd k unsupported: K = k/2 - 1 must be integral");
    require(x >= 0, ErrorCode::invalid_argument, "x must be >= 0");
    require(N >= 2, ErrorCode::invalid_argument, "N must be >= 2");

    KChordalInstance inst;
    inst.k = k;
    inst.x = x;
    inst.N = N;
    inst.K = k / 2 - 1;
    const int K = inst.K;
    const int n = (x + 1) + (N - 1) * (x * K + 1);

    auto v1 = [&](int j) { return j; };
    auto vi = [&](int i, int j) { return (x + 1) + (i - 2) * (x * K + 1) + j; };

    std::vector<Edge> edges;
    // E1: row-1 path
    for (int j = 0; j + 1 <= x; j++) edges.push_back({v1(j), v1(j + 1)});
    // E2: row paths
    for (int i = 2; i <= N; i++)
        for (int j = 0; j + 1 <= x * K; j++) edges.push_back({vi(i, j), vi(i, j + 1)});
    // E3: row-1 vertex j attaches to column j*K of every row
    for (int i = 2; i <= N; i++)
        for (int j = 0; j <= x; j++) edges.push_back({v1(j), vi(i, j * K)});
    // E4: vertical cliques on columns divisible by K
    for (int h = 0; h <= x * K; h += K)
        for (int i = 2; i <= N; i++)
            for (int j = i + 1; j <= N; j++) edges.push_back({vi(i, h), vi(j, h)});

    inst.graph = Graph::from_edges(n, std::move(edges));
    for (int j = 0; j <= x; j++)
        inst.id_map.name_to_id["v_1_" + std::to_string(j)] = v1(j);
    for (int i = 2; i <= N; i++)
        for (int j = 0; j <= x * K; j++)
            inst.id_map.name_to_id["v_" + std::to_string(i) + "_" + std::to_string(j)] =
                vi(i, j);
    return inst;
}

// ---------------------------------------------------------------------------
// G(Gamma,p) direct construction

int CwInstance::tree_id(int level, int idx) const {
    require(level >= 0 && level <= p && idx >= 0 && idx < (1 << level),
            ErrorCode::invalid_argument, "tree index out of range");
    return (1 << level) - 1 + idx;
}

int CwInstance::row_id(int l, int i) const {
    require(l >= 1 && l <= gamma && i >= 0 && i < (1 << p),
            ErrorCode::invalid_argument, "row index out of range");
    int tree_nodes = (1 << (p + 1)) - 1;
    return tree_nodes + (l - 1) * (1 << p) + i;
}

CwInstance gen_clique_width_direct(int gamma, int p) {
    require(gamma >= 1, ErrorCode::invalid_argument, "gamma must be >= 1");
    require(p >= 1, ErrorCode::invalid_argument, "p must be >= 1");

    CwInstance inst;
    inst.gamma = gamma;
    inst.p = p;
    const int cols = 1 << p;
    const int tree_nodes = 2 * cols - 1;
    const int n = tree_nodes + gamma * cols;

    auto u = [&](int level, int idx) { return (1 << level) - 1 + idx; };
    auto v = [&](int l, int i) { return tree_nodes + (l - 1) * cols + i; };

    std::vector<Edge> edges;
    // E1: tree edges
    for (int j = 1; j <= p; j++)
        for (int i = 0; i < (1 << j); i++) edges.push_back({u(j, i), u(j - 1, i / 2)});
    // E2: leaf i to every row node in column i
    for (int i = 0; i < cols; i++)
        for (int l = 1; l <= gamma; l++) edges.push_back({u(p, i), v(l, i)});
    // E3: biclique between consecutive columns
    for (int i = 0; i + 1 < cols; i++)
        for (int l = 1; l <= gamma; l++)
            for (int l2 = 1; l2 <= gamma; l2++) edges.push_back({v(l, i), v(l2, i + 1)});

    inst.graph = Graph::from_edges(n, std::move(edges));
    for (int level = 0; level <= p; level++)
        for (int i = 0; i < (1 << level); i++)
            inst.id_map.name_to_id["u_" + std::to_string(level) + "_" + std::to_string(i)] =
                u(level, i);
    for (int l = 1; l <= gamma; l++)
        for (int i = 0; i < cols; i++)
            inst.id_map.name_to_id["v_" + std::to_string(l) + "_" + std::to_string(i)] =
                v(l, i);
    return inst;
}

// ---------------------------------------------------------------------------
// random generators

Partition gen_random_connected_partition(const Graph& g, int num_parts, uint64_t seed) {
    const int n = g.node_count();
    require(num_parts >= 1 && num_parts <= n, ErrorCode::invalid_argument,
            "num_parts must be in [1, n]");

    RngStream rng(mix(seed, 0x70617274ULL));
    std::vector<int> order(n);
    for (int v = 0; v < n; v++) order[v] = v;
    for (int i = n - 1; i > 0; i--)
        std::swap(order[i], order[rng.next_below_exact(uint64_t(i) + 1)]);

    std::vector<int> owner(n, kNoPart);
    std::vector<std::deque<int>> frontier(num_parts);
    for (int i = 0; i < num_parts; i++) {
        owner[order[i]] = i;
        frontier[i].push_back(order[i]);
    }

    int claimed = num_parts;
    bool progressed = true;
    while (claimed < n && progressed) {
        progressed = false;
        for (int i = 0; i < num_parts; i++) {
            // grow part i by one node if possible
            while (!frontier[i].empty()) {
                int v = frontier[i].front();
                std::vector<int> free;
                for (int u : g.neighbors(v))
                    if (owner[u] == kNoPart) free.push_back(u);
                if (free.empty()) {
                    frontier[i].pop_front();
                    continue;
                }
                int pick = free[rng.next_below_exact(free.size())];
                owner[pick] = i;
                frontier[i].push_back(pick);
                claimed++;
                progressed = true;
                break;
            }
        }
    }
    require(claimed == n, ErrorCode::invalid_argument,
            "graph is disconnected: partition growth stalled");

    std::vector<std::vector<int>> members(num_parts);
    for (int v = 0; v < n; v++) members[owner[v]].push_back(v);
    std::vector<NodeSet> parts;
    parts.reserve(num_parts);
    for (auto& m : members) parts.push_back(NodeSet(std::move(m)));
    return Partition::from_parts(g, std::move(parts));
}

namespace {

Graph sample_gnp(int n, double p, RngStream& rng) {
    std::vector<Edge> edges;
    uint64_t threshold = uint64_t(p * 0x1.0p64);
    for (int u = 0; u < n; u++)
        for (int v = u + 1; v < n; v++)
            if (rng.next() < threshold) edges.push_back({u, v});
    return Graph::from_edges(n, std::move(edges));
}

} // namespace

Graph gen_connected_gnp(int n, double p, uint64_t seed, int max_tries) {
    RngStream rng(mix(seed, 0x676e70ULL));
    for (int t = 0; t < max_tries; t++) {
        Graph g = sample_gnp(n, p, rng);
        NodeSet all;
        all.ids.resize(n);
        for (int v = 0; v < n; v++) all.ids[v] = v;
        if (is_connected(g, all)) return g;
    }
    fail(ErrorCode::generation_failed, "no connected sample within max_tries");
}

Graph gen_diameter_d_graph(int n, int d, double edge_prob, uint64_t seed, int max_tries) {
    require(d == 3 || d == 4, ErrorCode::invalid_argument, "d must be 3 or 4");
    require(n >= d + 1, ErrorCode::invalid_argument, "need n >= d+1");

    RngStream rng(mix(seed, 0x6469616dULL, uint64_t(d)));
    bool adaptive = edge_prob <= 0.0;
    // start near the connectivity threshold and anneal toward the target band
    double p = adaptive ? std::min(0.5, 3.0 * std::log(double(n)) / double(n))
                        : edge_prob;
    for (int t = 0; t < max_tries; t++) {
        Graph g = sample_gnp(n, std::clamp(p, 1e-6, 1.0), rng);
        auto dia = diameter(g);
        if (dia && *dia == d) return g;
        if (adaptive) {
            if (!dia || *dia > d)
                p = std::min(1.0, p * 1.25); // too sparse / disconnected
            else
                p = p / 1.2; // too dense
        }
    }
    fail(ErrorCode::generation_failed,
         "no diameter-" + std::to_string(d) + " sample within max_tries");
}

Partition partition_into_path_parts(const KChordalInstance& inst, int rows_per_part) {
    require(rows_per_part >= 1, ErrorCode::invalid_argument, "rows_per_part must be >= 1");
    std::vector<std::vector<int>> rows;
    {
        std::vector<int> r1;
        for (int j = 0; j <= inst.x; j++) r1.push_back(inst.row1_id(j));
        rows.push_back(std::move(r1));
    }
    for (int i = 2; i <= inst.N; i++) {
        std::vector<int> r;
        for (int j = 0; j <= inst.x * inst.K; j++) r.push_back(inst.row_id(i, j));
        rows.push_back(std::move(r));
    }

    std::vector<NodeSet> parts;
    for (size_t start = 0; start < rows.size(); start += size_t(rows_per_part)) {
        std::vector<int> members;
        for (size_t i = start; i < std::min(rows.size(), start + size_t(rows_per_part)); i++)
            members.insert(members.end(), rows[i].begin(), rows[i].end());
        parts.push_back(NodeSet(std::move(members)));
    }
    return Partition::from_parts(inst.graph, std::move(parts));
}

// ---------------------------------------------------------------------------
// partition text IO

Partition read_partition(std::istream& in, const Graph& g) {
    std::string line;
    std::vector<std::pair<int, int>> rows;
    int max_part = -1;
    while (std::getline(in, line)) {
        size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        std::istringstream ls(line);
        long node, part;
        if (!(ls >> node >> part))
            fail(ErrorCode::parse_error, "bad partition line: " + line);
        if (node < 0 || node >= g.node_count() || part < 0)
            fail(ErrorCode::parse_error, "partition entry out of range: " + line);
        rows.push_back({int(node), int(part)});
        max_part = std::max(max_part, int(part));
    }
    std::vector<std::vector<int>> members(max_part + 1);
    for (auto [node, part] : rows) members[part].push_back(node);
    std::vector<NodeSet> parts;
    for (auto& m : members) {
        if (m.empty())
            fail(ErrorCode::parse_error, "partition file has a gap in part indices");
        parts.push_back(NodeSet(std::move(m)));
    }
    return Partition::from_parts(g, std::move(parts));
}

Partition read_partition_file(const std::string& path, const Graph& g) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::parse_error, "cannot open partition file: " + path);
    return read_partition(in, g);
}

void write_partition(const Partition& parts, std::ostream& out) {
    for (size_t i = 0; i < parts.parts.size(); i++)
        for (int v : parts.parts[i].ids) out << v << ' ' << i << '\n';
}

void write_partition_file(const Partition& parts, const std::string& path) {
    std::ofstream out(path);
    if (!out) fail(ErrorCode::invalid_argument, "cannot write partition file: " + path);
    write_partition(parts, out);
}

} // namespace cs
