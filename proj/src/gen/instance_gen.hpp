#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "core/graph.hpp"

namespace cs {

// Ordered list of mutually disjoint connected node sets. Coverage of all
// nodes is not required: part_of holds kNoPart for uncovered nodes.
inline constexpr int kNoPart = -1;

struct Partition {
    std::vector<NodeSet> parts;
    std::vector<int> part_of; // node -> part index or kNoPart

    static Partition from_parts(const Graph& g, std::vector<NodeSet> parts);
    int part_count() const { return int(parts.size()); }
    bool covers_all() const;
};

// node -> structural name, bijective; serialized as a JSON sidecar so tests
// and the CLI can address vertices like v_1_0 by the generator's layout.
struct IdMap {
    std::map<std::string, int> name_to_id;

    int id(const std::string& name) const;
    std::string to_json(const std::string& family,
                        const std::map<std::string, long>& params) const;
};

// ---- k-chordal family G(k,x,N) -------------------------------------------
//
// Vertices: row 1 = v_1_j for 0<=j<=x, rows i=2..N = v_i_j for 0<=j<=x*K,
// K = k/2 - 1. Ids are row-major: row 1 first, then rows 2..N.
struct KChordalInstance {
    Graph graph;
    int k = 0, x = 0, N = 0, K = 0;
    IdMap id_map;

    int row1_id(int j) const;       // v_1_j
    int row_id(int i, int j) const; // v_i_j, i >= 2
};

KChordalInstance gen_k_chordal(int k, int x, int N);

// ---- clique-width-6 family G(Gamma,p), direct edge-list construction ------
//
// Complete binary tree T of depth p (u_j_i, level j, index i) plus Gamma
// rows v_l_i of 2^p columns; leaf i joins every row node in column i and
// consecutive columns form bicliques across all rows.
struct CwInstance {
    Graph graph;
    int gamma = 0, p = 0;
    IdMap id_map;

    int tree_id(int level, int idx) const; // u_level_idx
    int row_id(int l, int i) const;        // v_l_i, 1 <= l <= gamma
};

CwInstance gen_clique_width_direct(int gamma, int p);

// ---- synthetic inputs ------------------------------------------------------

// Multi-source randomized BFS growth from num_parts distinct seed nodes.
// Covers every node; deterministic given seed. Requires g connected.
Partition gen_random_connected_partition(const Graph& g, int num_parts, uint64_t seed);

// Rejection-sampled connected random graph with diameter exactly d (3 or 4).
// edge_prob <= 0 selects an adaptive schedule. Throws generation_failed when
// max_tries samples are exhausted.
Graph gen_diameter_d_graph(int n, int d, double edge_prob, uint64_t seed,
                           int max_tries = 200);

// Rows of G(k,x,N) grouped rows_per_part at a time, in row order
// (row 1, then rows 2..N). Every part is connected and the union covers V.
Partition partition_into_path_parts(const KChordalInstance& inst, int rows_per_part);

// Connected Erdos-Renyi sample (resamples until connected), for stress trials.
Graph gen_connected_gnp(int n, double p, uint64_t seed, int max_tries = 200);

// ---- partition text format: lines "node part_index" -----------------------
Partition read_partition(std::istream& in, const Graph& g);
Partition read_partition_file(const std::string& path, const Graph& g);
void write_partition(const Partition& parts, std::ostream& out);
void write_partition_file(const Partition& parts, const std::string& path);

} // namespace cs
