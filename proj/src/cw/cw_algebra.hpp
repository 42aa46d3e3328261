#pragma once

#include <memory>
#include <string>
#include <vector>

#include "core/graph.hpp"
#include "gen/instance_gen.hpp"

namespace cs {

inline constexpr int kLabelBudget = 6;

// Structural name threaded through the recursive construction so equality
// with the direct edge-list build is a canonical relabeling check.
struct Coord {
    enum Kind { None, Tree, Row } kind = None;
    int a = 0, b = 0; // Tree: (level, index); Row: (row l, column i)

    bool operator==(const Coord&) const = default;
};

// A 6-graph under construction: every node has a label in [1,6].
struct LabeledGraph {
    std::vector<int> labels;
    std::vector<Edge> edges; // normalized u < v, unsorted during build
    std::vector<Coord> coords;
    int max_label_seen = 0;

    int node_count() const { return int(labels.size()); }
    int count_label(int l) const;
    Graph to_graph() const;
};

// The four clique-width operations. Every label argument must be in
// [1, kLabelBudget]; join(i,i) is rejected. Successful execution is the
// clique-width-6 witness.
LabeledGraph op_intro(int label);
LabeledGraph op_union(const LabeledGraph& a, const LabeledGraph& b);
void op_relabel(LabeledGraph& g, int from, int to);
int op_join(LabeledGraph& g, int i, int j); // returns number of edges added

// Expression tree with text form:
//   intro(2) | union(e1,e2) | relabel(i,j,e) | join(i,j,e)
struct CwExpr {
    enum class Kind { Intro, Union, Relabel, Join };
    Kind kind;
    int a = 0, b = 0;
    std::unique_ptr<CwExpr> left, right;
};

CwExpr parse_cw_expr(const std::string& text);
std::string cw_expr_to_text(const CwExpr& e);
LabeledGraph evaluate(const CwExpr& e);

// G(Gamma,1): biclique sides labeled 2/3, three introduced nodes 1/5/6,
// joins 2-5, 3-6, 1-5, 1-6, then relabel 5,6 -> 4.
LabeledGraph build_base(int gamma);

// The paper-order combination: relabel 2->5 in g and 3->6 in h, union,
// join(5,6), relabel 5,6->4 then 1->5, introduce 1, join(1,5), relabel 5->4.
// h contributes the left column block of the result, g the right.
LabeledGraph oplus(const LabeledGraph& g, const LabeledGraph& h);

// G(Gamma,p) by recursive oplus, coords tracked throughout.
LabeledGraph build_g_gamma_p(int gamma, int p);

// True iff lg (via coords) is exactly the direct construction of inst.
bool graph_equal_to_direct(const LabeledGraph& lg, const CwInstance& inst);

} // namespace cs
