#include "cw/cw_algebra.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include "core/error.hpp"

namespace cs {

namespace {

void check_label(int l) {
    require(l >= 1 && l <= kLabelBudget, ErrorCode::invalid_argument,
            "label " + std::to_string(l) + " outside [1," +
                std::to_string(kLabelBudget) + "]");
}

uint64_t edge_key(int u, int v) {
    if (u > v) std::swap(u, v);
    return (uint64_t(u) << 32) | uint64_t(v);
}

} // namespace

int LabeledGraph::count_label(int l) const {
    int c = 0;
    for (int x : labels) c += (x == l);
    return c;
}

Graph LabeledGraph::to_graph() const {
    return Graph::from_edges(node_count(), edges);
}

LabeledGraph op_intro(int label) {
    check_label(label);
    LabeledGraph g;
    g.labels = {label};
    g.coords = {Coord{}};
    g.max_label_seen = label;
    return g;
}

LabeledGraph op_union(const LabeledGraph& a, const LabeledGraph& b) {
    LabeledGraph g = a;
    int base = a.node_count();
    g.labels.insert(g.labels.end(), b.labels.begin(), b.labels.end());
    g.coords.insert(g.coords.end(), b.coords.begin(), b.coords.end());
    for (auto [u, v] : b.edges) g.edges.push_back({u + base, v + base});
    g.max_label_seen = std::max(a.max_label_seen, b.max_label_seen);
    return g;
}

void op_relabel(LabeledGraph& g, int from, int to) {
    check_label(from);
    check_label(to);
    for (int& l : g.labels)
        if (l == from) l = to;
    g.max_label_seen = std::max({g.max_label_seen, from, to});
}

int op_join(LabeledGraph& g, int i, int j) {
    check_label(i);
    check_label(j);
    require(i != j, ErrorCode::invalid_argument, "join(i,i) is not defined");
    std::unordered_set<uint64_t> present;
    present.reserve(g.edges.size() * 2);
    for (auto [u, v] : g.edges) present.insert(edge_key(u, v));
    std::vector<int> left, right;
    for (int v = 0; v < g.node_count(); v++) {
        if (g.labels[v] == i) left.push_back(v);
        if (g.labels[v] == j) right.push_back(v);
    }
    int added = 0;
    for (int u : left)
        for (int v : right) {
            if (present.insert(edge_key(u, v)).second) {
                g.edges.push_back(u < v ? Edge{u, v} : Edge{v, u});
                added++;
            }
        }
    g.max_label_seen = std::max({g.max_label_seen, i, j});
    return added;
}

// ---------------------------------------------------------------------------
// expression text form

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) pos++;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            pos++;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c))
            fail(ErrorCode::parse_error,
                 "expected '" + std::string(1, c) + "' at offset " + std::to_string(pos));
    }

    std::string ident() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) pos++;
        if (start == pos) fail(ErrorCode::parse_error, "expected operation name");
        return s.substr(start, pos - start);
    }

    int number() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) pos++;
        if (start == pos) fail(ErrorCode::parse_error, "expected label number");
        return std::stoi(s.substr(start, pos - start));
    }

    CwExpr expr() {
        std::string op = ident();
        expect('(');
        CwExpr e;
        if (op == "intro") {
            e.kind = CwExpr::Kind::Intro;
            e.a = number();
        } else if (op == "union") {
            e.kind = CwExpr::Kind::Union;
            e.left = std::make_unique<CwExpr>(expr());
            expect(',');
            e.right = std::make_unique<CwExpr>(expr());
        } else if (op == "relabel" || op == "join") {
            e.kind = op == "relabel" ? CwExpr::Kind::Relabel : CwExpr::Kind::Join;
            e.a = number();
            expect(',');
            e.b = number();
            expect(',');
            e.left = std::make_unique<CwExpr>(expr());
        } else {
            fail(ErrorCode::parse_error, "unknown operation: " + op);
        }
        expect(')');
        return e;
    }
};

} // namespace

CwExpr parse_cw_expr(const std::string& text) {
    Parser p(text);
    CwExpr e = p.expr();
    p.skip_ws();
    if (p.pos != text.size())
        fail(ErrorCode::parse_error, "trailing input after expression");
    return e;
}

std::string cw_expr_to_text(const CwExpr& e) {
    switch (e.kind) {
    case CwExpr::Kind::Intro:
        return "intro(" + std::to_string(e.a) + ")";
    case CwExpr::Kind::Union:
        return "union(" + cw_expr_to_text(*e.left) + ", " + cw_expr_to_text(*e.right) + ")";
    case CwExpr::Kind::Relabel:
        return "relabel(" + std::to_string(e.a) + ", " + std::to_string(e.b) + ", " +
               cw_expr_to_text(*e.left) + ")";
    case CwExpr::Kind::Join:
        return "join(" + std::to_string(e.a) + ", " + std::to_string(e.b) + ", " +
               cw_expr_to_text(*e.left) + ")";
    }
    fail(ErrorCode::internal, "bad expression node");
}

LabeledGraph evaluate(const CwExpr& e) {
    switch (e.kind) {
    case CwExpr::Kind::Intro:
        return op_intro(e.a);
    case CwExpr::Kind::Union:
        return op_union(evaluate(*e.left), evaluate(*e.right));
    case CwExpr::Kind::Relabel: {
        LabeledGraph g = evaluate(*e.left);
        op_relabel(g, e.a, e.b);
        return g;
    }
    case CwExpr::Kind::Join: {
        LabeledGraph g = evaluate(*e.left);
        op_join(g, e.a, e.b);
        return g;
    }
    }
    fail(ErrorCode::internal, "bad expression node");
}

// ---------------------------------------------------------------------------
// G(Gamma,p) construction

LabeledGraph build_base(int gamma) {
    require(gamma >= 1, ErrorCode::invalid_argument, "gamma must be >= 1");
    // biclique K_{gamma,gamma}: side 2 = column 0, side 3 = column 1
    LabeledGraph g = op_intro(2);
    g.coords[0] = {Coord::Row, 1, 0};
    for (int l = 2; l <= gamma; l++) {
        LabeledGraph node = op_intro(2);
        node.coords[0] = {Coord::Row, l, 0};
        g = op_union(g, node);
    }
    for (int l = 1; l <= gamma; l++) {
        LabeledGraph node = op_intro(3);
        node.coords[0] = {Coord::Row, l, 1};
        g = op_union(g, node);
    }
    op_join(g, 2, 3);

    LabeledGraph root = op_intro(1);
    root.coords[0] = {Coord::Tree, 0, 0};
    LabeledGraph left_leaf = op_intro(5);
    left_leaf.coords[0] = {Coord::Tree, 1, 0};
    LabeledGraph right_leaf = op_intro(6);
    right_leaf.coords[0] = {Coord::Tree, 1, 1};
    g = op_union(g, root);
    g = op_union(g, left_leaf);
    g = op_union(g, right_leaf);

    op_join(g, 2, 5);
    op_join(g, 3, 6);
    op_join(g, 1, 5);
    op_join(g, 1, 6);
    op_relabel(g, 5, 4);
    op_relabel(g, 6, 4);
    return g;
}

namespace {

// depth of a coord-carrying operand = max tree level present
int operand_depth(const LabeledGraph& g) {
    int depth = 0;
    for (const Coord& c : g.coords)
        if (c.kind == Coord::Tree) depth = std::max(depth, c.a);
    return depth;
}

void check_form(const LabeledGraph& g, int gamma, const char* which) {
    bool ok = g.count_label(1) == 1 && g.count_label(2) == gamma &&
              g.count_label(3) == gamma;
    require(ok, ErrorCode::malformed_operand,
            std::string(which) + " operand is not in G(gamma) form");
}

} // namespace

LabeledGraph oplus(const LabeledGraph& g, const LabeledGraph& h) {
    int gamma = g.count_label(2);
    require(gamma >= 1, ErrorCode::malformed_operand, "left operand has no label-2 nodes");
    check_form(g, gamma, "left");
    check_form(h, gamma, "right");

    LabeledGraph a = g; // right block
    LabeledGraph b = h; // left block
    op_relabel(a, 2, 5);
    op_relabel(b, 3, 6);

    // coords: result depth = operand depth + 1; h keeps its columns and
    // tree indices, g shifts right by the operand width
    int d = operand_depth(a);
    int half = 1 << d;
    for (Coord& c : b.coords) {
        if (c.kind == Coord::Tree) c.a += 1;
    }
    for (Coord& c : a.coords) {
        if (c.kind == Coord::Tree) {
            c = {Coord::Tree, c.a + 1, c.b + (1 << c.a)};
        } else if (c.kind == Coord::Row) {
            c.b += half;
        }
    }

    LabeledGraph out = op_union(b, a);
    op_join(out, 5, 6);
    op_relabel(out, 5, 4);
    op_relabel(out, 6, 4);
    op_relabel(out, 1, 5);

    LabeledGraph root = op_intro(1);
    root.coords[0] = {Coord::Tree, 0, 0};
    out = op_union(out, root);
    op_join(out, 1, 5);
    op_relabel(out, 5, 4);
    return out;
}

LabeledGraph build_g_gamma_p(int gamma, int p) {
    require(p >= 1, ErrorCode::invalid_argument, "p must be >= 1");
    if (p == 1) return build_base(gamma);
    LabeledGraph sub = build_g_gamma_p(gamma, p - 1);
    return oplus(sub, sub);
}

bool graph_equal_to_direct(const LabeledGraph& lg, const CwInstance& inst) {
    if (lg.node_count() != inst.graph.node_count()) return false;
    std::vector<int> to_direct(lg.node_count(), -1);
    std::vector<bool> hit(inst.graph.node_count(), false);
    for (int v = 0; v < lg.node_count(); v++) {
        const Coord& c = lg.coords[v];
        int id;
        if (c.kind == Coord::Tree)
            id = inst.tree_id(c.a, c.b);
        else if (c.kind == Coord::Row)
            id = inst.row_id(c.a, c.b);
        else
            return false; // coord missing, cannot canonicalize
        if (hit[id]) return false;
        hit[id] = true;
        to_direct[v] = id;
    }
    if (lg.edges.size() != size_t(inst.graph.edge_count())) return false;
    std::vector<Edge> mapped;
    mapped.reserve(lg.edges.size());
    for (auto [u, v] : lg.edges) {
        int a = to_direct[u], b = to_direct[v];
        mapped.push_back(a < b ? Edge{a, b} : Edge{b, a});
    }
    std::sort(mapped.begin(), mapped.end());
    return mapped == inst.graph.edges();
}

} // namespace cs
