#include "spindle/trees.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <tuple>

namespace spindle {

RootedTree::RootedTree(Vertex root, std::vector<Vertex> parent, TreeView view)
    : root_(root), parent_(std::move(parent)), view_(view) {
    int n = static_cast<int>(parent_.size());
    if (root_ < 0 || root_ >= n) throw input_error("tree root out of range");
    if (parent_[root_] != -1) throw input_error("root must have parent -1");
    children_.assign(n, {});
    for (Vertex v = 0; v < n; ++v) {
        if (v == root_) continue;
        Vertex p = parent_[v];
        if (p < 0 || p >= n) throw input_error("tree parent out of range");
        children_[p].push_back(v);
    }
    for (auto& c : children_) std::sort(c.begin(), c.end());
    // Level computation doubles as cycle/reachability validation.
    level_.assign(n, -1);
    level_[root_] = 0;
    std::vector<Vertex> queue{root_};
    std::size_t head = 0;
    int seen = 1;
    while (head < queue.size()) {
        Vertex u = queue[head++];
        for (Vertex c : children_[u]) {
            level_[c] = level_[u] + 1;
            queue.push_back(c);
            ++seen;
        }
    }
    if (seen != n) throw input_error("parent map is not a tree rooted at the given root");
}

void RootedTree::check_vertex(Vertex x) const {
    if (x < 0 || x >= n()) throw input_error("unknown tree vertex");
}

Vertex RootedTree::parent(Vertex x) const {
    check_vertex(x);
    return parent_[x];
}

int RootedTree::level(Vertex x) const {
    check_vertex(x);
    return level_[x];
}

const std::vector<Vertex>& RootedTree::children(Vertex x) const {
    check_vertex(x);
    return children_[x];
}

int RootedTree::degree(Vertex x) const {
    check_vertex(x);
    return static_cast<int>(children_[x].size()) + (x == root_ ? 0 : 1);
}

std::vector<Vertex> RootedTree::ancestors(Vertex x) const {
    check_vertex(x);
    std::vector<Vertex> up;
    for (Vertex v = x; v != -1; v = parent_[v]) up.push_back(v);
    std::reverse(up.begin(), up.end());
    return up;
}

bool RootedTree::is_ancestor(Vertex a, Vertex x) const {
    check_vertex(a);
    check_vertex(x);
    Vertex v = x;
    while (v != -1 && level_[v] >= level_[a]) {
        if (v == a) return true;
        v = parent_[v];
    }
    return false;
}

Vertex RootedTree::lca(Vertex x, Vertex y) const {
    check_vertex(x);
    check_vertex(y);
    while (level_[x] > level_[y]) x = parent_[x];
    while (level_[y] > level_[x]) y = parent_[y];
    while (x != y) {
        x = parent_[x];
        y = parent_[y];
    }
    return x;
}

std::vector<Vertex> RootedTree::subtree(Vertex x) const {
    check_vertex(x);
    std::vector<Vertex> out;
    std::vector<Vertex> stack{x};
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        out.push_back(u);
        for (Vertex c : children_[u]) stack.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Vertex> RootedTree::path_between(Vertex upper, Vertex lower) const {
    if (!is_ancestor(upper, lower)) throw input_error("path endpoints are not tree-comparable");
    std::vector<Vertex> path;
    for (Vertex v = lower; v != upper; v = parent_[v]) path.push_back(v);
    path.push_back(upper);
    std::reverse(path.begin(), path.end());
    return path;
}

std::vector<Vertex> RootedTree::leaves() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n(); ++v)
        if (children_[v].empty()) out.push_back(v);
    return out;
}

std::vector<std::vector<Vertex>> RootedTree::root_paths() const {
    std::vector<std::vector<Vertex>> out;
    for (Vertex leaf : leaves()) out.push_back(ancestors(leaf));
    return out;
}

RootedTree RootedTree::with_parent(Vertex x, Vertex new_parent) const {
    std::vector<Vertex> p = parent_;
    p.at(x) = new_parent;
    return RootedTree(root_, std::move(p), view_);
}

RootedTree RootedTree::as_view(TreeView v) const {
    return RootedTree(root_, parent_, v);
}

bool is_normal(const Graph& g, const RootedTree& t) {
    if (g.n() != t.n()) throw input_error("tree does not span the graph");
    for (const Edge& e : g.edges())
        if (!t.is_ancestor(e.first, e.second) && !t.is_ancestor(e.second, e.first))
            return false;
    return true;
}

RootedTree dfs_normal_tree(const Graph& g, Vertex root) {
    if (root < 0 || root >= g.n()) throw input_error("root out of range");
    std::vector<Vertex> parent(g.n(), -2);
    parent[root] = -1;
    std::function<void(Vertex)> dfs = [&](Vertex u) {
        for (Vertex w : g.adj(u)) {
            if (parent[w] != -2) continue;
            parent[w] = u;
            dfs(w);
        }
    };
    dfs(root);
    for (Vertex v = 0; v < g.n(); ++v)
        if (parent[v] == -2) throw input_error("graph is disconnected");
    return RootedTree(root, std::move(parent));
}

namespace {

void check_spanning_out_tree(const Digraph& d, const RootedTree& t) {
    if (t.n() != d.n()) throw input_error("tree does not span the digraph");
    for (Vertex v = 0; v < d.n(); ++v) {
        if (v == t.root()) continue;
        if (!d.has_arc(t.parent(v), v))
            throw input_error("tree arc missing from the digraph: not a spanning out-tree");
    }
}

}  // namespace

bool is_maximal_out_tree(const Digraph& d, const RootedTree& t) {
    check_spanning_out_tree(d, t);
    for (const Arc& a : d.arcs()) {
        if (t.level(a.first) < t.level(a.second)) continue;  // forward arc
        if (!t.is_ancestor(a.second, a.first)) return false;
    }
    return true;
}

RootedTree make_maximal_out_tree(const Digraph& d, const RootedTree& t) {
    check_spanning_out_tree(d, t);
    RootedTree cur = t.as_view(TreeView::out_tree);
    long steps = 0;
    const long step_cap = static_cast<long>(d.n()) * d.n() + 1;
    while (true) {
        Arc found{-1, -1};
        for (const Arc& a : d.arcs()) {
            if (cur.level(a.first) < cur.level(a.second)) continue;
            if (!cur.is_ancestor(a.second, a.first)) { found = a; break; }
        }
        if (found.first == -1) break;
        RootedTree next = cur.with_parent(found.second, found.first);
        // Termination measure from the rewiring argument: no level drops and
        // the rehung vertex strictly rises.
        for (Vertex v = 0; v < d.n(); ++v)
            if (next.level(v) < cur.level(v))
                throw std::logic_error("rewiring decreased a level");
        if (next.level(found.second) <= cur.level(found.second))
            throw std::logic_error("rewiring did not raise the rehung vertex");
        cur = std::move(next);
        if (++steps > step_cap) throw std::logic_error("rewiring exceeded step bound");
    }
    return cur;
}

std::vector<std::pair<Edge, Edge>> secant_pairs_wrt_tree(const Graph& g, const RootedTree& t) {
    if (!is_normal(g, t)) throw input_error("tree is not normal in the graph");
    std::set<std::pair<Edge, Edge>> seen;
    std::vector<std::pair<Edge, Edge>> out;
    for (const auto& path : t.root_paths()) {
        if (path.size() < 4) continue;
        Graph sub = induced_subgraph(g, path);
        auto pairs = secant_pairs(sub, VertexOrdering::identity(static_cast<int>(path.size())));
        for (const auto& [a, b] : pairs) {
            Edge ea = make_edge(path[a.first], path[a.second]);
            Edge eb = make_edge(path[b.first], path[b.second]);
            auto key = ea < eb ? std::pair{ea, eb} : std::pair{eb, ea};
            if (seen.insert(key).second) out.push_back(key);
        }
    }
    return out;
}

namespace {

bool chain4(const RootedTree& t, Vertex a, Vertex b, Vertex c, Vertex d) {
    Vertex vs[4] = {a, b, c, d};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (!t.is_ancestor(vs[i], vs[j]) && !t.is_ancestor(vs[j], vs[i])) return false;
    return true;
}

// Whether comparable edges e and f interleave along their common root path.
bool tree_secant_with(const RootedTree& t, Edge e, Edge f) {
    if (!chain4(t, e.first, e.second, f.first, f.second)) return false;
    auto span = [&](Edge x) {
        int a = t.level(x.first), b = t.level(x.second);
        return a < b ? std::pair{a, b} : std::pair{b, a};
    };
    auto [elo, ehi] = span(e);
    auto [flo, fhi] = span(f);
    if (ehi - elo <= 1 || fhi - flo <= 1) return false;  // not jumps
    return (elo < flo && flo < ehi && ehi < fhi) || (flo < elo && elo < fhi && fhi < ehi);
}

bool comparable(const RootedTree& t, Vertex a, Vertex b) {
    return t.is_ancestor(a, b) || t.is_ancestor(b, a);
}

}  // namespace

Graph saturate(const Graph& g, const RootedTree& t) {
    if (!is_normal(g, t)) throw input_error("saturation requires a normal tree");
    if (!secant_pairs_wrt_tree(g, t).empty())
        throw input_error("saturation requires a secancy-free instance");

    struct Candidate {
        int lower_level, upper_level;
        Vertex lower, upper;
    };
    std::vector<Candidate> cands;
    for (Vertex u = 0; u < g.n(); ++u) {
        for (Vertex v = u + 1; v < g.n(); ++v) {
            if (g.has_edge(u, v)) continue;
            Vertex lo, hi;
            if (t.is_ancestor(u, v)) { lo = u; hi = v; }
            else if (t.is_ancestor(v, u)) { lo = v; hi = u; }
            else continue;
            cands.push_back({t.level(lo), t.level(hi), lo, hi});
        }
    }
    std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
        return std::tie(a.lower_level, a.upper_level, a.lower, a.upper) <
               std::tie(b.lower_level, b.upper_level, b.lower, b.upper);
    });

    std::vector<Edge> edges = g.edges();
    for (const Candidate& c : cands) {
        Edge e = make_edge(c.lower, c.upper);
        bool creates = false;
        if (c.upper_level - c.lower_level > 1) {  // only jumps can be secant
            for (const Edge& f : edges)
                if (tree_secant_with(t, e, f)) { creates = true; break; }
        }
        if (!creates) edges.push_back(e);
    }
    return Graph(g.n(), std::move(edges));
}

bool is_saturated(const Graph& g, const RootedTree& t) {
    if (!is_normal(g, t)) return false;
    if (!secant_pairs_wrt_tree(g, t).empty()) return false;
    for (Vertex u = 0; u < g.n(); ++u) {
        for (Vertex v = u + 1; v < g.n(); ++v) {
            if (g.has_edge(u, v) || !comparable(t, u, v)) continue;
            Edge e = make_edge(u, v);
            bool creates = false;
            if (std::abs(t.level(u) - t.level(v)) > 1) {
                for (const Edge& f : g.edges())
                    if (tree_secant_with(t, e, f)) { creates = true; break; }
            }
            if (!creates) return false;  // addable comparable non-edge
        }
    }
    return true;
}

namespace {

// Peel-based star parse on a shrinking alive set. The alive set always
// contains the root and is closed under taking parents.
struct StarParser {
    const RootedTree& t;
    std::vector<char> alive;

    explicit StarParser(const RootedTree& tree) : t(tree), alive(tree.n(), 1) {}

    int alive_degree(Vertex v) const {
        int d = (v == t.root()) ? 0 : 1;
        for (Vertex c : t.children(v))
            if (alive[c]) ++d;
        return d;
    }

    bool is_node(Vertex v) const { return alive[v] && alive_degree(v) > 2; }

    std::vector<Vertex> nodes() const {
        std::vector<Vertex> out;
        for (Vertex v = 0; v < t.n(); ++v)
            if (is_node(v)) out.push_back(v);
        return out;
    }

    bool has_node_strictly_below(Vertex u) const {
        std::vector<Vertex> stack;
        for (Vertex c : t.children(u))
            if (alive[c]) stack.push_back(c);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            if (is_node(v)) return true;
            for (Vertex c : t.children(v))
                if (alive[c]) stack.push_back(c);
        }
        return false;
    }

    void remove_strict_descendants(Vertex u) {
        std::vector<Vertex> stack;
        for (Vertex c : t.children(u))
            if (alive[c]) stack.push_back(c);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            alive[v] = 0;
            for (Vertex c : t.children(v))
                if (alive[c]) stack.push_back(c);
        }
    }

    std::vector<Vertex> alive_leaves() const {
        std::vector<Vertex> out;
        for (Vertex v = 0; v < t.n(); ++v) {
            if (!alive[v]) continue;
            bool leaf = true;
            for (Vertex c : t.children(v))
                if (alive[c]) { leaf = false; break; }
            if (leaf && v != t.root()) out.push_back(v);
        }
        return out;
    }
};

}  // namespace

StarClass classify_star(const RootedTree& t) {
    StarClass out;
    for (Vertex v = 0; v < t.n(); ++v)
        if (t.degree(v) > 2) out.nodes.push_back(v);

    if (out.nodes.empty()) {
        out.kind = StarClass::Kind::path_degenerate;
        return out;
    }
    if (out.nodes.size() == 1) {
        Vertex node = out.nodes.front();
        bool whip = true;
        for (Vertex c : t.children(node))
            if (!t.children(c).empty()) { whip = false; break; }
        out.kind = whip ? StarClass::Kind::whip : StarClass::Kind::star_like;
        out.index = 0;
        return out;
    }

    StarParser parser(t);
    int rounds = 0;
    while (true) {
        std::vector<Vertex> nodes = parser.nodes();
        if (nodes.empty()) {
            out.kind = StarClass::Kind::other;
            return out;
        }
        if (nodes.size() == 1) {
            out.kind = StarClass::Kind::star_like;
            out.index = rounds;
            return out;
        }
        std::vector<char> terminal(t.n(), 0);
        for (Vertex u : nodes)
            if (!parser.has_node_strictly_below(u)) terminal[u] = 1;
        // Every current leaf must sit strictly below a terminal node; the
        // nearest branching ancestor is the only candidate.
        for (Vertex leaf : parser.alive_leaves()) {
            Vertex v = parser.t.parent(leaf);
            while (v != -1 && !parser.is_node(v)) v = parser.t.parent(v);
            if (v == -1 || !terminal[v]) {
                out.kind = StarClass::Kind::other;
                return out;
            }
        }
        for (Vertex u = 0; u < t.n(); ++u)
            if (terminal[u]) parser.remove_strict_descendants(u);
        ++rounds;
    }
}

VertexOrdering path_tree_ordering(const RootedTree& t) {
    if (t.n() == 0) throw input_error("empty tree");
    std::vector<std::vector<Vertex>> nbr(t.n());
    for (Vertex v = 0; v < t.n(); ++v) {
        if (t.degree(v) > 2) throw input_error("tree is not path-shaped");
        if (v != t.root()) {
            nbr[v].push_back(t.parent(v));
            nbr[t.parent(v)].push_back(v);
        }
    }
    if (t.n() == 1) return VertexOrdering({t.root()});
    Vertex start = -1;
    for (Vertex v = 0; v < t.n(); ++v)
        if (nbr[v].size() == 1 && (start == -1 || v < start)) start = v;
    std::vector<Vertex> order{start};
    Vertex prev = -1, cur = start;
    while (static_cast<int>(order.size()) < t.n()) {
        Vertex next = -1;
        for (Vertex w : nbr[cur])
            if (w != prev) { next = w; break; }
        if (next == -1) throw input_error("tree is not path-shaped");
        order.push_back(next);
        prev = cur;
        cur = next;
    }
    return VertexOrdering(std::move(order));
}

std::vector<TreeJump> jump_taxonomy(const Graph& g, const RootedTree& t) {
    if (!is_normal(g, t)) throw input_error("tree is not normal in the graph");
    std::vector<TreeJump> out;
    for (const Edge& e : g.edges()) {
        Vertex lo = t.is_ancestor(e.first, e.second) ? e.first : e.second;
        Vertex hi = (lo == e.first) ? e.second : e.first;
        if (t.level(hi) - t.level(lo) <= 1) continue;  // tree edge, not a jump
        out.push_back(TreeJump{lo, hi, true, true});
    }
    auto on_path = [&](const TreeJump& i, Vertex w) {
        return t.is_ancestor(i.lower, w) && t.is_ancestor(w, i.upper);
    };
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (std::size_t j = 0; j < out.size(); ++j) {
            if (i == j) continue;
            if (on_path(out[i], out[j].lower) && on_path(out[i], out[j].upper))
                out[i].minimal = false;
            if (t.level(out[j].lower) > t.level(out[i].lower)) out[i].higher = false;
        }
    }
    return out;
}

bool jump_over(const RootedTree& t, const TreeJump& j, Vertex x) {
    return t.is_ancestor(j.lower, x) && t.is_ancestor(x, j.upper);
}

}  // namespace spindle
