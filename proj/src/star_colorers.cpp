#include "spindle/star_colorers.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <tuple>

namespace spindle {

counterexample_found::counterexample_found(Graph g, RootedTree t, long nodes)
    : std::runtime_error("no 4-coloring found for a secancy-free normal instance"),
      graph(std::move(g)), tree(std::move(t)), search_nodes(nodes) {}

namespace {

void check_no_secancy(const Graph& g, const RootedTree& t) {
    auto pairs = secant_pairs_wrt_tree(g, t);  // verifies normality as well
    if (!pairs.empty()) throw secant_violation(pairs.front().first, pairs.front().second);
}

struct Contraction {
    Graph graph;
    RootedTree tree;
    std::vector<Vertex> kept;       // new index -> old vertex
    std::vector<int> new_index;     // old vertex -> new index, -1 when absorbed
};

// Merges each absorbed vertex into its representative; intra-class edges
// vanish, other edges are remapped. Parents of kept vertices must be kept.
Contraction contract_onto(const Graph& g, const RootedTree& t,
                          const std::vector<Vertex>& rep_of) {
    Contraction c;
    c.new_index.assign(g.n(), -1);
    for (Vertex v = 0; v < g.n(); ++v) {
        if (rep_of[v] != v) continue;
        c.new_index[v] = static_cast<int>(c.kept.size());
        c.kept.push_back(v);
    }
    auto rep_new = [&](Vertex v) { return c.new_index[rep_of[v]]; };
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        int a = rep_new(e.first), b = rep_new(e.second);
        if (a != b) edges.push_back(make_edge(a, b));
    }
    c.graph = Graph(static_cast<int>(c.kept.size()), std::move(edges));
    std::vector<Vertex> parent(c.kept.size(), -1);
    for (std::size_t i = 0; i < c.kept.size(); ++i) {
        Vertex old = c.kept[i];
        if (old == t.root()) continue;
        Vertex p = t.parent(old);
        if (c.new_index[p] == -1) throw std::logic_error("parent of kept vertex absorbed");
        parent[i] = c.new_index[p];
    }
    c.tree = RootedTree(c.new_index[t.root()], std::move(parent), t.view());
    return c;
}

// Lowest comparable non-tree edge inside the subtree of `top`; returns
// (lower, upper) or (-1, -1).
std::pair<Vertex, Vertex> lowest_jump_in_subtree(const Graph& g, const RootedTree& t, Vertex top) {
    std::vector<char> inside(g.n(), 0);
    for (Vertex v : t.subtree(top)) inside[v] = 1;
    std::pair<Vertex, Vertex> best{-1, -1};
    auto better = [&](Vertex lo, Vertex hi) {
        if (best.first == -1) return true;
        auto key = std::tuple(t.level(lo), t.level(hi), lo, hi);
        auto cur = std::tuple(t.level(best.first), t.level(best.second), best.first, best.second);
        return key < cur;
    };
    for (const Edge& e : g.edges()) {
        if (!inside[e.first] || !inside[e.second]) continue;
        Vertex lo = t.is_ancestor(e.first, e.second) ? e.first : e.second;
        Vertex hi = (lo == e.first) ? e.second : e.first;
        if (t.level(hi) - t.level(lo) <= 1) continue;
        if (better(lo, hi)) best = {lo, hi};
    }
    return best;
}

// Clique cut-set split on the jump {y,z}: the tree path between them becomes
// one block, everything else (with the path replaced by the edge yz) the
// other. `color_rest` colors the spliced remainder instance.
Coloring split_on_jump(const Graph& g, const RootedTree& t, Vertex y, Vertex z,
                       const std::function<Coloring(const Graph&, const RootedTree&)>& color_rest) {
    std::vector<Vertex> segment = t.path_between(y, z);
    Graph seg_graph = induced_subgraph(g, segment);
    Coloring seg_local = color_no_secant(
        seg_graph, VertexOrdering::identity(static_cast<int>(segment.size())));

    std::vector<char> interior(g.n(), 0);
    for (std::size_t i = 1; i + 1 < segment.size(); ++i) interior[segment[i]] = 1;
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < g.n(); ++v)
        if (!interior[v]) keep.push_back(v);
    std::vector<int> local(g.n(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) local[keep[i]] = static_cast<int>(i);

    Graph g2 = induced_subgraph(g, keep);
    std::vector<Vertex> parent2(keep.size(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        Vertex v = keep[i];
        if (v == t.root()) continue;
        Vertex p = (v == z) ? y : t.parent(v);
        if (local[p] == -1) throw std::logic_error("splice removed a needed parent");
        parent2[i] = local[p];
    }
    RootedTree t2(local[t.root()], std::move(parent2), t.view());
    Coloring rest_local = color_rest(g2, t2);

    int palette = std::max({seg_local.palette, rest_local.palette, 2});
    std::vector<int> full_seg(g.n(), 1), full_rest(g.n(), 1);
    for (std::size_t i = 0; i < segment.size(); ++i) full_seg[segment[i]] = seg_local.colors[i];
    for (std::size_t i = 0; i < keep.size(); ++i) full_rest[keep[i]] = rest_local.colors[i];

    std::vector<Vertex> cutset{y, z};
    std::vector<Coloring> blocks;
    for (const auto& comp : cutset_components(g, cutset)) {
        bool inside = interior[comp.front()];
        blocks.push_back(Coloring{inside ? full_seg : full_rest, palette});
    }
    return clique_cutset_combine(g, cutset, blocks);
}

// Parity extension used after contracting a bare subtree: absorbed vertices
// alternate between their representative's color and one fresh color.
Coloring extend_contraction(const Graph& g, const RootedTree& t, const Contraction& c,
                            const Coloring& contracted, const std::vector<Vertex>& rep_of) {
    int extra = contracted.palette + 1;
    std::vector<int> colors(g.n(), 0);
    for (std::size_t i = 0; i < c.kept.size(); ++i) colors[c.kept[i]] = contracted.colors[i];
    for (Vertex v = 0; v < g.n(); ++v) {
        if (rep_of[v] == v) continue;
        Vertex rep = rep_of[v];
        int parity = (t.level(v) - t.level(rep)) % 2;
        colors[v] = parity == 0 ? contracted.colors[c.new_index[rep]] : extra;
    }
    return make_coloring(std::move(colors));
}

Coloring star0_rec(const Graph& g, const RootedTree& t);
Coloring star1_rec(const Graph& g, const RootedTree& t);

Coloring star0_rec(const Graph& g, const RootedTree& t) {
    StarClass cls = classify_star(t);
    if (cls.kind == StarClass::Kind::path_degenerate)
        return color_no_secant(g, path_tree_ordering(t));
    Vertex x = cls.nodes.front();

    auto [y, z] = lowest_jump_in_subtree(g, t, x);
    if (y != -1) return split_on_jump(g, t, y, z, star0_rec);

    // The node's subtree carries only tree edges: contract it onto the node,
    // 3-color the remaining path, fill the subtree in by level parity.
    std::vector<Vertex> rep_of(g.n());
    std::iota(rep_of.begin(), rep_of.end(), 0);
    for (Vertex v : t.subtree(x)) rep_of[v] = x;
    Contraction c = contract_onto(g, t, rep_of);
    Coloring contracted = color_no_secant(c.graph, path_tree_ordering(c.tree));
    return extend_contraction(g, t, c, contracted, rep_of);
}

// 4-coloring backtracking used both as the general colorer and as the
// fallback core of the star^1 recursion.
FourColorSearch four_color_search(const Graph& g) {
    FourColorSearch result;
    std::vector<Vertex> order(g.n());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    std::vector<int> colors(g.n(), 0);
    std::function<bool(int, int)> extend = [&](int pos, int used) {
        ++result.nodes;
        if (pos == g.n()) return true;
        Vertex v = order[pos];
        int limit = std::min(4, used + 1);
        for (int col = 1; col <= limit; ++col) {
            bool clash = false;
            for (Vertex w : g.adj(v))
                if (colors[w] == col) { clash = true; break; }
            if (clash) continue;
            colors[v] = col;
            if (extend(pos + 1, std::max(used, col))) return true;
            colors[v] = 0;
        }
        return false;
    };
    if (g.n() == 0) {
        result.coloring = Coloring{{}, 0};
        return result;
    }
    if (extend(0, 0)) result.coloring = make_coloring(colors);
    return result;
}

Coloring star1_rec(const Graph& g, const RootedTree& t) {
    // Jumps whose whole tree path avoids branching vertices admit a cycle
    // block; pick the innermost so the block is an induced cycle.
    std::pair<Vertex, Vertex> pick{-1, -1};
    int pick_span = 0;
    for (const Edge& e : g.edges()) {
        Vertex lo = t.is_ancestor(e.first, e.second) ? e.first : e.second;
        Vertex hi = (lo == e.first) ? e.second : e.first;
        int span = t.level(hi) - t.level(lo);
        if (span <= 1) continue;
        bool over_node = false;
        for (Vertex w : t.path_between(lo, hi))
            if (t.degree(w) > 2) { over_node = true; break; }
        if (over_node) continue;
        if (pick.first == -1 || span < pick_span ||
            (span == pick_span &&
             std::tuple(t.level(lo), lo, hi) <
                 std::tuple(t.level(pick.first), pick.first, pick.second))) {
            pick = {lo, hi};
            pick_span = span;
        }
    }
    if (pick.first != -1) return split_on_jump(g, t, pick.first, pick.second, star1_rec);

    // Every jump passes a branching vertex. When the lowest node's successor
    // subtrees are bare we contract them onto a whip, color it with unified
    // leaf colors, and alternate inside the subtrees.
    StarClass cls = classify_star(t);
    if (cls.kind == StarClass::Kind::path_degenerate)
        return color_no_secant(g, path_tree_ordering(t));
    Vertex x = cls.nodes.front();
    for (Vertex cand : cls.nodes)
        if (t.level(cand) < t.level(x)) x = cand;

    bool bare = true;
    for (Vertex yi : t.children(x))
        if (lowest_jump_in_subtree(g, t, yi).first != -1) { bare = false; break; }
    if (bare) {
        std::vector<Vertex> rep_of(g.n());
        std::iota(rep_of.begin(), rep_of.end(), 0);
        for (Vertex yi : t.children(x))
            for (Vertex v : t.subtree(yi)) rep_of[v] = yi;
        Contraction c = contract_onto(g, t, rep_of);
        if (classify_star(c.tree).kind == StarClass::Kind::whip &&
            is_normal(c.graph, c.tree) && secant_pairs_wrt_tree(c.graph, c.tree).empty()) {
            Coloring contracted = color_whip(c.graph, c.tree);
            return extend_contraction(g, t, c, contracted, rep_of);
        }
    }

    FourColorSearch search = four_color_search(g);
    if (!search.coloring)
        throw std::logic_error("star^1 instance admitted no 4-coloring; input corrupted");
    return *search.coloring;
}

}  // namespace

Coloring color_whip(const Graph& g, const RootedTree& t) {
    check_no_secancy(g, t);
    StarClass cls = classify_star(t);
    if (cls.kind != StarClass::Kind::whip) throw input_error("tree is not a whip");
    Vertex node = cls.nodes.front();
    const std::vector<Vertex>& leaves = t.children(node);
    Vertex rep = leaves.front();

    std::vector<Vertex> rep_of(g.n());
    std::iota(rep_of.begin(), rep_of.end(), 0);
    for (Vertex l : leaves) rep_of[l] = rep;
    Contraction c = contract_onto(g, t, rep_of);
    Coloring contracted = color_no_secant(c.graph, path_tree_ordering(c.tree));

    std::vector<int> colors(g.n(), 0);
    for (std::size_t i = 0; i < c.kept.size(); ++i) colors[c.kept[i]] = contracted.colors[i];
    for (Vertex l : leaves) colors[l] = contracted.colors[c.new_index[rep]];
    return make_coloring(std::move(colors));
}

Coloring color_star0(const Graph& g, const RootedTree& t) {
    check_no_secancy(g, t);
    StarClass cls = classify_star(t);
    bool star0 = cls.kind == StarClass::Kind::whip ||
                 (cls.kind == StarClass::Kind::star_like && cls.index == 0);
    if (!star0) throw input_error("tree is not star^0-like");
    if (!is_saturated(g, t)) return star0_rec(saturate(g, t), t);
    return star0_rec(g, t);
}

Coloring color_star1(const Graph& g, const RootedTree& t) {
    check_no_secancy(g, t);
    StarClass cls = classify_star(t);
    if (!(cls.kind == StarClass::Kind::star_like && cls.index == 1))
        throw input_error("tree is not star^1-like");
    if (!is_saturated(g, t)) return star1_rec(saturate(g, t), t);
    return star1_rec(g, t);
}

FourColorSearch color_normal_nosecant_general(const Graph& g, const RootedTree& t) {
    check_no_secancy(g, t);
    return four_color_search(g);
}

namespace {

struct GrowingTree {
    std::vector<Vertex> parent;
    std::vector<std::vector<Vertex>> kids;
    Vertex root;

    explicit GrowingTree(const RootedTree& t) : parent(t.parent_map()), root(t.root()) {
        kids.resize(parent.size());
        for (Vertex v = 0; v < static_cast<int>(parent.size()); ++v)
            if (v != root) kids[parent[v]].push_back(v);
    }

    Vertex add(Vertex p) {
        Vertex w = static_cast<int>(parent.size());
        parent.push_back(p);
        kids.emplace_back();
        kids[p].push_back(w);
        return w;
    }

    // Spider tower of the requested node height below p.
    void attach_tower(Vertex p, int h) {
        Vertex w = add(p);
        if (h == 1) {
            add(w);
            add(w);
            return;
        }
        attach_tower(w, h - 1);
        attach_tower(w, h - 1);
    }

    void collect_leaves(Vertex v, std::vector<Vertex>& out) const {
        if (kids[v].empty()) {
            out.push_back(v);
            return;
        }
        for (Vertex c : kids[v]) collect_leaves(c, out);
    }

    void raise(Vertex branch, int delta) {
        if (delta <= 0) return;
        std::vector<Vertex> ls;
        collect_leaves(branch, ls);
        for (Vertex l : ls) attach_tower(l, delta);
    }
};

}  // namespace

FlattenResult flatten_to_star_like(const Graph& g, const RootedTree& t) {
    if (!is_saturated(g, t)) throw input_error("flattening requires a saturated instance");

    std::vector<Vertex> identity(g.n());
    std::iota(identity.begin(), identity.end(), 0);

    StarClass cls = classify_star(t);
    if (cls.kind == StarClass::Kind::whip || cls.kind == StarClass::Kind::star_like)
        return FlattenResult{g, t, identity};

    GrowingTree grow(t);
    if (cls.kind == StarClass::Kind::path_degenerate) {
        Vertex deepest = 0;
        for (Vertex v = 0; v < t.n(); ++v)
            if (t.level(v) > t.level(deepest)) deepest = v;
        grow.attach_tower(deepest, 1);
    } else {
        // Balance the spider-nesting height of every branch so the peeling
        // parse consumes the tree level by level into a single top node.
        std::function<int(Vertex)> clean = [&](Vertex v) -> int {
            std::vector<Vertex> kids = grow.kids[v];
            if (kids.empty()) return 0;
            std::vector<int> hs;
            hs.reserve(kids.size());
            for (Vertex c : kids) hs.push_back(clean(c));
            int degree = static_cast<int>(kids.size()) + (v == grow.root ? 0 : 1);
            if (degree > 2) {
                int tgt = *std::max_element(hs.begin(), hs.end());
                for (std::size_t i = 0; i < kids.size(); ++i)
                    grow.raise(kids[i], tgt - hs[i]);
                return tgt + 1;
            }
            if (v == grow.root && kids.size() == 2) {
                int a = hs[0], b = hs[1];
                if (a == b) {
                    grow.raise(kids[0], 1);
                    ++a;
                }
                if (a > b)
                    grow.raise(kids[1], (a - 1) - b);
                else
                    grow.raise(kids[0], (b - 1) - a);
                return std::max(a, b);
            }
            return hs[0];
        };
        clean(grow.root);
    }

    int total = static_cast<int>(grow.parent.size());
    std::vector<Edge> edges = g.edges();
    for (Vertex v = g.n(); v < total; ++v) edges.push_back(make_edge(grow.parent[v], v));
    Graph g2(total, std::move(edges));
    RootedTree t2(grow.root, grow.parent, t.view());

    StarClass out_cls = classify_star(t2);
    if (!(out_cls.kind == StarClass::Kind::whip || out_cls.kind == StarClass::Kind::star_like))
        throw std::logic_error("balancing failed to reach a star-like tree");
    return FlattenResult{std::move(g2), std::move(t2), identity};
}

}  // namespace spindle
