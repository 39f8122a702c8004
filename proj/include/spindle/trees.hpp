#pragma once

#include <vector>

#include "spindle/secancy.hpp"
#include "spindle/types.hpp"

namespace spindle {

enum class TreeView { undirected_normal, out_tree };

/// Rooted spanning tree over dense indices, stored as a parent map
/// (parent[root] == -1). The view flag records whether the tree is read as
/// an undirected normal tree or as an out-tree with arcs parent -> child.
class RootedTree {
public:
    RootedTree() = default;
    RootedTree(Vertex root, std::vector<Vertex> parent,
               TreeView view = TreeView::undirected_normal);

    int n() const { return static_cast<int>(parent_.size()); }
    Vertex root() const { return root_; }
    Vertex parent(Vertex x) const;
    TreeView view() const { return view_; }
    const std::vector<Vertex>& parent_map() const { return parent_; }

    int level(Vertex x) const;
    const std::vector<Vertex>& children(Vertex x) const;
    /// Undirected degree: children count plus one for the parent edge.
    int degree(Vertex x) const;

    /// Vertices of the root path to x, root first, x last.
    std::vector<Vertex> ancestors(Vertex x) const;
    /// True iff a lies on the root path to x (a == x included).
    bool is_ancestor(Vertex a, Vertex x) const;
    /// Common ancestor of maximum level.
    Vertex lca(Vertex x, Vertex y) const;
    /// Vertex set of the subtree rooted at x (x included), ascending.
    std::vector<Vertex> subtree(Vertex x) const;
    /// Tree path between two comparable vertices, upper end first.
    std::vector<Vertex> path_between(Vertex upper, Vertex lower) const;

    std::vector<Vertex> leaves() const;
    /// Maximal root-starting paths, one per leaf.
    std::vector<std::vector<Vertex>> root_paths() const;

    RootedTree with_parent(Vertex x, Vertex new_parent) const;
    RootedTree as_view(TreeView v) const;

private:
    Vertex root_ = 0;
    std::vector<Vertex> parent_;
    std::vector<int> level_;
    std::vector<std::vector<Vertex>> children_;
    TreeView view_ = TreeView::undirected_normal;

    void check_vertex(Vertex x) const;
};

/// True iff every edge of g joins tree-comparable vertices. The tree must
/// span g's vertex set.
bool is_normal(const Graph& g, const RootedTree& t);

/// Depth-first spanning tree from `root`; DFS trees are always normal.
/// Throws on disconnected input.
RootedTree dfs_normal_tree(const Graph& g, Vertex root);

/// Rewires a spanning out-tree until every level-non-increasing arc of d
/// points to an ancestor of its tail. Each rewiring step strictly raises the
/// rehung vertex's level and no vertex's level ever drops.
RootedTree make_maximal_out_tree(const Digraph& d, const RootedTree& t);

bool is_maximal_out_tree(const Digraph& d, const RootedTree& t);

/// Edge pairs that are secant along some root-starting path of t.
std::vector<std::pair<Edge, Edge>> secant_pairs_wrt_tree(const Graph& g, const RootedTree& t);

/// Adds tree-comparable non-edges, scanned by (lower level, upper level,
/// lower index, upper index), as long as no secant pair appears. The result
/// is maximal: any further comparable edge would create one.
Graph saturate(const Graph& g, const RootedTree& t);

bool is_saturated(const Graph& g, const RootedTree& t);

struct StarClass {
    enum class Kind { path_degenerate, whip, star_like, other };
    Kind kind = Kind::other;
    int index = -1;               // i for star^i-like trees; 0 for whips
    std::vector<Vertex> nodes;    // vertices of degree > 2
};

/// Star taxonomy of a rooted tree: exactly one branching vertex is a
/// star^0-like tree (a whip when its successors are all leaves); trees
/// obtained by replacing every leaf of a star^(i-1)-like tree with a
/// star^0-like tree are star^i-like. Bare paths are reported separately.
StarClass classify_star(const RootedTree& t);

/// Enumeration of a path-shaped tree (every degree at most 2) along its
/// underlying path. Secancy-free instances stay secancy-free under it even
/// when the root sits mid-path.
VertexOrdering path_tree_ordering(const RootedTree& t);

struct TreeJump {
    Vertex lower = -1;
    Vertex upper = -1;
    bool minimal = false;  // no other jump has both ends inside this one's tree path
    bool higher = false;   // no other jump has a lower end of strictly larger level
};

/// All tree-comparable jumps of g with minimal/higher flags.
std::vector<TreeJump> jump_taxonomy(const Graph& g, const RootedTree& t);

bool jump_over(const RootedTree& t, const TreeJump& j, Vertex x);

}  // namespace spindle
