#pragma once

#include <optional>

#include "spindle/coloring_engine.hpp"
#include "spindle/trees.hpp"

namespace spindle {

/// 3-coloring of a saturated-or-plain whip instance in which all leaves share
/// one color: the leaves are contracted onto a single vertex, the resulting
/// Hamiltonian path is 3-colored, and the leaf color is copied back.
Coloring color_whip(const Graph& g, const RootedTree& t);

/// 4-coloring over a star^0-like normal tree. A jump below the node yields a
/// clique cut-set {y,z} splitting off a path-shaped block; otherwise the
/// node's subtree is contracted, the remaining path 3-colored, and the
/// subtree filled in with the contraction color and a fourth color by level
/// parity. Unsaturated inputs are saturated first.
Coloring color_star0(const Graph& g, const RootedTree& t);

/// 4-coloring over a star^1-like normal tree. Jumps whose tree path avoids
/// all branching vertices split off cycle blocks on a clique cut-set; when
/// every jump passes a branching vertex, bare successor subtrees are
/// contracted onto a whip and recolored, with exact search covering the
/// irreducible cores. Unsaturated inputs are saturated first.
Coloring color_star1(const Graph& g, const RootedTree& t);

struct FourColorSearch {
    std::optional<Coloring> coloring;
    long nodes = 0;
};

/// Exact backtracking search for a 4-coloring of any secancy-free normal
/// instance (saturation not required). An empty result is a counterexample
/// to the four-color claim for such instances and worth archiving.
FourColorSearch color_normal_nosecant_general(const Graph& g, const RootedTree& t);

/// Raised by pipelines that require a 4-coloring to exist.
struct counterexample_found : std::runtime_error {
    Graph graph;
    RootedTree tree;
    long search_nodes;
    counterexample_found(Graph g, RootedTree t, long nodes);
};

struct FlattenResult {
    Graph graph;
    RootedTree tree;
    std::vector<Vertex> correspondence;  // old vertex -> new vertex
};

/// Embeds a saturated secancy-free instance into one whose tree is
/// star^i-like for some i, preserving the tree order and the non-tree edge
/// set exactly. Light branches are balanced by hanging spider towers below
/// leaves; old vertices keep their indices.
FlattenResult flatten_to_star_like(const Graph& g, const RootedTree& t);

}  // namespace spindle
