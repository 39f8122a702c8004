#pragma once

#include <vector>

#include "spindle/secancy.hpp"
#include "spindle/types.hpp"

namespace spindle {

/// Proper coloring of the union graph (vertex union, edge union) built from
/// proper colorings of the parts: pair colors (c1, c2) flattened to
/// (c1-1)*palette2 + c2, with color 1 standing in for a missing side.
/// Palette never exceeds palette(c1) * palette(c2).
Coloring product_union_coloring(const Graph& g1, const Coloring& c1, const Graph& g2,
                                const Coloring& c2);

/// Colors a partitioned graph by offsetting each part's palette so palettes
/// stay disjoint; total palette is the sum. Proper on all intra-part edges;
/// inter-part edges are automatically bichromatic under the offsets.
/// part_colorings[i] is indexed by position within parts[i].
Coloring partition_sum_coloring(const Graph& g, const std::vector<std::vector<Vertex>>& parts,
                                const std::vector<Coloring>& part_colorings);

/// Colors an acyclic digraph by the order of the longest dipath starting at
/// each vertex; along any arc the color strictly drops. Throws on cyclic
/// input.
Coloring gallai_roy_coloring(const Digraph& d);

/// Combines proper colorings of the blocks G[X_i + S] of a clique cut-set
/// decomposition into one proper coloring with palette max over the blocks,
/// permuting each block's palette to agree on S. Block colorings are
/// full-length; entries outside X_i + S are ignored. Blocks are listed in
/// the order of G - S components sorted by smallest vertex.
Coloring clique_cutset_combine(const Graph& g, const std::vector<Vertex>& cutset,
                               const std::vector<Coloring>& block_colorings);

/// Components of g - cutset, each sorted ascending, ordered by smallest vertex.
std::vector<std::vector<Vertex>> cutset_components(const Graph& g,
                                                   const std::vector<Vertex>& cutset);

Coloring greedy_coloring(const Graph& g, const VertexOrdering& order);

}  // namespace spindle
