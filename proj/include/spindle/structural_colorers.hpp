#pragma once

#include <optional>

#include "spindle/coloring_engine.hpp"
#include "spindle/patterns.hpp"
#include "spindle/trees.hpp"

namespace spindle {

/// Result of a conditional colorer: either a proper coloring within the
/// declared bound or a valid certificate of the forbidden subdivision.
struct ColorOrCertificate {
    std::optional<Coloring> coloring;
    std::optional<SubdivisionCertificate> certificate;
    int bound = 0;

    bool has_coloring() const { return coloring.has_value(); }
};

/// Colorer for digraphs with a Hamiltonian dipath and no C(k1,k2)
/// subdivision, k1 >= k2 >= 2, bound 3*k1: vertices are classed by position
/// mod k1; a secant arc pair inside a class yields a two-blocks-cycle
/// certificate, otherwise every class is 3-colored along its ordering and the
/// classes get disjoint palettes.
ColorOrCertificate color_hamdipath_c2free(const Digraph& d, const std::vector<Vertex>& path,
                                          int k1, int k2);

/// Covers the digraph by greedily grown vertex-disjoint dipaths and colors
/// each cover path's induced subdigraph with the Hamiltonian-dipath colorer
/// under disjoint palettes; bound 3 * (#cover paths) * max(k1,k2).
/// A certificate surfacing from any cover path is returned as-is.
ColorOrCertificate color_pathcover_c2free(const Digraph& d, int k1, int k2);

/// Colorer for Hamiltonian digraphs without B(k1,k2;k3) subdivisions, bound
/// 4*max: classes by position mod k lose their first vertex, which takes a
/// fourth color; secant edges inside a trimmed class yield a bispindle
/// certificate assembled from the two chords and cycle segments.
ColorOrCertificate color_hamcycle_bispindlefree(const Digraph& d, const std::vector<Vertex>& cycle,
                                                int k1, int k2, int k3);

/// Colorer for Hamiltonian digraphs without B(k1,1;k3) subdivisions, bound
/// 2k-1 with k = max(k1,k3): every vertex's neighborhood must sit among the
/// 2k-2 cyclically nearest vertices, a violating chord yields the
/// certificate, and otherwise greedy coloring meets the degree bound.
ColorOrCertificate color_hamcycle_b1free(const Digraph& d, const std::vector<Vertex>& cycle,
                                         int k1, int k3);

/// Colorer for digraphs with a spanning out-tree and no C(k1,k2)
/// subdivision, k1 >= k2 >= 2, bound 4*k1*(k2-1). The tree is first rewired
/// maximal; levels are classed mod k1; per class, tree-comparable arcs are
/// colored through the star-tree machinery (4 colors) and the remaining arcs
/// by longest-path order (k2-1 colors), multiplied per class and summed
/// across classes. Secancy or a long dipath in the incomparable layer yields
/// a two-blocks-cycle certificate.
ColorOrCertificate color_outtree_c2free(const Digraph& d, const RootedTree& t, int k1, int k2);

/// Greedy maximal-dipath cover used by the path-cover colorer.
std::vector<std::vector<Vertex>> greedy_dipath_cover(const Digraph& d);

}  // namespace spindle
