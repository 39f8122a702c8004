#pragma once

#include <vector>

#include "spindle/types.hpp"

namespace spindle {

/// Linear enumeration of all vertices; order and position are inverse
/// bijections.
struct VertexOrdering {
    std::vector<Vertex> order;
    std::vector<int> position;

    explicit VertexOrdering(std::vector<Vertex> ord);
    static VertexOrdering identity(int n);
    int n() const { return static_cast<int>(order.size()); }
};

/// Raised when an operation requiring a secancy-free input finds an
/// offending pair of jumps.
struct secant_violation : std::runtime_error {
    Edge first_jump;
    Edge second_jump;
    secant_violation(Edge a, Edge b);
};

/// Edges joining vertices more than one position apart.
std::vector<Edge> jumps(const Graph& g, const VertexOrdering& l);

/// All unordered pairs of jumps whose position intervals interleave
/// (l < p < m < q or p < l < q < m).
std::vector<std::pair<Edge, Edge>> secant_pairs(const Graph& g, const VertexOrdering& l);

struct DegeneracyResult {
    int degeneracy = 0;
    VertexOrdering elimination;  // removal order; min-degree first, lowest index tie-break
};

DegeneracyResult degeneracy(const Graph& g);

/// 3-coloring of a graph whose ordering has no secant pairs: minimum-degree
/// elimination (such graphs are 2-degenerate) followed by greedy
/// back-insertion. Throws secant_violation if the precondition fails.
Coloring color_no_secant(const Graph& g, const VertexOrdering& l);

}  // namespace spindle
