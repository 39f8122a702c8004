#pragma once

#include <optional>

#include "spindle/types.hpp"

namespace spindle {

struct ChromaticResult {
    int chi = 0;
    Coloring witness;
};

/// Exact chromatic number by branch and bound over color classes, vertices
/// tried in descending-degree order. Refuses instances above `limit`.
ChromaticResult chromatic_number_exact(const Graph& g, int limit = 20);

/// Size of a maximum independent set. Refuses instances above `limit`.
int independence_number(const Graph& g, int limit = 20);

/// True iff the digraph is a single strongly connected component
/// (a single vertex counts as strong).
bool is_strong(const Digraph& d);

bool is_tournament(const Digraph& d);

/// Hamiltonian directed path. Tournaments use the classical insertion
/// construction and always succeed; other digraphs fall back to a
/// backtracking search which refuses instances above `search_limit`.
std::optional<std::vector<Vertex>> find_hamiltonian_dipath(const Digraph& d,
                                                           int search_limit = 20);

/// Hamiltonian directed cycle by backtracking search; result starts at
/// vertex 0 and omits the closing arc. Refuses instances above `limit`.
std::optional<std::vector<Vertex>> find_hamiltonian_dicycle(const Digraph& d,
                                                            int limit = 20);

bool is_hamiltonian_dipath_of(const Digraph& d, const std::vector<Vertex>& path);
bool is_hamiltonian_dicycle_of(const Digraph& d, const std::vector<Vertex>& cycle);

}  // namespace spindle
