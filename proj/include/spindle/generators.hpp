#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "spindle/patterns.hpp"
#include "spindle/subdivision_search.hpp"
#include "spindle/trees.hpp"
#include "spindle/types.hpp"

namespace spindle {

/// Deterministic cross-platform randomness: mt19937_64 with explicit
/// rejection sampling for bounded draws (library distributions are not
/// portable across standard libraries).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, n), n >= 1.
    int below(int n);
    /// Uniform in [0, 1) with 53-bit resolution.
    double real01();
    bool chance(double p) { return real01() < p; }

    /// Independent stream for a derived task; stable in (seed, stream).
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream);

private:
    std::mt19937_64 engine_;
};

Digraph gen_tournament(int n, std::uint64_t seed);

struct PlantedPathInstance {
    Digraph digraph;
    std::vector<Vertex> path;
};

/// Digraph with a planted Hamiltonian dipath plus extra arcs drawn with the
/// given per-pair probability (digons never added).
PlantedPathInstance gen_ham_dipath_digraph(int n, double extra_density, std::uint64_t seed);

struct PlantedCycleInstance {
    Digraph digraph;
    std::vector<Vertex> cycle;
};

PlantedCycleInstance gen_ham_dicycle_digraph(int n, double extra_density, std::uint64_t seed);

enum class TreeShape { random_shape, path, whip, star0, star1, star2 };

TreeShape tree_shape_from_name(const std::string& name);
std::string tree_shape_name(TreeShape shape);

/// Random rooted tree of the requested shape with about `size` vertices.
RootedTree gen_tree(TreeShape shape, int size, std::uint64_t seed);

struct PlantedTreeInstance {
    Digraph digraph;
    RootedTree tree;
};

/// Digraph with a planted spanning out-tree plus extra arcs.
PlantedTreeInstance gen_outtree_digraph(int n, TreeShape shape, double extra_density,
                                        std::uint64_t seed);

struct StarInstance {
    Graph graph;
    RootedTree tree;
};

/// Saturated secancy-free instance over a tree of the requested shape:
/// random comparable jumps are inserted while they stay secancy-free, then
/// the graph is saturated.
StarInstance gen_star_tree_instance(TreeShape shape, int size, std::uint64_t seed);

/// Random orientation of a random simple graph with per-pair probability.
Digraph gen_random_digraph(int n, double density, std::uint64_t seed);

/// Random graph whose identity ordering carries no secant pair, built by
/// insertion with rejection.
Graph gen_no_secant_graph(int n, double density, std::uint64_t seed);

/// Deletes certificate arcs (never the protected ones) until the detector
/// reports the pattern absent. Throws when the budget runs out.
Digraph make_subdivision_free(Digraph d, const PatternSpec& pattern,
                              const std::vector<Arc>& protected_arcs, std::uint64_t seed,
                              int budget, int exact_limit);

}  // namespace spindle
