#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace spindle {

using Vertex = int;
using Arc = std::pair<Vertex, Vertex>;    // ordered (tail, head)
using Edge = std::pair<Vertex, Vertex>;   // normalized: first < second

/// Raised on malformed inputs (bad indices, broken invariants, scale limits).
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Edge make_edge(Vertex u, Vertex v) {
    if (u == v) throw input_error("edge endpoints must be distinct");
    return u < v ? Edge{u, v} : Edge{v, u};
}

/// Loop-free digraph on dense vertex indices 0..n-1.
/// Default construction rejects digons: instances are orientations of
/// simple graphs. Pass allow_digons=true for the permissive variant.
class Digraph {
public:
    Digraph() = default;
    Digraph(int n, std::vector<Arc> arcs, bool allow_digons = false);

    int n() const { return n_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    const std::vector<Arc>& arcs() const { return arcs_; }
    const std::vector<Vertex>& out(Vertex u) const { return out_.at(u); }
    const std::vector<Vertex>& in(Vertex u) const { return in_.at(u); }
    bool has_arc(Vertex u, Vertex v) const;

    /// New digraph with one arc removed; the arc must exist.
    Digraph without_arc(Arc a) const;
    /// New digraph with one arc added.
    Digraph with_arc(Arc a, bool allow_digons = false) const;

private:
    int n_ = 0;
    std::vector<Arc> arcs_;                 // sorted, unique
    std::vector<std::vector<Vertex>> out_;  // sorted
    std::vector<std::vector<Vertex>> in_;   // sorted
};

/// Simple undirected graph on dense vertex indices.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges);

    int n() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Vertex>& adj(Vertex u) const { return adj_.at(u); }
    int degree(Vertex u) const { return static_cast<int>(adj_.at(u).size()); }
    int max_degree() const;
    bool has_edge(Vertex u, Vertex v) const;

    Graph with_edge(Edge e) const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;               // normalized, sorted, unique
    std::vector<std::vector<Vertex>> adj_;  // sorted
};

/// Total color assignment. Colors are positive integers; palette is the
/// number of colors the assignment is allowed to use (assigned <= palette).
/// Properness is a postcondition of colorers, not a type invariant.
struct Coloring {
    std::vector<int> colors;
    int palette = 0;
};

/// Coloring with palette equal to the largest color used.
Coloring make_coloring(std::vector<int> colors);

Graph underlying_graph(const Digraph& d);

/// True iff no edge of g is monochromatic under c. Throws on size mismatch
/// or out-of-range colors.
bool is_proper(const Graph& g, const Coloring& c);

/// Induced subdigraph on `vertices` (kept order defines the new indices).
Digraph induced_subdigraph(const Digraph& d, const std::vector<Vertex>& vertices);
Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices);

}  // namespace spindle
