#include "spindle/types.hpp"

#include <set>

namespace spindle {

namespace {

void check_vertex(Vertex v, int n, const char* what) {
    if (v < 0 || v >= n) throw input_error(std::string(what) + " index out of range");
}

}  // namespace

Digraph::Digraph(int n, std::vector<Arc> arcs, bool allow_digons) : n_(n) {
    if (n < 0) throw input_error("vertex count must be non-negative");
    std::sort(arcs.begin(), arcs.end());
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        auto [u, v] = arcs[i];
        check_vertex(u, n, "arc tail");
        check_vertex(v, n, "arc head");
        if (u == v) throw input_error("loops are not allowed");
        if (i > 0 && arcs[i] == arcs[i - 1]) throw input_error("duplicate arc");
    }
    if (!allow_digons) {
        for (const Arc& a : arcs) {
            if (a.first < a.second &&
                std::binary_search(arcs.begin(), arcs.end(), Arc{a.second, a.first}))
                throw input_error("digon rejected: both (u,v) and (v,u) present");
        }
    }
    arcs_ = std::move(arcs);
    out_.assign(n_, {});
    in_.assign(n_, {});
    for (const Arc& a : arcs_) {
        out_[a.first].push_back(a.second);
        in_[a.second].push_back(a.first);
    }
    for (auto& v : out_) std::sort(v.begin(), v.end());
    for (auto& v : in_) std::sort(v.begin(), v.end());
}

bool Digraph::has_arc(Vertex u, Vertex v) const {
    check_vertex(u, n_, "arc tail");
    check_vertex(v, n_, "arc head");
    const auto& o = out_[u];
    return std::binary_search(o.begin(), o.end(), v);
}

Digraph Digraph::without_arc(Arc a) const {
    if (!has_arc(a.first, a.second)) throw input_error("arc to remove not present");
    std::vector<Arc> rest;
    rest.reserve(arcs_.size() - 1);
    for (const Arc& b : arcs_)
        if (b != a) rest.push_back(b);
    return Digraph(n_, std::move(rest), true);
}

Digraph Digraph::with_arc(Arc a, bool allow_digons) const {
    std::vector<Arc> all = arcs_;
    all.push_back(a);
    return Digraph(n_, std::move(all), allow_digons);
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw input_error("vertex count must be non-negative");
    for (Edge& e : edges) {
        check_vertex(e.first, n, "edge endpoint");
        check_vertex(e.second, n, "edge endpoint");
        if (e.first == e.second) throw input_error("loops are not allowed");
        if (e.first > e.second) std::swap(e.first, e.second);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
    adj_.assign(n_, {});
    for (const Edge& e : edges_) {
        adj_[e.first].push_back(e.second);
        adj_[e.second].push_back(e.first);
    }
    for (auto& v : adj_) std::sort(v.begin(), v.end());
}

int Graph::max_degree() const {
    int d = 0;
    for (Vertex v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    check_vertex(u, n_, "edge endpoint");
    check_vertex(v, n_, "edge endpoint");
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

Graph Graph::with_edge(Edge e) const {
    std::vector<Edge> all = edges_;
    all.push_back(make_edge(e.first, e.second));
    return Graph(n_, std::move(all));
}

Coloring make_coloring(std::vector<int> colors) {
    int palette = 0;
    for (int c : colors) {
        if (c < 1) throw input_error("colors must be positive");
        palette = std::max(palette, c);
    }
    return Coloring{std::move(colors), palette};
}

Graph underlying_graph(const Digraph& d) {
    std::vector<Edge> edges;
    edges.reserve(d.arcs().size());
    for (const Arc& a : d.arcs()) edges.push_back(make_edge(a.first, a.second));
    return Graph(d.n(), std::move(edges));
}

bool is_proper(const Graph& g, const Coloring& c) {
    if (static_cast<int>(c.colors.size()) != g.n())
        throw input_error("coloring length does not match vertex count");
    for (int col : c.colors)
        if (col < 1 || col > c.palette) throw input_error("color outside palette");
    for (const Edge& e : g.edges())
        if (c.colors[e.first] == c.colors[e.second]) return false;
    return true;
}

Digraph induced_subdigraph(const Digraph& d, const std::vector<Vertex>& vertices) {
    std::vector<int> idx(d.n(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        check_vertex(vertices[i], d.n(), "vertex");
        if (idx[vertices[i]] != -1) throw input_error("duplicate vertex in selection");
        idx[vertices[i]] = static_cast<int>(i);
    }
    std::vector<Arc> arcs;
    for (const Arc& a : d.arcs())
        if (idx[a.first] != -1 && idx[a.second] != -1)
            arcs.emplace_back(idx[a.first], idx[a.second]);
    return Digraph(static_cast<int>(vertices.size()), std::move(arcs), true);
}

Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices) {
    std::vector<int> idx(g.n(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        check_vertex(vertices[i], g.n(), "vertex");
        if (idx[vertices[i]] != -1) throw input_error("duplicate vertex in selection");
        idx[vertices[i]] = static_cast<int>(i);
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (idx[e.first] != -1 && idx[e.second] != -1)
            edges.push_back(make_edge(idx[e.first], idx[e.second]));
    return Graph(static_cast<int>(vertices.size()), std::move(edges));
}

}  // namespace spindle
