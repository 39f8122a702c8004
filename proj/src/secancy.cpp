#include "spindle/secancy.hpp"

#include <algorithm>
#include <numeric>

namespace spindle {

VertexOrdering::VertexOrdering(std::vector<Vertex> ord) : order(std::move(ord)) {
    position.assign(order.size(), -1);
    for (std::size_t i = 0; i < order.size(); ++i) {
        Vertex v = order[i];
        if (v < 0 || v >= static_cast<int>(order.size()) || position[v] != -1)
            throw input_error("ordering is not a permutation");
        position[v] = static_cast<int>(i);
    }
}

VertexOrdering VertexOrdering::identity(int n) {
    std::vector<Vertex> ord(n);
    std::iota(ord.begin(), ord.end(), 0);
    return VertexOrdering(std::move(ord));
}

secant_violation::secant_violation(Edge a, Edge b)
    : std::runtime_error("secant pair present"), first_jump(a), second_jump(b) {}

std::vector<Edge> jumps(const Graph& g, const VertexOrdering& l) {
    if (l.n() != g.n()) throw input_error("ordering does not cover the vertex set");
    std::vector<Edge> out;
    for (const Edge& e : g.edges())
        if (std::abs(l.position[e.first] - l.position[e.second]) > 1) out.push_back(e);
    return out;
}

namespace {

bool interleaves(int a_lo, int a_hi, int b_lo, int b_hi) {
    return (a_lo < b_lo && b_lo < a_hi && a_hi < b_hi) ||
           (b_lo < a_lo && a_lo < b_hi && b_hi < a_hi);
}

}  // namespace

std::vector<std::pair<Edge, Edge>> secant_pairs(const Graph& g, const VertexOrdering& l) {
    std::vector<Edge> js = jumps(g, l);
    std::vector<std::pair<Edge, Edge>> out;
    for (std::size_t i = 0; i < js.size(); ++i) {
        int ilo = std::min(l.position[js[i].first], l.position[js[i].second]);
        int ihi = std::max(l.position[js[i].first], l.position[js[i].second]);
        for (std::size_t j = i + 1; j < js.size(); ++j) {
            int jlo = std::min(l.position[js[j].first], l.position[js[j].second]);
            int jhi = std::max(l.position[js[j].first], l.position[js[j].second]);
            if (interleaves(ilo, ihi, jlo, jhi)) out.emplace_back(js[i], js[j]);
        }
    }
    return out;
}

DegeneracyResult degeneracy(const Graph& g) {
    int n = g.n();
    std::vector<int> deg(n);
    std::vector<char> removed(n, 0);
    for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::vector<Vertex> elim;
    elim.reserve(n);
    int d = 0;
    for (int step = 0; step < n; ++step) {
        Vertex pick = -1;
        for (Vertex v = 0; v < n; ++v)
            if (!removed[v] && (pick == -1 || deg[v] < deg[pick])) pick = v;
        d = std::max(d, deg[pick]);
        removed[pick] = 1;
        elim.push_back(pick);
        for (Vertex w : g.adj(pick))
            if (!removed[w]) --deg[w];
    }
    return {d, VertexOrdering(std::move(elim))};
}

Coloring color_no_secant(const Graph& g, const VertexOrdering& l) {
    auto pairs = secant_pairs(g, l);
    if (!pairs.empty()) throw secant_violation(pairs.front().first, pairs.front().second);

    DegeneracyResult elim = degeneracy(g);
    if (elim.degeneracy > 2)
        throw std::logic_error("secancy-free graph must be 2-degenerate");

    std::vector<int> colors(g.n(), 0);
    for (int i = g.n() - 1; i >= 0; --i) {
        Vertex v = elim.elimination.order[i];
        int c = 1;
        while (true) {
            bool clash = false;
            for (Vertex w : g.adj(v))
                if (colors[w] == c) { clash = true; break; }
            if (!clash) break;
            ++c;
        }
        if (c > 3) throw std::logic_error("back-insertion exceeded three colors");
        colors[v] = c;
    }
    if (g.n() == 0) return Coloring{{}, 0};
    return make_coloring(std::move(colors));
}

}  // namespace spindle
