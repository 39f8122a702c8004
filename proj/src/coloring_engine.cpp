#include "spindle/coloring_engine.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace spindle {

Coloring product_union_coloring(const Graph& g1, const Coloring& c1, const Graph& g2,
                                const Coloring& c2) {
    if (!is_proper(g1, c1) || !is_proper(g2, c2))
        throw input_error("product union requires proper input colorings");
    int n = std::max(g1.n(), g2.n());
    int p2 = std::max(c2.palette, 1);
    std::vector<int> colors(n, 0);
    for (Vertex v = 0; v < n; ++v) {
        int a = v < g1.n() ? c1.colors[v] : 1;
        int b = v < g2.n() ? c2.colors[v] : 1;
        colors[v] = (a - 1) * p2 + b;
    }
    if (n == 0) return Coloring{{}, 0};
    return make_coloring(std::move(colors));
}

Coloring partition_sum_coloring(const Graph& g, const std::vector<std::vector<Vertex>>& parts,
                                const std::vector<Coloring>& part_colorings) {
    if (parts.size() != part_colorings.size())
        throw input_error("one coloring per part required");
    std::vector<char> seen(g.n(), 0);
    for (const auto& part : parts)
        for (Vertex v : part) {
            if (v < 0 || v >= g.n() || seen[v]) throw input_error("parts do not partition the vertex set");
            seen[v] = 1;
        }
    if (std::count(seen.begin(), seen.end(), 1) != g.n())
        throw input_error("parts do not partition the vertex set");

    std::vector<int> colors(g.n(), 0);
    int offset = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const auto& part = parts[i];
        const Coloring& c = part_colorings[i];
        if (c.colors.size() != part.size()) throw input_error("part coloring size mismatch");
        Graph sub = induced_subgraph(g, part);
        if (!is_proper(sub, c)) throw input_error("part coloring is not proper on its induced subgraph");
        for (std::size_t j = 0; j < part.size(); ++j) colors[part[j]] = offset + c.colors[j];
        offset += c.palette;
    }
    if (g.n() == 0) return Coloring{{}, 0};
    Coloring out{std::move(colors), offset};
    return out;
}

Coloring gallai_roy_coloring(const Digraph& d) {
    // Longest-dipath orders via one DFS with cycle detection.
    std::vector<int> value(d.n(), 0);
    std::vector<char> state(d.n(), 0);  // 0 fresh, 1 on stack, 2 done
    std::vector<Vertex> order;
    std::function<void(Vertex)> dfs = [&](Vertex u) {
        state[u] = 1;
        int best = 0;
        for (Vertex w : d.out(u)) {
            if (state[w] == 1) throw input_error("longest-path coloring requires an acyclic digraph");
            if (state[w] == 0) dfs(w);
            best = std::max(best, value[w]);
        }
        value[u] = best + 1;
        state[u] = 2;
    };
    for (Vertex v = 0; v < d.n(); ++v)
        if (state[v] == 0) dfs(v);
    if (d.n() == 0) return Coloring{{}, 0};
    return make_coloring(std::move(value));
}

std::vector<std::vector<Vertex>> cutset_components(const Graph& g,
                                                   const std::vector<Vertex>& cutset) {
    std::vector<char> removed(g.n(), 0);
    for (Vertex s : cutset) {
        if (s < 0 || s >= g.n()) throw input_error("cut-set vertex out of range");
        removed[s] = 1;
    }
    std::vector<std::vector<Vertex>> comps;
    std::vector<char> seen(g.n(), 0);
    for (Vertex v = 0; v < g.n(); ++v) {
        if (removed[v] || seen[v]) continue;
        std::vector<Vertex> comp;
        std::vector<Vertex> stack{v};
        seen[v] = 1;
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (Vertex w : g.adj(u))
                if (!removed[w] && !seen[w]) { seen[w] = 1; stack.push_back(w); }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

Coloring clique_cutset_combine(const Graph& g, const std::vector<Vertex>& cutset,
                               const std::vector<Coloring>& block_colorings) {
    for (std::size_t i = 0; i < cutset.size(); ++i)
        for (std::size_t j = i + 1; j < cutset.size(); ++j)
            if (!g.has_edge(cutset[i], cutset[j]))
                throw input_error("cut-set is not a clique");

    std::vector<std::vector<Vertex>> comps = cutset_components(g, cutset);
    if (comps.size() < 2) throw input_error("cut-set does not separate the graph");
    if (comps.size() != block_colorings.size())
        throw input_error("one block coloring per component required");

    int palette = 0;
    for (const Coloring& c : block_colorings) palette = std::max(palette, c.palette);
    if (palette < static_cast<int>(cutset.size()))
        throw input_error("block palette smaller than the cut-set");

    // Verify each block coloring on its block and check the cut-set colors
    // are distinct there (forced when S is a clique and the coloring proper).
    for (std::size_t i = 0; i < comps.size(); ++i) {
        std::vector<Vertex> block = comps[i];
        block.insert(block.end(), cutset.begin(), cutset.end());
        std::sort(block.begin(), block.end());
        Graph sub = induced_subgraph(g, block);
        std::vector<int> local(block.size());
        for (std::size_t j = 0; j < block.size(); ++j) {
            if (block[j] >= static_cast<int>(block_colorings[i].colors.size()))
                throw input_error("block coloring does not cover its block");
            local[j] = block_colorings[i].colors[block[j]];
        }
        if (!is_proper(sub, Coloring{local, palette}))
            throw input_error("block coloring is not proper on its block");
    }

    std::vector<int> colors(g.n(), 0);
    for (Vertex s : cutset) colors[s] = block_colorings[0].colors[s];
    for (std::size_t i = 0; i < comps.size(); ++i) {
        // Bijection on {1..palette} sending block i's cut-set colors to
        // block 0's, extended greedily.
        std::vector<int> perm(palette + 1, 0);
        std::vector<char> taken(palette + 1, 0);
        for (Vertex s : cutset) {
            int from = block_colorings[i].colors[s];
            int to = block_colorings[0].colors[s];
            if (perm[from] != 0 && perm[from] != to)
                throw input_error("cut-set colors collide inside a block");
            perm[from] = to;
            taken[to] = 1;
        }
        int next = 1;
        for (int c = 1; c <= palette; ++c) {
            if (perm[c] != 0) continue;
            while (taken[next]) ++next;
            perm[c] = next;
            taken[next] = 1;
        }
        for (Vertex v : comps[i]) colors[v] = perm[block_colorings[i].colors[v]];
    }
    return Coloring{std::move(colors), palette};
}

Coloring greedy_coloring(const Graph& g, const VertexOrdering& order) {
    if (order.n() != g.n()) throw input_error("ordering does not cover the vertex set");
    std::vector<int> colors(g.n(), 0);
    for (Vertex v : order.order) {
        int c = 1;
        while (true) {
            bool clash = false;
            for (Vertex w : g.adj(v))
                if (colors[w] == c) { clash = true; break; }
            if (!clash) break;
            ++c;
        }
        colors[v] = c;
    }
    if (g.n() == 0) return Coloring{{}, 0};
    return make_coloring(std::move(colors));
}

}  // namespace spindle
