#include "spindle/generators.hpp"

#include <algorithm>
#include <numeric>

namespace spindle {

int Rng::below(int n) {
    if (n <= 0) throw input_error("bounded draw needs a positive range");
    std::uint64_t range = static_cast<std::uint64_t>(n);
    std::uint64_t mask = ~0ull;
    // power-of-two mask rejection keeps the draw unbiased and portable
    std::uint64_t need = range - 1;
    mask = need;
    mask |= mask >> 1;
    mask |= mask >> 2;
    mask |= mask >> 4;
    mask |= mask >> 8;
    mask |= mask >> 16;
    mask |= mask >> 32;
    while (true) {
        std::uint64_t draw = engine_() & mask;
        if (draw < range) return static_cast<int>(draw);
    }
}

double Rng::real01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::uint64_t Rng::derive(std::uint64_t seed, std::uint64_t stream) {
    // splitmix64 of the pair
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

Digraph gen_tournament(int n, std::uint64_t seed) {
    if (n < 1) throw input_error("tournament needs at least one vertex");
    Rng rng(seed);
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            arcs.push_back(rng.chance(0.5) ? Arc{u, v} : Arc{v, u});
    return Digraph(n, std::move(arcs));
}

namespace {

// Extra arcs avoiding existing arcs and digons, one coin per unordered pair.
void add_extras(std::vector<Arc>& arcs, int n, double density, Rng& rng) {
    std::vector<std::vector<char>> have(n, std::vector<char>(n, 0));
    for (const Arc& a : arcs) have[a.first][a.second] = 1;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (have[u][v] || have[v][u]) continue;
            if (!rng.chance(density)) continue;
            Arc a = rng.chance(0.5) ? Arc{u, v} : Arc{v, u};
            have[a.first][a.second] = 1;
            arcs.push_back(a);
        }
    }
}

}  // namespace

PlantedPathInstance gen_ham_dipath_digraph(int n, double extra_density, std::uint64_t seed) {
    if (n < 1) throw input_error("instance needs at least one vertex");
    Rng rng(seed);
    std::vector<Vertex> path(n);
    std::iota(path.begin(), path.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(path[i], path[rng.below(i + 1)]);
    std::vector<Arc> arcs;
    for (int i = 0; i + 1 < n; ++i) arcs.emplace_back(path[i], path[i + 1]);
    add_extras(arcs, n, extra_density, rng);
    return {Digraph(n, std::move(arcs)), std::move(path)};
}

PlantedCycleInstance gen_ham_dicycle_digraph(int n, double extra_density, std::uint64_t seed) {
    if (n < 3) throw input_error("dicycle instance needs at least three vertices");
    Rng rng(seed);
    std::vector<Vertex> cycle(n);
    std::iota(cycle.begin(), cycle.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(cycle[i], cycle[rng.below(i + 1)]);
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i) arcs.emplace_back(cycle[i], cycle[(i + 1) % n]);
    add_extras(arcs, n, extra_density, rng);
    return {Digraph(n, std::move(arcs)), std::move(cycle)};
}

TreeShape tree_shape_from_name(const std::string& name) {
    if (name == "random") return TreeShape::random_shape;
    if (name == "path") return TreeShape::path;
    if (name == "whip") return TreeShape::whip;
    if (name == "star0") return TreeShape::star0;
    if (name == "star1") return TreeShape::star1;
    if (name == "star2") return TreeShape::star2;
    throw input_error("unknown tree shape: " + name);
}

std::string tree_shape_name(TreeShape shape) {
    switch (shape) {
        case TreeShape::random_shape: return "random";
        case TreeShape::path: return "path";
        case TreeShape::whip: return "whip";
        case TreeShape::star0: return "star0";
        case TreeShape::star1: return "star1";
        case TreeShape::star2: return "star2";
    }
    throw std::logic_error("unknown tree shape");
}

namespace {

struct TreeBuilder {
    std::vector<Vertex> parent{-1};

    Vertex add(Vertex p) {
        parent.push_back(p);
        return static_cast<Vertex>(parent.size() - 1);
    }

    Vertex grow_path(Vertex from, int len) {
        Vertex cur = from;
        for (int i = 0; i < len; ++i) cur = add(cur);
        return cur;
    }
};

// Spider: tail, then a node with legs; leg ends are reported for recursion.
std::vector<Vertex> build_spider(TreeBuilder& b, Vertex attach, int tail, int legs, int leg_len) {
    Vertex node = b.grow_path(attach, tail);
    std::vector<Vertex> ends;
    for (int i = 0; i < legs; ++i) ends.push_back(b.grow_path(node, leg_len));
    return ends;
}

}  // namespace

RootedTree gen_tree(TreeShape shape, int size, std::uint64_t seed) {
    if (size < 2) throw input_error("tree needs at least two vertices");
    Rng rng(seed);
    TreeBuilder b;
    auto used = [&] { return static_cast<int>(b.parent.size()); };
    switch (shape) {
        case TreeShape::random_shape: {
            for (int v = 1; v < size; ++v) b.add(rng.below(v));
            break;
        }
        case TreeShape::path: {
            b.grow_path(0, size - 1);
            break;
        }
        case TreeShape::whip: {
            if (size < 4) throw input_error("whip needs at least four vertices");
            int legs = std::min(size - 2, 2 + rng.below(3));
            int tail = size - 1 - legs;
            Vertex node = b.grow_path(0, tail);
            for (int i = 0; i < legs; ++i) b.add(node);
            break;
        }
        case TreeShape::star0: {
            if (size < 4) throw input_error("star^0 tree needs at least four vertices");
            int legs = std::min((size - 2), 2 + rng.below(3));
            int tail = std::max(1, std::min(size - 1 - legs, 1 + rng.below(3)));
            Vertex node = b.grow_path(0, tail);
            std::vector<Vertex> legends;
            for (int i = 0; i < legs; ++i) legends.push_back(b.add(node));
            int i = 0;
            while (used() < size) {
                legends[i % legs] = b.add(legends[i % legs]);
                ++i;
            }
            break;
        }
        case TreeShape::star1: {
            if (size < 9) throw input_error("star^1 tree needs at least nine vertices");
            int legs = (size >= 12 && rng.chance(0.4)) ? 3 : 2;
            std::vector<Vertex> ends = build_spider(b, 0, 1 + rng.below(2), legs, 1);
            for (std::size_t i = 0; i < ends.size(); ++i) {
                int budget_each = (size - used()) / static_cast<int>(ends.size() - i);
                int tail = budget_each > 3 ? rng.below(2) : 0;
                int len = budget_each - tail >= 5 ? 2 : 1;
                build_spider(b, ends[i], tail, 2, len);
            }
            break;
        }
        case TreeShape::star2: {
            if (size < 17) throw input_error("star^2 tree needs at least seventeen vertices");
            std::vector<Vertex> ends = build_spider(b, 0, 1 + rng.below(2), 2, 1);
            std::vector<Vertex> mid;
            for (Vertex leaf : ends) {
                auto e = build_spider(b, leaf, 0, 2, 1);
                mid.insert(mid.end(), e.begin(), e.end());
            }
            for (std::size_t i = 0; i < mid.size(); ++i) {
                int budget_each = (size - used()) / static_cast<int>(mid.size() - i);
                int len = budget_each >= 5 ? 2 : 1;
                build_spider(b, mid[i], 0, 2, len);
            }
            break;
        }
    }
    RootedTree t(0, b.parent);
    // The root-with-two-children corner never arises: shapes grow from a
    // single chain at the root.
    StarClass cls = classify_star(t);
    switch (shape) {
        case TreeShape::path:
            if (cls.kind != StarClass::Kind::path_degenerate)
                throw std::logic_error("generated tree shape mismatch");
            break;
        case TreeShape::whip:
            if (cls.kind != StarClass::Kind::whip)
                throw std::logic_error("generated tree shape mismatch");
            break;
        case TreeShape::star0:
            if (!(cls.kind == StarClass::Kind::whip ||
                  (cls.kind == StarClass::Kind::star_like && cls.index == 0)))
                throw std::logic_error("generated tree shape mismatch");
            break;
        case TreeShape::star1:
            if (!(cls.kind == StarClass::Kind::star_like && cls.index == 1))
                throw std::logic_error("generated tree shape mismatch");
            break;
        case TreeShape::star2:
            if (!(cls.kind == StarClass::Kind::star_like && cls.index == 2))
                throw std::logic_error("generated tree shape mismatch");
            break;
        case TreeShape::random_shape:
            break;
    }
    return t;
}

PlantedTreeInstance gen_outtree_digraph(int n, TreeShape shape, double extra_density,
                                        std::uint64_t seed) {
    RootedTree t = gen_tree(shape, n, Rng::derive(seed, 1));
    int real_n = t.n();
    Rng rng(Rng::derive(seed, 2));
    std::vector<Arc> arcs;
    for (Vertex v = 0; v < real_n; ++v)
        if (v != t.root()) arcs.emplace_back(t.parent(v), v);
    add_extras(arcs, real_n, extra_density, rng);
    return {Digraph(real_n, std::move(arcs)), t.as_view(TreeView::out_tree)};
}

StarInstance gen_star_tree_instance(TreeShape shape, int size, std::uint64_t seed) {
    RootedTree t = gen_tree(shape, size, Rng::derive(seed, 1));
    Rng rng(Rng::derive(seed, 2));
    std::vector<Edge> edges;
    for (Vertex v = 0; v < t.n(); ++v)
        if (v != t.root()) edges.push_back(make_edge(t.parent(v), v));
    Graph g(t.n(), std::move(edges));

    // Sprinkle random comparable jumps that keep the instance secancy-free,
    // then saturate deterministically.
    std::vector<Edge> candidates;
    for (Vertex u = 0; u < t.n(); ++u)
        for (Vertex v = u + 1; v < t.n(); ++v)
            if (!g.has_edge(u, v) && (t.is_ancestor(u, v) || t.is_ancestor(v, u)))
                candidates.push_back(make_edge(u, v));
    for (int i = static_cast<int>(candidates.size()) - 1; i > 0; --i)
        std::swap(candidates[i], candidates[rng.below(i + 1)]);
    int wanted = static_cast<int>(candidates.size()) / 3;
    for (const Edge& e : candidates) {
        if (wanted == 0) break;
        Graph trial = g.with_edge(e);
        if (secant_pairs_wrt_tree(trial, t).empty()) {
            g = std::move(trial);
            --wanted;
        }
    }
    return {saturate(g, t), t};
}

Digraph gen_random_digraph(int n, double density, std::uint64_t seed) {
    if (n < 1) throw input_error("instance needs at least one vertex");
    Rng rng(seed);
    std::vector<Arc> arcs;
    add_extras(arcs, n, density, rng);
    return Digraph(n, std::move(arcs));
}

Graph gen_no_secant_graph(int n, double density, std::uint64_t seed) {
    if (n < 1) throw input_error("instance needs at least one vertex");
    Rng rng(seed);
    std::vector<Edge> candidates;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.chance(density)) candidates.push_back({u, v});
    for (int i = static_cast<int>(candidates.size()) - 1; i > 0; --i)
        std::swap(candidates[i], candidates[rng.below(i + 1)]);
    Graph g(n, {});
    VertexOrdering l = VertexOrdering::identity(n);
    for (const Edge& e : candidates) {
        Graph trial = g.with_edge(e);
        if (secant_pairs(trial, l).empty()) g = std::move(trial);
    }
    return g;
}

Digraph make_subdivision_free(Digraph d, const PatternSpec& pattern,
                              const std::vector<Arc>& protected_arcs, std::uint64_t seed,
                              int budget, int exact_limit) {
    Rng rng(seed);
    SearchOptions opts;
    opts.exact_limit = exact_limit;
    std::vector<Arc> keep = protected_arcs;
    std::sort(keep.begin(), keep.end());
    auto is_protected = [&](const Arc& a) {
        return std::binary_search(keep.begin(), keep.end(), a);
    };
    for (int round = 0; round <= budget; ++round) {
        std::optional<SubdivisionCertificate> cert;
        switch (pattern.kind) {
            case PatternSpec::Kind::two_blocks_cycle:
                cert = find_two_blocks_cycle(d, pattern.params[0], pattern.params[1], opts);
                break;
            case PatternSpec::Kind::bispindle:
                cert = find_bispindle(d, pattern.params[0], pattern.params[1], pattern.params[2],
                                      opts);
                break;
            default:
                throw input_error("subdivision-free sampling supports two-blocks cycles and bispindles");
        }
        if (!cert) return d;
        std::vector<Arc> removable;
        for (const auto& path : cert->paths)
            for (std::size_t i = 0; i + 1 < path.size(); ++i) {
                Arc a{path[i], path[i + 1]};
                if (!is_protected(a)) removable.push_back(a);
            }
        if (removable.empty())
            throw std::logic_error("certificate built from protected arcs only");
        std::sort(removable.begin(), removable.end());
        removable.erase(std::unique(removable.begin(), removable.end()), removable.end());
        d = d.without_arc(removable[rng.below(static_cast<int>(removable.size()))]);
    }
    throw input_error("subdivision-free sampling budget exhausted");
}

}  // namespace spindle
