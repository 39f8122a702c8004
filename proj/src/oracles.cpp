#include "spindle/oracles.hpp"

#include <algorithm>
#include <numeric>

namespace spindle {

namespace {

struct ChiSearch {
    const Graph& g;
    std::vector<Vertex> order;       // descending degree
    std::vector<int> assigned;       // color per vertex, 0 = none
    std::vector<int> best_colors;
    int best = 0;

    explicit ChiSearch(const Graph& graph) : g(graph) {
        order.resize(g.n());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
            return g.degree(a) > g.degree(b);
        });
        assigned.assign(g.n(), 0);
    }

    void run() {
        // Greedy upper bound along the same order seeds the search.
        std::vector<int> greedy(g.n(), 0);
        int used = 0;
        for (Vertex v : order) {
            int c = 1;
            while (true) {
                bool clash = false;
                for (Vertex w : g.adj(v))
                    if (greedy[w] == c) { clash = true; break; }
                if (!clash) break;
                ++c;
            }
            greedy[v] = c;
            used = std::max(used, c);
        }
        best = used;
        best_colors = greedy;
        extend(0, 0);
    }

    void extend(int pos, int used) {
        if (used >= best) return;
        if (pos == g.n()) {
            best = used;
            best_colors = assigned;
            return;
        }
        Vertex v = order[pos];
        int try_up_to = std::min(used + 1, best - 1);
        for (int c = 1; c <= try_up_to; ++c) {
            bool clash = false;
            for (Vertex w : g.adj(v))
                if (assigned[w] == c) { clash = true; break; }
            if (clash) continue;
            assigned[v] = c;
            extend(pos + 1, std::max(used, c));
            assigned[v] = 0;
        }
    }
};

}  // namespace

ChromaticResult chromatic_number_exact(const Graph& g, int limit) {
    if (g.n() > limit) throw input_error("exact chromatic oracle: instance above scale limit");
    if (g.n() == 0) return {0, Coloring{{}, 0}};
    ChiSearch s(g);
    s.run();
    return {s.best, Coloring{s.best_colors, s.best}};
}

namespace {

int mis_extend(const Graph& g, const std::vector<Vertex>& live, int have) {
    if (live.empty()) return have;
    // Branch on the first live vertex: exclude, or include and drop neighbors.
    Vertex v = live.front();
    std::vector<Vertex> rest(live.begin() + 1, live.end());
    int best = mis_extend(g, rest, have);
    std::vector<Vertex> rest_in;
    for (Vertex w : rest)
        if (!g.has_edge(v, w)) rest_in.push_back(w);
    best = std::max(best, mis_extend(g, rest_in, have + 1));
    return best;
}

}  // namespace

int independence_number(const Graph& g, int limit) {
    if (g.n() > limit) throw input_error("independence oracle: instance above scale limit");
    std::vector<Vertex> all(g.n());
    std::iota(all.begin(), all.end(), 0);
    return mis_extend(g, all, 0);
}

bool is_strong(const Digraph& d) {
    if (d.n() <= 1) return true;
    auto reaches_all = [&](const Digraph& dd) {
        std::vector<char> seen(dd.n(), 0);
        std::vector<Vertex> stack{0};
        seen[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            for (Vertex v : dd.out(u))
                if (!seen[v]) { seen[v] = 1; ++count; stack.push_back(v); }
        }
        return count == dd.n();
    };
    if (!reaches_all(d)) return false;
    std::vector<Arc> rev;
    rev.reserve(d.arcs().size());
    for (const Arc& a : d.arcs()) rev.emplace_back(a.second, a.first);
    return reaches_all(Digraph(d.n(), std::move(rev), true));
}

bool is_tournament(const Digraph& d) {
    if (2 * d.arc_count() != d.n() * (d.n() - 1)) return false;
    for (Vertex u = 0; u < d.n(); ++u)
        for (Vertex v = u + 1; v < d.n(); ++v)
            if (!d.has_arc(u, v) && !d.has_arc(v, u)) return false;
    return true;
}

namespace {

std::vector<Vertex> tournament_hamiltonian_path(const Digraph& d) {
    std::vector<Vertex> path;
    for (Vertex v = 0; v < d.n(); ++v) {
        if (path.empty()) {
            path.push_back(v);
            continue;
        }
        if (d.has_arc(v, path.front())) {
            path.insert(path.begin(), v);
            continue;
        }
        if (d.has_arc(path.back(), v)) {
            path.push_back(v);
            continue;
        }
        // Some consecutive pair (a,b) has a->v and v->b.
        bool placed = false;
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            if (d.has_arc(path[i], v) && d.has_arc(v, path[i + 1])) {
                path.insert(path.begin() + static_cast<long>(i) + 1, v);
                placed = true;
                break;
            }
        }
        if (!placed) throw std::logic_error("tournament insertion failed");
    }
    return path;
}

bool dipath_extend(const Digraph& d, std::vector<Vertex>& path, std::vector<char>& used) {
    if (static_cast<int>(path.size()) == d.n()) return true;
    for (Vertex v : d.out(path.back())) {
        if (used[v]) continue;
        used[v] = 1;
        path.push_back(v);
        if (dipath_extend(d, path, used)) return true;
        path.pop_back();
        used[v] = 0;
    }
    return false;
}

}  // namespace

std::optional<std::vector<Vertex>> find_hamiltonian_dipath(const Digraph& d, int search_limit) {
    if (d.n() == 0) return std::vector<Vertex>{};
    if (is_tournament(d)) return tournament_hamiltonian_path(d);
    if (d.n() > search_limit)
        throw input_error("hamiltonian dipath search: non-tournament above scale limit");
    for (Vertex s = 0; s < d.n(); ++s) {
        std::vector<Vertex> path{s};
        std::vector<char> used(d.n(), 0);
        used[s] = 1;
        if (dipath_extend(d, path, used)) return path;
    }
    return std::nullopt;
}

namespace {

bool dicycle_extend(const Digraph& d, std::vector<Vertex>& path, std::vector<char>& used) {
    if (static_cast<int>(path.size()) == d.n())
        return d.has_arc(path.back(), path.front());
    for (Vertex v : d.out(path.back())) {
        if (used[v]) continue;
        used[v] = 1;
        path.push_back(v);
        if (dicycle_extend(d, path, used)) return true;
        path.pop_back();
        used[v] = 0;
    }
    return false;
}

}  // namespace

std::optional<std::vector<Vertex>> find_hamiltonian_dicycle(const Digraph& d, int limit) {
    if (d.n() > limit) throw input_error("hamiltonian dicycle search: instance above scale limit");
    if (d.n() == 0) return std::nullopt;
    std::vector<Vertex> path{0};
    std::vector<char> used(d.n(), 0);
    used[0] = 1;
    if (dicycle_extend(d, path, used)) return path;
    return std::nullopt;
}

bool is_hamiltonian_dipath_of(const Digraph& d, const std::vector<Vertex>& path) {
    if (static_cast<int>(path.size()) != d.n()) return false;
    std::vector<char> seen(d.n(), 0);
    for (Vertex v : path) {
        if (v < 0 || v >= d.n() || seen[v]) return false;
        seen[v] = 1;
    }
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        if (!d.has_arc(path[i], path[i + 1])) return false;
    return true;
}

bool is_hamiltonian_dicycle_of(const Digraph& d, const std::vector<Vertex>& cycle) {
    if (cycle.size() < 2) return false;
    if (!is_hamiltonian_dipath_of(d, cycle)) return false;
    return d.has_arc(cycle.back(), cycle.front());
}

}  // namespace spindle
