#include "spindle/subdivision_search.hpp"

#include <algorithm>
#include <functional>

namespace spindle {

namespace {

struct budget_exhausted {};

// Vertices reachable from s, skipping blocked vertices (s itself is reported
// even when blocked).
int count_reachable(const Digraph& d, Vertex s, Vertex target, const std::vector<char>& blocked,
                    bool* hits_target) {
    std::vector<char> seen(d.n(), 0);
    std::vector<Vertex> stack{s};
    seen[s] = 1;
    int count = 1;
    *hits_target = (s == target);
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Vertex v : d.out(u)) {
            if (seen[v] || blocked[v]) continue;
            seen[v] = 1;
            ++count;
            if (v == target) *hits_target = true;
            stack.push_back(v);
        }
    }
    return count;
}

// Menger-style bound: number of internally disjoint s->t dipaths, computed on
// the vertex-split unit network, stopping at `want`.
int disjoint_path_count_upto(const Digraph& d, Vertex s, Vertex t, int want) {
    int n = d.n();
    auto in_node = [](Vertex v) { return 2 * v; };
    auto out_node = [](Vertex v) { return 2 * v + 1; };
    // residual adjacency as capacity map over 2n nodes
    std::vector<std::vector<std::pair<int, int>>> cap(2 * n);  // (node, capacity index)
    std::vector<int> capacity;
    auto add = [&](int a, int b, int c) {
        cap[a].emplace_back(b, static_cast<int>(capacity.size()));
        capacity.push_back(c);
        cap[b].emplace_back(a, static_cast<int>(capacity.size()));
        capacity.push_back(0);
    };
    for (Vertex v = 0; v < n; ++v) add(in_node(v), out_node(v), (v == s || v == t) ? want : 1);
    for (const Arc& a : d.arcs()) add(out_node(a.first), in_node(a.second), 1);

    int flow = 0;
    while (flow < want) {
        std::vector<int> from_edge(2 * n, -1);
        std::vector<int> from_node(2 * n, -1);
        std::vector<char> seen(2 * n, 0);
        std::vector<int> queue{out_node(s)};
        seen[out_node(s)] = 1;
        std::size_t head = 0;
        bool reached = false;
        while (head < queue.size() && !reached) {
            int u = queue[head++];
            for (auto [w, ci] : cap[u]) {
                if (seen[w] || capacity[ci] == 0) continue;
                seen[w] = 1;
                from_edge[w] = ci;
                from_node[w] = u;
                if (w == in_node(t)) { reached = true; break; }
                queue.push_back(w);
            }
        }
        if (!reached) break;
        for (int v = in_node(t); v != out_node(s); v = from_node[v]) {
            capacity[from_edge[v]] -= 1;
            capacity[from_edge[v] ^ 1] += 1;
        }
        ++flow;
    }
    return flow;
}

struct PathSearch {
    const Digraph& d;
    long budget;       // negative = unbounded
    long nodes = 0;

    PathSearch(const Digraph& dd, long b) : d(dd), budget(b) {}

    void tick() {
        ++nodes;
        if (budget >= 0 && nodes > budget) throw budget_exhausted{};
    }

    // Enumerates simple source->target dipaths of length >= min_len, invoking
    // visit on each; visit returns true to stop the whole enumeration.
    // `blocked` must mark the source but not the target.
    bool enumerate(Vertex source, Vertex target, int min_len, std::vector<char>& blocked,
                   const std::function<bool(const std::vector<Vertex>&)>& visit) {
        std::vector<Vertex> path{source};
        return extend(path, target, min_len, blocked, visit);
    }

    bool extend(std::vector<Vertex>& path, Vertex target, int min_len,
                std::vector<char>& blocked, const std::function<bool(const std::vector<Vertex>&)>& visit) {
        tick();
        Vertex v = path.back();
        if (v == target) {
            if (static_cast<int>(path.size()) - 1 >= min_len) return visit(path);
            return false;
        }
        // Prune when the target is unreachable or the remaining supply of
        // vertices cannot raise the path to the required length.
        bool hits = false;
        blocked[v] = 0;  // allow v as the search frontier origin
        int reach = count_reachable(d, v, target, blocked, &hits);
        blocked[v] = 1;
        if (!hits) return false;
        if (static_cast<int>(path.size()) - 1 + reach - 1 < min_len) return false;
        for (Vertex w : d.out(v)) {
            if (blocked[w]) continue;
            blocked[w] = 1;
            path.push_back(w);
            if (extend(path, target, min_len, blocked, visit)) return true;
            path.pop_back();
            blocked[w] = 0;
        }
        return false;
    }
};

DetectResult run_two_blocks(const Digraph& d, const PatternSpec& spec, long budget) {
    int k1 = spec.params[0], k2 = spec.params[1];
    DetectResult result;
    result.status = DetectStatus::absent;
    PathSearch search(d, budget);
    try {
        for (Vertex x = 0; x < d.n() && result.status != DetectStatus::found; ++x) {
            for (Vertex y = 0; y < d.n() && result.status != DetectStatus::found; ++y) {
                if (x == y) continue;
                if (disjoint_path_count_upto(d, x, y, 2) < 2) continue;
                std::vector<char> blocked(d.n(), 0);
                blocked[x] = 1;
                search.enumerate(x, y, k2, blocked,
                                 [&](const std::vector<Vertex>& p1) {
                    int len1 = static_cast<int>(p1.size()) - 1;
                    int need2 = len1 >= k1 ? k2 : k1;
                    std::vector<char> blocked2(d.n(), 0);
                    blocked2[x] = 1;
                    for (std::size_t i = 1; i + 1 < p1.size(); ++i) blocked2[p1[i]] = 1;
                    return search.enumerate(x, y, need2, blocked2,
                                            [&](const std::vector<Vertex>& p2) {
                        result.status = DetectStatus::found;
                        result.certificate = make_two_blocks_certificate(x, y, p1, p2);
                        return true;
                    });
                });
            }
        }
    } catch (const budget_exhausted&) {
        result.status = DetectStatus::unknown;
        result.certificate.reset();
    }
    return result;
}

DetectResult run_bispindle(const Digraph& d, const PatternSpec& spec, long budget) {
    int k1 = spec.params[0], k2 = spec.params[1], k3 = spec.params[2];
    DetectResult result;
    result.status = DetectStatus::absent;
    PathSearch search(d, budget);
    try {
        for (Vertex x = 0; x < d.n() && result.status != DetectStatus::found; ++x) {
            for (Vertex y = 0; y < d.n() && result.status != DetectStatus::found; ++y) {
                if (x == y) continue;
                if (disjoint_path_count_upto(d, x, y, 2) < 2) continue;
                if (disjoint_path_count_upto(d, y, x, 1) < 1) continue;
                std::vector<char> blocked(d.n(), 0);
                blocked[x] = 1;
                search.enumerate(x, y, k2, blocked,
                                 [&](const std::vector<Vertex>& p1) {
                    int len1 = static_cast<int>(p1.size()) - 1;
                    int need2 = len1 >= k1 ? k2 : k1;
                    std::vector<char> blocked2(d.n(), 0);
                    blocked2[x] = 1;
                    for (std::size_t i = 1; i + 1 < p1.size(); ++i) blocked2[p1[i]] = 1;
                    return search.enumerate(x, y, need2, blocked2,
                                            [&](const std::vector<Vertex>& p2) {
                        // third path runs y -> x: block y, free x
                        std::vector<char> blocked3 = blocked2;
                        for (std::size_t i = 1; i + 1 < p2.size(); ++i) blocked3[p2[i]] = 1;
                        blocked3[y] = 1;
                        blocked3[x] = 0;
                        return search.enumerate(y, x, k3, blocked3,
                                                [&](const std::vector<Vertex>& p3) {
                            result.status = DetectStatus::found;
                            result.certificate = make_bispindle_certificate(x, y, p1, p2, p3);
                            return true;
                        });
                    });
                });
            }
        }
    } catch (const budget_exhausted&) {
        result.status = DetectStatus::unknown;
        result.certificate.reset();
    }
    return result;
}

}  // namespace

DetectResult detect_two_blocks_cycle(const Digraph& d, int k1, int k2, const SearchOptions& opts) {
    PatternSpec spec = PatternSpec::two_blocks(k1, k2);
    if (d.n() <= opts.exact_limit) return run_two_blocks(d, spec, -1);
    if (!opts.heuristic)
        throw input_error("two-blocks detector: instance above exact scale limit");
    return run_two_blocks(d, spec, opts.node_budget);
}

DetectResult detect_bispindle(const Digraph& d, int k1, int k2, int k3, const SearchOptions& opts) {
    PatternSpec spec = PatternSpec::bispindle(k1, k2, k3);
    if (d.n() <= opts.exact_limit) return run_bispindle(d, spec, -1);
    if (!opts.heuristic)
        throw input_error("bispindle detector: instance above exact scale limit");
    return run_bispindle(d, spec, opts.node_budget);
}

std::optional<SubdivisionCertificate> find_two_blocks_cycle(const Digraph& d, int k1, int k2,
                                                            const SearchOptions& opts) {
    SearchOptions exact = opts;
    exact.heuristic = false;
    DetectResult r = detect_two_blocks_cycle(d, k1, k2, exact);
    if (r.status == DetectStatus::found) return r.certificate;
    return std::nullopt;
}

std::optional<SubdivisionCertificate> find_bispindle(const Digraph& d, int k1, int k2, int k3,
                                                     const SearchOptions& opts) {
    SearchOptions exact = opts;
    exact.heuristic = false;
    DetectResult r = detect_bispindle(d, k1, k2, k3, exact);
    if (r.status == DetectStatus::found) return r.certificate;
    return std::nullopt;
}

}  // namespace spindle
