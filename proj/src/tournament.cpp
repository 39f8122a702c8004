#include "spindle/tournament.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "spindle/oracles.hpp"

namespace spindle {

namespace {

// Exact-length out-path from `path.back()` avoiding used vertices.
bool grow_exact(const Digraph& d, std::vector<Vertex>& path, std::vector<char>& used,
                int target_len) {
    if (static_cast<int>(path.size()) - 1 == target_len) return true;
    for (Vertex w : d.out(path.back())) {
        if (used[w]) continue;
        used[w] = 1;
        path.push_back(w);
        if (grow_exact(d, path, used, target_len)) return true;
        path.pop_back();
        used[w] = 0;
    }
    return false;
}

bool two_blocks_from(const Digraph& d, Vertex source, int k1, int k2, TwoBlocksPath& out) {
    std::vector<char> used(d.n(), 0);
    used[source] = 1;
    std::vector<Vertex> q1{source};
    // Backtrack over the first path as well: a greedy first path can starve
    // the second.
    std::function<bool()> try_q2 = [&]() {
        std::vector<Vertex> q2{source};
        if (!grow_exact(d, q2, used, k2)) return false;
        out.q1 = q1;
        out.q2 = q2;
        return true;
    };
    std::function<bool()> search = [&]() -> bool {
        if (static_cast<int>(q1.size()) - 1 == k1) return try_q2();
        for (Vertex w : d.out(q1.back())) {
            if (used[w]) continue;
            used[w] = 1;
            q1.push_back(w);
            if (search()) return true;
            q1.pop_back();
            used[w] = 0;
        }
        return false;
    };
    return search();
}

}  // namespace

TwoBlocksPath find_two_blocks_path(const Digraph& tournament, int k1, int k2) {
    if (k1 < 1 || k2 < 1 || k1 + k2 < 3)
        throw input_error("two-blocks path needs positive lengths summing to at least 3");
    if (!is_tournament(tournament)) throw input_error("expected a tournament");
    if (tournament.n() < k1 + k2 + 1)
        throw input_error("tournament order below k1+k2+1");

    std::vector<Vertex> sources(tournament.n());
    std::iota(sources.begin(), sources.end(), 0);
    std::stable_sort(sources.begin(), sources.end(), [&](Vertex a, Vertex b) {
        return tournament.out(a).size() > tournament.out(b).size();
    });
    TwoBlocksPath out;
    for (Vertex s : sources)
        if (two_blocks_from(tournament, s, k1, k2, out)) return out;
    throw std::logic_error("two-blocks path search exhausted: contradicts the existence theorem");
}

CycleSubdivision build_cycle_subdivision(const Digraph& tournament,
                                         const std::vector<int>& block_lengths,
                                         std::optional<unsigned long long> shuffle_seed) {
    PatternSpec spec = PatternSpec::multi_block(block_lengths);
    int m = static_cast<int>(block_lengths.size()) / 2;
    if (m < 2) throw input_error("need at least four blocks");
    long need = m;
    for (int k : block_lengths) need += k;
    for (int i = 0; i < m; ++i)
        if (block_lengths[2 * i] + block_lengths[2 * i + 1] < 3)
            throw input_error("each source pair of block lengths must sum to at least 3");
    if (tournament.n() < need) throw input_error("tournament order below m + sum of blocks");
    if (!is_tournament(tournament)) throw input_error("expected a tournament");

    std::vector<Vertex> pool(tournament.n());
    std::iota(pool.begin(), pool.end(), 0);
    if (shuffle_seed) {
        std::mt19937_64 eng(*shuffle_seed);
        for (int i = tournament.n() - 1; i > 0; --i) {
            int j = static_cast<int>(eng() % static_cast<unsigned long long>(i + 1));
            std::swap(pool[i], pool[j]);
        }
    }

    // One subtournament per source pair, cut consecutively from the pool.
    std::vector<std::vector<Vertex>> blocks(2 * m);
    std::size_t cursor = 0;
    for (int i = 0; i < m; ++i) {
        int ka = block_lengths[2 * i], kb = block_lengths[2 * i + 1];
        std::vector<Vertex> members(pool.begin() + cursor, pool.begin() + cursor + ka + kb + 1);
        cursor += ka + kb + 1;
        std::sort(members.begin(), members.end());
        Digraph sub = induced_subdigraph(tournament, members);
        TwoBlocksPath tb = find_two_blocks_path(sub, ka, kb);
        for (Vertex& v : tb.q1) v = members[v];
        for (Vertex& v : tb.q2) v = members[v];
        blocks[2 * i] = std::move(tb.q1);
        blocks[2 * i + 1] = std::move(tb.q2);
    }

    // Join terminal x_{2i} with x_{2i+1} (wrapping); the existing arc dilates
    // exactly one of the two blocks meeting there.
    for (int i = 0; i < m; ++i) {
        std::vector<Vertex>& even_block = blocks[2 * i + 1];        // ends at x_{2i}
        std::vector<Vertex>& odd_block = blocks[(2 * i + 2) % (2 * m)];  // ends at x_{2i+1}
        Vertex a = even_block.back(), b = odd_block.back();
        if (tournament.has_arc(a, b))
            even_block.push_back(b);
        else if (tournament.has_arc(b, a))
            odd_block.push_back(a);
        else
            throw std::logic_error("tournament lacks the connector arc");
    }

    CycleSubdivision out;
    out.certificate = make_multi_block_certificate(std::move(blocks));
    out.report = dilation_report(tournament, out.certificate, spec);
    return out;
}

}  // namespace spindle
