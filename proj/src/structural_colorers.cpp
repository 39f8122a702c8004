#include "spindle/structural_colorers.hpp"

#include <algorithm>
#include <numeric>

#include "spindle/oracles.hpp"
#include "spindle/secancy.hpp"
#include "spindle/star_colorers.hpp"

namespace spindle {

namespace {

void normalize_pair(int& k1, int& k2) {
    if (k1 < k2) std::swap(k1, k2);
}

// Two internally disjoint dipaths with common endpoints built from a
// consecutive chain dipath and two interleaved chords over it. Chain offsets
// satisfy s1 < s2 < t1 < t2; fwd flags give the chord orientations (towards
// the higher offset). All four orientation combinations produce a valid
// pair; segment lengths inherit the chain gaps.
std::pair<std::vector<Vertex>, std::vector<Vertex>> two_blocks_from_chain(
    const std::vector<Vertex>& chain, int s1, int s2, int t1, int t2, bool fwd1, bool fwd2) {
    auto seg = [&](int a, int b) {
        return std::vector<Vertex>(chain.begin() + a, chain.begin() + b + 1);
    };
    std::vector<Vertex> a, b;
    if (fwd1 && fwd2) {  // x = chain[s1], y = chain[t2]
        a.push_back(chain[s1]);
        auto rest = seg(t1, t2);
        a.insert(a.end(), rest.begin(), rest.end());
        b = seg(s1, s2);
        b.push_back(chain[t2]);
    } else if (!fwd1 && !fwd2) {  // x = chain[t1], y = chain[s2]
        a.push_back(chain[t1]);
        auto rest = seg(s1, s2);
        a.insert(a.end(), rest.begin(), rest.end());
        b = seg(t1, t2);
        b.push_back(chain[s2]);
    } else if (fwd1 && !fwd2) {  // x = chain[s1], y = chain[s2]
        a.push_back(chain[s1]);
        auto rest = seg(t1, t2);
        a.insert(a.end(), rest.begin(), rest.end());
        a.push_back(chain[s2]);
        b = seg(s1, s2);
    } else {  // x = chain[t1], y = chain[t2]
        a.push_back(chain[t1]);
        auto rest = seg(s1, s2);
        a.insert(a.end(), rest.begin(), rest.end());
        a.push_back(chain[t2]);
        b = seg(t1, t2);
    }
    return {a, b};
}

SubdivisionCertificate checked_two_blocks(const Digraph& d, int k1, int k2,
                                          std::vector<Vertex> a, std::vector<Vertex> b) {
    SubdivisionCertificate cert =
        make_two_blocks_certificate(a.front(), a.back(), std::move(a), std::move(b));
    Validation v = validate_certificate(d, cert, PatternSpec::two_blocks(k1, k2));
    if (!v) throw std::logic_error("constructed two-blocks certificate invalid: " + v.reason);
    return cert;
}

// Normalizes a secant pair of edges over chain positions into the offsets
// (s1 < s2 < t1 < t2) and chord orientations expected by
// two_blocks_from_chain. `pos` maps a vertex to its chain offset.
struct ChordLayout {
    int s1, s2, t1, t2;
    bool fwd1, fwd2;
};

ChordLayout layout_chords(const Digraph& d, const std::vector<int>& pos, Edge e, Edge f,
                          const std::vector<Vertex>& chain) {
    auto lo = [&](Edge x) { return std::min(pos[x.first], pos[x.second]); };
    if (lo(e) > lo(f)) std::swap(e, f);
    int s1 = lo(e), t1 = std::max(pos[e.first], pos[e.second]);
    int s2 = lo(f), t2 = std::max(pos[f.first], pos[f.second]);
    bool fwd1 = d.has_arc(chain[s1], chain[t1]);
    bool fwd2 = d.has_arc(chain[s2], chain[t2]);
    if (!fwd1 && !d.has_arc(chain[t1], chain[s1]))
        throw std::logic_error("chord arc missing");
    if (!fwd2 && !d.has_arc(chain[t2], chain[s2]))
        throw std::logic_error("chord arc missing");
    return {s1, s2, t1, t2, fwd1, fwd2};
}

}  // namespace

ColorOrCertificate color_hamdipath_c2free(const Digraph& d, const std::vector<Vertex>& path,
                                          int k1, int k2) {
    normalize_pair(k1, k2);
    if (k2 < 2) throw input_error("two-blocks parameters must both be at least 2");
    if (!is_hamiltonian_dipath_of(d, path))
        throw input_error("not a Hamiltonian dipath of the digraph");

    ColorOrCertificate out;
    out.bound = 3 * k1;

    std::vector<int> pos(d.n());
    for (int i = 0; i < d.n(); ++i) pos[path[i]] = i;

    std::vector<std::vector<Vertex>> classes(k1);
    for (int i = 0; i < d.n(); ++i) classes[i % k1].push_back(path[i]);

    std::vector<Coloring> class_colorings;
    for (const auto& klass : classes) {
        Graph sub = underlying_graph(induced_subdigraph(d, klass));
        VertexOrdering order = VertexOrdering::identity(static_cast<int>(klass.size()));
        auto pairs = secant_pairs(sub, order);
        if (!pairs.empty()) {
            Edge e = make_edge(klass[pairs[0].first.first], klass[pairs[0].first.second]);
            Edge f = make_edge(klass[pairs[0].second.first], klass[pairs[0].second.second]);
            ChordLayout lay = layout_chords(d, pos, e, f, path);
            auto [a, b] = two_blocks_from_chain(path, lay.s1, lay.s2, lay.t1, lay.t2,
                                                lay.fwd1, lay.fwd2);
            out.certificate = checked_two_blocks(d, k1, k2, std::move(a), std::move(b));
            return out;
        }
        class_colorings.push_back(color_no_secant(sub, order));
    }
    out.coloring = partition_sum_coloring(underlying_graph(d), classes, class_colorings);
    if (out.coloring->palette > out.bound)
        throw std::logic_error("class sum exceeded the declared bound");
    return out;
}

std::vector<std::vector<Vertex>> greedy_dipath_cover(const Digraph& d) {
    std::vector<char> used(d.n(), 0);
    std::vector<std::vector<Vertex>> cover;
    for (Vertex seed = 0; seed < d.n(); ++seed) {
        if (used[seed]) continue;
        std::vector<Vertex> p{seed};
        used[seed] = 1;
        // extend forward, then backward, lowest index first
        while (true) {
            Vertex extend = -1;
            for (Vertex w : d.out(p.back()))
                if (!used[w]) { extend = w; break; }
            if (extend == -1) break;
            used[extend] = 1;
            p.push_back(extend);
        }
        while (true) {
            Vertex extend = -1;
            for (Vertex w : d.in(p.front()))
                if (!used[w]) { extend = w; break; }
            if (extend == -1) break;
            used[extend] = 1;
            p.insert(p.begin(), extend);
        }
        cover.push_back(std::move(p));
    }
    return cover;
}

ColorOrCertificate color_pathcover_c2free(const Digraph& d, int k1, int k2) {
    normalize_pair(k1, k2);
    if (k1 < 2) throw input_error("path-cover colorer needs max(k1,k2) >= 2");

    std::vector<std::vector<Vertex>> cover = greedy_dipath_cover(d);
    ColorOrCertificate out;
    out.bound = 3 * static_cast<int>(cover.size()) * k1;

    std::vector<Coloring> path_colorings;
    for (const auto& p : cover) {
        Digraph sub = induced_subdigraph(d, p);
        std::vector<Vertex> local_path(p.size());
        std::iota(local_path.begin(), local_path.end(), 0);
        ColorOrCertificate piece = color_hamdipath_c2free(sub, local_path, k1, k1);
        if (!piece.has_coloring()) {
            SubdivisionCertificate cert = *piece.certificate;
            for (auto& cpath : cert.paths)
                for (Vertex& v : cpath) v = p[v];
            cert.x = cert.paths[0].front();
            cert.y = cert.paths[0].back();
            Validation val = validate_certificate(d, cert, PatternSpec::two_blocks(k1, k2));
            if (!val) throw std::logic_error("lifted certificate invalid: " + val.reason);
            out.certificate = std::move(cert);
            return out;
        }
        path_colorings.push_back(*piece.coloring);
    }
    out.coloring = partition_sum_coloring(underlying_graph(d), cover, path_colorings);
    if (out.coloring->palette > out.bound)
        throw std::logic_error("cover sum exceeded the declared bound");
    return out;
}

namespace {

SubdivisionCertificate bispindle_from_cycle(const Digraph& d, const std::vector<Vertex>& cycle,
                                            int l, int p, int m, int q, bool fwd_lm, bool fwd_pq,
                                            int k1, int k2, int k3) {
    int n = static_cast<int>(cycle.size());
    auto seg = [&](int a, int b) {  // consecutive positions a..b, no wrap
        return std::vector<Vertex>(cycle.begin() + a, cycle.begin() + b + 1);
    };
    auto wrap = [&](int a, int b) {  // positions a..n-1, 0..b
        std::vector<Vertex> s(cycle.begin() + a, cycle.end());
        s.insert(s.end(), cycle.begin(), cycle.begin() + b + 1);
        return s;
    };
    std::vector<Vertex> p1, p2, p3;
    Vertex jx, jy;
    if (fwd_lm && fwd_pq) {
        // chords l->m, p->q; junctions x_l, x_q
        jx = cycle[l];
        jy = cycle[q];
        p1 = seg(l, p);
        p1.push_back(cycle[q]);
        p2 = {cycle[l]};
        auto rest = seg(m, q);
        p2.insert(p2.end(), rest.begin(), rest.end());
        p3 = wrap(q, l);
    } else if (fwd_lm && !fwd_pq) {
        // chords l->m, q->p; junctions x_q, x_m
        jx = cycle[q];
        jy = cycle[m];
        p1 = {cycle[q]};
        auto rest = seg(p, m);
        p1.insert(p1.end(), rest.begin(), rest.end());
        p2 = wrap(q, l);
        p2.push_back(cycle[m]);
        p3 = seg(m, q);
    } else if (!fwd_lm && fwd_pq) {
        // chords m->l, p->q; junctions x_p, x_l
        jx = cycle[p];
        jy = cycle[l];
        p1 = seg(p, m);
        p1.push_back(cycle[l]);
        p2 = {cycle[p]};
        auto rest = wrap(q, l);
        p2.insert(p2.end(), rest.begin(), rest.end());
        p3 = seg(l, p);
    } else {
        // chords m->l, q->p; junctions x_m, x_p
        jx = cycle[m];
        jy = cycle[p];
        p1 = {cycle[m]};
        auto rest = seg(l, p);
        p1.insert(p1.end(), rest.begin(), rest.end());
        p2 = seg(m, q);
        p2.push_back(cycle[p]);
        p3 = seg(p, m);
    }
    SubdivisionCertificate cert =
        make_bispindle_certificate(jx, jy, std::move(p1), std::move(p2), std::move(p3));
    Validation v = validate_certificate(d, cert, PatternSpec::bispindle(k1, k2, k3));
    if (!v) throw std::logic_error("constructed bispindle certificate invalid: " + v.reason);
    return cert;
}

}  // namespace

ColorOrCertificate color_hamcycle_bispindlefree(const Digraph& d, const std::vector<Vertex>& cycle,
                                                int k1, int k2, int k3) {
    if (k1 < 1 || k2 < 1 || k3 < 1) throw input_error("bispindle parameters must be positive");
    if (!is_hamiltonian_dicycle_of(d, cycle))
        throw input_error("not a Hamiltonian dicycle of the digraph");
    int k = std::max({k1, k2, k3});
    ColorOrCertificate out;
    out.bound = 4 * k;

    std::vector<int> pos(d.n());
    for (int i = 0; i < d.n(); ++i) pos[cycle[i]] = i;

    std::vector<std::vector<Vertex>> classes(k);
    for (int i = 0; i < d.n(); ++i) classes[i % k].push_back(cycle[i]);

    std::vector<Coloring> class_colorings;
    for (auto& klass : classes) {
        if (klass.empty()) {
            class_colorings.push_back(Coloring{{}, 0});
            continue;
        }
        // The class keeps cycle order; its first vertex is held out so the
        // wrap segment of any certificate stays long enough.
        std::vector<Vertex> trimmed(klass.begin() + 1, klass.end());
        Graph sub = underlying_graph(induced_subdigraph(d, trimmed));
        VertexOrdering order = VertexOrdering::identity(static_cast<int>(trimmed.size()));
        auto pairs = secant_pairs(sub, order);
        if (!pairs.empty()) {
            Edge e = make_edge(trimmed[pairs[0].first.first], trimmed[pairs[0].first.second]);
            Edge f = make_edge(trimmed[pairs[0].second.first], trimmed[pairs[0].second.second]);
            auto lo = [&](Edge x) { return std::min(pos[x.first], pos[x.second]); };
            if (lo(e) > lo(f)) std::swap(e, f);
            int l = lo(e), m = std::max(pos[e.first], pos[e.second]);
            int p = lo(f), q = std::max(pos[f.first], pos[f.second]);
            bool fwd_lm = d.has_arc(cycle[l], cycle[m]);
            bool fwd_pq = d.has_arc(cycle[p], cycle[q]);
            out.certificate = bispindle_from_cycle(d, cycle, l, p, m, q, fwd_lm, fwd_pq, k1, k2, k3);
            return out;
        }
        Coloring trimmed_coloring =
            trimmed.empty() ? Coloring{{}, 0} : color_no_secant(sub, order);
        // Held-out vertex takes a color beyond the trimmed palette.
        std::vector<int> colors{trimmed_coloring.palette + 1};
        colors.insert(colors.end(), trimmed_coloring.colors.begin(), trimmed_coloring.colors.end());
        class_colorings.push_back(make_coloring(std::move(colors)));
    }
    std::vector<std::vector<Vertex>> parts;
    std::vector<Coloring> part_colorings;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (classes[i].empty()) continue;
        parts.push_back(classes[i]);
        part_colorings.push_back(class_colorings[i]);
    }
    out.coloring = partition_sum_coloring(underlying_graph(d), parts, part_colorings);
    if (out.coloring->palette > out.bound)
        throw std::logic_error("class sum exceeded the declared bound");
    return out;
}

ColorOrCertificate color_hamcycle_b1free(const Digraph& d, const std::vector<Vertex>& cycle,
                                         int k1, int k3) {
    if (k1 < 1 || k3 < 1) throw input_error("bispindle parameters must be positive");
    if (!is_hamiltonian_dicycle_of(d, cycle))
        throw input_error("not a Hamiltonian dicycle of the digraph");
    int k = std::max(k1, k3);
    int n = d.n();
    ColorOrCertificate out;
    out.bound = 2 * k - 1;

    if (n <= 2 * k - 1) {
        std::vector<int> colors(n);
        std::iota(colors.begin(), colors.end(), 1);
        out.coloring = make_coloring(std::move(colors));
        return out;
    }

    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[cycle[i]] = i;

    auto seg = [&](int a, int b) {  // cycle positions a..b, forward with wrap
        std::vector<Vertex> s;
        for (int i = a; ; i = (i + 1) % n) {
            s.push_back(cycle[i]);
            if (i == b) break;
        }
        return s;
    };

    for (int s = 0; s < n; ++s) {
        Vertex x = cycle[s];
        std::vector<Vertex> nbrs = d.out(x);
        nbrs.insert(nbrs.end(), d.in(x).begin(), d.in(x).end());
        for (Vertex w : nbrs) {
            int off = ((pos[w] - s) % n + n) % n;
            if (off < k || off > n - k) continue;
            // Chord reaching outside the 2k-2 nearest vertices: the two cycle
            // segments plus the chord form the certificate.
            SubdivisionCertificate cert;
            if (d.has_arc(x, w)) {
                cert = make_bispindle_certificate(x, w, seg(s, pos[w]), {x, w},
                                                  seg(pos[w], s));
            } else {
                cert = make_bispindle_certificate(w, x, seg(pos[w], s), {w, x},
                                                  seg(s, pos[w]));
            }
            Validation v = validate_certificate(d, cert, PatternSpec::bispindle(k1, 1, k3));
            if (!v) throw std::logic_error("constructed chord certificate invalid: " + v.reason);
            out.certificate = std::move(cert);
            return out;
        }
    }

    Graph g = underlying_graph(d);
    if (g.max_degree() > 2 * k - 2)
        throw std::logic_error("confined neighborhoods but degree above 2k-2");
    out.coloring = greedy_coloring(g, VertexOrdering::identity(n));
    if (out.coloring->palette > out.bound)
        throw std::logic_error("greedy exceeded the degree bound");
    return out;
}

namespace {

// Walks a longest-dipath witness of the requested order using the
// longest-path values (value drops by one along some out-arc).
std::vector<Vertex> extract_dipath(const Digraph& d, const Coloring& values, int order) {
    Vertex start = -1;
    for (Vertex v = 0; v < d.n(); ++v)
        if (values.colors[v] >= order && (start == -1 || values.colors[v] > values.colors[start]))
            start = v;
    if (start == -1) throw std::logic_error("no dipath of the requested order");
    std::vector<Vertex> path{start};
    while (static_cast<int>(path.size()) < order) {
        Vertex cur = path.back();
        Vertex next = -1;
        for (Vertex w : d.out(cur))
            if (values.colors[w] == values.colors[cur] - 1) { next = w; break; }
        if (next == -1) throw std::logic_error("longest-path values inconsistent");
        path.push_back(next);
    }
    return path;
}

Coloring four_color_layer(const Graph& g, const RootedTree& t) {
    StarClass cls = classify_star(t);
    switch (cls.kind) {
        case StarClass::Kind::path_degenerate:
            return color_no_secant(g, path_tree_ordering(t));
        case StarClass::Kind::whip:
        case StarClass::Kind::star_like:
            if (cls.index == 0) return color_star0(g, t);
            if (cls.index == 1) return color_star1(g, t);
            [[fallthrough]];
        case StarClass::Kind::other: {
            FourColorSearch search = color_normal_nosecant_general(g, t);
            if (!search.coloring) throw counterexample_found(g, t, search.nodes);
            return *search.coloring;
        }
    }
    throw std::logic_error("unreachable star class");
}

}  // namespace

ColorOrCertificate color_outtree_c2free(const Digraph& d, const RootedTree& t, int k1, int k2) {
    normalize_pair(k1, k2);
    if (k2 < 2)
        throw input_error("out-tree colorer needs k1 >= k2 >= 2: a unit block leaves no budget "
                          "for the incomparable layer");
    RootedTree tm = make_maximal_out_tree(d, t);

    ColorOrCertificate out;
    out.bound = 4 * k1 * (k2 - 1);

    std::vector<std::vector<Vertex>> classes(k1);
    for (Vertex v = 0; v < d.n(); ++v) classes[tm.level(v) % k1].push_back(v);

    std::vector<std::vector<Vertex>> parts;
    std::vector<Coloring> part_colorings;
    for (const auto& klass : classes) {
        if (klass.empty()) continue;
        Digraph di = induced_subdigraph(d, klass);

        // Split the class arcs by tree comparability of their endpoints.
        std::vector<Arc> comparable_arcs, incomparable_arcs;
        for (const Arc& a : di.arcs()) {
            Vertex gu = klass[a.first], gv = klass[a.second];
            if (tm.is_ancestor(gu, gv) || tm.is_ancestor(gv, gu))
                comparable_arcs.push_back(a);
            else
                incomparable_arcs.push_back(a);
        }

        // Comparable layer, joined with the whole tree.
        std::vector<Arc> layer_arcs;
        for (Vertex v = 0; v < d.n(); ++v)
            if (v != tm.root()) layer_arcs.emplace_back(tm.parent(v), v);
        for (const Arc& a : comparable_arcs) layer_arcs.emplace_back(klass[a.first], klass[a.second]);
        Graph layer = underlying_graph(Digraph(d.n(), std::move(layer_arcs), true));

        auto secant = secant_pairs_wrt_tree(layer, tm);
        if (!secant.empty()) {
            auto [e, f] = secant.front();
            // All four endpoints lie on one root path; the chain between the
            // topmost and deepest endpoint realizes the chord layout.
            std::vector<Vertex> ends{e.first, e.second, f.first, f.second};
            std::sort(ends.begin(), ends.end(),
                      [&](Vertex a, Vertex b) { return tm.level(a) < tm.level(b); });
            std::vector<Vertex> chain = tm.path_between(ends.front(), ends.back());
            std::vector<int> cpos(d.n(), -1);
            for (std::size_t i = 0; i < chain.size(); ++i) cpos[chain[i]] = static_cast<int>(i);
            ChordLayout lay = layout_chords(d, cpos, e, f, chain);
            auto [a, b] =
                two_blocks_from_chain(chain, lay.s1, lay.s2, lay.t1, lay.t2, lay.fwd1, lay.fwd2);
            out.certificate = checked_two_blocks(d, k1, k2, std::move(a), std::move(b));
            return out;
        }

        Coloring layer_coloring = four_color_layer(saturate(layer, tm), tm);
        std::vector<int> comparable_local(klass.size());
        for (std::size_t j = 0; j < klass.size(); ++j)
            comparable_local[j] = layer_coloring.colors[klass[j]];
        Coloring c1 = make_coloring(std::move(comparable_local));

        // Incomparable layer: all arcs are forward once the tree is maximal,
        // so longest-path coloring applies; a dipath of order k2 rebuilds the
        // forbidden pattern through least common ancestors.
        Digraph di2(static_cast<int>(klass.size()), incomparable_arcs, true);
        Coloring c2 = gallai_roy_coloring(di2);
        if (c2.palette >= k2) {
            std::vector<Vertex> local = extract_dipath(di2, c2, k2);
            std::vector<Vertex> y(local.size());
            for (std::size_t j = 0; j < local.size(); ++j) y[j] = klass[local[j]];

            int alpha = -1;
            for (int j = 0; j <= k2 - 2; ++j)
                if (tm.is_ancestor(y[j], y[k2 - 1])) alpha = j;
            std::vector<Vertex> pa, pb;
            if (alpha >= 0) {
                if (alpha == k2 - 2)
                    throw std::logic_error("incomparable arc joined tree-comparable vertices");
                Vertex x = tm.lca(y[alpha], y[alpha + 1]);
                pa = tm.path_between(x, y[alpha + 1]);
                for (int j = alpha + 2; j <= k2 - 1; ++j) pa.push_back(y[j]);
                pb = tm.path_between(x, y[k2 - 1]);
            } else {
                Vertex x = tm.lca(y[0], y[k2 - 1]);
                pa = tm.path_between(x, y[0]);
                for (int j = 1; j <= k2 - 1; ++j) pa.push_back(y[j]);
                pb = tm.path_between(x, y[k2 - 1]);
            }
            out.certificate = checked_two_blocks(d, k1, k2, std::move(pa), std::move(pb));
            return out;
        }

        Graph g1 = underlying_graph(Digraph(static_cast<int>(klass.size()), comparable_arcs, true));
        Graph g2 = underlying_graph(di2);
        parts.push_back(klass);
        part_colorings.push_back(product_union_coloring(g1, c1, g2, c2));
    }

    out.coloring = partition_sum_coloring(underlying_graph(d), parts, part_colorings);
    if (out.coloring->palette > out.bound)
        throw std::logic_error("class sum exceeded the declared bound");
    return out;
}

}  // namespace spindle
