#include "spindle/patterns.hpp"

#include <algorithm>
#include <map>

namespace spindle {

PatternSpec PatternSpec::two_blocks(int k1, int k2) {
    if (k1 < 1 || k2 < 1) throw input_error("two-blocks cycle parameters must be positive");
    if (k1 < k2) std::swap(k1, k2);
    return {Kind::two_blocks_cycle, {k1, k2}};
}

PatternSpec PatternSpec::bispindle(int k1, int k2, int k3) {
    if (k1 < 1 || k2 < 1 || k3 < 1) throw input_error("bispindle parameters must be positive");
    if (k1 < k2) std::swap(k1, k2);  // the two same-direction dipaths are symmetric
    return {Kind::bispindle, {k1, k2, k3}};
}

PatternSpec PatternSpec::multi_block(std::vector<int> ks) {
    if (ks.size() < 4 || ks.size() % 2 != 0)
        throw input_error("multi-block cycle needs an even block count of at least 4");
    for (int k : ks)
        if (k < 1) throw input_error("block lengths must be positive");
    return {Kind::multi_block_cycle, std::move(ks)};
}

std::string kind_name(PatternSpec::Kind k) {
    switch (k) {
        case PatternSpec::Kind::two_blocks_cycle: return "two_blocks_cycle";
        case PatternSpec::Kind::bispindle: return "bispindle";
        case PatternSpec::Kind::multi_block_cycle: return "multi_block_cycle";
    }
    throw std::logic_error("unknown pattern kind");
}

SubdivisionCertificate make_two_blocks_certificate(Vertex x, Vertex y,
                                                   std::vector<Vertex> path1,
                                                   std::vector<Vertex> path2) {
    SubdivisionCertificate c;
    c.kind = PatternSpec::Kind::two_blocks_cycle;
    c.x = x;
    c.y = y;
    c.paths = {std::move(path1), std::move(path2)};
    c.directions = {"xy", "xy"};
    return c;
}

SubdivisionCertificate make_bispindle_certificate(Vertex x, Vertex y,
                                                  std::vector<Vertex> xy1,
                                                  std::vector<Vertex> xy2,
                                                  std::vector<Vertex> yx) {
    SubdivisionCertificate c;
    c.kind = PatternSpec::Kind::bispindle;
    c.x = x;
    c.y = y;
    c.paths = {std::move(xy1), std::move(xy2), std::move(yx)};
    c.directions = {"xy", "xy", "yx"};
    return c;
}

SubdivisionCertificate make_multi_block_certificate(std::vector<std::vector<Vertex>> blocks) {
    SubdivisionCertificate c;
    c.kind = PatternSpec::Kind::multi_block_cycle;
    c.paths = std::move(blocks);
    c.directions.assign(c.paths.size(), "source_sink");
    return c;
}

namespace {

Validation fail(const std::string& reason) { return {false, reason}; }

Validation check_dipath(const Digraph& d, const std::vector<Vertex>& p) {
    if (p.size() < 2) return fail("path with fewer than two vertices");
    std::vector<char> seen(d.n(), 0);
    for (Vertex v : p) {
        if (v < 0 || v >= d.n()) return fail("path vertex out of range");
        if (seen[v]) return fail("repeated vertex inside a path");
        seen[v] = 1;
    }
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (!d.has_arc(p[i], p[i + 1])) return fail("missing arc along a declared dipath");
    return {true, ""};
}

// Internal disjointness for paths that may share declared endpoints only.
Validation check_internal_disjoint(const std::vector<std::vector<Vertex>>& paths, int n) {
    std::vector<int> internal_owner(n, -1);
    std::map<Vertex, int> endpoint_count;
    for (std::size_t i = 0; i < paths.size(); ++i) {
        const auto& p = paths[i];
        endpoint_count[p.front()]++;
        endpoint_count[p.back()]++;
        for (std::size_t j = 1; j + 1 < p.size(); ++j) {
            Vertex v = p[j];
            if (internal_owner[v] != -1) return fail("internal vertex shared between paths");
            internal_owner[v] = static_cast<int>(i);
        }
    }
    for (const auto& p : paths)
        for (std::size_t j = 1; j + 1 < p.size(); ++j)
            if (endpoint_count.count(p[j])) return fail("junction reused as internal vertex");
    return {true, ""};
}

}  // namespace

Validation validate_certificate(const Digraph& d, const SubdivisionCertificate& cert,
                                const PatternSpec& spec) {
    if (cert.kind != spec.kind) return fail("certificate kind does not match pattern");
    for (const auto& p : cert.paths) {
        Validation v = check_dipath(d, p);
        if (!v) return v;
    }
    Validation dis = check_internal_disjoint(cert.paths, d.n());
    if (!dis) return dis;

    auto len = [&](std::size_t i) { return static_cast<int>(cert.paths[i].size()) - 1; };

    switch (spec.kind) {
        case PatternSpec::Kind::two_blocks_cycle: {
            if (cert.paths.size() != 2) return fail("two-blocks cycle needs exactly two paths");
            if (cert.x == cert.y) return fail("junctions must be distinct");
            for (const auto& p : cert.paths) {
                if (p.front() != cert.x) return fail("path does not start at x");
                if (p.back() != cert.y) return fail("path does not end at y");
            }
            int a = len(0), b = len(1);
            bool fits = (a >= spec.params[0] && b >= spec.params[1]) ||
                        (b >= spec.params[0] && a >= spec.params[1]);
            if (!fits) return fail("path lengths below the pattern parameters");
            return {true, ""};
        }
        case PatternSpec::Kind::bispindle: {
            if (cert.paths.size() != 3) return fail("bispindle needs exactly three paths");
            if (cert.x == cert.y) return fail("junctions must be distinct");
            for (int i : {0, 1}) {
                if (cert.paths[i].front() != cert.x) return fail("xy-path does not start at x");
                if (cert.paths[i].back() != cert.y) return fail("xy-path does not end at y");
            }
            if (cert.paths[2].front() != cert.y) return fail("yx-path does not start at y");
            if (cert.paths[2].back() != cert.x) return fail("yx-path does not end at x");
            int a = len(0), b = len(1);
            bool fits = (a >= spec.params[0] && b >= spec.params[1]) ||
                        (b >= spec.params[0] && a >= spec.params[1]);
            if (!fits) return fail("xy-path lengths below the pattern parameters");
            if (len(2) < spec.params[2]) return fail("yx-path length below the pattern parameter");
            return {true, ""};
        }
        case PatternSpec::Kind::multi_block_cycle: {
            std::size_t blocks = spec.params.size();
            if (cert.paths.size() != blocks) return fail("block count does not match pattern");
            for (std::size_t i = 0; i < blocks; ++i)
                if (len(i) < spec.params[i]) return fail("block length below the pattern parameter");
            // Alternating junction structure: 2i-1 and 2i share their source,
            // 2i and 2i+1 share their sink (1-based block indices, wrapping).
            std::vector<Vertex> junctions;
            for (std::size_t i = 0; i + 1 < blocks; i += 2) {
                if (cert.paths[i].front() != cert.paths[i + 1].front())
                    return fail("consecutive blocks do not share a source");
                junctions.push_back(cert.paths[i].front());
            }
            for (std::size_t i = 1; i < blocks; i += 2) {
                std::size_t next = (i + 1) % blocks;
                if (cert.paths[i].back() != cert.paths[next].back())
                    return fail("consecutive blocks do not share a sink");
                junctions.push_back(cert.paths[i].back());
            }
            std::sort(junctions.begin(), junctions.end());
            if (std::adjacent_find(junctions.begin(), junctions.end()) != junctions.end())
                return fail("junction vertices are not distinct");
            return {true, ""};
        }
    }
    return fail("unknown pattern kind");
}

DilationReport dilation_report(const Digraph& d, const SubdivisionCertificate& cert,
                               const PatternSpec& spec) {
    if (spec.kind != PatternSpec::Kind::multi_block_cycle)
        throw input_error("dilation accounting applies to multi-block cycles");
    Validation v = validate_certificate(d, cert, spec);
    if (!v) throw input_error("invalid certificate: " + v.reason);
    DilationReport report;
    for (std::size_t i = 0; i < cert.paths.size(); ++i) {
        int length = static_cast<int>(cert.paths[i].size()) - 1;
        bool dil = length > spec.params[i];
        report.dilated.push_back(dil);
        if (!dil) ++report.non_dilated;
    }
    return report;
}

}  // namespace spindle
