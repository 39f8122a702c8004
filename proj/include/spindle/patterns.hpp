#pragma once

#include <string>
#include <vector>

#include "spindle/types.hpp"

namespace spindle {

/// Forbidden-structure parameters: a two-blocks cycle C(k1,k2), a
/// (2+1)-bispindle B(k1,k2;k3), or a 2m-block cycle C(k1,...,k2m).
struct PatternSpec {
    enum class Kind { two_blocks_cycle, bispindle, multi_block_cycle };
    Kind kind = Kind::two_blocks_cycle;
    std::vector<int> params;

    /// Normalized so k1 >= k2.
    static PatternSpec two_blocks(int k1, int k2);
    static PatternSpec bispindle(int k1, int k2, int k3);
    /// Block count must be even and at least 4.
    static PatternSpec multi_block(std::vector<int> ks);
};

std::string kind_name(PatternSpec::Kind k);

/// Explicit witness for a forbidden subdivision: junction vertices plus
/// vertex-disjoint dipaths with declared directions.
///
/// Conventions: two-blocks cycles carry two x->y dipaths; bispindles carry
/// two x->y dipaths then one y->x dipath; multi-block cycles carry the 2m
/// blocks in cycle order, each written source -> sink, where blocks 2i-1 and
/// 2i leave the same source and blocks 2i and 2i+1 enter the same sink.
struct SubdivisionCertificate {
    PatternSpec::Kind kind = PatternSpec::Kind::two_blocks_cycle;
    Vertex x = -1;
    Vertex y = -1;
    std::vector<std::vector<Vertex>> paths;
    std::vector<std::string> directions;
};

SubdivisionCertificate make_two_blocks_certificate(Vertex x, Vertex y,
                                                   std::vector<Vertex> path1,
                                                   std::vector<Vertex> path2);
SubdivisionCertificate make_bispindle_certificate(Vertex x, Vertex y,
                                                  std::vector<Vertex> xy1,
                                                  std::vector<Vertex> xy2,
                                                  std::vector<Vertex> yx);
SubdivisionCertificate make_multi_block_certificate(std::vector<std::vector<Vertex>> blocks);

struct Validation {
    bool ok = false;
    std::string reason;
    explicit operator bool() const { return ok; }
};

/// Checks every certificate invariant against the host digraph and the
/// pattern: arcs present in the declared directions, simple paths, pairwise
/// internal disjointness, matching junctions, and sufficient lengths.
Validation validate_certificate(const Digraph& d, const SubdivisionCertificate& cert,
                                const PatternSpec& spec);

struct DilationReport {
    std::vector<bool> dilated;  // per block, in cycle order
    int non_dilated = 0;
};

/// Marks each block of a multi-block-cycle certificate as dilated when its
/// length strictly exceeds the pattern's block length. Throws on invalid
/// certificates.
DilationReport dilation_report(const Digraph& d, const SubdivisionCertificate& cert,
                               const PatternSpec& spec);

}  // namespace spindle
