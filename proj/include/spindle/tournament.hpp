#pragma once

#include <optional>

#include "spindle/patterns.hpp"
#include "spindle/types.hpp"

namespace spindle {

/// Two dipaths leaving a common source, disjoint elsewhere, with exact lengths.
struct TwoBlocksPath {
    std::vector<Vertex> q1;  // source first, length k1
    std::vector<Vertex> q2;  // source first, length k2
};

/// Finds a two-blocks path P(k1,k2) inside a tournament of order at least
/// k1+k2+1 (k1+k2 >= 3). Sources are tried by descending out-degree;
/// exhaustion would contradict the existence guarantee and raises a logic
/// error.
TwoBlocksPath find_two_blocks_path(const Digraph& tournament, int k1, int k2);

struct CycleSubdivision {
    SubdivisionCertificate certificate;
    DilationReport report;
};

/// Assembles a 2m-block cycle subdivision inside a tournament of order at
/// least m + sum(k): disjoint subtournaments supply one two-blocks path each
/// and consecutive terminal pairs are joined by whichever tournament arc
/// exists, dilating exactly one adjacent block per connector. At least m
/// blocks keep their exact length. Subtournaments are cut first-fit by
/// index, or shuffled under the optional seed.
CycleSubdivision build_cycle_subdivision(const Digraph& tournament,
                                         const std::vector<int>& block_lengths,
                                         std::optional<unsigned long long> shuffle_seed = {});

}  // namespace spindle
