#pragma once

#include <optional>

#include "spindle/patterns.hpp"
#include "spindle/types.hpp"

namespace spindle {

struct SearchOptions {
    int exact_limit = 30;          // exact search refuses larger instances
    bool heuristic = false;        // bounded search above the limit, may answer unknown
    long node_budget = 2000000;    // heuristic mode only
};

enum class DetectStatus { found, absent, unknown };

struct DetectResult {
    DetectStatus status = DetectStatus::unknown;
    std::optional<SubdivisionCertificate> certificate;
};

/// Exhaustive detector for two-blocks-cycle subdivisions: junction pairs are
/// enumerated, the first dipath is searched depth-first and the second in the
/// residual digraph with the first path's internals removed. Answers are
/// exact within the scale limit.
DetectResult detect_two_blocks_cycle(const Digraph& d, int k1, int k2,
                                     const SearchOptions& opts = {});

DetectResult detect_bispindle(const Digraph& d, int k1, int k2, int k3,
                              const SearchOptions& opts = {});

/// Exact-mode wrappers; refuse instances above the limit.
std::optional<SubdivisionCertificate> find_two_blocks_cycle(const Digraph& d, int k1, int k2,
                                                            const SearchOptions& opts = {});
std::optional<SubdivisionCertificate> find_bispindle(const Digraph& d, int k1, int k2, int k3,
                                                     const SearchOptions& opts = {});

}  // namespace spindle
