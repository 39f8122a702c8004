#pragma once

#include <string>

#include <json.hpp>

#include "spindle/patterns.hpp"
#include "spindle/secancy.hpp"
#include "spindle/trees.hpp"
#include "spindle/types.hpp"

namespace spindle {

using Json = nlohmann::ordered_json;

Json digraph_to_json(const Digraph& d);
Digraph digraph_from_json(const Json& j, bool allow_digons = false);

Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

Json coloring_to_json(const Coloring& c);
Coloring coloring_from_json(const Json& j);

Json ordering_to_json(const VertexOrdering& l);
VertexOrdering ordering_from_json(const Json& j);

Json tree_to_json(const RootedTree& t);
RootedTree tree_from_json(const Json& j);

Json certificate_to_json(const SubdivisionCertificate& c);
SubdivisionCertificate certificate_from_json(const Json& j);

Json pattern_to_json(const PatternSpec& p);
PatternSpec pattern_from_json(const Json& j);

/// Parses "C(3,2)", "B(2,1;2)" or "C(1,2,1,2)" (two or more comma-separated
/// lengths inside C(...) select the multi-block form).
PatternSpec parse_pattern(const std::string& text);

/// FNV-1a over the canonical serialization; stable across runs and platforms.
std::string instance_hash(const Digraph& d);

}  // namespace spindle
