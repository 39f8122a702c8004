#include "spindle/json_io.hpp"

#include <sstream>

namespace spindle {

namespace {

int get_int(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw input_error(std::string("missing or non-integer field: ") + key);
    return j[key].get<int>();
}

std::vector<std::pair<int, int>> get_pairs(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array())
        throw input_error(std::string("missing or non-array field: ") + key);
    std::vector<std::pair<int, int>> out;
    for (const auto& item : j[key]) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
            !item[1].is_number_integer())
            throw input_error(std::string("malformed pair in field: ") + key);
        out.emplace_back(item[0].get<int>(), item[1].get<int>());
    }
    return out;
}

}  // namespace

Json digraph_to_json(const Digraph& d) {
    Json j;
    j["n"] = d.n();
    Json arcs = Json::array();
    for (const Arc& a : d.arcs()) arcs.push_back({a.first, a.second});
    j["arcs"] = std::move(arcs);
    return j;
}

Digraph digraph_from_json(const Json& j, bool allow_digons) {
    return Digraph(get_int(j, "n"), get_pairs(j, "arcs"), allow_digons);
}

Json graph_to_json(const Graph& g) {
    Json j;
    j["n"] = g.n();
    Json edges = Json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.first, e.second});
    j["edges"] = std::move(edges);
    return j;
}

Graph graph_from_json(const Json& j) {
    return Graph(get_int(j, "n"), get_pairs(j, "edges"));
}

Json coloring_to_json(const Coloring& c) {
    Json j;
    j["palette"] = c.palette;
    j["colors"] = c.colors;
    return j;
}

Coloring coloring_from_json(const Json& j) {
    Coloring c;
    c.palette = get_int(j, "palette");
    if (!j.contains("colors") || !j["colors"].is_array())
        throw input_error("missing colors array");
    for (const auto& v : j["colors"]) c.colors.push_back(v.get<int>());
    return c;
}

Json ordering_to_json(const VertexOrdering& l) {
    Json j;
    j["order"] = l.order;
    return j;
}

VertexOrdering ordering_from_json(const Json& j) {
    if (!j.contains("order") || !j["order"].is_array()) throw input_error("missing order array");
    std::vector<Vertex> order;
    for (const auto& v : j["order"]) order.push_back(v.get<int>());
    return VertexOrdering(std::move(order));
}

Json tree_to_json(const RootedTree& t) {
    Json j;
    j["root"] = t.root();
    j["parent"] = t.parent_map();
    return j;
}

RootedTree tree_from_json(const Json& j) {
    if (!j.contains("parent") || !j["parent"].is_array()) throw input_error("missing parent array");
    std::vector<Vertex> parent;
    for (const auto& v : j["parent"]) parent.push_back(v.get<int>());
    return RootedTree(get_int(j, "root"), std::move(parent));
}

Json certificate_to_json(const SubdivisionCertificate& c) {
    Json j;
    j["kind"] = kind_name(c.kind);
    j["x"] = c.x;
    j["y"] = c.y;
    Json paths = Json::array();
    for (const auto& p : c.paths) paths.push_back(p);
    j["paths"] = std::move(paths);
    j["directions"] = c.directions;
    return j;
}

namespace {

PatternSpec::Kind kind_from_name(const std::string& name) {
    if (name == "two_blocks_cycle") return PatternSpec::Kind::two_blocks_cycle;
    if (name == "bispindle") return PatternSpec::Kind::bispindle;
    if (name == "multi_block_cycle") return PatternSpec::Kind::multi_block_cycle;
    throw input_error("unknown pattern kind: " + name);
}

}  // namespace

SubdivisionCertificate certificate_from_json(const Json& j) {
    SubdivisionCertificate c;
    if (!j.contains("kind")) throw input_error("certificate missing kind");
    c.kind = kind_from_name(j["kind"].get<std::string>());
    c.x = j.value("x", -1);
    c.y = j.value("y", -1);
    if (!j.contains("paths") || !j["paths"].is_array()) throw input_error("certificate missing paths");
    for (const auto& p : j["paths"]) {
        std::vector<Vertex> path;
        for (const auto& v : p) path.push_back(v.get<int>());
        c.paths.push_back(std::move(path));
    }
    if (j.contains("directions"))
        for (const auto& d : j["directions"]) c.directions.push_back(d.get<std::string>());
    return c;
}

Json pattern_to_json(const PatternSpec& p) {
    Json j;
    j["kind"] = kind_name(p.kind);
    j["params"] = p.params;
    return j;
}

PatternSpec pattern_from_json(const Json& j) {
    if (!j.contains("kind")) throw input_error("pattern missing kind");
    PatternSpec::Kind kind = kind_from_name(j["kind"].get<std::string>());
    std::vector<int> params;
    for (const auto& v : j["params"]) params.push_back(v.get<int>());
    switch (kind) {
        case PatternSpec::Kind::two_blocks_cycle:
            if (params.size() != 2) throw input_error("two-blocks cycle needs two parameters");
            return PatternSpec::two_blocks(params[0], params[1]);
        case PatternSpec::Kind::bispindle:
            if (params.size() != 3) throw input_error("bispindle needs three parameters");
            return PatternSpec::bispindle(params[0], params[1], params[2]);
        case PatternSpec::Kind::multi_block_cycle:
            return PatternSpec::multi_block(std::move(params));
    }
    throw input_error("unknown pattern kind");
}

PatternSpec parse_pattern(const std::string& text) {
    auto open = text.find('(');
    if (open == std::string::npos || text.back() != ')')
        throw input_error("pattern syntax: C(k1,k2), B(k1,k2;k3) or C(k1,...,k2m)");
    std::string head = text.substr(0, open);
    std::string body = text.substr(open + 1, text.size() - open - 2);
    std::vector<int> nums;
    std::string cur;
    for (char ch : body + ",") {
        if (ch == ',' || ch == ';') {
            if (cur.empty()) throw input_error("empty pattern parameter");
            nums.push_back(std::stoi(cur));
            cur.clear();
        } else if (ch == ' ') {
            continue;
        } else {
            cur.push_back(ch);
        }
    }
    if (head == "C" || head == "c") {
        if (nums.size() == 2) return PatternSpec::two_blocks(nums[0], nums[1]);
        return PatternSpec::multi_block(nums);
    }
    if (head == "B" || head == "b") {
        if (nums.size() != 3) throw input_error("bispindle pattern needs three parameters");
        return PatternSpec::bispindle(nums[0], nums[1], nums[2]);
    }
    throw input_error("pattern syntax: C(...) or B(...)");
}

std::string instance_hash(const Digraph& d) {
    std::string dump = digraph_to_json(d).dump();
    unsigned long long h = 1469598103934665603ull;
    for (unsigned char ch : dump) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

}  // namespace spindle
