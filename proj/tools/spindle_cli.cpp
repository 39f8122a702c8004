// Command-line surface: gen, detect, color, chi, saturate, flatten, verify, scan.
// Exit codes: 0 success, 1 property violation or counterexample found,
// 2 invalid input.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "spindle/experiments.hpp"
#include "spindle/json_io.hpp"
#include "spindle/oracles.hpp"
#include "spindle/star_colorers.hpp"
#include "spindle/structural_colorers.hpp"
#include "spindle/tournament.hpp"

namespace {

using namespace spindle;

Json read_json_input(const std::string& path) {
    if (path.empty() || path == "-") {
        Json j;
        std::cin >> j;
        return j;
    }
    std::ifstream file(path);
    if (!file) throw input_error("cannot open input file: " + path);
    Json j;
    file >> j;
    return j;
}

void write_output(const Json& j, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream file(path);
    if (!file) throw input_error("cannot open output file: " + path);
    file << j.dump(2) << "\n";
}

void write_text(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream file(path);
    if (!file) throw input_error("cannot open output file: " + path);
    file << text;
}

// Instance documents are either a bare digraph or a wrapper carrying the
// planted structure from gen.
struct InstanceDoc {
    Digraph digraph;
    std::optional<std::vector<Vertex>> path;
    std::optional<std::vector<Vertex>> cycle;
    std::optional<RootedTree> tree;
};

InstanceDoc load_instance(const Json& j) {
    InstanceDoc doc;
    const Json& inst = j.contains("instance") ? j["instance"] : j;
    doc.digraph = digraph_from_json(inst);
    if (j.contains("planted")) {
        const Json& p = j["planted"];
        if (p.contains("path")) {
            std::vector<Vertex> path;
            for (const auto& v : p["path"]) path.push_back(v.get<int>());
            doc.path = std::move(path);
        }
        if (p.contains("cycle")) {
            std::vector<Vertex> cyc;
            for (const auto& v : p["cycle"]) cyc.push_back(v.get<int>());
            doc.cycle = std::move(cyc);
        }
        if (p.contains("tree")) doc.tree = tree_from_json(p["tree"]);
    }
    return doc;
}

struct GraphTreeDoc {
    Graph graph;
    RootedTree tree;
};

GraphTreeDoc load_graph_tree(const Json& j) {
    if (!j.contains("graph") || !j.contains("tree"))
        throw input_error("expected a document with graph and tree fields");
    return {graph_from_json(j["graph"]), tree_from_json(j["tree"])};
}

int cmd_gen(const std::string& family, int n, double density, std::uint64_t seed,
            const std::string& shape_name, const std::string& free_of, int budget, int limit,
            const std::string& out_path) {
    Json doc;
    doc["format"] = 1;
    doc["kind"] = family;
    std::optional<PatternSpec> avoid;
    if (!free_of.empty()) avoid = parse_pattern(free_of);

    if (family == "tournament") {
        doc["instance"] = digraph_to_json(gen_tournament(n, seed));
    } else if (family == "hamdipath") {
        auto inst = gen_ham_dipath_digraph(n, density, seed);
        Digraph d = inst.digraph;
        if (avoid) {
            std::vector<Arc> keep;
            for (std::size_t i = 0; i + 1 < inst.path.size(); ++i)
                keep.emplace_back(inst.path[i], inst.path[i + 1]);
            d = make_subdivision_free(d, *avoid, keep, Rng::derive(seed, 99), budget, limit);
        }
        doc["instance"] = digraph_to_json(d);
        doc["planted"]["path"] = inst.path;
    } else if (family == "hamdicycle") {
        auto inst = gen_ham_dicycle_digraph(n, density, seed);
        Digraph d = inst.digraph;
        if (avoid) {
            std::vector<Arc> keep;
            for (std::size_t i = 0; i < inst.cycle.size(); ++i)
                keep.emplace_back(inst.cycle[i], inst.cycle[(i + 1) % inst.cycle.size()]);
            d = make_subdivision_free(d, *avoid, keep, Rng::derive(seed, 99), budget, limit);
        }
        doc["instance"] = digraph_to_json(d);
        doc["planted"]["cycle"] = inst.cycle;
    } else if (family == "outtree") {
        auto inst = gen_outtree_digraph(n, tree_shape_from_name(shape_name), density, seed);
        Digraph d = inst.digraph;
        if (avoid) {
            std::vector<Arc> keep;
            for (Vertex v = 0; v < inst.tree.n(); ++v)
                if (v != inst.tree.root()) keep.emplace_back(inst.tree.parent(v), v);
            d = make_subdivision_free(d, *avoid, keep, Rng::derive(seed, 99), budget, limit);
        }
        doc["instance"] = digraph_to_json(d);
        doc["planted"]["tree"] = tree_to_json(inst.tree);
    } else if (family == "startree") {
        auto inst = gen_star_tree_instance(tree_shape_from_name(shape_name), n, seed);
        doc = Json();
        doc["format"] = 1;
        doc["kind"] = family;
        doc["graph"] = graph_to_json(inst.graph);
        doc["tree"] = tree_to_json(inst.tree);
    } else {
        throw input_error("unknown family: " + family);
    }
    write_output(doc, out_path);
    return 0;
}

int cmd_detect(const std::string& pattern_text, const std::string& in_path, int limit,
               const std::string& out_path) {
    PatternSpec pattern = parse_pattern(pattern_text);
    InstanceDoc doc = load_instance(read_json_input(in_path));
    SearchOptions opts;
    opts.exact_limit = limit;
    std::optional<SubdivisionCertificate> cert;
    switch (pattern.kind) {
        case PatternSpec::Kind::two_blocks_cycle:
            cert = find_two_blocks_cycle(doc.digraph, pattern.params[0], pattern.params[1], opts);
            break;
        case PatternSpec::Kind::bispindle:
            cert = find_bispindle(doc.digraph, pattern.params[0], pattern.params[1],
                                  pattern.params[2], opts);
            break;
        default:
            throw input_error("detection supports two-blocks cycles and bispindles");
    }
    Json out;
    out["pattern"] = pattern_to_json(pattern);
    out["found"] = cert.has_value();
    if (cert) {
        Validation v = validate_certificate(doc.digraph, *cert, pattern);
        if (!v) throw std::logic_error("detector emitted an invalid certificate: " + v.reason);
        out["certificate"] = certificate_to_json(*cert);
    }
    write_output(out, out_path);
    return 0;
}

int cmd_color(const std::string& method, const std::string& in_path, int k1, int k2, int k3,
              int limit, const std::string& out_path) {
    Json input = read_json_input(in_path);
    Json out;
    out["method"] = method;

    auto emit_color_or_cert = [&](const ColorOrCertificate& res, const Digraph& d,
                                  const PatternSpec& spec) {
        out["bound"] = res.bound;
        if (res.has_coloring()) {
            if (!is_proper(underlying_graph(d), *res.coloring))
                throw std::logic_error("colorer output is improper");
            out["result"] = "coloring";
            out["coloring"] = coloring_to_json(*res.coloring);
        } else {
            Validation v = validate_certificate(d, *res.certificate, spec);
            if (!v) throw std::logic_error("colorer emitted an invalid certificate: " + v.reason);
            out["result"] = "certificate";
            out["certificate"] = certificate_to_json(*res.certificate);
        }
        write_output(out, out_path);
        return 0;
    };

    if (method == "hamdipath") {
        InstanceDoc doc = load_instance(input);
        std::vector<Vertex> path;
        if (doc.path) {
            path = *doc.path;
        } else {
            auto found = find_hamiltonian_dipath(doc.digraph, limit);
            if (!found) throw input_error("no Hamiltonian dipath found");
            path = *found;
        }
        return emit_color_or_cert(color_hamdipath_c2free(doc.digraph, path, k1, k2), doc.digraph,
                                  PatternSpec::two_blocks(k1, k2));
    }
    if (method == "pathcover") {
        InstanceDoc doc = load_instance(input);
        return emit_color_or_cert(color_pathcover_c2free(doc.digraph, k1, k2), doc.digraph,
                                  PatternSpec::two_blocks(k1, k2));
    }
    if (method == "hamcycle-bispindle" || method == "hamcycle-b1") {
        InstanceDoc doc = load_instance(input);
        std::vector<Vertex> cycle;
        if (doc.cycle) {
            cycle = *doc.cycle;
        } else {
            auto found = find_hamiltonian_dicycle(doc.digraph, limit);
            if (!found) throw input_error("no Hamiltonian dicycle found");
            cycle = *found;
        }
        if (method == "hamcycle-bispindle")
            return emit_color_or_cert(color_hamcycle_bispindlefree(doc.digraph, cycle, k1, k2, k3),
                                      doc.digraph, PatternSpec::bispindle(k1, k2, k3));
        return emit_color_or_cert(color_hamcycle_b1free(doc.digraph, cycle, k1, k3), doc.digraph,
                                  PatternSpec::bispindle(k1, 1, k3));
    }
    if (method == "outtree") {
        InstanceDoc doc = load_instance(input);
        if (!doc.tree) throw input_error("out-tree coloring needs a planted tree");
        try {
            return emit_color_or_cert(color_outtree_c2free(doc.digraph, *doc.tree, k1, k2),
                                      doc.digraph, PatternSpec::two_blocks(k1, k2));
        } catch (const counterexample_found& cx) {
            Json report;
            report["instance"] = graph_to_json(cx.graph);
            report["tree"] = tree_to_json(cx.tree);
            report["search_nodes"] = cx.search_nodes;
            report["verdict"] = "no-4-coloring";
            write_output(report, out_path);
            return 1;
        }
    }
    if (method == "gallai-roy") {
        InstanceDoc doc = load_instance(input);
        Coloring c = gallai_roy_coloring(doc.digraph);
        out["result"] = "coloring";
        out["coloring"] = coloring_to_json(c);
        write_output(out, out_path);
        return 0;
    }
    if (method == "greedy") {
        InstanceDoc doc = load_instance(input);
        Graph g = underlying_graph(doc.digraph);
        Coloring c = greedy_coloring(g, VertexOrdering::identity(g.n()));
        out["result"] = "coloring";
        out["coloring"] = coloring_to_json(c);
        write_output(out, out_path);
        return 0;
    }
    if (method == "whip" || method == "star0" || method == "star1" || method == "general") {
        GraphTreeDoc doc = load_graph_tree(input);
        if (method == "general") {
            FourColorSearch search = color_normal_nosecant_general(doc.graph, doc.tree);
            if (!search.coloring) {
                Json report;
                report["instance"] = graph_to_json(doc.graph);
                report["tree"] = tree_to_json(doc.tree);
                report["search_nodes"] = search.nodes;
                report["verdict"] = "no-4-coloring";
                write_output(report, out_path);
                return 1;
            }
            out["result"] = "coloring";
            out["search_nodes"] = search.nodes;
            out["coloring"] = coloring_to_json(*search.coloring);
            write_output(out, out_path);
            return 0;
        }
        Coloring c = method == "whip"    ? color_whip(doc.graph, doc.tree)
                     : method == "star0" ? color_star0(doc.graph, doc.tree)
                                         : color_star1(doc.graph, doc.tree);
        if (!is_proper(doc.graph, c)) throw std::logic_error("colorer output is improper");
        out["result"] = "coloring";
        out["coloring"] = coloring_to_json(c);
        write_output(out, out_path);
        return 0;
    }
    throw input_error("unknown coloring method: " + method);
}

int cmd_chi(const std::string& in_path, int limit, const std::string& out_path) {
    Json input = read_json_input(in_path);
    Graph g = input.contains("edges")
                  ? graph_from_json(input)
                  : underlying_graph(load_instance(input).digraph);
    ChromaticResult res = chromatic_number_exact(g, limit);
    Json out;
    out["chi"] = res.chi;
    out["witness"] = coloring_to_json(res.witness);
    write_output(out, out_path);
    return 0;
}

int cmd_saturate(const std::string& in_path, const std::string& out_path) {
    GraphTreeDoc doc = load_graph_tree(read_json_input(in_path));
    Graph sat = saturate(doc.graph, doc.tree);
    Json out;
    out["graph"] = graph_to_json(sat);
    out["tree"] = tree_to_json(doc.tree);
    out["added_edges"] = sat.edge_count() - doc.graph.edge_count();
    write_output(out, out_path);
    return 0;
}

int cmd_flatten(const std::string& in_path, const std::string& out_path) {
    GraphTreeDoc doc = load_graph_tree(read_json_input(in_path));
    FlattenResult res = flatten_to_star_like(doc.graph, doc.tree);
    StarClass cls = classify_star(res.tree);
    Json out;
    out["graph"] = graph_to_json(res.graph);
    out["tree"] = tree_to_json(res.tree);
    out["map"] = res.correspondence;
    out["star_index"] = cls.index;
    write_output(out, out_path);
    return 0;
}

int cmd_verify(const std::string& config_path, const std::string& method, int trials,
               std::uint64_t seed, int n_min, int n_max, double density,
               const std::vector<int>& params, int jobs, const std::string& format,
               const std::string& out_path) {
    ExperimentConfig cfg;
    if (!config_path.empty()) {
        cfg = experiment_config_from_json(read_json_input(config_path));
    } else {
        cfg.method = method;
        cfg.trials = trials;
        cfg.seed = seed;
        cfg.n_min = n_min;
        cfg.n_max = n_max;
        cfg.density = density;
        if (!params.empty()) cfg.grid = {params};
    }
    if (jobs > 0) cfg.jobs = jobs;
    if (cfg.method.empty()) throw input_error("verify needs a method or a config file");
    ExperimentReport report = run_bound_experiment(cfg);
    if (format == "csv")
        write_text(report_to_csv(report.body), out_path);
    else
        write_output(report.body, out_path);
    return report.violations == 0 ? 0 : 1;
}

int cmd_scan(const std::string& family, int n_min, int n_max, int trials, std::uint64_t seed,
             int jobs, const std::string& archive_dir, const std::string& format,
             const std::string& out_path) {
    ScanConfig cfg;
    cfg.family = tree_shape_from_name(family);
    cfg.n_min = n_min;
    cfg.n_max = n_max;
    cfg.trials = trials;
    cfg.seed = seed;
    cfg.jobs = jobs;
    cfg.archive_dir = archive_dir;
    ScanReport report = scan_conjecture(cfg);
    if (format == "csv") {
        std::ostringstream os;
        os << "family,trials,counterexamples,total_search_nodes\n";
        os << family << "," << trials << "," << report.counterexamples << ","
           << report.body["summary"]["total_search_nodes"].get<long>() << "\n";
        write_text(os.str(), out_path);
    } else {
        write_output(report.body, out_path);
    }
    return report.counterexamples == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"digraph coloring workbench: certificate-producing colorers, subdivision "
                 "detectors, and bound-verification experiments"};
    app.require_subcommand(1);

    std::string out_path;
    std::uint64_t seed = 1;
    int limit = 20;
    std::string format = "json";
    app.add_option("--out", out_path, "output path (default stdout)")->capture_default_str();
    app.add_option("--seed", seed, "random seed")->capture_default_str();
    app.add_option("--limit", limit, "scale limit for exact procedures")->capture_default_str();
    app.add_option("--format", format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    auto* gen = app.add_subcommand("gen", "generate instances with structural guarantees");
    std::string family = "hamdipath", shape = "random", free_of;
    int n = 12, budget = 400;
    double density = 0.12;
    gen->add_option("--family", family,
                    "tournament | hamdipath | hamdicycle | outtree | startree")
        ->capture_default_str();
    gen->add_option("--n", n, "target vertex count")->capture_default_str();
    gen->add_option("--density", density, "extra-arc probability")->capture_default_str();
    gen->add_option("--shape", shape, "tree shape: random|path|whip|star0|star1|star2")
        ->capture_default_str();
    gen->add_option("--free-of", free_of, "repair until this pattern is absent, e.g. C(3,2)");
    gen->add_option("--budget", budget, "repair budget")->capture_default_str();

    auto* detect = app.add_subcommand("detect", "search for a forbidden subdivision");
    std::string pattern_text = "C(2,2)", in_path;
    detect->add_option("--pattern", pattern_text, "C(k1,k2) or B(k1,k2;k3)")
        ->capture_default_str();
    detect->add_option("--in", in_path, "instance file (default stdin)");

    auto* color = app.add_subcommand("color", "run a colorer");
    std::string method = "hamdipath";
    int k1 = 2, k2 = 2, k3 = 1;
    color->add_option("--method", method,
                      "hamdipath | pathcover | hamcycle-bispindle | hamcycle-b1 | outtree | "
                      "gallai-roy | greedy | whip | star0 | star1 | general")
        ->capture_default_str();
    color->add_option("--k1", k1, "first block length")->capture_default_str();
    color->add_option("--k2", k2, "second block length")->capture_default_str();
    color->add_option("--k3", k3, "return block length")->capture_default_str();
    color->add_option("--in", in_path, "instance file (default stdin)");

    auto* chi = app.add_subcommand("chi", "exact chromatic number with witness");
    chi->add_option("--in", in_path, "instance or graph file (default stdin)");

    auto* sat = app.add_subcommand("saturate", "saturate a graph over its normal tree");
    sat->add_option("--in", in_path, "graph+tree file (default stdin)");

    auto* flat = app.add_subcommand("flatten", "embed an instance over a star-like tree");
    flat->add_option("--in", in_path, "graph+tree file (default stdin)");

    auto* verify = app.add_subcommand("verify", "run a bound-verification experiment");
    std::string config_path, vmethod;
    int trials = 50, vn_min = 8, vn_max = 16, jobs = 0;
    std::vector<int> params;
    verify->add_option("--config", config_path, "experiment config JSON");
    verify->add_option("--method", vmethod,
                       "hamdipath | pathcover | hamcycle-bispindle | hamcycle-b1 | outtree | "
                       "nosecant | star0 | star1");
    verify->add_option("--trials", trials, "trial count")->capture_default_str();
    verify->add_option("--n-min", vn_min, "minimum size")->capture_default_str();
    verify->add_option("--n-max", vn_max, "maximum size")->capture_default_str();
    verify->add_option("--density", density, "extra-arc probability")->capture_default_str();
    verify->add_option("--params", params, "parameter tuple, e.g. --params 3 2");
    verify->add_option("--jobs", jobs, "worker threads (0 = all)")->capture_default_str();

    auto* scan = app.add_subcommand("scan", "conjecture scan over saturated instances");
    std::string scan_family = "random", archive_dir;
    int sn_min = 8, sn_max = 12, strials = 100;
    scan->add_option("--family", scan_family, "random|path|whip|star0|star1|star2")
        ->capture_default_str();
    scan->add_option("--n-min", sn_min, "minimum size")->capture_default_str();
    scan->add_option("--n-max", sn_max, "maximum size")->capture_default_str();
    scan->add_option("--trials", strials, "trial count")->capture_default_str();
    scan->add_option("--jobs", jobs, "worker threads (0 = all)")->capture_default_str();
    scan->add_option("--archive-dir", archive_dir, "directory for counterexample files");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed())
            return cmd_gen(family, n, density, seed, shape, free_of, budget, limit, out_path);
        if (detect->parsed()) return cmd_detect(pattern_text, in_path, limit, out_path);
        if (color->parsed()) return cmd_color(method, in_path, k1, k2, k3, limit, out_path);
        if (chi->parsed()) return cmd_chi(in_path, limit, out_path);
        if (sat->parsed()) return cmd_saturate(in_path, out_path);
        if (flat->parsed()) return cmd_flatten(in_path, out_path);
        if (verify->parsed())
            return cmd_verify(config_path, vmethod, trials, seed, vn_min, vn_max, density, params,
                              jobs, format, out_path);
        if (scan->parsed())
            return cmd_scan(scan_family, sn_min, sn_max, strials, seed, jobs, archive_dir, format,
                            out_path);
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
