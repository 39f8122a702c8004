#include "spindle/experiments.hpp"

#include <array>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "spindle/oracles.hpp"
#include "spindle/star_colorers.hpp"
#include "spindle/structural_colorers.hpp"

namespace spindle {

void parallel_for(int count, int jobs, const std::function<void(int)>& f) {
    if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
    jobs = std::max(1, std::min(jobs, count));
    if (jobs == 1) {
        for (int i = 0; i < count; ++i) f(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int t = 0; t < jobs; ++t) {
        pool.emplace_back([&] {
            while (true) {
                int i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    f(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mu);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

ExperimentConfig experiment_config_from_json(const Json& j) {
    ExperimentConfig c;
    if (!j.contains("method")) throw input_error("experiment config needs a method");
    c.method = j["method"].get<std::string>();
    if (j.contains("grid"))
        for (const auto& row : j["grid"]) {
            std::vector<int> params;
            for (const auto& v : row) params.push_back(v.get<int>());
            c.grid.push_back(std::move(params));
        }
    c.trials = j.value("trials", c.trials);
    c.seed = j.value("seed", c.seed);
    c.n_min = j.value("n_min", c.n_min);
    c.n_max = j.value("n_max", c.n_max);
    c.density = j.value("density", c.density);
    c.oracle_limit = j.value("oracle_limit", c.oracle_limit);
    c.detect_limit = j.value("detect_limit", c.detect_limit);
    c.sample_budget = j.value("sample_budget", c.sample_budget);
    c.jobs = j.value("jobs", c.jobs);
    if (c.trials < 1) throw input_error("experiment needs at least one trial");
    if (c.n_min < 1 || c.n_max < c.n_min) throw input_error("bad instance size range");
    return c;
}

namespace {

struct TrialOutcome {
    Json record;
    bool violation = false;
    int certificates_emitted = 0;
    int certificates_valid = 0;
};

std::vector<Arc> path_arcs(const std::vector<Vertex>& path, bool close) {
    std::vector<Arc> arcs;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) arcs.emplace_back(path[i], path[i + 1]);
    if (close && path.size() > 1) arcs.emplace_back(path.back(), path.front());
    return arcs;
}

std::vector<Arc> tree_arcs(const RootedTree& t) {
    std::vector<Arc> arcs;
    for (Vertex v = 0; v < t.n(); ++v)
        if (v != t.root()) arcs.emplace_back(t.parent(v), v);
    return arcs;
}

// Shared tail of every colorer trial: properness, bound, oracle cross-check.
void finish_coloring_record(TrialOutcome& out, const Graph& g, const Coloring& c, int bound,
                            int oracle_limit) {
    bool proper = is_proper(g, c);
    out.record["branch"] = "coloring";
    out.record["palette"] = c.palette;
    out.record["bound"] = bound;
    bool within = proper && c.palette <= bound;
    if (g.n() <= oracle_limit) {
        int chi = chromatic_number_exact(g, oracle_limit).chi;
        out.record["oracle_chi"] = chi;
        within = within && chi <= c.palette;
    } else {
        out.record["oracle_chi"] = nullptr;
    }
    out.record["certificate_valid"] = nullptr;
    out.record["within_bound"] = within;
    out.violation = !within;
}

void record_unexpected_certificate(TrialOutcome& out, const Digraph& d,
                                   const SubdivisionCertificate& cert, const PatternSpec& spec,
                                   int bound) {
    out.record["branch"] = "certificate";
    out.record["palette"] = nullptr;
    out.record["bound"] = bound;
    out.record["oracle_chi"] = nullptr;
    bool valid = static_cast<bool>(validate_certificate(d, cert, spec));
    out.record["certificate_valid"] = valid;
    out.record["within_bound"] = false;  // pattern-free sampling must color
    out.certificates_emitted = 1;
    out.certificates_valid = valid ? 1 : 0;
    out.violation = true;
}

TrialOutcome run_trial(const ExperimentConfig& cfg, int index) {
    TrialOutcome out;
    std::vector<int> params =
        cfg.grid.empty() ? std::vector<int>{} : cfg.grid[index % cfg.grid.size()];
    Rng pick(Rng::derive(cfg.seed, 1000003ull * index));
    int n = cfg.n_min + pick.below(cfg.n_max - cfg.n_min + 1);
    std::uint64_t gen_seed = Rng::derive(cfg.seed, 2 * index + 1);
    std::uint64_t repair_seed = Rng::derive(cfg.seed, 2 * index + 2);

    out.record["trial"] = index;
    out.record["params"] = params;

    if (cfg.method == "hamdipath") {
        int k1 = std::max(params.at(0), params.at(1)), k2 = std::min(params.at(0), params.at(1));
        auto base = gen_ham_dipath_digraph(n, cfg.density, gen_seed);
        Digraph d = make_subdivision_free(base.digraph, PatternSpec::two_blocks(k1, k2),
                                          path_arcs(base.path, false), repair_seed,
                                          cfg.sample_budget, cfg.detect_limit);
        out.record["n"] = d.n();
        out.record["instance"] = instance_hash(d);
        ColorOrCertificate res = color_hamdipath_c2free(d, base.path, k1, k2);
        if (res.has_coloring())
            finish_coloring_record(out, underlying_graph(d), *res.coloring, res.bound,
                                   cfg.oracle_limit);
        else
            record_unexpected_certificate(out, d, *res.certificate,
                                          PatternSpec::two_blocks(k1, k2), res.bound);
    } else if (cfg.method == "pathcover") {
        int k1 = std::max(params.at(0), params.at(1)), k2 = std::min(params.at(0), params.at(1));
        Digraph d = make_subdivision_free(gen_random_digraph(n, cfg.density, gen_seed),
                                          PatternSpec::two_blocks(k1, k2), {}, repair_seed,
                                          cfg.sample_budget, cfg.detect_limit);
        out.record["n"] = d.n();
        out.record["instance"] = instance_hash(d);
        ColorOrCertificate res = color_pathcover_c2free(d, k1, k2);
        if (res.has_coloring()) {
            int cover = res.bound / (3 * k1);
            out.record["cover_paths"] = cover;
            if (d.n() <= cfg.oracle_limit) {
                int alpha = independence_number(underlying_graph(d), cfg.oracle_limit);
                out.record["alpha"] = alpha;
                out.record["alpha_bound_applies"] = cover <= alpha;
            }
            finish_coloring_record(out, underlying_graph(d), *res.coloring, res.bound,
                                   cfg.oracle_limit);
        } else {
            record_unexpected_certificate(out, d, *res.certificate,
                                          PatternSpec::two_blocks(k1, k2), res.bound);
        }
    } else if (cfg.method == "hamcycle-bispindle") {
        int k1 = params.at(0), k2 = params.at(1), k3 = params.at(2);
        auto base = gen_ham_dicycle_digraph(std::max(n, 3), cfg.density, gen_seed);
        Digraph d = make_subdivision_free(base.digraph, PatternSpec::bispindle(k1, k2, k3),
                                          path_arcs(base.cycle, true), repair_seed,
                                          cfg.sample_budget, cfg.detect_limit);
        out.record["n"] = d.n();
        out.record["instance"] = instance_hash(d);
        ColorOrCertificate res = color_hamcycle_bispindlefree(d, base.cycle, k1, k2, k3);
        if (res.has_coloring())
            finish_coloring_record(out, underlying_graph(d), *res.coloring, res.bound,
                                   cfg.oracle_limit);
        else
            record_unexpected_certificate(out, d, *res.certificate,
                                          PatternSpec::bispindle(k1, k2, k3), res.bound);
    } else if (cfg.method == "hamcycle-b1") {
        int k1 = params.at(0), k3 = params.at(1);
        int k = std::max(k1, k3);
        auto base = gen_ham_dicycle_digraph(std::max(n, 3), cfg.density, gen_seed);
        Digraph d = make_subdivision_free(base.digraph, PatternSpec::bispindle(k1, 1, k3),
                                          path_arcs(base.cycle, true), repair_seed,
                                          cfg.sample_budget, cfg.detect_limit);
        out.record["n"] = d.n();
        out.record["instance"] = instance_hash(d);
        ColorOrCertificate res = color_hamcycle_b1free(d, base.cycle, k1, k3);
        if (res.has_coloring()) {
            Graph g = underlying_graph(d);
            out.record["max_degree"] = g.max_degree();
            finish_coloring_record(out, g, *res.coloring, res.bound, cfg.oracle_limit);
            if (d.n() > 2 * k - 1 && g.max_degree() > 2 * k - 2) {
                out.record["within_bound"] = false;
                out.violation = true;
            }
        } else {
            record_unexpected_certificate(out, d, *res.certificate,
                                          PatternSpec::bispindle(k1, 1, k3), res.bound);
        }
    } else if (cfg.method == "outtree") {
        int k1 = std::max(params.at(0), params.at(1)), k2 = std::min(params.at(0), params.at(1));
        TreeShape shape = index % 2 == 0 ? TreeShape::star0 : TreeShape::star1;
        auto base = gen_outtree_digraph(std::max(n, 9), shape, cfg.density, gen_seed);
        Digraph d = make_subdivision_free(base.digraph, PatternSpec::two_blocks(k1, k2),
                                          tree_arcs(base.tree), repair_seed, cfg.sample_budget,
                                          cfg.detect_limit);
        out.record["n"] = d.n();
        out.record["shape"] = tree_shape_name(shape);
        out.record["instance"] = instance_hash(d);
        ColorOrCertificate res = color_outtree_c2free(d, base.tree, k1, k2);
        if (res.has_coloring())
            finish_coloring_record(out, underlying_graph(d), *res.coloring, res.bound,
                                   cfg.oracle_limit);
        else
            record_unexpected_certificate(out, d, *res.certificate,
                                          PatternSpec::two_blocks(k1, k2), res.bound);
    } else if (cfg.method == "nosecant") {
        Graph g = gen_no_secant_graph(n, std::max(cfg.density, 0.3), gen_seed);
        out.record["n"] = g.n();
        out.record["instance"] = instance_hash(Digraph(g.n(), {}, true));
        DegeneracyResult deg = degeneracy(g);
        out.record["degeneracy"] = deg.degeneracy;
        Coloring c = color_no_secant(g, VertexOrdering::identity(g.n()));
        finish_coloring_record(out, g, c, 3, std::min(cfg.oracle_limit, 12));
        if (deg.degeneracy > 2) {
            out.record["within_bound"] = false;
            out.violation = true;
        }
    } else if (cfg.method == "star0" || cfg.method == "star1") {
        TreeShape shape = cfg.method == "star0" ? TreeShape::star0 : TreeShape::star1;
        StarInstance inst = gen_star_tree_instance(shape, n, gen_seed);
        out.record["n"] = inst.graph.n();
        out.record["instance"] = instance_hash(Digraph(inst.graph.n(), {}, true));
        Coloring c = shape == TreeShape::star0 ? color_star0(inst.graph, inst.tree)
                                               : color_star1(inst.graph, inst.tree);
        finish_coloring_record(out, inst.graph, c, 4, cfg.oracle_limit);
    } else {
        throw input_error("unknown experiment method: " + cfg.method);
    }
    out.record["violation"] = out.violation;
    return out;
}

}  // namespace

ExperimentReport run_bound_experiment(const ExperimentConfig& cfg) {
    std::vector<TrialOutcome> outcomes(cfg.trials);
    parallel_for(cfg.trials, cfg.jobs, [&](int i) { outcomes[i] = run_trial(cfg, i); });

    ExperimentReport report;
    Json records = Json::array();
    int colorings = 0, certificates = 0, max_palette = 0;
    for (const TrialOutcome& t : outcomes) {
        records.push_back(t.record);
        report.violations += t.violation ? 1 : 0;
        report.certificates_emitted += t.certificates_emitted;
        report.certificates_valid += t.certificates_valid;
        if (t.record["branch"] == "coloring") {
            ++colorings;
            max_palette = std::max(max_palette, t.record["palette"].get<int>());
        } else {
            ++certificates;
        }
    }
    Json body;
    body["format"] = 1;
    body["method"] = cfg.method;
    body["seed"] = cfg.seed;
    Json grid = Json::array();
    for (const auto& row : cfg.grid) grid.push_back(row);
    body["grid"] = std::move(grid);
    Json settings;
    settings["trials"] = cfg.trials;
    settings["n_min"] = cfg.n_min;
    settings["n_max"] = cfg.n_max;
    settings["density"] = cfg.density;
    settings["oracle_limit"] = cfg.oracle_limit;
    settings["detect_limit"] = cfg.detect_limit;
    settings["sample_budget"] = cfg.sample_budget;
    body["settings"] = std::move(settings);
    body["records"] = std::move(records);
    Json summary;
    summary["trials"] = cfg.trials;
    summary["colorings"] = colorings;
    summary["certificates"] = certificates;
    summary["max_palette"] = max_palette;
    summary["violations"] = report.violations;
    summary["zero_violations"] = report.violations == 0;
    body["summary"] = std::move(summary);
    report.body = std::move(body);
    return report;
}

std::string report_to_csv(const Json& body) {
    std::ostringstream os;
    os << "method,params,trials,colorings,certificates,max_palette,violations\n";
    // per-grid-row summary
    std::map<std::string, std::array<int, 4>> rows;  // params -> [trials, colorings, certs, violations]
    std::map<std::string, int> palettes;
    for (const auto& rec : body["records"]) {
        std::string key;
        for (const auto& p : rec["params"]) key += (key.empty() ? "" : " ") + p.dump();
        auto& row = rows[key];
        row[0] += 1;
        if (rec["branch"] == "coloring") {
            row[1] += 1;
            int pal = rec["palette"].get<int>();
            palettes[key] = std::max(palettes[key], pal);
        } else {
            row[2] += 1;
        }
        row[3] += rec["violation"].get<bool>() ? 1 : 0;
    }
    for (const auto& [key, row] : rows) {
        os << body["method"].get<std::string>() << "," << (key.empty() ? "-" : key) << ","
           << row[0] << "," << row[1] << "," << row[2] << "," << palettes[key] << "," << row[3]
           << "\n";
    }
    return os.str();
}

ScanReport scan_conjecture(const ScanConfig& cfg) {
    if (cfg.trials < 1) throw input_error("scan needs at least one trial");
    if (cfg.n_min < 2 || cfg.n_max < cfg.n_min) throw input_error("bad scan size range");

    struct Row {
        Json record;
        std::optional<Json> archive;
    };
    std::vector<Row> rows(cfg.trials);
    parallel_for(cfg.trials, cfg.jobs, [&](int i) {
        Rng pick(Rng::derive(cfg.seed, 7000003ull * i));
        int size = cfg.n_min + pick.below(cfg.n_max - cfg.n_min + 1);
        StarInstance inst =
            gen_star_tree_instance(cfg.family, size, Rng::derive(cfg.seed, 2 * i + 1));
        FourColorSearch search = color_normal_nosecant_general(inst.graph, inst.tree);
        Row row;
        row.record["trial"] = i;
        row.record["n"] = inst.graph.n();
        row.record["search_nodes"] = search.nodes;
        row.record["four_colorable"] = search.coloring.has_value();
        if (search.coloring && !is_proper(inst.graph, *search.coloring))
            throw std::logic_error("search produced an improper coloring");
        if (!search.coloring) {
            Json archive;
            archive["instance"] = graph_to_json(inst.graph);
            archive["tree"] = tree_to_json(inst.tree);
            archive["search_nodes"] = search.nodes;
            archive["verdict"] = "no-4-coloring";
            row.archive = std::move(archive);
        }
        rows[i] = std::move(row);
    });

    ScanReport report;
    Json records = Json::array();
    long total_nodes = 0, max_nodes = 0;
    for (int i = 0; i < cfg.trials; ++i) {
        records.push_back(rows[i].record);
        long nodes = rows[i].record["search_nodes"].get<long>();
        total_nodes += nodes;
        max_nodes = std::max(max_nodes, nodes);
        if (rows[i].archive) {
            ++report.counterexamples;
            if (!cfg.archive_dir.empty()) {
                std::filesystem::create_directories(cfg.archive_dir);
                std::ofstream file(cfg.archive_dir + "/counterexample_" + std::to_string(i) +
                                   ".json");
                file << rows[i].archive->dump(2) << "\n";
            }
        }
    }
    Json body;
    body["format"] = 1;
    body["family"] = tree_shape_name(cfg.family);
    body["seed"] = cfg.seed;
    body["n_min"] = cfg.n_min;
    body["n_max"] = cfg.n_max;
    body["records"] = std::move(records);
    Json summary;
    summary["trials"] = cfg.trials;
    summary["counterexamples"] = report.counterexamples;
    summary["total_search_nodes"] = total_nodes;
    summary["max_search_nodes"] = max_nodes;
    body["summary"] = std::move(summary);
    report.body = std::move(body);
    return report;
}

}  // namespace spindle
