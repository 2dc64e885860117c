#include "commrank/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <map>
#include <utility>

#include "commrank/error.hpp"
#include "commrank/metrics.hpp"
#include "commrank/modularity.hpp"
#include "commrank/rng.hpp"

namespace commrank {

namespace {

namespace fs = std::filesystem;

std::string label_of(const std::string& path) {
    return fs::path(path).stem().string();
}

std::string out_path(const RunConfig& config, const std::string& name) {
    return (fs::path(config.out_dir) / name).string();
}

std::string fmt_exact(double x) {
    char buf[40];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, p);
}

std::string fmt_short(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%g", x);
    return buf;
}

std::string header_value(const std::map<std::string, std::string>& header,
                         const std::string& key) {
    const auto it = header.find(key);
    return it == header.end() ? std::string() : it->second;
}

void ensure_out_dir(const RunConfig& config) {
    std::error_code ec;
    fs::create_directories(config.out_dir, ec);
    if (ec)
        fail(Errc::malformed, "cannot create output directory '" + config.out_dir + "'");
}

} // namespace

RankReport cmd_rank(const RankInputs& in, const RunConfig& config) {
    ensure_out_dir(config);
    const EdgeListData gt = load_graph_file(in.gt_path);
    const Partition p0 =
        in.gt_partition_path.empty()
            ? louvain(gt.graph, config.seed, config.resolution).partition
            : read_partition(read_text_file(in.gt_partition_path), gt.graph.nodes());
    write_text_file(out_path(config, "gt_partition.json"), write_partition(p0));

    RankReport report;
    report.gt_q = modularity(gt.graph, p0, config.resolution).q;
    report.gt_blocks = p0.block_count();

    RankRecord gt_record;
    gt_record.label = "gt";
    gt_record.family = header_value(gt.header, "family").empty()
                           ? "gt"
                           : header_value(gt.header, "family");
    gt_record.seed = header_value(gt.header, "seed");
    gt_record.jig = 1.0;  // the reference scored against itself, by definition
    gt_record.n = gt.graph.node_count();
    gt_record.m = gt.graph.edge_count();
    report.records.push_back(std::move(gt_record));

    for (const std::string& path : in.estimate_paths) {
        RankRecord r;
        r.label = label_of(path);
        try {
            const EdgeListData est = load_graph_file(path);
            r.family = header_value(est.header, "family");
            r.seed = header_value(est.header, "seed");
            r.n = est.graph.node_count();
            r.m = est.graph.edge_count();
            if (!est.graph.same_node_set(gt.graph))
                fail(Errc::node_set_mismatch,
                     "estimate '" + r.label + "' does not share the reference node set");
            const RankPoint pt = rank_point(gt.graph, p0, est.graph, config.seed,
                                            config.resolution);
            r.md = pt.md;
            r.jig = pt.jig;
            r.gt_distance = pt.gt_distance;
            if (in.ji_matrix) {
                const Partition est_p =
                    louvain(est.graph, config.seed, config.resolution).partition;
                write_text_file(out_path(config, "ji_" + r.label + ".json"),
                                ji_matrix_json(JiMatrix(p0, est_p), r.label));
            }
        } catch (const Error& e) {
            r.ok = false;
            r.status = e.what();
        }
        report.records.push_back(std::move(r));
    }
    std::sort(report.records.begin() + 1, report.records.end(),
              [](const RankRecord& a, const RankRecord& b) { return a.label < b.label; });

    write_text_file(out_path(config, "rank.csv"), rank_report_csv(report));
    write_text_file(out_path(config, "rank.json"), rank_report_json(report));
    return report;
}

LouvainResult cmd_communities(const std::string& graph_path, const RunConfig& config) {
    ensure_out_dir(config);
    const EdgeListData data = load_graph_file(graph_path);
    LouvainResult result = louvain(data.graph, config.seed, config.resolution);
    write_text_file(out_path(config, "partition.json"), write_partition(result.partition));
    return result;
}

CmSimilarityTable cmd_centrality(const std::string& gt_path,
                                 const std::vector<std::string>& estimate_paths,
                                 const RunConfig& config) {
    ensure_out_dir(config);
    const EdgeListData gt = load_graph_file(gt_path);
    std::vector<std::pair<std::string, EdgeListData>> loaded;
    loaded.reserve(estimate_paths.size());
    for (const std::string& path : estimate_paths)
        loaded.emplace_back(label_of(path), load_graph_file(path));
    std::sort(loaded.begin(), loaded.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<LabeledGraph> others;
    others.reserve(loaded.size());
    for (const auto& [label, data] : loaded)
        others.push_back({label, &data.graph});
    const CmSimilarityTable table = cm_similarity_table(
        gt.graph, others, config.seed, {config.threshold, config.small_world_refs});
    write_text_file(out_path(config, "centrality.csv"), similarity_table_csv(table));
    write_text_file(out_path(config, "centrality_raw.csv"), raw_measures_csv(table));
    return table;
}

std::vector<std::string> cmd_generate(const std::string& gt_path, const RunConfig& config) {
    ensure_out_dir(config);
    std::vector<std::string> written;
    WeightedGraph gt;
    if (gt_path.empty()) {
        auto [graph, planted] =
            planted_partition(config.planted.n, config.planted.blocks, config.planted.p_in,
                              config.planted.p_out, config.seed);
        gt = std::move(graph);
        std::map<std::string, std::string> header;
        header["family"] = "planted";
        header["blocks"] = std::to_string(config.planted.blocks);
        header["p_in"] = fmt_exact(config.planted.p_in);
        header["p_out"] = fmt_exact(config.planted.p_out);
        header["seed"] = std::to_string(config.seed);
        const std::string gt_file = out_path(config, "gt.edges");
        write_text_file(gt_file, write_edge_list(gt, header));
        written.push_back(gt_file);
        const std::string part_file = out_path(config, "planted_partition.json");
        write_text_file(part_file, write_partition(planted));
        written.push_back(part_file);
    } else {
        gt = load_graph_file(gt_path).graph;
    }

    const RandomModel models[] = {RandomModel::erdos_renyi, RandomModel::watts_strogatz,
                                  RandomModel::barabasi_albert};
    for (std::size_t i = 0; i < 3; ++i) {
        RandomModelSpec spec;
        spec.model = models[i];
        spec.n = gt.node_count();
        spec.ws_p = config.ws_p;
        spec.seed = Rng::substream_seed(config.seed, i);
        spec = match_edge_count(spec, gt);
        const WeightedGraph graph = generate_model(spec);
        std::map<std::string, std::string> header;
        header["family"] = model_name(spec.model);
        header["seed"] = std::to_string(spec.seed);
        header["target_m"] = std::to_string(spec.target_m);
        if (spec.model == RandomModel::watts_strogatz) {
            header["ws_k"] = std::to_string(spec.ws_k);
            header["ws_p"] = fmt_exact(spec.ws_p);
        } else if (spec.model == RandomModel::barabasi_albert) {
            header["ba_attach"] = std::to_string(spec.ba_attach);
        }
        const std::string path =
            out_path(config, std::string("model_") + model_name(spec.model) + ".edges");
        write_text_file(path, write_edge_list(graph, header));
        written.push_back(path);
    }
    return written;
}

std::vector<std::string> cmd_perturb(const std::string& gt_path, const RunConfig& config) {
    ensure_out_dir(config);
    const EdgeListData gt = load_graph_file(gt_path);
    if (!(config.skeleton_keep > 0.0) || !(config.skeleton_keep <= 0.5))
        fail(Errc::bad_fraction, "skeleton keep fraction must lie in (0, 0.5]");

    struct Item {
        PerturbationSpec spec;
        std::string name;
        std::map<std::string, std::string> header;
    };
    std::vector<Item> items;
    for (double f : config.remove_sweep) {
        Item it;
        it.spec = {PerturbFamily::subset, f, 0.0, 0};
        it.name = "perturb_subset_r" + fmt_short(f);
        it.header["remove_fraction"] = fmt_exact(f);
        items.push_back(std::move(it));
    }
    for (double a : config.add_sweep) {
        Item it;
        it.spec = {PerturbFamily::false_positive, 0.0, a, 0};
        it.name = "perturb_fp_a" + fmt_short(a);
        it.header["add_fraction"] = fmt_exact(a);
        items.push_back(std::move(it));
    }
    for (double a : config.skeleton_add_sweep) {
        Item it;
        it.spec = {PerturbFamily::skeleton_fp, 1.0 - config.skeleton_keep, a, 0};
        it.name = "perturb_skeleton_k" + fmt_short(config.skeleton_keep) + "_a" + fmt_short(a);
        it.header["keep_fraction"] = fmt_exact(config.skeleton_keep);
        it.header["add_fraction"] = fmt_exact(a);
        items.push_back(std::move(it));
    }
    for (const auto& [r, a] : config.hybrid_sweep) {
        Item it;
        it.spec = {PerturbFamily::hybrid, r, a, 0};
        it.name = "perturb_hybrid_r" + fmt_short(r) + "_a" + fmt_short(a);
        it.header["remove_fraction"] = fmt_exact(r);
        it.header["add_fraction"] = fmt_exact(a);
        items.push_back(std::move(it));
    }

    std::vector<std::string> written;
    written.reserve(items.size());
    for (std::size_t i = 0; i < items.size(); ++i) {
        Item& it = items[i];
        it.spec.seed = Rng::substream_seed(config.seed, i);
        const WeightedGraph g1 = hybrid_perturb(gt.graph, it.spec, config.weight_rule);
        it.header["family"] = family_name(it.spec.family);
        it.header["seed"] = std::to_string(it.spec.seed);
        it.header["source"] = label_of(gt_path);
        const std::string path = out_path(config, it.name + ".edges");
        write_text_file(path, write_edge_list(g1, it.header));
        written.push_back(path);
    }
    return written;
}

} // namespace commrank
