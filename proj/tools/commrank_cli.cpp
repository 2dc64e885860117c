// commrank: rank estimated connectivity graphs against a reference by
// community structure, compute classic connectome measures, and generate
// the random-model / perturbation graph database.

#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commrank/commands.hpp"
#include "commrank/error.hpp"

namespace {

using namespace commrank;

int run_rank(const RankInputs& in, const RunConfig& config) {
    const RankReport report = cmd_rank(in, config);
    std::printf("reference: n=%zu communities=%zu q=%.6g\n", report.records[0].n,
                report.gt_blocks, report.gt_q);
    for (const RankRecord& r : report.records) {
        if (r.ok)
            std::printf("%-32s md=%-12.6g jig=%-12.6g gt_distance=%-12.6g\n", r.label.c_str(),
                        r.md, r.jig, r.gt_distance);
        else
            std::printf("%-32s FAILED: %s\n", r.label.c_str(), r.status.c_str());
    }
    std::printf("wrote rank.csv, rank.json, gt_partition.json to %s\n", config.out_dir.c_str());
    return 0;
}

int run_communities(const std::string& path, const RunConfig& config) {
    const LouvainResult result = cmd_communities(path, config);
    std::printf("q=%.12g communities=%zu levels=%zu\n", result.score.q,
                static_cast<std::size_t>(result.partition.block_count()), result.levels);
    std::printf("wrote partition.json to %s\n", config.out_dir.c_str());
    return 0;
}

int run_centrality(const std::string& gt, const std::vector<std::string>& estimates,
                   const RunConfig& config) {
    const CmSimilarityTable table = cmd_centrality(gt, estimates, config);
    std::printf("%zu rows x %zu measures\n", table.labels.size(), kMeasureNames.size());
    std::printf("wrote centrality.csv, centrality_raw.csv to %s\n", config.out_dir.c_str());
    return 0;
}

int run_generate(const std::string& gt, const RunConfig& config) {
    for (const std::string& path : cmd_generate(gt, config))
        std::printf("wrote %s\n", path.c_str());
    return 0;
}

int run_perturb(const std::string& gt, const RunConfig& config) {
    for (const std::string& path : cmd_perturb(gt, config))
        std::printf("wrote %s\n", path.c_str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Community-structure ranking of estimated connectivity graphs"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path;
    std::uint64_t seed = 0;
    double resolution = 0.0;
    double threshold = 0.0;
    std::string out_dir;
    app.add_option("--config", config_path,
                   "JSON run configuration; explicit flags override it");
    auto* seed_opt = app.add_option("--seed", seed, "master seed (default 42)");
    auto* res_opt = app.add_option("--resolution", resolution,
                                   "modularity resolution (default 1.0)");
    auto* thr_opt = app.add_option("--threshold", threshold,
                                   "binarization threshold for measures (default 0)");
    auto* out_opt = app.add_option("--out", out_dir, "output directory (default .)");

    RankInputs rank_in;
    auto* rank = app.add_subcommand("rank", "score estimates against a reference graph");
    rank->add_option("gt", rank_in.gt_path, "reference graph file")->required();
    rank->add_option("estimates", rank_in.estimate_paths, "estimated graph files")->required();
    rank->add_option("--gt-partition", rank_in.gt_partition_path,
                     "reference partition JSON (skips Louvain on the reference)");
    rank->add_flag("--ji-matrix", rank_in.ji_matrix,
                   "also write the per-estimate block-overlap matrix");

    std::string communities_path;
    auto* communities = app.add_subcommand("communities", "detect communities in one graph");
    communities->add_option("graph", communities_path, "graph file")->required();

    std::string centrality_gt;
    std::vector<std::string> centrality_estimates;
    auto* centrality = app.add_subcommand("centrality",
                                          "measure table relative to a reference graph");
    centrality->add_option("gt", centrality_gt, "reference graph file")->required();
    centrality->add_option("estimates", centrality_estimates, "estimated graph files");

    std::string generate_gt;
    auto* generate = app.add_subcommand(
        "generate", "edge-matched random models (and a synthetic reference if none given)");
    generate->add_option("gt", generate_gt, "reference graph file (optional)");

    std::string perturb_gt;
    auto* perturb = app.add_subcommand("perturb", "perturbation-family sweeps of a reference");
    perturb->add_option("gt", perturb_gt, "reference graph file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        RunConfig config;
        if (!config_path.empty())
            config = config_from_json(read_text_file(config_path));
        if (seed_opt->count())
            config.seed = seed;
        if (res_opt->count())
            config.resolution = resolution;
        if (thr_opt->count())
            config.threshold = threshold;
        if (out_opt->count())
            config.out_dir = out_dir;

        if (rank->parsed())
            return run_rank(rank_in, config);
        if (communities->parsed())
            return run_communities(communities_path, config);
        if (centrality->parsed())
            return run_centrality(centrality_gt, centrality_estimates, config);
        if (generate->parsed())
            return run_generate(generate_gt, config);
        if (perturb->parsed())
            return run_perturb(perturb_gt, config);
        std::fprintf(stderr, "error: no subcommand\n");
        return 1;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return e.code() == Errc::internal ? 3 : 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return 3;
    }
}
