#ifndef COMMRANK_COMMANDS_HPP
#define COMMRANK_COMMANDS_HPP

#include <string>
#include <vector>

#include "commrank/centrality.hpp"
#include "commrank/config.hpp"
#include "commrank/io.hpp"
#include "commrank/louvain.hpp"

namespace commrank {

/// Orchestration behind the CLI subcommands, kept callable from tests.
/// Every command writes its artifacts into config.out_dir and also returns
/// the computed structure.

struct RankInputs {
    std::string gt_path;
    std::vector<std::string> estimate_paths;
    std::string gt_partition_path;  // optional: reuse a stored partition
    bool ji_matrix = false;         // also write per-estimate block-overlap matrices
};

/// Scores every estimate against the reference graph under one shared
/// reference partition (Louvain once, or the supplied file). Writes
/// rank.csv, rank.json, gt_partition.json and optionally ji_<label>.json.
/// A broken estimate fails its own record, not the run.
RankReport cmd_rank(const RankInputs& in, const RunConfig& config);

/// Runs community detection on one graph; writes partition.json.
LouvainResult cmd_communities(const std::string& graph_path, const RunConfig& config);

/// Emits the deviation-from-reference measure table (centrality.csv) plus the
/// raw values behind it (centrality_raw.csv).
CmSimilarityTable cmd_centrality(const std::string& gt_path,
                                 const std::vector<std::string>& estimate_paths,
                                 const RunConfig& config);

/// Writes the edge-count-matched random-model trio for a reference graph.
/// With an empty gt_path the planted-partition reference itself is generated
/// first (gt.edges + planted_partition.json). Returns the written paths.
std::vector<std::string> cmd_generate(const std::string& gt_path, const RunConfig& config);

/// Writes the four perturbation-family sweeps of a reference graph, one
/// self-describing edge-list file per grid point. Returns the written paths.
std::vector<std::string> cmd_perturb(const std::string& gt_path, const RunConfig& config);

} // namespace commrank

#endif // COMMRANK_COMMANDS_HPP
