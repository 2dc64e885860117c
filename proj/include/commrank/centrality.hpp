#ifndef COMMRANK_CENTRALITY_HPP
#define COMMRANK_CENTRALITY_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "commrank/exec.hpp"
#include "commrank/graph.hpp"

namespace commrank {

/// The classic connectome measures, all computed on binarize(g, threshold)
/// with hop-count distances. Fields that are undefined for a graph (no
/// reachable pair, zero degree variance, disconnected, ...) stay empty
/// instead of failing the whole vector.
struct CmVector {
    double average_degree = 0.0;
    std::optional<double> average_distance;
    std::optional<double> small_worldness;
    double clustering_coefficient = 0.0;
    std::optional<double> assortativity;
    std::optional<double> global_efficiency;
    double local_efficiency = 0.0;
    std::optional<double> reachable_pair_fraction;
};

/// Column order of the seven ranked measures (reachable_pair_fraction is
/// reported alongside but is not a similarity column).
inline constexpr std::array<const char*, 7> kMeasureNames = {
    "average_degree",  "average_distance", "small_worldness", "clustering_coefficient",
    "assortativity",   "global_efficiency", "local_efficiency"};

std::array<std::optional<double>, 7> measures_of(const CmVector& v);

/// Per-graph relative deviation |m_g - m_gt| / max(|m_gt|, 1e-12) for each of
/// the seven measures. Row 0 is the ground truth itself (all zeros where
/// defined). Cells where either side is undefined stay empty.
struct CmSimilarityTable {
    std::vector<std::string> labels;
    std::vector<CmVector> raw;
    std::vector<std::array<std::optional<double>, 7>> deviation;
};

struct CmOptions {
    double threshold = 0.0;
    int small_world_refs = 20;
};

struct AverageDistance {
    double mean_distance = 0.0;
    double reachable_pair_fraction = 0.0;
};

struct LabeledGraph {
    std::string label;
    const WeightedGraph* graph;
};

/// 2m/n of the binarized graph.
double average_degree(const WeightedGraph& g, double threshold = 0.0);

/// Mean hop distance over unordered reachable pairs, plus the fraction of
/// pairs that are reachable. Throws NoReachablePairs when every pair is
/// disconnected (e.g. edgeless graphs).
AverageDistance average_distance(const WeightedGraph& g, double threshold = 0.0,
                                 Exec exec = Exec::parallel);

/// Mean of the local clustering coefficients; nodes of degree < 2 count 0.
double clustering_coefficient(const WeightedGraph& g, double threshold = 0.0,
                              Exec exec = Exec::parallel);

/// Mean of 1/d(u,v) over all unordered pairs, 1/infinity = 0. Needs n >= 2.
double global_efficiency(const WeightedGraph& g, double threshold = 0.0,
                         Exec exec = Exec::parallel);

/// Mean over nodes of the global efficiency of the subgraph induced by the
/// node's neighbours; nodes of degree < 2 count 0.
double local_efficiency(const WeightedGraph& g, double threshold = 0.0,
                        Exec exec = Exec::parallel);

/// Pearson correlation of endpoint degrees over both orientations of every
/// edge. Throws ZeroVariance on regular graphs, where it is undefined.
double assortativity(const WeightedGraph& g, double threshold = 0.0);

/// sigma = (C/C_rand) / (L/L_rand) against n_ref seeded G(n, m) references
/// with the same node and edge count. Requires a connected binarization with
/// n >= 4 and m >= n.
double small_worldness(const WeightedGraph& g, int n_ref, std::uint64_t seed,
                       double threshold = 0.0, Exec exec = Exec::parallel);

/// All measures of one graph; per-field failures become empty fields.
CmVector cm_vector(const WeightedGraph& g, std::uint64_t seed, const CmOptions& opt = {},
                   Exec exec = Exec::parallel);

/// Deviation-from-GT table over a labeled batch, evaluated in parallel.
/// Row 0 is the ground truth under the label "gt".
CmSimilarityTable cm_similarity_table(const WeightedGraph& gt,
                                      const std::vector<LabeledGraph>& others, std::uint64_t seed,
                                      const CmOptions& opt = {}, Exec exec = Exec::parallel);

} // namespace commrank

#endif // COMMRANK_CENTRALITY_HPP
