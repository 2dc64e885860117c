#ifndef COMMRANK_GENERATORS_HPP
#define COMMRANK_GENERATORS_HPP

#include <cstdint>
#include <string>
#include <utility>

#include "commrank/graph.hpp"
#include "commrank/partition.hpp"

namespace commrank {

/// Weight assigned to synthetic (spurious) edges.
enum class WeightRule {
    unit,      // weight 1
    gt_median  // median edge weight of the source graph
};

/// One randomized ground-truth modification.
enum class PerturbFamily {
    subset,          // keep a uniform subset of the edges
    false_positive,  // add uniform non-edges, keep every true edge
    skeleton_fp,     // sparse skeleton of true edges plus false positives
    hybrid           // remove then add
};

const char* family_name(PerturbFamily f);

struct PerturbationSpec {
    PerturbFamily family;
    double remove_fraction = 0.0;  // of the GT edge count
    double add_fraction = 0.0;     // of the GT edge count
    std::uint64_t seed = 0;

    /// Enforces the family invariants (subset adds nothing, false_positive
    /// removes nothing, skeleton_fp removes at least half).
    void validate() const;
};

enum class RandomModel {
    erdos_renyi,
    watts_strogatz,
    barabasi_albert
};

const char* model_name(RandomModel m);

struct RandomModelSpec {
    RandomModel model;
    std::size_t n = 0;
    std::size_t target_m = 0;   // edge count the parameters were matched to
    std::size_t realized_m = 0; // edge count the parameters actually produce
    std::size_t ws_k = 0;
    double ws_p = 0.1;
    std::size_t ba_attach = 1;
    std::uint64_t seed = 0;
};

/// G(n, m): exactly m distinct edges drawn uniformly among all non-loop pairs.
WeightedGraph erdos_renyi_gnm(std::size_t n, std::size_t m, std::uint64_t seed);

/// Ring lattice of even degree k with each edge rewired with probability p.
/// Edge count is exactly n*k/2.
WeightedGraph watts_strogatz(std::size_t n, std::size_t k, double p, std::uint64_t seed);

/// Preferential attachment from a complete seed graph on attach+1 nodes;
/// every later node attaches to `attach` distinct nodes degree-proportionally.
WeightedGraph barabasi_albert(std::size_t n, std::size_t attach, std::uint64_t seed);

/// Fills in the integer model parameter that brings the realized edge count
/// closest to the target's; ties go to the smaller parameter.
RandomModelSpec match_edge_count(RandomModelSpec spec, const WeightedGraph& gt);

/// Builds the graph a (matched) RandomModelSpec describes.
WeightedGraph generate_model(const RandomModelSpec& spec);

/// Deletes floor(fraction*m) uniformly chosen edges; nodes are kept.
WeightedGraph remove_edges(const WeightedGraph& g, double fraction, std::uint64_t seed);

/// Adds ceil(add_fraction*m) uniformly chosen non-edges.
WeightedGraph add_false_positives(const WeightedGraph& g, double add_fraction, std::uint64_t seed,
                                  WeightRule weight_rule = WeightRule::gt_median);

/// Keeps ceil(keep_fraction*m) edges (keep_fraction <= 0.5), then adds
/// ceil(add_fraction*m) non-edges of the retained graph. Fractions are
/// relative to the edge count of g.
WeightedGraph skeleton_plus_fp(const WeightedGraph& g, double keep_fraction, double add_fraction,
                               std::uint64_t seed, WeightRule weight_rule = WeightRule::gt_median);

/// Applies a PerturbationSpec: removal and addition draw from independent
/// substreams of spec.seed, and the addition count is relative to the
/// original edge count.
WeightedGraph hybrid_perturb(const WeightedGraph& g, const PerturbationSpec& spec,
                             WeightRule weight_rule = WeightRule::gt_median);

/// Equal-block planted-partition graph: within-block pairs are edged with
/// p_in, cross-block pairs with p_out. Returns the graph and the planted
/// communities. k_blocks must divide n and p_out <= p_in.
std::pair<WeightedGraph, Partition> planted_partition(std::size_t n, std::size_t k_blocks,
                                                      double p_in, double p_out,
                                                      std::uint64_t seed);

} // namespace commrank

#endif // COMMRANK_GENERATORS_HPP
