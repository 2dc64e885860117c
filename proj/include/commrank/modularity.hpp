#ifndef COMMRANK_MODULARITY_HPP
#define COMMRANK_MODULARITY_HPP

#include <vector>

#include "commrank/graph.hpp"
#include "commrank/partition.hpp"

namespace commrank {

/// Newman-Girvan modularity of a partition, in [-0.5, 1] at resolution 1.
struct ModularityScore {
    double q;
};

/// Weighted modularity Q = sum_c [ W_c/W - gamma * (vol_c / S)^2 ] where W_c
/// is the intra-community edge weight, vol_c the community volume and S the
/// total volume. Accumulation order is fixed so that the single-block
/// partition yields exactly 0 at resolution 1.
///
/// Throws EmptyGraph when total_weight is 0 and UniverseMismatch when the
/// partition does not cover exactly the graph's nodes.
ModularityScore modularity(const WeightedGraph& g, const Partition& p, double resolution = 1.0);

/// Community quotient graph: one node per block, inter-block weights summed.
/// Intra-block weight cannot live on the simple graph (no self-loops), so it
/// is reported per super-node in self_weight.
struct AggregatedGraph {
    WeightedGraph graph;              // nodes 0..k-1, one per block
    std::vector<double> self_weight;  // folded intra-block edge weight per block
};

AggregatedGraph aggregate_graph(const WeightedGraph& g, const Partition& p);

/// Exact argmax of modularity over all set partitions, by exhaustive
/// enumeration of restricted growth strings. Ties broken by fewest blocks,
/// then lexicographically smallest canonical assignment.
///
/// Throws TooLarge for more than 10 nodes and EmptyGraph for weightless graphs.
std::pair<Partition, ModularityScore> brute_force_best_partition(const WeightedGraph& g,
                                                                 double resolution = 1.0);

} // namespace commrank

#endif // COMMRANK_MODULARITY_HPP
