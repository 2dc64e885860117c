#ifndef COMMRANK_LOUVAIN_HPP
#define COMMRANK_LOUVAIN_HPP

#include <cstdint>

#include "commrank/modularity.hpp"

namespace commrank {

struct LouvainResult {
    Partition partition;
    ModularityScore score;  // recomputed on the original graph
    std::size_t levels;     // aggregation levels performed
};

/// Greedy multi-level modularity maximization.
///
/// Node visit order is a seeded uniform shuffle, redrawn every pass; identical
/// (graph, seed, resolution) always yields the identical partition. A pass
/// stops improving when its total gain falls below 1e-9, and ties between
/// candidate communities keep the current community, then prefer the lowest
/// community index.
///
/// Throws EmptyGraph when total_weight is 0.
LouvainResult louvain(const WeightedGraph& g, std::uint64_t seed, double resolution = 1.0);

} // namespace commrank

#endif // COMMRANK_LOUVAIN_HPP
