#ifndef COMMRANK_PATHS_HPP
#define COMMRANK_PATHS_HPP

#include <cstdint>
#include <limits>
#include <vector>

#include "commrank/exec.hpp"
#include "commrank/graph.hpp"

namespace commrank {

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

/// Hop distances from one source (kUnreachable where no path exists).
/// Edge weights are ignored: callers binarize first when that matters.
std::vector<std::uint32_t> hop_distances_from(const WeightedGraph& g, std::size_t source);

/// Dense n x n matrix of hop distances; row i holds distances from node i.
/// The parallel path runs one BFS per row and is bit-identical to the serial
/// reference.
class HopMatrix {
public:
    HopMatrix() = default;
    HopMatrix(std::size_t n, std::vector<std::uint32_t> data)
        : n_(n), data_(std::move(data)) {}

    std::size_t size() const { return n_; }
    std::uint32_t at(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
    const std::vector<std::uint32_t>& data() const { return data_; }

private:
    std::size_t n_ = 0;
    std::vector<std::uint32_t> data_;
};

HopMatrix hop_matrix(const WeightedGraph& g, Exec exec = Exec::parallel);

/// Pair statistics over the upper triangle of a hop matrix.
struct PairDistanceStats {
    double mean_distance;       // over reachable unordered pairs; 0 when none
    double efficiency_sum;      // sum of 1/d over reachable unordered pairs
    std::size_t reachable_pairs;
    std::size_t total_pairs;
};

PairDistanceStats pair_distance_stats(const HopMatrix& m);

/// True when every node can reach every other node.
bool is_connected(const WeightedGraph& g);

} // namespace commrank

#endif // COMMRANK_PATHS_HPP
