#ifndef COMMRANK_METRICS_HPP
#define COMMRANK_METRICS_HPP

#include <cstdint>
#include <vector>

#include "commrank/exec.hpp"
#include "commrank/graph.hpp"
#include "commrank/partition.hpp"

namespace commrank {

/// Jaccard index |a ∩ b| / |a ∪ b| of two sorted id sets.
/// Throws BothEmpty when both sets are empty.
double jaccard_index(const std::vector<NodeId>& a, const std::vector<NodeId>& b);

struct JiEntry {
    std::uint32_t gt_block;
    std::uint32_t est_block;
    double value;
    std::size_t overlap;
};

/// All-pairs Jaccard indices between the blocks of two partitions of the same
/// universe: rows are ground-truth communities, columns estimated ones.
class JiMatrix {
public:
    JiMatrix(const Partition& p_gt, const Partition& p_est, Exec exec = Exec::parallel);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    double value(std::size_t i, std::size_t j) const { return values_[i * cols_ + j]; }
    std::size_t overlap(std::size_t i, std::size_t j) const { return overlaps_[i * cols_ + j]; }
    const std::vector<double>& values() const { return values_; }
    const std::vector<std::size_t>& overlaps() const { return overlaps_; }

    /// Largest entries, sorted by descending value then (row, col); at most k.
    std::vector<JiEntry> top_entries(std::size_t k) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> values_;
    std::vector<std::size_t> overlaps_;
};

/// Node-weighted Jaccard similarity of two partitions of the same universe:
/// sqrt( sum_ij JI(A_i, B_j) * |A_i ∩ B_j| / |V| ). Symmetric, in (0, 1],
/// and exactly 1 iff the partitions are equal.
double jig(const Partition& p_gt, const Partition& p_est);

/// |Q(g0, p0) - Q(g1, p0)|: the modularity shift when the reference partition
/// is embedded into the estimated graph. Pseudometric in (g0, g1) for fixed p0.
double modularity_distance(const WeightedGraph& g0, const WeightedGraph& g1,
                           const Partition& p0, double resolution = 1.0);

/// Position of an estimated graph in the (MD, JIG) plane, plus its Euclidean
/// distance to the ideal point (0, 1).
struct RankPoint {
    double md;
    double jig;
    double gt_distance;
};

RankPoint rank_point(const WeightedGraph& g0, const Partition& p0, const WeightedGraph& g1,
                     std::uint64_t seed, double resolution = 1.0);

/// Batch evaluation against a shared reference; embarrassingly parallel, and
/// element i never depends on evaluation order. Every estimate is scored with
/// the same seed and resolution so differences reflect the graphs alone.
std::vector<RankPoint> rank_points(const WeightedGraph& g0, const Partition& p0,
                                   const std::vector<WeightedGraph>& estimates,
                                   std::uint64_t seed, double resolution = 1.0,
                                   Exec exec = Exec::parallel);

} // namespace commrank

#endif // COMMRANK_METRICS_HPP
