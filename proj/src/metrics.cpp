#include "commrank/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <exception>

#include "commrank/louvain.hpp"
#include "commrank/modularity.hpp"

namespace commrank {

namespace {

void require_same_universe(const Partition& a, const Partition& b) {
    if (!a.same_universe(b))
        fail(Errc::universe_mismatch, "partitions cover different universes");
}

} // namespace

double jaccard_index(const std::vector<NodeId>& a, const std::vector<NodeId>& b) {
    if (a.empty() && b.empty())
        fail(Errc::both_empty, "jaccard index of two empty sets is undefined");
    std::vector<NodeId> sa(a), sb(b);
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    std::size_t inter = 0;
    std::size_t i = 0, j = 0;
    while (i < sa.size() && j < sb.size()) {
        if (sa[i] < sb[j])
            ++i;
        else if (sb[j] < sa[i])
            ++j;
        else {
            ++inter;
            ++i;
            ++j;
        }
    }
    const std::size_t uni = sa.size() + sb.size() - inter;
    return static_cast<double>(inter) / static_cast<double>(uni);
}

JiMatrix::JiMatrix(const Partition& p_gt, const Partition& p_est, Exec exec) {
    require_same_universe(p_gt, p_est);
    rows_ = p_gt.block_count();
    cols_ = p_est.block_count();
    overlaps_.assign(rows_ * cols_, 0);
    values_.assign(rows_ * cols_, 0.0);

    const auto& ga = p_gt.assignments();
    const auto& ea = p_est.assignments();
    for (std::size_t v = 0; v < ga.size(); ++v)
        ++overlaps_[static_cast<std::size_t>(ga[v]) * cols_ + ea[v]];

    const auto row_sizes = p_gt.block_sizes();
    const auto col_sizes = p_est.block_sizes();

    const auto fill_row = [&](std::size_t i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            const std::size_t o = overlaps_[i * cols_ + j];
            if (o == 0)
                continue;
            const std::size_t uni = row_sizes[i] + col_sizes[j] - o;
            values_[i * cols_ + j] = static_cast<double>(o) / static_cast<double>(uni);
        }
    };

    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
        for (long long i = 0; i < static_cast<long long>(rows_); ++i)
            fill_row(static_cast<std::size_t>(i));
    } else {
        for (std::size_t i = 0; i < rows_; ++i)
            fill_row(i);
    }
}

std::vector<JiEntry> JiMatrix::top_entries(std::size_t k) const {
    std::vector<JiEntry> entries;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (overlap(i, j) > 0)
                entries.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j),
                                   value(i, j), overlap(i, j)});
    std::sort(entries.begin(), entries.end(), [](const JiEntry& a, const JiEntry& b) {
        if (a.value != b.value)
            return a.value > b.value;
        if (a.gt_block != b.gt_block)
            return a.gt_block < b.gt_block;
        return a.est_block < b.est_block;
    });
    if (entries.size() > k)
        entries.resize(k);
    return entries;
}

double jig(const Partition& p_gt, const Partition& p_est) {
    require_same_universe(p_gt, p_est);
    const std::size_t n = p_gt.size();
    if (n == 0)
        fail(Errc::empty_universe, "jig is undefined on an empty universe");

    // Weighted sum accumulated as sum(JI * overlap) and divided by |V| once,
    // so identical partitions come out at exactly 1.
    JiMatrix m(p_gt, p_est, Exec::serial);
    double weighted = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const std::size_t o = m.overlap(i, j);
            if (o > 0)
                weighted += m.value(i, j) * static_cast<double>(o);
        }
    return std::sqrt(weighted / static_cast<double>(n));
}

double modularity_distance(const WeightedGraph& g0, const WeightedGraph& g1, const Partition& p0,
                           double resolution) {
    if (!g0.same_node_set(g1))
        fail(Errc::node_set_mismatch, "graphs cover different node sets");
    if (g0.nodes() != p0.universe())
        fail(Errc::node_set_mismatch, "partition universe does not match the graphs");
    const double q0 = modularity(g0, p0, resolution).q;
    const double q1 = modularity(g1, p0, resolution).q;
    return std::abs(q0 - q1);
}

RankPoint rank_point(const WeightedGraph& g0, const Partition& p0, const WeightedGraph& g1,
                     std::uint64_t seed, double resolution) {
    const double md = modularity_distance(g0, g1, p0, resolution);
    const Partition p1 = louvain(g1, seed, resolution).partition;
    const double similarity = jig(p0, p1);
    const double distance = std::hypot(md, 1.0 - similarity);
    return {md, similarity, distance};
}

std::vector<RankPoint> rank_points(const WeightedGraph& g0, const Partition& p0,
                                   const std::vector<WeightedGraph>& estimates,
                                   std::uint64_t seed, double resolution, Exec exec) {
    std::vector<RankPoint> out(estimates.size());
    if (exec == Exec::parallel) {
        // exceptions must not escape the omp region; surface the first one after
        std::vector<std::exception_ptr> errors(estimates.size());
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(estimates.size()); ++i) {
            const auto idx = static_cast<std::size_t>(i);
            try {
                out[idx] = rank_point(g0, p0, estimates[idx], seed, resolution);
            } catch (...) {
                errors[idx] = std::current_exception();
            }
        }
        for (const auto& e : errors)
            if (e)
                std::rethrow_exception(e);
    } else {
        for (std::size_t i = 0; i < estimates.size(); ++i)
            out[i] = rank_point(g0, p0, estimates[i], seed, resolution);
    }
    return out;
}

} // namespace commrank
