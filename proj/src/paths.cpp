#include "commrank/paths.hpp"

namespace commrank {

namespace {

void bfs_into(const WeightedGraph& g, std::size_t source, std::uint32_t* dist,
              std::vector<std::uint32_t>& queue) {
    const std::size_t n = g.node_count();
    for (std::size_t i = 0; i < n; ++i)
        dist[i] = kUnreachable;
    queue.clear();
    dist[source] = 0;
    queue.push_back(static_cast<std::uint32_t>(source));
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::uint32_t u = queue[head];
        const std::uint32_t du = dist[u];
        for (const auto& nb : g.neighbors(u)) {
            if (dist[nb.index] == kUnreachable) {
                dist[nb.index] = du + 1;
                queue.push_back(nb.index);
            }
        }
    }
}

} // namespace

std::vector<std::uint32_t> hop_distances_from(const WeightedGraph& g, std::size_t source) {
    std::vector<std::uint32_t> dist(g.node_count());
    std::vector<std::uint32_t> queue;
    queue.reserve(g.node_count());
    bfs_into(g, source, dist.data(), queue);
    return dist;
}

HopMatrix hop_matrix(const WeightedGraph& g, Exec exec) {
    const std::size_t n = g.node_count();
    std::vector<std::uint32_t> data(n * n);
    if (exec == Exec::parallel) {
#pragma omp parallel
        {
            std::vector<std::uint32_t> queue;
            queue.reserve(n);
#pragma omp for schedule(static)
            for (long long i = 0; i < static_cast<long long>(n); ++i)
                bfs_into(g, static_cast<std::size_t>(i),
                         data.data() + static_cast<std::size_t>(i) * n, queue);
        }
    } else {
        std::vector<std::uint32_t> queue;
        queue.reserve(n);
        for (std::size_t i = 0; i < n; ++i)
            bfs_into(g, i, data.data() + i * n, queue);
    }
    return HopMatrix(n, std::move(data));
}

PairDistanceStats pair_distance_stats(const HopMatrix& m) {
    const std::size_t n = m.size();
    PairDistanceStats stats{0.0, 0.0, 0, n < 2 ? 0 : n * (n - 1) / 2};
    double distance_sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const std::uint32_t d = m.at(i, j);
            if (d == kUnreachable)
                continue;
            ++stats.reachable_pairs;
            distance_sum += static_cast<double>(d);
            stats.efficiency_sum += 1.0 / static_cast<double>(d);
        }
    }
    if (stats.reachable_pairs > 0)
        stats.mean_distance = distance_sum / static_cast<double>(stats.reachable_pairs);
    return stats;
}

bool is_connected(const WeightedGraph& g) {
    const std::size_t n = g.node_count();
    if (n <= 1)
        return true;
    auto dist = hop_distances_from(g, 0);
    for (std::uint32_t d : dist)
        if (d == kUnreachable)
            return false;
    return true;
}

} // namespace commrank
