#include "commrank/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <string>
#include <vector>

#include "commrank/error.hpp"
#include "commrank/generators.hpp"
#include "commrank/paths.hpp"
#include "commrank/rng.hpp"

namespace commrank {

namespace {

double node_clustering(const WeightedGraph& b, std::size_t v) {
    const auto nbrs = b.neighbors(v);
    const std::size_t k = nbrs.size();
    if (k < 2)
        return 0.0;
    std::size_t links = 0;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (b.has_edge_at(nbrs[i].index, nbrs[j].index))
                ++links;
    return static_cast<double>(links) / (static_cast<double>(k) * (k - 1) / 2.0);
}

double clustering_of(const WeightedGraph& b, Exec exec) {
    const std::size_t n = b.node_count();
    if (n == 0)
        fail(Errc::empty_graph, "clustering coefficient needs at least one node");
    std::vector<double> value(n, 0.0);
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 64)
        for (long long v = 0; v < static_cast<long long>(n); ++v)
            value[static_cast<std::size_t>(v)] = node_clustering(b, static_cast<std::size_t>(v));
    } else {
        for (std::size_t v = 0; v < n; ++v)
            value[v] = node_clustering(b, v);
    }
    double sum = 0.0;
    for (double x : value)
        sum += x;
    return sum / static_cast<double>(n);
}

// Reusable per-thread workspace for neighbourhood-induced subgraphs.
struct NeighborhoodScratch {
    std::vector<std::int32_t> local;                  // dense index -> slot, -1 outside
    std::vector<std::vector<std::uint32_t>> sub_adj;  // adjacency within the slot space
    std::vector<std::uint32_t> dist;
    std::vector<std::uint32_t> queue;

    explicit NeighborhoodScratch(std::size_t n) : local(n, -1) {}
};

double node_local_efficiency(const WeightedGraph& b, std::size_t v, NeighborhoodScratch& s) {
    const auto nbrs = b.neighbors(v);
    const std::size_t k = nbrs.size();
    if (k < 2)
        return 0.0;
    if (s.sub_adj.size() < k)
        s.sub_adj.resize(k);
    for (std::size_t i = 0; i < k; ++i)
        s.local[nbrs[i].index] = static_cast<std::int32_t>(i);
    for (std::size_t i = 0; i < k; ++i) {
        s.sub_adj[i].clear();
        for (const Neighbor& nb : b.neighbors(nbrs[i].index))
            if (s.local[nb.index] >= 0)
                s.sub_adj[i].push_back(static_cast<std::uint32_t>(s.local[nb.index]));
    }
    double efficiency_sum = 0.0;
    for (std::size_t src = 0; src < k; ++src) {
        s.dist.assign(k, kUnreachable);
        s.queue.clear();
        s.dist[src] = 0;
        s.queue.push_back(static_cast<std::uint32_t>(src));
        for (std::size_t head = 0; head < s.queue.size(); ++head) {
            const std::uint32_t u = s.queue[head];
            for (std::uint32_t w : s.sub_adj[u])
                if (s.dist[w] == kUnreachable) {
                    s.dist[w] = s.dist[u] + 1;
                    s.queue.push_back(w);
                }
        }
        for (std::size_t t = src + 1; t < k; ++t)
            if (s.dist[t] != kUnreachable)
                efficiency_sum += 1.0 / static_cast<double>(s.dist[t]);
    }
    for (std::size_t i = 0; i < k; ++i)
        s.local[nbrs[i].index] = -1;
    return efficiency_sum / (static_cast<double>(k) * (k - 1) / 2.0);
}

double local_efficiency_of(const WeightedGraph& b, Exec exec) {
    const std::size_t n = b.node_count();
    if (n == 0)
        fail(Errc::empty_graph, "local efficiency needs at least one node");
    std::vector<double> value(n, 0.0);
    if (exec == Exec::parallel) {
#pragma omp parallel
        {
            NeighborhoodScratch scratch(n);
#pragma omp for schedule(dynamic, 16)
            for (long long v = 0; v < static_cast<long long>(n); ++v)
                value[static_cast<std::size_t>(v)] =
                    node_local_efficiency(b, static_cast<std::size_t>(v), scratch);
        }
    } else {
        NeighborhoodScratch scratch(n);
        for (std::size_t v = 0; v < n; ++v)
            value[v] = node_local_efficiency(b, v, scratch);
    }
    double sum = 0.0;
    for (double x : value)
        sum += x;
    return sum / static_cast<double>(n);
}

double assortativity_of(const WeightedGraph& b) {
    const std::size_t m = b.edge_count();
    if (m == 0)
        fail(Errc::empty_graph, "assortativity needs at least one edge");
    const std::size_t n = b.node_count();
    std::vector<std::uint64_t> deg(n);
    for (std::size_t i = 0; i < n; ++i)
        deg[i] = b.degree(i);
    // Accumulate the Pearson sums over both orientations of every edge in
    // exact integer arithmetic; the zero-variance test is then exact instead
    // of comparing a float against a tolerance.
    std::uint64_t sx = 0, sxx = 0, sxy = 0;
    for (const Edge& e : b.edges()) {
        const std::uint64_t x = deg[e.u];
        const std::uint64_t y = deg[e.v];
        sx += x + y;
        sxx += x * x + y * y;
        sxy += 2 * x * y;
    }
    using Wide = __int128;
    const auto samples = static_cast<Wide>(2 * m);
    const Wide num = samples * static_cast<Wide>(sxy) - static_cast<Wide>(sx) * static_cast<Wide>(sx);
    const Wide den = samples * static_cast<Wide>(sxx) - static_cast<Wide>(sx) * static_cast<Wide>(sx);
    if (den == 0)
        fail(Errc::zero_variance,
             "endpoint degrees have zero variance (regular graph): assortativity is undefined");
    return static_cast<double>(num) / static_cast<double>(den);
}

// sigma for an already-binarized graph with its clustering and mean distance
// precomputed, so cm_vector does not redo the hop matrix.
double small_worldness_of(const WeightedGraph& b, double c_g, double l_g, int n_ref,
                          std::uint64_t seed, Exec exec) {
    const std::size_t n = b.node_count();
    const std::size_t m = b.edge_count();
    if (n_ref < 1)
        fail(Errc::degenerate_reference, "small-worldness needs at least one reference graph");
    if (n < 4 || m < n)
        fail(Errc::degenerate_reference,
             "small-worldness needs n >= 4 and m >= n; got n=" + std::to_string(n) +
                 ", m=" + std::to_string(m));
    if (!is_connected(b))
        fail(Errc::disconnected, "small-worldness is defined on connected graphs only");
    double c_sum = 0.0;
    double l_sum = 0.0;
    for (int i = 0; i < n_ref; ++i) {
        const WeightedGraph ref =
            erdos_renyi_gnm(n, m, Rng::substream_seed(seed, static_cast<std::uint64_t>(i)));
        c_sum += clustering_of(ref, exec);
        l_sum += pair_distance_stats(hop_matrix(ref, exec)).mean_distance;
    }
    const double c_rand = c_sum / n_ref;
    const double l_rand = l_sum / n_ref;
    if (c_rand == 0.0)
        fail(Errc::degenerate_reference, "reference ensemble has zero clustering");
    return (c_g / c_rand) / (l_g / l_rand);
}

} // namespace

std::array<std::optional<double>, 7> measures_of(const CmVector& v) {
    return {v.average_degree,     v.average_distance, v.small_worldness,
            v.clustering_coefficient, v.assortativity,    v.global_efficiency,
            v.local_efficiency};
}

double average_degree(const WeightedGraph& g, double threshold) {
    const WeightedGraph b = binarize(g, threshold);
    if (b.node_count() == 0)
        fail(Errc::empty_graph, "average degree needs at least one node");
    return 2.0 * static_cast<double>(b.edge_count()) / static_cast<double>(b.node_count());
}

AverageDistance average_distance(const WeightedGraph& g, double threshold, Exec exec) {
    const WeightedGraph b = binarize(g, threshold);
    const PairDistanceStats stats = pair_distance_stats(hop_matrix(b, exec));
    if (stats.reachable_pairs == 0)
        fail(Errc::no_reachable_pairs, "no reachable node pair: average distance is undefined");
    return {stats.mean_distance,
            static_cast<double>(stats.reachable_pairs) / static_cast<double>(stats.total_pairs)};
}

double clustering_coefficient(const WeightedGraph& g, double threshold, Exec exec) {
    return clustering_of(binarize(g, threshold), exec);
}

double global_efficiency(const WeightedGraph& g, double threshold, Exec exec) {
    const WeightedGraph b = binarize(g, threshold);
    if (b.node_count() < 2)
        fail(Errc::empty_graph, "global efficiency needs at least two nodes");
    const PairDistanceStats stats = pair_distance_stats(hop_matrix(b, exec));
    return stats.efficiency_sum / static_cast<double>(stats.total_pairs);
}

double local_efficiency(const WeightedGraph& g, double threshold, Exec exec) {
    return local_efficiency_of(binarize(g, threshold), exec);
}

double assortativity(const WeightedGraph& g, double threshold) {
    return assortativity_of(binarize(g, threshold));
}

double small_worldness(const WeightedGraph& g, int n_ref, std::uint64_t seed, double threshold,
                       Exec exec) {
    const WeightedGraph b = binarize(g, threshold);
    const std::size_t n = b.node_count();
    const std::size_t m = b.edge_count();
    if (n < 4 || m < n)
        fail(Errc::degenerate_reference,
             "small-worldness needs n >= 4 and m >= n; got n=" + std::to_string(n) +
                 ", m=" + std::to_string(m));
    if (!is_connected(b))
        fail(Errc::disconnected, "small-worldness is defined on connected graphs only");
    const double c_g = clustering_of(b, exec);
    const double l_g = pair_distance_stats(hop_matrix(b, exec)).mean_distance;
    return small_worldness_of(b, c_g, l_g, n_ref, seed, exec);
}

CmVector cm_vector(const WeightedGraph& g, std::uint64_t seed, const CmOptions& opt, Exec exec) {
    const WeightedGraph b = binarize(g, opt.threshold);
    const std::size_t n = b.node_count();
    if (n == 0)
        fail(Errc::empty_graph, "measure vector needs at least one node");
    CmVector v;
    v.average_degree = 2.0 * static_cast<double>(b.edge_count()) / static_cast<double>(n);
    const PairDistanceStats stats = pair_distance_stats(hop_matrix(b, exec));
    if (stats.reachable_pairs > 0) {
        v.average_distance = stats.mean_distance;
        v.reachable_pair_fraction =
            static_cast<double>(stats.reachable_pairs) / static_cast<double>(stats.total_pairs);
    }
    if (n >= 2)
        v.global_efficiency = stats.efficiency_sum / static_cast<double>(stats.total_pairs);
    v.clustering_coefficient = clustering_of(b, exec);
    v.local_efficiency = local_efficiency_of(b, exec);
    try {
        v.assortativity = assortativity_of(b);
    } catch (const Error&) {
    }
    try {
        v.small_worldness = small_worldness_of(b, v.clustering_coefficient, stats.mean_distance,
                                               opt.small_world_refs, seed, exec);
    } catch (const Error&) {
    }
    return v;
}

CmSimilarityTable cm_similarity_table(const WeightedGraph& gt,
                                      const std::vector<LabeledGraph>& others, std::uint64_t seed,
                                      const CmOptions& opt, Exec exec) {
    if (gt.node_count() == 0)
        fail(Errc::empty_graph, "ground truth graph is empty");
    CmSimilarityTable table;
    table.labels.reserve(others.size() + 1);
    table.labels.emplace_back("gt");
    for (const LabeledGraph& o : others)
        table.labels.push_back(o.label);
    table.raw.resize(others.size() + 1);
    table.raw[0] = cm_vector(gt, seed, opt, exec);
    std::vector<std::exception_ptr> errors(others.size());
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(others.size()); ++i) {
            try {
                table.raw[static_cast<std::size_t>(i) + 1] =
                    cm_vector(*others[static_cast<std::size_t>(i)].graph, seed, opt, exec);
            } catch (...) {
                errors[static_cast<std::size_t>(i)] = std::current_exception();
            }
        }
    } else {
        for (std::size_t i = 0; i < others.size(); ++i)
            table.raw[i + 1] = cm_vector(*others[i].graph, seed, opt, exec);
    }
    for (const std::exception_ptr& e : errors)
        if (e)
            std::rethrow_exception(e);
    const auto gt_measures = measures_of(table.raw[0]);
    table.deviation.resize(table.raw.size());
    for (std::size_t r = 0; r < table.raw.size(); ++r) {
        const auto row = measures_of(table.raw[r]);
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (!gt_measures[c] || !row[c])
                continue;
            table.deviation[r][c] =
                std::abs(*row[c] - *gt_measures[c]) / std::max(std::abs(*gt_measures[c]), 1e-12);
        }
    }
    return table;
}

} // namespace commrank
