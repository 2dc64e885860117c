#include "commrank/modularity.hpp"

#include <algorithm>
#include <cmath>

namespace commrank {

namespace {

void require_same_universe(const WeightedGraph& g, const Partition& p) {
    if (p.universe() != g.nodes())
        fail(Errc::universe_mismatch, "partition universe does not match graph nodes");
}

/// Q for a label vector over g's dense node indices.
double modularity_of_labels(const WeightedGraph& g, const std::vector<std::uint32_t>& labels,
                            std::size_t block_count, double resolution) {
    const double w = g.total_weight();
    std::vector<double> intra(block_count, 0.0);
    std::vector<double> volume(block_count, 0.0);
    for (const auto& e : g.edges()) {
        if (labels[e.u] == labels[e.v])
            intra[labels[e.u]] += e.weight;
        volume[labels[e.u]] += e.weight;
        volume[labels[e.v]] += e.weight;
    }
    // Volume is normalized by the total volume rather than 2W so that the
    // single-block partition evaluates to exactly 1 - gamma.
    double total_volume = 0.0;
    for (double v : volume)
        total_volume += v;
    double q = 0.0;
    for (std::size_t c = 0; c < block_count; ++c) {
        const double frac = volume[c] / total_volume;
        q += intra[c] / w - resolution * frac * frac;
    }
    return q;
}

} // namespace

ModularityScore modularity(const WeightedGraph& g, const Partition& p, double resolution) {
    if (!(resolution > 0.0))
        fail(Errc::bad_resolution, "resolution must be positive");
    if (g.total_weight() <= 0.0)
        fail(Errc::empty_graph, "modularity is undefined for graphs with zero total weight");
    require_same_universe(g, p);
    return {modularity_of_labels(g, p.assignments(), p.block_count(), resolution)};
}

AggregatedGraph aggregate_graph(const WeightedGraph& g, const Partition& p) {
    require_same_universe(g, p);
    const std::size_t k = p.block_count();
    std::vector<double> self_weight(k, 0.0);
    // inter-block weights accumulated in a dense row to stay deterministic
    std::vector<std::vector<double>> cross(k, std::vector<double>(k, 0.0));
    const auto& labels = p.assignments();
    for (const auto& e : g.edges()) {
        const std::uint32_t a = labels[e.u];
        const std::uint32_t b = labels[e.v];
        if (a == b)
            self_weight[a] += e.weight;
        else
            cross[std::min(a, b)][std::max(a, b)] += e.weight;
    }
    std::vector<EdgeInput> edges;
    for (std::uint32_t a = 0; a < k; ++a)
        for (std::uint32_t b = a + 1; b < k; ++b)
            if (cross[a][b] > 0.0)
                edges.push_back({a, b, cross[a][b]});
    return {WeightedGraph::dense(k, edges), std::move(self_weight)};
}

std::pair<Partition, ModularityScore> brute_force_best_partition(const WeightedGraph& g,
                                                                 double resolution) {
    const std::size_t n = g.node_count();
    if (n > 10)
        fail(Errc::too_large, "exhaustive partition search is limited to 10 nodes");
    if (g.total_weight() <= 0.0)
        fail(Errc::empty_graph, "modularity is undefined for graphs with zero total weight");

    // Enumerate restricted growth strings: labels[0] = 0 and
    // labels[i] <= max(labels[0..i-1]) + 1. The RGS itself is the canonical
    // assignment, so lexicographic comparison of label vectors matches
    // lexicographic comparison of block contents.
    std::vector<std::uint32_t> labels(n, 0);
    std::vector<std::uint32_t> best_labels(n, 0);
    std::size_t best_blocks = 1;
    double best_q = -2.0;
    constexpr double tie_eps = 1e-12;

    auto consider = [&](std::size_t block_count) {
        const double q = modularity_of_labels(g, labels, block_count, resolution);
        if (q > best_q + tie_eps) {
            best_q = q;
            best_labels = labels;
            best_blocks = block_count;
            return;
        }
        if (q >= best_q - tie_eps) {
            if (block_count < best_blocks ||
                (block_count == best_blocks && labels < best_labels)) {
                best_labels = labels;
                best_blocks = block_count;
            }
        }
    };

    // Odometer over positions 1..n-1; position i may take 0..max(prefix)+1.
    std::vector<std::uint32_t> prefix_max(n, 0);
    auto refresh_prefix_max = [&](std::size_t from) {
        for (std::size_t j = std::max<std::size_t>(from, 1); j < n; ++j)
            prefix_max[j] = std::max(prefix_max[j - 1], labels[j]);
    };
    refresh_prefix_max(1);
    while (true) {
        consider(prefix_max[n - 1] + 1);
        int i = static_cast<int>(n) - 1;
        for (; i >= 1; --i) {
            if (labels[i] <= prefix_max[i - 1]) {  // can still grow at this position
                ++labels[i];
                std::fill(labels.begin() + i + 1, labels.end(), 0);
                refresh_prefix_max(static_cast<std::size_t>(i));
                break;
            }
        }
        if (i < 1)
            break;
    }

    return {Partition::from_assignment(g.nodes(), best_labels), ModularityScore{best_q}};
}

} // namespace commrank
