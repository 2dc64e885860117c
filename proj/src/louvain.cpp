#include "commrank/louvain.hpp"

#include <algorithm>
#include <numeric>

#include "commrank/rng.hpp"

namespace commrank {

namespace {

constexpr double kPassTolerance = 1e-9;
constexpr double kMoveEpsilon = 1e-12;

/// Working representation for one aggregation level. Unlike WeightedGraph it
/// carries per-node self weights (folded intra-community weight).
struct LevelGraph {
    std::vector<std::vector<Neighbor>> adjacency;
    std::vector<double> self_weight;  // counted once, contributes twice to strength
    std::vector<double> strength;     // sum of incident weights + 2 * self_weight
    double total_weight = 0.0;        // edges once + self weights

    std::size_t size() const { return adjacency.size(); }
};

LevelGraph level_from_graph(const WeightedGraph& g) {
    LevelGraph lg;
    const std::size_t n = g.node_count();
    lg.adjacency.resize(n);
    lg.self_weight.assign(n, 0.0);
    lg.strength.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        auto row = g.neighbors(i);
        lg.adjacency[i].assign(row.begin(), row.end());
        for (const auto& nb : row)
            lg.strength[i] += nb.weight;
    }
    lg.total_weight = g.total_weight();
    return lg;
}

struct LocalMoveResult {
    std::vector<std::uint32_t> community;  // dense labels
    std::size_t community_count;
    bool moved_any;
};

LocalMoveResult local_move_phase(const LevelGraph& lg, double resolution, Rng& rng) {
    const std::size_t n = lg.size();
    const double w = lg.total_weight;
    const double two_w = 2.0 * w;

    std::vector<std::uint32_t> community(n);
    std::iota(community.begin(), community.end(), std::uint32_t{0});
    std::vector<double> comm_volume = lg.strength;
    for (std::size_t i = 0; i < n; ++i)
        comm_volume[i] += 2.0 * lg.self_weight[i];

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});

    // scratch: weight from the current node to each touched community
    std::vector<double> link_weight(n, 0.0);
    std::vector<std::uint32_t> touched;
    touched.reserve(16);

    bool moved_any = false;
    while (true) {
        rng.shuffle(order);
        double pass_gain = 0.0;
        for (std::size_t idx = 0; idx < n; ++idx) {
            const std::size_t node = order[idx];
            const std::uint32_t current = community[node];
            const double k_node = lg.strength[node] + 2.0 * lg.self_weight[node];

            touched.clear();
            for (const auto& nb : lg.adjacency[node]) {
                const std::uint32_t c = community[nb.index];
                if (link_weight[c] == 0.0)
                    touched.push_back(c);
                link_weight[c] += nb.weight;
            }

            // take the node out of its community
            comm_volume[current] -= k_node;

            // gain of joining community c, relative to staying isolated
            auto gain_of = [&](std::uint32_t c) {
                return link_weight[c] / w -
                       resolution * comm_volume[c] * k_node / (two_w * w);
            };

            std::uint32_t best = current;
            double best_gain = gain_of(current);
            for (std::uint32_t c : touched) {
                if (c == current)
                    continue;
                const double gain = gain_of(c);
                if (gain > best_gain + kMoveEpsilon) {
                    best = c;
                    best_gain = gain;
                } else if (gain >= best_gain - kMoveEpsilon && best != current && c < best) {
                    best = c;
                }
            }

            if (best != current) {
                pass_gain += best_gain - gain_of(current);
                community[node] = best;
                moved_any = true;
            }
            comm_volume[community[node]] += k_node;

            for (std::uint32_t c : touched)
                link_weight[c] = 0.0;
        }
        if (pass_gain < kPassTolerance)
            break;
    }

    // densify labels in first-appearance order for deterministic aggregation
    constexpr std::uint32_t unseen = ~std::uint32_t{0};
    std::vector<std::uint32_t> remap(n, unseen);
    std::uint32_t next = 0;
    for (std::uint32_t& c : community) {
        if (remap[c] == unseen)
            remap[c] = next++;
        c = remap[c];
    }
    return {std::move(community), next, moved_any};
}

LevelGraph aggregate_level(const LevelGraph& lg, const std::vector<std::uint32_t>& community,
                           std::size_t k) {
    LevelGraph out;
    out.adjacency.resize(k);
    out.self_weight.assign(k, 0.0);
    out.strength.assign(k, 0.0);
    out.total_weight = lg.total_weight;

    std::vector<double> row(k, 0.0);
    std::vector<std::uint32_t> touched;
    std::vector<std::vector<std::uint32_t>> members(k);
    for (std::size_t i = 0; i < lg.size(); ++i)
        members[community[i]].push_back(static_cast<std::uint32_t>(i));

    for (std::uint32_t a = 0; a < k; ++a) {
        touched.clear();
        for (std::uint32_t node : members[a]) {
            out.self_weight[a] += lg.self_weight[node];
            for (const auto& nb : lg.adjacency[node]) {
                const std::uint32_t b = community[nb.index];
                if (b == a) {
                    if (nb.index > node)
                        out.self_weight[a] += nb.weight;
                    continue;
                }
                if (row[b] == 0.0)
                    touched.push_back(b);
                row[b] += nb.weight;
            }
        }
        std::sort(touched.begin(), touched.end());
        for (std::uint32_t b : touched) {
            out.adjacency[a].push_back({b, row[b]});
            out.strength[a] += row[b];
            row[b] = 0.0;
        }
    }
    return out;
}

} // namespace

LouvainResult louvain(const WeightedGraph& g, std::uint64_t seed, double resolution) {
    if (!(resolution > 0.0))
        fail(Errc::bad_resolution, "resolution must be positive");
    if (g.total_weight() <= 0.0)
        fail(Errc::empty_graph, "louvain requires a graph with positive total weight");

    Rng rng(seed);
    LevelGraph level = level_from_graph(g);

    const std::size_t n = g.node_count();
    std::vector<std::uint32_t> node_to_comm(n);
    std::iota(node_to_comm.begin(), node_to_comm.end(), std::uint32_t{0});

    std::size_t levels = 0;
    while (true) {
        LocalMoveResult moves = local_move_phase(level, resolution, rng);
        if (!moves.moved_any)
            break;
        ++levels;
        for (std::uint32_t& c : node_to_comm)
            c = moves.community[c];
        if (moves.community_count == level.size())
            break;  // nothing merged, a further level cannot improve
        level = aggregate_level(level, moves.community, moves.community_count);
    }

    Partition partition = Partition::from_assignment(g.nodes(), node_to_comm);
    ModularityScore score = modularity(g, partition, resolution);
    return {std::move(partition), score, levels};
}

} // namespace commrank
