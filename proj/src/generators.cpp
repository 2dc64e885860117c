#include "commrank/generators.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <unordered_set>
#include <vector>

#include "commrank/error.hpp"
#include "commrank/rng.hpp"

namespace commrank {

namespace {

std::uint64_t pair_count(std::size_t n) {
    return static_cast<std::uint64_t>(n) * (n - 1) / 2;
}

// Unordered pairs {u, v} with u < v are numbered v*(v-1)/2 + u.
std::uint64_t pair_code(std::uint64_t u, std::uint64_t v) {
    return v * (v - 1) / 2 + u;
}

std::pair<std::uint32_t, std::uint32_t> decode_pair(std::uint64_t code) {
    auto v = static_cast<std::uint64_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(code))) / 2.0);
    while (v * (v - 1) / 2 > code)
        --v;
    while (v * (v + 1) / 2 <= code)
        ++v;
    const std::uint64_t u = code - v * (v - 1) / 2;
    return {static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v)};
}

// Floyd's algorithm: a uniform k-subset of {0, ..., universe-1}, returned sorted.
std::vector<std::uint64_t> sample_distinct(std::uint64_t universe, std::uint64_t k, Rng& rng) {
    std::unordered_set<std::uint64_t> chosen;
    chosen.reserve(static_cast<std::size_t>(k) * 2 + 1);
    for (std::uint64_t j = universe - k; j < universe; ++j) {
        const std::uint64_t t = rng.next_below(j + 1);
        chosen.insert(chosen.count(t) ? j : t);
    }
    std::vector<std::uint64_t> out(chosen.begin(), chosen.end());
    std::sort(out.begin(), out.end());
    return out;
}

// fraction*m computed in doubles can land a hair under the exact product
// (e.g. 0.29*100 -> 28.999...); nudge before truncating so the integer
// result matches exact arithmetic.
std::size_t floor_count(double fraction, std::size_t m) {
    return static_cast<std::size_t>(std::floor(fraction * static_cast<double>(m) + 1e-9));
}

std::size_t ceil_count(double fraction, std::size_t m) {
    return static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(m) - 1e-9));
}

std::vector<NodeId> identity_nodes(std::size_t n) {
    std::vector<NodeId> nodes(n);
    for (std::size_t i = 0; i < n; ++i)
        nodes[i] = i;
    return nodes;
}

void require_fraction(double f, const char* what) {
    if (!(f >= 0.0) || !(f <= 1.0))
        fail(Errc::bad_fraction, std::string(what) + " must lie in [0, 1]");
}

double median_weight(const WeightedGraph& g) {
    std::vector<double> w;
    w.reserve(g.edge_count());
    for (const Edge& e : g.edges())
        w.push_back(e.weight);
    std::sort(w.begin(), w.end());
    const std::size_t m = w.size();
    if (m % 2 == 1)
        return w[m / 2];
    return 0.5 * (w[m / 2 - 1] + w[m / 2]);
}

// Uniformly chosen absent pairs of g, as canonical edges with the given weight.
std::vector<EdgeInput> sample_non_edges(const WeightedGraph& g, std::size_t count, Rng& rng,
                                        double weight) {
    const std::size_t n = g.node_count();
    std::vector<std::uint64_t> free_codes;
    free_codes.reserve(pair_count(n) - g.edge_count());
    for (std::uint32_t v = 1; v < n; ++v)
        for (std::uint32_t u = 0; u < v; ++u)
            if (!g.has_edge_at(u, v))
                free_codes.push_back(pair_code(u, v));
    if (count > free_codes.size())
        fail(Errc::not_enough_non_edges,
             "cannot add " + std::to_string(count) + " edges: only " +
                 std::to_string(free_codes.size()) + " node pairs are unused");
    std::vector<EdgeInput> added;
    added.reserve(count);
    if (count == 0)
        return added;
    const std::vector<std::uint64_t> picks = sample_distinct(free_codes.size(), count, rng);
    const std::vector<NodeId>& ids = g.nodes();
    for (std::uint64_t idx : picks) {
        const auto [u, v] = decode_pair(free_codes[static_cast<std::size_t>(idx)]);
        added.push_back({ids[u], ids[v], weight});
    }
    return added;
}

WeightedGraph remove_edges_with(const WeightedGraph& g, double fraction, Rng& rng) {
    require_fraction(fraction, "remove fraction");
    const std::size_t m = g.edge_count();
    const std::size_t drop = floor_count(fraction, m);
    std::vector<bool> dropped(m, false);
    if (drop > 0)
        for (std::uint64_t idx : sample_distinct(m, drop, rng))
            dropped[static_cast<std::size_t>(idx)] = true;
    std::vector<EdgeInput> kept;
    kept.reserve(m - drop);
    const std::vector<NodeId>& ids = g.nodes();
    std::size_t i = 0;
    for (const Edge& e : g.edges()) {
        if (!dropped[i])
            kept.push_back({ids[e.u], ids[e.v], e.weight});
        ++i;
    }
    return WeightedGraph(g.nodes(), kept);
}

WeightedGraph add_false_positives_with(const WeightedGraph& g, std::size_t count, Rng& rng,
                                       WeightRule weight_rule, const WeightedGraph& weight_source) {
    const double weight = (weight_rule == WeightRule::gt_median && weight_source.edge_count() > 0)
                              ? median_weight(weight_source)
                              : 1.0;
    std::vector<EdgeInput> edges;
    edges.reserve(g.edge_count() + count);
    const std::vector<NodeId>& ids = g.nodes();
    for (const Edge& e : g.edges())
        edges.push_back({ids[e.u], ids[e.v], e.weight});
    for (const EdgeInput& e : sample_non_edges(g, count, rng, weight))
        edges.push_back(e);
    return WeightedGraph(g.nodes(), edges);
}

} // namespace

const char* family_name(PerturbFamily f) {
    switch (f) {
    case PerturbFamily::subset: return "subset";
    case PerturbFamily::false_positive: return "false_positive";
    case PerturbFamily::skeleton_fp: return "skeleton_fp";
    case PerturbFamily::hybrid: return "hybrid";
    }
    return "?";
}

const char* model_name(RandomModel m) {
    switch (m) {
    case RandomModel::erdos_renyi: return "erdos_renyi";
    case RandomModel::watts_strogatz: return "watts_strogatz";
    case RandomModel::barabasi_albert: return "barabasi_albert";
    }
    return "?";
}

void PerturbationSpec::validate() const {
    require_fraction(remove_fraction, "remove fraction");
    if (!(add_fraction >= 0.0))
        fail(Errc::bad_fraction, "add fraction must be non-negative");
    switch (family) {
    case PerturbFamily::subset:
        if (add_fraction != 0.0)
            fail(Errc::bad_fraction, "subset perturbation cannot add edges");
        break;
    case PerturbFamily::false_positive:
        if (remove_fraction != 0.0)
            fail(Errc::bad_fraction, "false_positive perturbation cannot remove edges");
        break;
    case PerturbFamily::skeleton_fp:
        if (remove_fraction < 0.5)
            fail(Errc::bad_fraction, "skeleton_fp must remove at least half of the edges");
        break;
    case PerturbFamily::hybrid:
        break;
    }
}

WeightedGraph erdos_renyi_gnm(std::size_t n, std::size_t m, std::uint64_t seed) {
    const std::uint64_t pairs = n < 2 ? 0 : pair_count(n);
    if (m > pairs)
        fail(Errc::too_many_edges, "G(n, m) with n=" + std::to_string(n) + " holds at most " +
                                       std::to_string(pairs) + " edges, requested " +
                                       std::to_string(m));
    Rng rng(seed);
    std::vector<EdgeInput> edges;
    edges.reserve(m);
    if (m > 0)
        for (std::uint64_t code : sample_distinct(pairs, m, rng)) {
            const auto [u, v] = decode_pair(code);
            edges.push_back({u, v, 1.0});
        }
    return WeightedGraph(identity_nodes(n), edges);
}

WeightedGraph watts_strogatz(std::size_t n, std::size_t k, double p, std::uint64_t seed) {
    if (k < 2 || k % 2 != 0 || k >= n)
        fail(Errc::bad_k, "ring degree must be even with 2 <= k < n; got k=" + std::to_string(k) +
                              ", n=" + std::to_string(n));
    require_fraction(p, "rewire probability");
    Rng rng(seed);
    std::vector<std::unordered_set<std::uint32_t>> adj(n);
    auto connect = [&](std::uint32_t a, std::uint32_t b) {
        adj[a].insert(b);
        adj[b].insert(a);
    };
    auto disconnect = [&](std::uint32_t a, std::uint32_t b) {
        adj[a].erase(b);
        adj[b].erase(a);
    };
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::size_t j = 1; j <= k / 2; ++j)
            connect(u, static_cast<std::uint32_t>((u + j) % n));
    // Rewire in lattice order. A full node keeps its edge; otherwise the new
    // endpoint is rejection-sampled among non-neighbours.
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::size_t j = 1; j <= k / 2; ++j) {
            const auto v = static_cast<std::uint32_t>((u + j) % n);
            if (!rng.bernoulli(p))
                continue;
            if (adj[u].size() >= n - 1)
                continue;
            std::uint32_t w = u;
            while (w == u || adj[u].count(w))
                w = static_cast<std::uint32_t>(rng.next_below(n));
            disconnect(u, v);
            connect(u, w);
        }
    std::vector<EdgeInput> edges;
    edges.reserve(n * k / 2);
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v : adj[u])
            if (u < v)
                edges.push_back({u, v, 1.0});
    return WeightedGraph(identity_nodes(n), edges);
}

WeightedGraph barabasi_albert(std::size_t n, std::size_t attach, std::uint64_t seed) {
    if (attach < 1 || attach >= n)
        fail(Errc::bad_attach, "attachment count must satisfy 1 <= attach < n; got attach=" +
                                   std::to_string(attach) + ", n=" + std::to_string(n));
    Rng rng(seed);
    std::vector<EdgeInput> edges;
    edges.reserve(attach * (attach + 1) / 2 + attach * (n - attach - 1));
    // One entry per edge endpoint, so uniform draws are degree-proportional.
    std::vector<std::uint32_t> endpoints;
    for (std::uint32_t v = 0; v <= attach; ++v)
        for (std::uint32_t u = 0; u < v; ++u) {
            edges.push_back({u, v, 1.0});
            endpoints.push_back(u);
            endpoints.push_back(v);
        }
    std::vector<std::uint32_t> picked;
    picked.reserve(attach);
    for (std::uint32_t v = static_cast<std::uint32_t>(attach) + 1; v < n; ++v) {
        picked.clear();
        while (picked.size() < attach) {
            const auto t = endpoints[static_cast<std::size_t>(rng.next_below(endpoints.size()))];
            if (std::find(picked.begin(), picked.end(), t) == picked.end())
                picked.push_back(t);
        }
        for (std::uint32_t t : picked) {
            edges.push_back({t, v, 1.0});
            endpoints.push_back(t);
            endpoints.push_back(v);
        }
    }
    return WeightedGraph(identity_nodes(n), edges);
}

RandomModelSpec match_edge_count(RandomModelSpec spec, const WeightedGraph& gt) {
    const std::size_t m_gt = gt.edge_count();
    const std::size_t n = spec.n;
    spec.target_m = m_gt;
    auto gap = [m_gt](std::size_t realized) {
        return realized > m_gt ? realized - m_gt : m_gt - realized;
    };
    switch (spec.model) {
    case RandomModel::erdos_renyi: {
        const std::uint64_t pairs = n < 2 ? 0 : pair_count(n);
        spec.realized_m = static_cast<std::size_t>(std::min<std::uint64_t>(m_gt, pairs));
        break;
    }
    case RandomModel::watts_strogatz: {
        if (n < 3)
            fail(Errc::bad_k, "ring lattice needs at least 3 nodes");
        std::size_t best_k = 2;
        std::size_t best_m = n;
        for (std::size_t k = 2; k < n; k += 2) {
            const std::size_t realized = n * k / 2;
            if (gap(realized) < gap(best_m)) {
                best_k = k;
                best_m = realized;
            }
        }
        spec.ws_k = best_k;
        spec.realized_m = best_m;
        break;
    }
    case RandomModel::barabasi_albert: {
        if (n < 2)
            fail(Errc::bad_attach, "preferential attachment needs at least 2 nodes");
        std::size_t best_a = 1;
        std::size_t best_m = n - 1;
        for (std::size_t a = 1; a < n; ++a) {
            const std::size_t realized = a * (a + 1) / 2 + a * (n - a - 1);
            if (gap(realized) < gap(best_m)) {
                best_a = a;
                best_m = realized;
            }
        }
        spec.ba_attach = best_a;
        spec.realized_m = best_m;
        break;
    }
    }
    return spec;
}

WeightedGraph generate_model(const RandomModelSpec& spec) {
    switch (spec.model) {
    case RandomModel::erdos_renyi:
        return erdos_renyi_gnm(spec.n, spec.realized_m, spec.seed);
    case RandomModel::watts_strogatz:
        return watts_strogatz(spec.n, spec.ws_k, spec.ws_p, spec.seed);
    case RandomModel::barabasi_albert:
        return barabasi_albert(spec.n, spec.ba_attach, spec.seed);
    }
    fail(Errc::internal, "unknown random model");
}

WeightedGraph remove_edges(const WeightedGraph& g, double fraction, std::uint64_t seed) {
    Rng rng(seed);
    return remove_edges_with(g, fraction, rng);
}

WeightedGraph add_false_positives(const WeightedGraph& g, double add_fraction, std::uint64_t seed,
                                  WeightRule weight_rule) {
    if (!(add_fraction >= 0.0))
        fail(Errc::bad_fraction, "add fraction must be non-negative");
    Rng rng(seed);
    return add_false_positives_with(g, ceil_count(add_fraction, g.edge_count()), rng, weight_rule,
                                    g);
}

WeightedGraph skeleton_plus_fp(const WeightedGraph& g, double keep_fraction, double add_fraction,
                               std::uint64_t seed, WeightRule weight_rule) {
    if (!(keep_fraction > 0.0) || !(keep_fraction <= 0.5))
        fail(Errc::bad_fraction, "skeleton keep fraction must lie in (0, 0.5]");
    PerturbationSpec spec;
    spec.family = PerturbFamily::skeleton_fp;
    spec.remove_fraction = 1.0 - keep_fraction;
    spec.add_fraction = add_fraction;
    spec.seed = seed;
    return hybrid_perturb(g, spec, weight_rule);
}

WeightedGraph hybrid_perturb(const WeightedGraph& g, const PerturbationSpec& spec,
                             WeightRule weight_rule) {
    spec.validate();
    const std::size_t m = g.edge_count();
    Rng remove_rng(spec.seed, 0);
    Rng add_rng(spec.seed, 1);
    WeightedGraph pruned = remove_edges_with(g, spec.remove_fraction, remove_rng);
    // Addition count is relative to the original edge count, with new edges
    // drawn among the pruned graph's absent pairs and weighted from the
    // original weights.
    return add_false_positives_with(pruned, ceil_count(spec.add_fraction, m), add_rng, weight_rule,
                                    g);
}

std::pair<WeightedGraph, Partition> planted_partition(std::size_t n, std::size_t k_blocks,
                                                      double p_in, double p_out,
                                                      std::uint64_t seed) {
    if (k_blocks < 1 || n % k_blocks != 0)
        fail(Errc::bad_block_count, "block count " + std::to_string(k_blocks) +
                                        " must divide the node count " + std::to_string(n));
    require_fraction(p_in, "p_in");
    require_fraction(p_out, "p_out");
    if (p_out > p_in)
        fail(Errc::bad_fraction, "p_out must not exceed p_in");
    const std::size_t block_size = n / k_blocks;
    Rng rng(seed);
    std::vector<EdgeInput> edges;
    // One uniform draw per pair in canonical order, so p_in == p_out == p
    // reproduces G(n, p) draw for draw.
    for (std::uint32_t v = 1; v < n; ++v)
        for (std::uint32_t u = 0; u < v; ++u) {
            const bool same = u / block_size == v / block_size;
            if (rng.next_real() < (same ? p_in : p_out))
                edges.push_back({u, v, 1.0});
        }
    std::vector<NodeId> universe = identity_nodes(n);
    std::vector<std::uint32_t> assign(n);
    for (std::size_t i = 0; i < n; ++i)
        assign[i] = static_cast<std::uint32_t>(i / block_size);
    return {WeightedGraph(universe, edges),
            Partition::from_assignment(universe, assign)};
}

} // namespace commrank
