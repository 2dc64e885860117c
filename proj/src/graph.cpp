#include "commrank/graph.hpp"

#include <algorithm>
#include <numeric>

namespace commrank {

double NodeStrengths::of(NodeId id) const {
    auto it = std::lower_bound(ids.begin(), ids.end(), id);
    if (it == ids.end() || *it != id)
        fail(Errc::unknown_endpoint, "node " + std::to_string(id) + " not in graph");
    return values[static_cast<std::size_t>(it - ids.begin())];
}

double NodeStrengths::sum() const {
    return std::accumulate(values.begin(), values.end(), 0.0);
}

WeightedGraph::WeightedGraph(std::vector<NodeId> nodes, const std::vector<EdgeInput>& edges) {
    std::sort(nodes.begin(), nodes.end());
    for (std::size_t i = 1; i < nodes.size(); ++i)
        if (nodes[i] == nodes[i - 1])
            fail(Errc::malformed, "node id " + std::to_string(nodes[i]) + " listed twice");
    ids_ = std::move(nodes);

    edges_.reserve(edges.size());
    for (const auto& e : edges) {
        if (e.u == e.v)
            fail(Errc::self_loop, "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
        if (!(e.weight > 0.0))
            fail(Errc::non_positive_weight, "edge (" + std::to_string(e.u) + "," +
                                                std::to_string(e.v) + ") has weight " +
                                                std::to_string(e.weight));
        auto ui = static_cast<std::uint32_t>(index_of(e.u));
        auto vi = static_cast<std::uint32_t>(index_of(e.v));
        if (ui > vi)
            std::swap(ui, vi);
        edges_.push_back({ui, vi, e.weight});
    }
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
    for (std::size_t i = 1; i < edges_.size(); ++i)
        if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v)
            fail(Errc::duplicate_edge, "edge (" + std::to_string(ids_[edges_[i].u]) + "," +
                                           std::to_string(ids_[edges_[i].v]) + ") listed twice");

    total_weight_ = 0.0;
    for (const auto& e : edges_)
        total_weight_ += e.weight;

    build_adjacency();
}

WeightedGraph WeightedGraph::dense(std::size_t n, const std::vector<EdgeInput>& edges) {
    std::vector<NodeId> nodes(n);
    std::iota(nodes.begin(), nodes.end(), NodeId{0});
    return WeightedGraph(std::move(nodes), edges);
}

std::size_t WeightedGraph::index_of(NodeId id) const {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id)
        fail(Errc::unknown_endpoint, "node " + std::to_string(id) + " not in graph");
    return static_cast<std::size_t>(it - ids_.begin());
}

bool WeightedGraph::contains(NodeId id) const {
    return std::binary_search(ids_.begin(), ids_.end(), id);
}

std::span<const Neighbor> WeightedGraph::neighbors(std::size_t index) const {
    return {adjacency_.data() + offsets_[index],
            adjacency_.data() + offsets_[index + 1]};
}

std::size_t WeightedGraph::degree(std::size_t index) const {
    return offsets_[index + 1] - offsets_[index];
}

bool WeightedGraph::has_edge_at(std::uint32_t u, std::uint32_t v) const {
    return weight_at(u, v) > 0.0;
}

double WeightedGraph::weight_at(std::uint32_t u, std::uint32_t v) const {
    auto row = neighbors(u);
    auto it = std::lower_bound(row.begin(), row.end(), v,
                               [](const Neighbor& n, std::uint32_t x) { return n.index < x; });
    if (it == row.end() || it->index != v)
        return 0.0;
    return it->weight;
}

double WeightedGraph::weight_between(NodeId u, NodeId v) const {
    return weight_at(static_cast<std::uint32_t>(index_of(u)),
                     static_cast<std::uint32_t>(index_of(v)));
}

void WeightedGraph::set_node_names(std::vector<std::string> names) {
    if (!names.empty() && names.size() != ids_.size())
        fail(Errc::internal, "node name list does not match node count");
    names_ = std::move(names);
}

void WeightedGraph::build_adjacency() {
    const std::size_t n = ids_.size();
    offsets_.assign(n + 1, 0);
    for (const auto& e : edges_) {
        ++offsets_[e.u + 1];
        ++offsets_[e.v + 1];
    }
    for (std::size_t i = 0; i < n; ++i)
        offsets_[i + 1] += offsets_[i];
    adjacency_.resize(edges_.size() * 2);
    std::vector<std::uint32_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (const auto& e : edges_) {
        adjacency_[cursor[e.u]++] = {e.v, e.weight};
        adjacency_[cursor[e.v]++] = {e.u, e.weight};
    }
    for (std::size_t i = 0; i < n; ++i)
        std::sort(adjacency_.begin() + offsets_[i], adjacency_.begin() + offsets_[i + 1],
                  [](const Neighbor& a, const Neighbor& b) { return a.index < b.index; });
}

WeightedGraph build_graph(std::vector<NodeId> nodes, const std::vector<EdgeInput>& edges) {
    return WeightedGraph(std::move(nodes), edges);
}

NodeStrengths node_strengths(const WeightedGraph& g) {
    NodeStrengths s;
    s.ids = g.nodes();
    s.values.assign(g.node_count(), 0.0);
    for (const auto& e : g.edges()) {
        s.values[e.u] += e.weight;
        s.values[e.v] += e.weight;
    }
    return s;
}

WeightedGraph binarize(const WeightedGraph& g, double threshold) {
    if (threshold < 0.0)
        fail(Errc::bad_fraction, "binarization threshold must be >= 0");
    std::vector<EdgeInput> kept;
    kept.reserve(g.edge_count());
    for (const auto& e : g.edges())
        if (e.weight > threshold)
            kept.push_back({g.id_at(e.u), g.id_at(e.v), 1.0});
    return WeightedGraph(g.nodes(), kept);
}

} // namespace commrank
