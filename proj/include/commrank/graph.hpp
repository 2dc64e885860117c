#ifndef COMMRANK_GRAPH_HPP
#define COMMRANK_GRAPH_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "commrank/error.hpp"

namespace commrank {

/// External node label (brain region id). Labels are arbitrary non-negative
/// integers; internally nodes are addressed by dense index into nodes().
using NodeId = std::uint64_t;

struct EdgeInput {
    NodeId u;
    NodeId v;
    double weight;
};

/// Edge with endpoints as dense node indices, canonicalized so u < v.
struct Edge {
    std::uint32_t u;
    std::uint32_t v;
    double weight;
};

struct Neighbor {
    std::uint32_t index;
    double weight;
};

/// Weighted degree per node, addressable by id or by dense index.
struct NodeStrengths {
    std::vector<NodeId> ids;     // sorted, same order as WeightedGraph::nodes()
    std::vector<double> values;  // values[i] = strength of ids[i]

    double of(NodeId id) const;
    double sum() const;
};

/// Undirected simple graph with positive edge weights over an explicit node
/// set. Immutable after construction; isolated nodes are kept so perturbed
/// graphs never silently shrink their universe.
class WeightedGraph {
public:
    WeightedGraph() = default;

    /// Validates and builds. Throws SelfLoop, DuplicateEdge, UnknownEndpoint,
    /// NonPositiveWeight.
    WeightedGraph(std::vector<NodeId> nodes, const std::vector<EdgeInput>& edges);

    /// Convenience for dense graphs on {0, ..., n-1}.
    static WeightedGraph dense(std::size_t n, const std::vector<EdgeInput>& edges);

    std::size_t node_count() const { return ids_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    double total_weight() const { return total_weight_; }

    /// Sorted external node ids.
    const std::vector<NodeId>& nodes() const { return ids_; }
    NodeId id_at(std::size_t index) const { return ids_[index]; }

    /// Dense index of an external id; throws UnknownEndpoint if absent.
    std::size_t index_of(NodeId id) const;
    bool contains(NodeId id) const;

    /// Canonical (u < v by index) edge list, sorted lexicographically.
    std::span<const Edge> edges() const { return edges_; }

    /// Adjacency of a node by dense index, sorted by neighbor index.
    std::span<const Neighbor> neighbors(std::size_t index) const;
    std::size_t degree(std::size_t index) const;

    bool has_edge_at(std::uint32_t u, std::uint32_t v) const;
    /// Weight of edge between dense indices, 0 if absent. Symmetric.
    double weight_at(std::uint32_t u, std::uint32_t v) const;
    /// Weight lookup by external id, 0 if absent.
    double weight_between(NodeId u, NodeId v) const;

    bool same_node_set(const WeightedGraph& other) const { return ids_ == other.ids_; }

    /// Optional region labels; empty unless assigned, size n when present.
    const std::vector<std::string>& node_names() const { return names_; }
    void set_node_names(std::vector<std::string> names);

private:
    std::vector<NodeId> ids_;
    std::vector<std::string> names_;
    std::vector<Edge> edges_;
    std::vector<std::uint32_t> offsets_;  // CSR offsets, size n+1
    std::vector<Neighbor> adjacency_;
    double total_weight_ = 0.0;

    void build_adjacency();
};

/// Builds a graph from node ids and weighted edge triples.
WeightedGraph build_graph(std::vector<NodeId> nodes, const std::vector<EdgeInput>& edges);

/// Weighted degree of every node; strengths sum to 2 * total_weight.
NodeStrengths node_strengths(const WeightedGraph& g);

/// Keeps exactly the edges with weight > threshold, each rewritten to weight 1.
/// Node set is unchanged.
WeightedGraph binarize(const WeightedGraph& g, double threshold);

} // namespace commrank

#endif // COMMRANK_GRAPH_HPP
