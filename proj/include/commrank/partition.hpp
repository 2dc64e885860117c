#ifndef COMMRANK_PARTITION_HPP
#define COMMRANK_PARTITION_HPP

#include <cstdint>
#include <vector>

#include "commrank/graph.hpp"

namespace commrank {

/// Disjoint cover of a node set by non-empty communities.
///
/// Stored as a dense community index per universe position; the universe is
/// sorted and community indices are canonicalized by first appearance, so two
/// partitions are equal as block sets iff their stored forms compare equal.
class Partition {
public:
    Partition() = default;

    /// Universe is the sorted union of the blocks. Throws EmptyBlock for an
    /// empty block and Malformed if blocks overlap.
    static Partition from_blocks(const std::vector<std::vector<NodeId>>& blocks);

    /// Universe given explicitly; labels[i] is the community of universe[i].
    /// Labels may be arbitrary; they are renumbered densely.
    static Partition from_assignment(std::vector<NodeId> universe,
                                     const std::vector<std::uint32_t>& labels);

    /// Every node in its own block.
    static Partition singletons(const std::vector<NodeId>& universe);
    /// All nodes in one block.
    static Partition single_block(const std::vector<NodeId>& universe);

    const std::vector<NodeId>& universe() const { return universe_; }
    std::size_t size() const { return universe_.size(); }
    std::size_t block_count() const { return block_count_; }

    /// Community index of universe position i (dense, canonical order).
    std::uint32_t community_at(std::size_t i) const { return assign_[i]; }
    std::uint32_t community_of(NodeId id) const;
    const std::vector<std::uint32_t>& assignments() const { return assign_; }

    /// Blocks as sorted id lists, ordered by community index.
    std::vector<std::vector<NodeId>> blocks() const;
    std::vector<std::size_t> block_sizes() const;

    bool same_universe(const Partition& other) const { return universe_ == other.universe_; }

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.universe_ == b.universe_ && a.assign_ == b.assign_;
    }

private:
    std::vector<NodeId> universe_;       // sorted ids
    std::vector<std::uint32_t> assign_;  // canonical dense community per position
    std::uint32_t block_count_ = 0;

    void canonicalize();
};

} // namespace commrank

#endif // COMMRANK_PARTITION_HPP
