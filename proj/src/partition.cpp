#include "commrank/partition.hpp"

#include <algorithm>
#include <numeric>

namespace commrank {

Partition Partition::from_blocks(const std::vector<std::vector<NodeId>>& blocks) {
    std::vector<std::pair<NodeId, std::uint32_t>> tagged;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty())
            fail(Errc::empty_block, "block " + std::to_string(b) + " is empty");
        for (NodeId id : blocks[b])
            tagged.emplace_back(id, static_cast<std::uint32_t>(b));
    }
    std::sort(tagged.begin(), tagged.end());
    for (std::size_t i = 1; i < tagged.size(); ++i)
        if (tagged[i].first == tagged[i - 1].first)
            fail(Errc::malformed,
                 "node " + std::to_string(tagged[i].first) + " appears in two blocks");

    Partition p;
    p.universe_.reserve(tagged.size());
    p.assign_.reserve(tagged.size());
    for (const auto& [id, b] : tagged) {
        p.universe_.push_back(id);
        p.assign_.push_back(b);
    }
    p.canonicalize();
    return p;
}

Partition Partition::from_assignment(std::vector<NodeId> universe,
                                     const std::vector<std::uint32_t>& labels) {
    if (universe.size() != labels.size())
        fail(Errc::malformed, "assignment length does not match universe");
    std::vector<std::size_t> order(universe.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return universe[a] < universe[b]; });

    Partition p;
    p.universe_.reserve(universe.size());
    p.assign_.reserve(universe.size());
    for (std::size_t i : order) {
        if (!p.universe_.empty() && p.universe_.back() == universe[i])
            fail(Errc::malformed, "node " + std::to_string(universe[i]) + " listed twice");
        p.universe_.push_back(universe[i]);
        p.assign_.push_back(labels[i]);
    }
    p.canonicalize();
    return p;
}

Partition Partition::singletons(const std::vector<NodeId>& universe) {
    std::vector<std::uint32_t> labels(universe.size());
    std::iota(labels.begin(), labels.end(), std::uint32_t{0});
    return from_assignment(universe, labels);
}

Partition Partition::single_block(const std::vector<NodeId>& universe) {
    if (universe.empty())
        fail(Errc::empty_universe, "cannot partition an empty universe");
    return from_assignment(universe, std::vector<std::uint32_t>(universe.size(), 0));
}

std::uint32_t Partition::community_of(NodeId id) const {
    auto it = std::lower_bound(universe_.begin(), universe_.end(), id);
    if (it == universe_.end() || *it != id)
        fail(Errc::missing_node, "node " + std::to_string(id) + " not in universe");
    return assign_[static_cast<std::size_t>(it - universe_.begin())];
}

std::vector<std::vector<NodeId>> Partition::blocks() const {
    std::vector<std::vector<NodeId>> out(block_count_);
    for (std::size_t i = 0; i < universe_.size(); ++i)
        out[assign_[i]].push_back(universe_[i]);
    return out;  // ids within each block are ascending because universe_ is sorted
}

std::vector<std::size_t> Partition::block_sizes() const {
    std::vector<std::size_t> sizes(block_count_, 0);
    for (std::uint32_t c : assign_)
        ++sizes[c];
    return sizes;
}

void Partition::canonicalize() {
    constexpr std::uint32_t unseen = ~std::uint32_t{0};
    std::uint32_t max_label = 0;
    for (std::uint32_t c : assign_)
        max_label = std::max(max_label, c);
    std::vector<std::uint32_t> remap(static_cast<std::size_t>(max_label) + 1, unseen);
    std::uint32_t next = 0;
    for (std::uint32_t& c : assign_) {
        if (remap[c] == unseen)
            remap[c] = next++;
        c = remap[c];
    }
    block_count_ = next;
}

} // namespace commrank
