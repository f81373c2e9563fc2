#include "fairline/allocation.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "fairline/errors.hpp"

namespace fairline {

AgentOrdering::AgentOrdering(std::vector<int> order) : order_(std::move(order)) {
    std::vector<bool> seen(order_.size(), false);
    for (int a : order_) {
        if (a < 0 || a >= static_cast<int>(order_.size()) || seen[a]) {
            throw ArgumentError("ordering is not a permutation of the agents");
        }
        seen[a] = true;
    }
}

AgentOrdering AgentOrdering::identity(int agents) {
    std::vector<int> order(agents);
    std::iota(order.begin(), order.end(), 0);
    return AgentOrdering(std::move(order));
}

ContiguousAllocation::ContiguousAllocation(int items, std::vector<Block> blocks)
    : items_(items), blocks_(std::move(blocks)) {
    if (items_ < 0) throw ArgumentError("item count must be >= 0");
    if (blocks_.empty()) throw ArgumentError("allocation needs at least one agent");
    std::vector<const Block*> nonempty;
    for (const Block& b : blocks_) {
        if (b.begin < 0 || b.end > items_ || b.begin > b.end) {
            throw ArgumentError("block [" + std::to_string(b.begin) + ", " +
                                std::to_string(b.end) + ") is out of bounds");
        }
        if (!b.empty()) nonempty.push_back(&b);
    }
    std::sort(nonempty.begin(), nonempty.end(),
              [](const Block* a, const Block* b) { return a->begin < b->begin; });
    int cursor = 0;
    for (const Block* b : nonempty) {
        if (b->begin != cursor) {
            throw ArgumentError("blocks do not tile the line: gap or overlap at item position " +
                                std::to_string(cursor));
        }
        cursor = b->end;
    }
    if (cursor != items_) {
        throw ArgumentError("blocks do not tile the line: items " + std::to_string(cursor) +
                            ".." + std::to_string(items_ - 1) + " are unassigned");
    }
}

ContiguousAllocation ContiguousAllocation::from_boundaries(const AgentOrdering& ordering,
                                                           const std::vector<int>& boundaries) {
    const int n = ordering.size();
    if (static_cast<int>(boundaries.size()) != n + 1) {
        throw ArgumentError("expected " + std::to_string(n + 1) + " boundaries");
    }
    std::vector<Block> blocks(n);
    for (int p = 0; p < n; ++p) {
        blocks[ordering.agent_at(p)] = Block{boundaries[p], boundaries[p + 1]};
    }
    if (boundaries.front() != 0) throw ArgumentError("first boundary must be 0");
    return ContiguousAllocation(boundaries.back(), std::move(blocks));
}

std::vector<int> ContiguousAllocation::owner_sequence() const {
    std::vector<int> owners(items_, -1);
    for (int a = 0; a < agents(); ++a) {
        for (int j = blocks_[a].begin; j < blocks_[a].end; ++j) owners[j] = a;
    }
    return owners;
}

GeneralAllocation::GeneralAllocation(int agents, std::vector<int> owners)
    : agents_(agents), owners_(std::move(owners)) {
    if (agents_ < 1) throw ArgumentError("allocation needs at least one agent");
    for (int a : owners_) {
        if (a < 0 || a >= agents_) throw ArgumentError("item owner index out of range");
    }
}

std::vector<int> GeneralAllocation::bundle(int agent) const {
    std::vector<int> items;
    for (int j = 0; j < static_cast<int>(owners_.size()); ++j) {
        if (owners_[j] == agent) items.push_back(j);
    }
    return items;
}

GeneralAllocation contiguous_to_general(const ContiguousAllocation& allocation) {
    return GeneralAllocation(allocation.agents(), allocation.owner_sequence());
}

std::optional<ContiguousAllocation> general_is_contiguous(const GeneralAllocation& allocation) {
    const int n = allocation.agents();
    const int m = allocation.items();
    std::vector<Block> blocks(n); // empty agents stay at the leftmost position [0, 0)
    std::vector<bool> closed(n, false);
    int j = 0;
    while (j < m) {
        int a = allocation.owner(j);
        if (closed[a]) return std::nullopt; // bundle resumes after a break
        int end = j;
        while (end < m && allocation.owner(end) == a) ++end;
        blocks[a] = Block{j, end};
        closed[a] = true;
        j = end;
    }
    return ContiguousAllocation(m, std::move(blocks));
}

} // namespace fairline
