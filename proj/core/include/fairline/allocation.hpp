#ifndef FAIRLINE_ALLOCATION_HPP
#define FAIRLINE_ALLOCATION_HPP

#include <optional>
#include <vector>

namespace fairline {

/// Half-open interval [begin, end) of item positions; begin == end is an
/// empty block recorded at the boundary where it was created.
struct Block {
    int begin = 0;
    int end = 0;
    int size() const { return end - begin; }
    bool empty() const { return begin == end; }
    bool operator==(const Block&) const = default;
};

/// Permutation of agent indices giving the left-to-right order of their
/// blocks on the line.
class AgentOrdering {
public:
    /// Throws ArgumentError unless `order` is a permutation of 0..n-1.
    explicit AgentOrdering(std::vector<int> order);

    static AgentOrdering identity(int agents);

    int size() const { return static_cast<int>(order_.size()); }
    /// Agent sitting at line position `pos` (0 = leftmost).
    int agent_at(int pos) const { return order_[pos]; }
    const std::vector<int>& positions() const { return order_; }

    bool operator==(const AgentOrdering&) const = default;

private:
    std::vector<int> order_;
};

/// One block per agent; the non-empty blocks tile [0, items) exactly.
class ContiguousAllocation {
public:
    /// Validates the tiling invariant; throws ArgumentError on violation.
    ContiguousAllocation(int items, std::vector<Block> blocks);

    /// Builds the allocation in which agent ordering.agent_at(p) owns
    /// [boundaries[p], boundaries[p+1]). boundaries must be nondecreasing,
    /// start at 0 and end at `items`.
    static ContiguousAllocation from_boundaries(const AgentOrdering& ordering,
                                                const std::vector<int>& boundaries);

    int agents() const { return static_cast<int>(blocks_.size()); }
    int items() const { return items_; }
    const Block& block(int agent) const { return blocks_[agent]; }
    const std::vector<Block>& blocks() const { return blocks_; }

    /// Item -> owning agent, in item order.
    std::vector<int> owner_sequence() const;

    bool operator==(const ContiguousAllocation&) const = default;

private:
    int items_;
    std::vector<Block> blocks_;
};

/// Arbitrary partition of the items: every item has exactly one owner.
class GeneralAllocation {
public:
    /// owners[j] is the 0-based agent owning item j. Throws ArgumentError
    /// if some owner index is outside 0..agents-1.
    GeneralAllocation(int agents, std::vector<int> owners);

    int agents() const { return agents_; }
    int items() const { return static_cast<int>(owners_.size()); }
    int owner(int item) const { return owners_[item]; }
    const std::vector<int>& owner_sequence() const { return owners_; }

    /// Items of one agent, ascending.
    std::vector<int> bundle(int agent) const;

    bool operator==(const GeneralAllocation&) const = default;

private:
    int agents_;
    std::vector<int> owners_;
};

GeneralAllocation contiguous_to_general(const ContiguousAllocation& allocation);

/// Returns the block form iff every bundle is a consecutive run (so the
/// blocks tile the line). Agents with no items get an empty block at the
/// leftmost position. Non-contiguous input yields nullopt.
std::optional<ContiguousAllocation> general_is_contiguous(const GeneralAllocation& allocation);

} // namespace fairline

#endif
