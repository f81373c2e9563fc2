#ifndef FAIRLINE_ALGORITHMS_HPP
#define FAIRLINE_ALGORITHMS_HPP

#include <cstdint>
#include <vector>

#include "fairline/allocation.hpp"
#include "fairline/instance.hpp"
#include "fairline/rational.hpp"

namespace fairline {

/// Left-to-right threshold sweep. Every agent i ends up with
///   u_i(own block) >= u_i(M)/n - (n-1)/n * max_item_utility(i),
/// so the result is (n-1)/n * u_max proportional. Deterministic: when several
/// agents clear their threshold the lowest index wins, and the leftover
/// suffix is appended to the block of the last agent served (that block is
/// rightmost, so the result stays contiguous).
ContiguousAllocation allocate_proportional(const Instance& instance);

/// Per-move record of the block-moving equitable allocator. `phase` counts
/// re-selections of the reference (maximum) block; within one phase the
/// distance potential sum_z |i - z| * |block_z| strictly increases with
/// every move.
struct BlockMoverTrace {
    struct Move {
        std::uint64_t phase;
        std::int64_t potential;
    };
    std::vector<Move> moves;
    std::uint64_t phases = 0;
};

/// Hard stop for the block mover; exceeding it signals a bug because the
/// termination argument bounds the move count well below this.
std::uint64_t equitable_move_cap(int agents, int items);

/// Block-moving procedure: starts from all items on the first block of the
/// ordering and repeatedly shifts a boundary item from the rich side toward
/// the current minimum block until the spread of own-bundle utilities is at
/// most the highest single-item utility. Blocks appear on the line exactly
/// in the given order. Throws InternalError if the move cap is exceeded.
ContiguousAllocation allocate_equitable(const Instance& instance, const AgentOrdering& ordering,
                                        BlockMoverTrace* trace = nullptr);

struct EgalitarianSearchResult {
    Rational welfare;
    ContiguousAllocation allocation;
};

/// Maximum egalitarian welfare among contiguous allocations whose blocks
/// follow `ordering`, via binary search over the finite set of interval
/// utilities with a greedy minimal-prefix feasibility check. The returned
/// allocation achieves the welfare (leftover items join the last block).
EgalitarianSearchResult max_egalitarian_fixed_order(const Instance& instance,
                                                    const AgentOrdering& ordering);

/// Agent orderings are searched exhaustively here and in equitable_refine;
/// beyond this many agents the factorial blows up and the call is refused.
inline constexpr int kMaxOrderingSearchAgents = 8;

/// Boundary-moving refinement: finds w, the best egalitarian welfare over
/// all contiguous allocations (all orderings searched; throws CapacityError
/// for more than kMaxOrderingSearchAgents agents), then shifts block
/// boundaries until every agent's utility lies in [w, w + u_max]. The result
/// is u_max-equitable and its egalitarian welfare is exactly w. Among
/// orderings achieving w, the refinement with the smallest spread is
/// returned (ties: first in lexicographic ordering order).
ContiguousAllocation equitable_refine(const Instance& instance);

/// Two agents only (throws ArgumentError otherwise): each agent's envy
/// toward the other is at most that agent's own highest item utility.
ContiguousAllocation allocate_envy_free_two(const Instance& instance);

/// A division of the continuous interval [0, m] into n ordered pieces:
/// piece p spans [cuts[p-1], cuts[p]] (with 0 and m padded at the ends) and
/// belongs to order.agent_at(p). Item j occupies [j-1, j] with uniform
/// density u_i(j).
struct DivisibleAllocation {
    std::vector<Rational> cuts; // n-1 nondecreasing values in [0, m]
    AgentOrdering order;
};

/// Utility of `agent` for the cake interval [from, to] under the uniform
/// per-item density embedding.
Rational divisible_utility(const Instance& instance, int agent, const Rational& from,
                           const Rational& to);

/// Rounds a divisible allocation to whole items: item j follows the piece
/// whose interior contains point j; if point j lands exactly on a piece
/// boundary the item goes to the piece on the left. Each agent's envy grows
/// by less than twice her maximum item utility.
ContiguousAllocation round_divisible(const Instance& instance,
                                     const DivisibleAllocation& divisible);

/// Envy-free division of the cake [0, m] for exactly two agents: cut at the
/// leftmost point where agent 1 is indifferent between the sides, then let
/// agent 2 take the side she weakly prefers.
DivisibleAllocation divisible_envy_free_two(const Instance& instance);

/// Agents pick a favorite remaining item in index order, round after round
/// (ties: lowest item index). Generally not contiguous; envy stays within
/// one item's value.
GeneralAllocation allocate_round_robin(const Instance& instance);

} // namespace fairline

#endif
