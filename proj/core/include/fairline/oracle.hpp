#ifndef FAIRLINE_ORACLE_HPP
#define FAIRLINE_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>

#include "fairline/allocation.hpp"
#include "fairline/fairness.hpp"
#include "fairline/instance.hpp"
#include "fairline/rational.hpp"

namespace fairline {

enum class Notion { proportional, envy_free, equitable };

std::string_view notion_adjective(Notion notion); // "proportional", "envy-free", "equitable"
std::string_view notion_noun(Notion notion); // "proportionality", "envy-freeness", "equitability"
/// Accepts both spellings ("envy-free" and "envy-freeness", ...).
std::optional<Notion> parse_notion(std::string_view name);

enum class Space { contiguous, general };

/// Search-space budget, enforced against the closed-form size bound before
/// any enumeration starts.
struct OracleOptions {
    BigInt budget = 10'000'000;
};

struct OracleResult {
    /// False only for constrained welfare optimization with an empty
    /// feasible set; that is a result, not an error.
    bool feasible = true;
    Rational value;
    std::optional<GeneralAllocation> witness;
    /// Set when the searched space was contiguous.
    std::optional<ContiguousAllocation> witness_blocks;
    std::uint64_t explored = 0;
};

/// Number of distinct contiguous allocations of `items` line items to
/// `agents` agents (bundle partitions; permutations that only shuffle empty
/// blocks are not counted twice).
BigInt count_contiguous(int agents, int items);

/// The classic upper bound binom(items+agents-1, agents-1) * agents! on the
/// pair space of (ordering, cut vector); used for budget enforcement.
BigInt contiguous_pair_bound(int agents, int items);

/// Visits every distinct contiguous allocation exactly once, by ordered
/// agent arrangement and positive composition of the items (agents left out
/// of the arrangement hold empty blocks at the leftmost position).
/// Throws CapacityError when contiguous_pair_bound exceeds the budget.
void enumerate_contiguous(int agents, int items, const OracleOptions& options,
                          const std::function<void(const ContiguousAllocation&)>& visit);

/// Visits all agents^items owner maps in lexicographic owner-sequence order.
/// Throws CapacityError when that count exceeds the budget.
void enumerate_general(int agents, int items, const OracleOptions& options,
                       const std::function<void(const GeneralAllocation&)>& visit);

/// The allocation-level measure minimized by min_epsilon: proportionality
/// deficit, envy clamped at zero, or equitability spread.
Rational notion_measure(Notion notion, const Instance& instance,
                        const std::vector<std::vector<Rational>>& cross);

/// Exact minimum of the notion's measure over the space, with a witness.
/// Ties between witnesses break to the lexicographically least owner
/// sequence, so the result does not depend on evaluation order.
OracleResult min_epsilon(const Instance& instance, Notion notion, Space space,
                         const OracleOptions& options = {});

struct WelfareConstraint {
    enum class Kind { none, exact, approx };
    Kind kind = Kind::none;
    Notion notion = Notion::proportional;
    Rational eps; // approx only

    static WelfareConstraint none() { return {}; }
    static WelfareConstraint exact(Notion n) { return {Kind::exact, n, Rational(0)}; }
    static WelfareConstraint approx(Notion n, Rational e) {
        return {Kind::approx, n, std::move(e)};
    }
};

/// Exact maximum welfare over allocations in the space that satisfy the
/// constraint; `feasible == false` when none does. Same witness tie-break
/// as min_epsilon.
OracleResult optimal_welfare(const Instance& instance, WelfareKind kind,
                             const WelfareConstraint& constraint, Space space,
                             const OracleOptions& options = {});

} // namespace fairline

#endif
