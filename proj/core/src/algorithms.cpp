#include "fairline/algorithms.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <utility>

#include "fairline/errors.hpp"
#include "fairline/fairness.hpp"

namespace fairline {

namespace {

// Boundary vector form of an ordered contiguous allocation: block at line
// position p is [b[p], b[p+1]).
std::vector<int> boundaries_of(const ContiguousAllocation& allocation,
                               const AgentOrdering& ordering) {
    const int n = ordering.size();
    std::vector<int> b(n + 1, 0);
    b[n] = allocation.items();
    for (int p = 0; p + 1 < n; ++p) b[p + 1] = allocation.block(ordering.agent_at(p)).end;
    return b;
}

} // namespace

ContiguousAllocation allocate_proportional(const Instance& instance) {
    const int n = instance.agents();
    const int m = instance.items();

    std::vector<Rational> threshold(n);
    for (int i = 0; i < n; ++i) {
        threshold[i] =
            instance.total_utility(i) / n - instance.max_item_utility(i) * (n - 1) / n;
    }

    std::vector<Block> blocks(n);
    std::vector<bool> served(n, false);
    int position = 0;
    int last_served = -1;
    for (int round = 0; round < n; ++round) {
        int end = position;
        int winner = -1;
        for (;;) {
            for (int i = 0; i < n && winner < 0; ++i) {
                if (!served[i] && instance.block_utility(i, position, end) >= threshold[i]) {
                    winner = i;
                }
            }
            if (winner >= 0 || end == m) break;
            ++end;
        }
        if (winner < 0) {
            // the inductive guarantee says the full remainder always suffices
            throw InternalError("no agent accepted the remaining items");
        }
        blocks[winner] = Block{position, end};
        served[winner] = true;
        last_served = winner;
        position = end;
    }
    blocks[last_served].end = m; // leftover suffix; the last block is rightmost
    return ContiguousAllocation(m, std::move(blocks));
}

std::uint64_t equitable_move_cap(int agents, int items) {
    unsigned __int128 cap = 8;
    cap *= static_cast<unsigned __int128>(agents) * agents;
    unsigned __int128 m4 = 1;
    for (int k = 0; k < 4; ++k) m4 *= static_cast<unsigned __int128>(items);
    cap = cap * m4 + 64;
    const unsigned __int128 max64 = std::numeric_limits<std::uint64_t>::max();
    return static_cast<std::uint64_t>(cap > max64 ? max64 : cap);
}

ContiguousAllocation allocate_equitable(const Instance& instance, const AgentOrdering& ordering,
                                        BlockMoverTrace* trace) {
    const int n = instance.agents();
    const int m = instance.items();
    if (ordering.size() != n) throw ArgumentError("ordering size does not match agent count");

    const Rational& u_max = instance.max_item_utility();

    // start with every item on the first block of the ordering
    std::vector<int> b(n + 1, m);
    b[0] = 0;

    std::vector<Rational> util(n);
    auto recompute = [&](int p) {
        util[p] = instance.block_utility(ordering.agent_at(p), b[p], b[p + 1]);
    };
    for (int p = 0; p < n; ++p) recompute(p);

    auto potential_around = [&](int center) {
        std::int64_t sum = 0;
        for (int p = 0; p < n; ++p) {
            sum += static_cast<std::int64_t>(std::abs(center - p)) * (b[p + 1] - b[p]);
        }
        return sum;
    };

    const std::uint64_t cap = equitable_move_cap(n, m);
    std::uint64_t moves = 0;
    std::uint64_t phase = 0;

    for (;;) {
        // step 1: reference block with maximum utility (ties: lowest agent index)
        int pos_max = 0;
        for (int p = 1; p < n; ++p) {
            if (util[p] > util[pos_max] ||
                (util[p] == util[pos_max] && ordering.agent_at(p) < ordering.agent_at(pos_max))) {
                pos_max = p;
            }
        }
        ++phase;
        std::int64_t potential = potential_around(pos_max);

        for (;;) {
            // step 2: stop once the spread is within one item's worth
            Rational min_val = util[0];
            Rational max_val = util[0];
            for (int p = 1; p < n; ++p) {
                if (util[p] < min_val) min_val = util[p];
                if (util[p] > max_val) max_val = util[p];
            }
            if (max_val <= min_val + u_max) {
                if (trace) trace->phases = phase;
                return ContiguousAllocation::from_boundaries(ordering, b);
            }
            if (util[pos_max] != max_val) {
                throw InternalError("reference block lost its maximum during a phase");
            }

            // step 3: minimum block closest to the reference (ties: lowest agent index)
            int pos_min = -1;
            for (int p = 0; p < n; ++p) {
                if (util[p] != min_val) continue;
                if (pos_min < 0) {
                    pos_min = p;
                    continue;
                }
                int d_new = std::abs(pos_max - p);
                int d_old = std::abs(pos_max - pos_min);
                if (d_new < d_old ||
                    (d_new == d_old && ordering.agent_at(p) < ordering.agent_at(pos_min))) {
                    pos_min = p;
                }
            }

            // step 4: shift the adjacent boundary item into the minimum block
            const int donor = pos_min > pos_max ? pos_min - 1 : pos_min + 1;
            if (b[donor + 1] - b[donor] <= 0) {
                throw InternalError("donor block between maximum and minimum is empty");
            }
            int moved_item;
            if (donor == pos_min - 1) {
                moved_item = b[pos_min] - 1;
                b[pos_min] -= 1;
            } else {
                moved_item = b[pos_min + 1];
                b[pos_min + 1] += 1;
            }
            recompute(donor);
            recompute(pos_min);

            if (++moves > cap) {
                throw InternalError("move cap " + std::to_string(cap) +
                                    " exceeded; the block mover failed to terminate");
            }
            std::int64_t next_potential = potential_around(pos_max);
            if (next_potential <= potential) {
                throw InternalError("distance potential did not increase within a phase");
            }
            potential = next_potential;
            if (trace) trace->moves.push_back({phase, potential});

            if (donor == pos_max &&
                instance.utility(ordering.agent_at(pos_max), moved_item) != 0) {
                break; // re-select the reference block
            }
        }
    }
}

namespace {

// Minimal-prefix greedy: block of each agent in order is the shortest prefix
// of the remaining items worth at least `w` to her; the leftover joins the
// last block. Returns boundaries, or nullopt when some agent falls short.
std::optional<std::vector<int>> greedy_boundaries(const Instance& instance,
                                                  const AgentOrdering& ordering,
                                                  const Rational& w) {
    const int n = instance.agents();
    const int m = instance.items();
    std::vector<int> b(n + 1, 0);
    int position = 0;
    for (int p = 0; p < n; ++p) {
        const int agent = ordering.agent_at(p);
        // prefix utilities are nondecreasing, so binary search the block end
        int lo = position, hi = m;
        if (instance.block_utility(agent, position, m) < w) return std::nullopt;
        while (lo < hi) {
            int mid = lo + (hi - lo) / 2;
            if (instance.block_utility(agent, position, mid) >= w) {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        b[p + 1] = lo;
        position = lo;
    }
    b[n] = m;
    return b;
}

std::vector<Rational> interval_utility_values(const Instance& instance) {
    std::vector<Rational> values;
    values.emplace_back(0);
    for (int i = 0; i < instance.agents(); ++i) {
        for (int s = 0; s < instance.items(); ++s) {
            for (int e = s + 1; e <= instance.items(); ++e) {
                values.push_back(instance.block_utility(i, s, e));
            }
        }
    }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

} // namespace

EgalitarianSearchResult max_egalitarian_fixed_order(const Instance& instance,
                                                    const AgentOrdering& ordering) {
    const int n = instance.agents();
    if (ordering.size() != n) throw ArgumentError("ordering size does not match agent count");

    // The optimum is the minimum utility of some block, hence one of the
    // interval utilities (0 covers empty blocks). Feasibility of the greedy
    // check is monotone in w, so binary search over the sorted candidates.
    const std::vector<Rational> candidates = interval_utility_values(instance);
    int lo = 0, hi = static_cast<int>(candidates.size()) - 1;
    while (lo < hi) {
        int mid = lo + (hi - lo + 1) / 2;
        if (greedy_boundaries(instance, ordering, candidates[mid])) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    const Rational& w = candidates[lo];
    auto b = greedy_boundaries(instance, ordering, w);
    if (!b) throw InternalError("zero-threshold greedy must be feasible");
    return {w, ContiguousAllocation::from_boundaries(ordering, *b)};
}

namespace {

// Boundary-moving pass from an ordered allocation with egalitarian welfare
// w (the best over all contiguous allocations). Pushes each boundary left
// until its block's value drops under w + u_max, then drains the last
// block's excess leftward, shrinking the active prefix one agent at a time.
ContiguousAllocation refine_boundaries(const Instance& instance, const AgentOrdering& ordering,
                                       std::vector<int> b, const Rational& w) {
    const int n = instance.agents();
    const Rational& u_max = instance.max_item_utility();
    const Rational upper = w + u_max;
    auto util = [&](int p) {
        return instance.block_utility(ordering.agent_at(p), b[p], b[p + 1]);
    };

    int active = n; // blocks active-1..n-1 beyond the first `active` are final
    for (;;) {
        for (int p = 0; p + 1 < active; ++p) {
            while (util(p) >= upper && b[p + 1] > b[p]) b[p + 1] -= 1;
        }
        if (util(active - 1) <= upper) break;
        if (active == 1) {
            throw InternalError("single remaining block exceeds w + u_max");
        }
        while (util(active - 1) > upper) b[active - 1] += 1;
        --active;
    }

    for (int p = 0; p < n; ++p) {
        Rational v = util(p);
        if (v < w || v > upper) {
            throw InternalError("refined block utility escaped [w, w + u_max]");
        }
    }
    return ContiguousAllocation::from_boundaries(ordering, b);
}

} // namespace

ContiguousAllocation equitable_refine(const Instance& instance) {
    const int n = instance.agents();
    if (n > kMaxOrderingSearchAgents) {
        throw CapacityError("ordering search handles at most " +
                            std::to_string(kMaxOrderingSearchAgents) + " agents, got " +
                            std::to_string(n));
    }

    if (instance.max_item_utility() == 0) {
        // every allocation already has zero spread and zero welfare
        std::vector<int> b(n + 1, 0);
        b[n] = instance.items();
        return ContiguousAllocation::from_boundaries(AgentOrdering::identity(n), b);
    }

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Rational best_w(-1);
    std::vector<AgentOrdering> best_orderings;
    do {
        AgentOrdering ordering{std::vector<int>(perm)};
        auto result = max_egalitarian_fixed_order(instance, ordering);
        if (result.welfare > best_w) {
            best_w = result.welfare;
            best_orderings.clear();
        }
        if (result.welfare == best_w) best_orderings.push_back(std::move(ordering));
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::optional<ContiguousAllocation> best;
    Rational best_spread;
    for (const AgentOrdering& ordering : best_orderings) {
        auto b = greedy_boundaries(instance, ordering, best_w);
        if (!b) throw InternalError("optimal threshold became infeasible");
        ContiguousAllocation refined = refine_boundaries(instance, ordering, std::move(*b), best_w);
        Rational spread = equitability_spread(instance, refined);
        if (!best || spread < best_spread) {
            best = std::move(refined);
            best_spread = spread;
        }
    }
    return *best;
}

ContiguousAllocation allocate_envy_free_two(const Instance& instance) {
    if (instance.agents() != 2) {
        throw ArgumentError("envy-free construction requires exactly 2 agents, got " +
                            std::to_string(instance.agents()));
    }
    // at n = 2 the proportional sweep bounds each agent's envy by her own
    // highest item utility
    return allocate_proportional(instance);
}

Rational divisible_utility(const Instance& instance, int agent, const Rational& from,
                           const Rational& to) {
    if (agent < 0 || agent >= instance.agents()) throw ArgumentError("agent index out of range");
    if (from < 0 || to > instance.items() || from > to) {
        throw ArgumentError("cake interval out of bounds");
    }
    Rational sum = 0;
    for (int j = 0; j < instance.items(); ++j) {
        Rational lo = std::max(from, Rational(j));
        Rational hi = std::min(to, Rational(j + 1));
        if (hi > lo) sum += instance.utility(agent, j) * (hi - lo);
    }
    return sum;
}

ContiguousAllocation round_divisible(const Instance& instance,
                                     const DivisibleAllocation& divisible) {
    const int n = instance.agents();
    const int m = instance.items();
    if (divisible.order.size() != n) {
        throw ArgumentError("piece order size does not match agent count");
    }
    if (static_cast<int>(divisible.cuts.size()) != n - 1) {
        throw ArgumentError("expected " + std::to_string(n - 1) + " cuts, got " +
                            std::to_string(divisible.cuts.size()));
    }
    Rational prev = 0;
    for (const Rational& c : divisible.cuts) {
        if (c < prev) throw ArgumentError("cuts must be nondecreasing");
        if (c > m) throw ArgumentError("cut exceeds the cake length");
        prev = c;
    }

    // item j (point j on the cake) belongs to the piece whose half-open
    // span (cut_{p-1}, cut_p] contains it, which is exactly the interior
    // rule plus left-piece boundary ties; in item indices that is
    // [floor(cut_{p-1}), floor(cut_p)).
    std::vector<int> b(n + 1, 0);
    for (int p = 0; p < n - 1; ++p) {
        b[p + 1] = static_cast<int>(floor_rational(divisible.cuts[p]));
    }
    b[n] = m;
    return ContiguousAllocation::from_boundaries(divisible.order, b);
}

DivisibleAllocation divisible_envy_free_two(const Instance& instance) {
    if (instance.agents() != 2) {
        throw ArgumentError("divisible helper requires exactly 2 agents, got " +
                            std::to_string(instance.agents()));
    }
    const int m = instance.items();
    const Rational total = instance.total_utility(0);
    Rational cut = 0;
    if (total != 0) {
        const Rational half = total / 2;
        // leftmost point where agent 1 is indifferent between the sides
        for (int j = 0; j < m; ++j) {
            Rational before = instance.block_utility(0, 0, j);
            Rational after = instance.block_utility(0, 0, j + 1);
            if (after >= half) {
                cut = Rational(j) + (half - before) / instance.utility(0, j);
                break;
            }
        }
    }
    Rational left = divisible_utility(instance, 1, 0, cut);
    Rational right = instance.total_utility(1) - left;
    // agent 2 takes the side she weakly prefers; agent 1 is indifferent
    std::vector<int> order = left > right ? std::vector<int>{1, 0} : std::vector<int>{0, 1};
    return DivisibleAllocation{{cut}, AgentOrdering(std::move(order))};
}

GeneralAllocation allocate_round_robin(const Instance& instance) {
    const int n = instance.agents();
    const int m = instance.items();
    std::vector<int> owners(m, -1);
    int remaining = m;
    while (remaining > 0) {
        for (int i = 0; i < n && remaining > 0; ++i) {
            int pick = -1;
            for (int j = 0; j < m; ++j) {
                if (owners[j] >= 0) continue;
                if (pick < 0 || instance.utility(i, j) > instance.utility(i, pick)) pick = j;
            }
            owners[pick] = i;
            --remaining;
        }
    }
    return GeneralAllocation(n, std::move(owners));
}

} // namespace fairline
