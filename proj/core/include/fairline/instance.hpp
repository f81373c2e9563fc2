#ifndef FAIRLINE_INSTANCE_HPP
#define FAIRLINE_INSTANCE_HPP

#include <span>
#include <vector>

#include "fairline/rational.hpp"

namespace fairline {

/// A fair-division instance: `agents` additive utility functions over
/// `items` indivisible items arranged on a line in index order.
///
/// Immutable after construction; all accessors are pure and exact, so an
/// Instance can be shared freely between concurrent evaluations. Agents and
/// items are 0-based internally (file formats and reports are 1-based).
class Instance {
public:
    /// Validates shape and nonnegativity; throws ArgumentError on violation.
    Instance(int agents, int items, std::vector<std::vector<Rational>> utilities);

    int agents() const { return agents_; }
    int items() const { return items_; }

    const Rational& utility(int agent, int item) const;

    /// Additive utility of the half-open item range [begin, end). O(1).
    Rational block_utility(int agent, int begin, int end) const;

    /// Additive utility of an arbitrary item set; empty set yields 0.
    Rational bundle_utility(int agent, std::span<const int> items) const;

    /// u_i(M): the agent's utility for all items.
    const Rational& total_utility(int agent) const;

    /// Highest single-item utility of one agent (0 when there are no items).
    const Rational& max_item_utility(int agent) const;

    /// Highest single-item utility over all agents (0 when there are no items).
    const Rational& max_item_utility() const;

    /// Returns a copy with every row rescaled to total utility exactly 1.
    /// Throws ArgumentError if some agent has zero total utility.
    Instance normalized() const;

    const std::vector<std::vector<Rational>>& utilities() const { return utilities_; }

    bool operator==(const Instance& other) const {
        return agents_ == other.agents_ && items_ == other.items_ && utilities_ == other.utilities_;
    }

private:
    int agents_;
    int items_;
    std::vector<std::vector<Rational>> utilities_;
    std::vector<std::vector<Rational>> prefix_; // prefix_[i][j] = sum of items < j
    std::vector<Rational> row_max_;
    Rational global_max_;
};

} // namespace fairline

#endif
