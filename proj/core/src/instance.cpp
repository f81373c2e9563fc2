#include "fairline/instance.hpp"

#include <string>
#include <utility>

#include "fairline/errors.hpp"

namespace fairline {

Instance::Instance(int agents, int items, std::vector<std::vector<Rational>> utilities)
    : agents_(agents), items_(items), utilities_(std::move(utilities)) {
    if (agents_ < 1) throw ArgumentError("agent count must be >= 1");
    if (items_ < 0) throw ArgumentError("item count must be >= 0");
    if (static_cast<int>(utilities_.size()) != agents_) {
        throw ArgumentError("utilities has " + std::to_string(utilities_.size()) +
                            " rows, expected " + std::to_string(agents_));
    }
    prefix_.resize(agents_);
    row_max_.assign(agents_, Rational(0));
    global_max_ = 0;
    for (int i = 0; i < agents_; ++i) {
        const auto& row = utilities_[i];
        if (static_cast<int>(row.size()) != items_) {
            throw ArgumentError("utilities row " + std::to_string(i + 1) + " has " +
                                std::to_string(row.size()) + " entries, expected " +
                                std::to_string(items_));
        }
        prefix_[i].resize(items_ + 1);
        prefix_[i][0] = 0;
        for (int j = 0; j < items_; ++j) {
            if (row[j] < 0) {
                throw ArgumentError("utility of agent " + std::to_string(i + 1) + " for item " +
                                    std::to_string(j + 1) + " is negative");
            }
            prefix_[i][j + 1] = prefix_[i][j] + row[j];
            if (row[j] > row_max_[i]) row_max_[i] = row[j];
        }
        if (row_max_[i] > global_max_) global_max_ = row_max_[i];
    }
}

const Rational& Instance::utility(int agent, int item) const {
    if (agent < 0 || agent >= agents_) throw ArgumentError("agent index out of range");
    if (item < 0 || item >= items_) throw ArgumentError("item index out of range");
    return utilities_[agent][item];
}

Rational Instance::block_utility(int agent, int begin, int end) const {
    if (agent < 0 || agent >= agents_) throw ArgumentError("agent index out of range");
    if (begin < 0 || end > items_ || begin > end) throw ArgumentError("item range out of bounds");
    return prefix_[agent][end] - prefix_[agent][begin];
}

Rational Instance::bundle_utility(int agent, std::span<const int> items) const {
    if (agent < 0 || agent >= agents_) throw ArgumentError("agent index out of range");
    Rational sum = 0;
    for (int item : items) {
        if (item < 0 || item >= items_) throw ArgumentError("item index out of range");
        sum += utilities_[agent][item];
    }
    return sum;
}

const Rational& Instance::total_utility(int agent) const {
    if (agent < 0 || agent >= agents_) throw ArgumentError("agent index out of range");
    return prefix_[agent][items_];
}

const Rational& Instance::max_item_utility(int agent) const {
    if (agent < 0 || agent >= agents_) throw ArgumentError("agent index out of range");
    return row_max_[agent];
}

const Rational& Instance::max_item_utility() const { return global_max_; }

Instance Instance::normalized() const {
    std::vector<std::vector<Rational>> scaled(agents_);
    for (int i = 0; i < agents_; ++i) {
        const Rational& total = total_utility(i);
        if (total == 0) {
            throw ArgumentError("agent " + std::to_string(i + 1) +
                                " has zero total utility; cannot normalize");
        }
        scaled[i].reserve(items_);
        for (int j = 0; j < items_; ++j) scaled[i].push_back(utilities_[i][j] / total);
    }
    return Instance(agents_, items_, std::move(scaled));
}

} // namespace fairline
