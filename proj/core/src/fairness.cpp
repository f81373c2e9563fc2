#include "fairline/fairness.hpp"

#include <string>

#include "fairline/errors.hpp"

namespace fairline {

namespace {

void check_shape(const Instance& instance, int agents, int items) {
    if (agents != instance.agents() || items != instance.items()) {
        throw ArgumentError("allocation shape (" + std::to_string(agents) + " agents, " +
                            std::to_string(items) + " items) does not match the instance");
    }
}

Rational deficit_from(const Instance& instance, const std::vector<std::vector<Rational>>& cross) {
    const int n = instance.agents();
    Rational worst = 0;
    for (int i = 0; i < n; ++i) {
        Rational gap = instance.total_utility(i) / n - cross[i][i];
        if (gap > worst) worst = gap;
    }
    return worst;
}

Rational envy_from(const std::vector<std::vector<Rational>>& cross) {
    const int n = static_cast<int>(cross.size());
    if (n == 1) return 0;
    bool first = true;
    Rational worst = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            Rational envy = cross[i][j] - cross[i][i];
            if (first || envy > worst) {
                worst = envy;
                first = false;
            }
        }
    }
    return worst;
}

Rational spread_from(const std::vector<std::vector<Rational>>& cross) {
    const int n = static_cast<int>(cross.size());
    Rational lo = cross[0][0];
    Rational hi = cross[0][0];
    for (int i = 1; i < n; ++i) {
        if (cross[i][i] < lo) lo = cross[i][i];
        if (cross[i][i] > hi) hi = cross[i][i];
    }
    return hi - lo;
}

Rational welfare_from(const std::vector<std::vector<Rational>>& cross, WelfareKind kind) {
    const int n = static_cast<int>(cross.size());
    if (kind == WelfareKind::utilitarian) {
        Rational sum = 0;
        for (int i = 0; i < n; ++i) sum += cross[i][i];
        return sum;
    }
    Rational lo = cross[0][0];
    for (int i = 1; i < n; ++i) {
        if (cross[i][i] < lo) lo = cross[i][i];
    }
    return lo;
}

FairnessReport report_from(const Instance& instance,
                           const std::vector<std::vector<Rational>>& cross) {
    return FairnessReport{
        deficit_from(instance, cross),
        envy_from(cross),
        spread_from(cross),
        welfare_from(cross, WelfareKind::utilitarian),
        welfare_from(cross, WelfareKind::egalitarian),
    };
}

} // namespace

std::vector<std::vector<Rational>> cross_utilities(const Instance& instance,
                                                   const ContiguousAllocation& allocation) {
    check_shape(instance, allocation.agents(), allocation.items());
    const int n = instance.agents();
    std::vector<std::vector<Rational>> cross(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const Block& b = allocation.block(j);
            cross[i][j] = instance.block_utility(i, b.begin, b.end);
        }
    }
    return cross;
}

std::vector<std::vector<Rational>> cross_utilities(const Instance& instance,
                                                   const GeneralAllocation& allocation) {
    check_shape(instance, allocation.agents(), allocation.items());
    const int n = instance.agents();
    const int m = instance.items();
    std::vector<std::vector<Rational>> cross(n, std::vector<Rational>(n, Rational(0)));
    for (int j = 0; j < m; ++j) {
        int owner = allocation.owner(j);
        for (int i = 0; i < n; ++i) cross[i][owner] += instance.utility(i, j);
    }
    return cross;
}

Rational proportionality_deficit(const Instance& instance, const ContiguousAllocation& allocation) {
    return deficit_from(instance, cross_utilities(instance, allocation));
}
Rational proportionality_deficit(const Instance& instance, const GeneralAllocation& allocation) {
    return deficit_from(instance, cross_utilities(instance, allocation));
}

Rational max_envy(const Instance& instance, const ContiguousAllocation& allocation) {
    return envy_from(cross_utilities(instance, allocation));
}
Rational max_envy(const Instance& instance, const GeneralAllocation& allocation) {
    return envy_from(cross_utilities(instance, allocation));
}

Rational equitability_spread(const Instance& instance, const ContiguousAllocation& allocation) {
    return spread_from(cross_utilities(instance, allocation));
}
Rational equitability_spread(const Instance& instance, const GeneralAllocation& allocation) {
    return spread_from(cross_utilities(instance, allocation));
}

Rational welfare(const Instance& instance, const ContiguousAllocation& allocation, WelfareKind kind) {
    return welfare_from(cross_utilities(instance, allocation), kind);
}
Rational welfare(const Instance& instance, const GeneralAllocation& allocation, WelfareKind kind) {
    return welfare_from(cross_utilities(instance, allocation), kind);
}

FairnessReport fairness_report(const Instance& instance, const ContiguousAllocation& allocation) {
    return report_from(instance, cross_utilities(instance, allocation));
}
FairnessReport fairness_report(const Instance& instance, const GeneralAllocation& allocation) {
    return report_from(instance, cross_utilities(instance, allocation));
}

} // namespace fairline
