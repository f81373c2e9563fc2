#ifndef FAIRLINE_FAIRNESS_HPP
#define FAIRLINE_FAIRNESS_HPP

#include "fairline/allocation.hpp"
#include "fairline/instance.hpp"
#include "fairline/rational.hpp"

namespace fairline {

enum class WelfareKind { utilitarian, egalitarian };

/// Exact measures of one allocation. Each is the least eps for which the
/// allocation is eps-fair under the corresponding notion:
///   prop_deficit  >= 0   least eps making it eps-proportional
///   max_envy      any    largest u_i(M_j) - u_i(M_i) over ordered pairs;
///                        eps-envy-freeness clamps this at 0
///   equit_spread  >= 0   max own-bundle utility minus min
/// Single-agent conventions: all three are 0.
struct FairnessReport {
    Rational prop_deficit;
    Rational max_envy;
    Rational equit_spread;
    Rational utilitarian;
    Rational egalitarian;
};

Rational proportionality_deficit(const Instance& instance, const ContiguousAllocation& allocation);
Rational proportionality_deficit(const Instance& instance, const GeneralAllocation& allocation);

/// May be negative when nobody envies anybody strictly.
Rational max_envy(const Instance& instance, const ContiguousAllocation& allocation);
Rational max_envy(const Instance& instance, const GeneralAllocation& allocation);

Rational equitability_spread(const Instance& instance, const ContiguousAllocation& allocation);
Rational equitability_spread(const Instance& instance, const GeneralAllocation& allocation);

Rational welfare(const Instance& instance, const ContiguousAllocation& allocation, WelfareKind kind);
Rational welfare(const Instance& instance, const GeneralAllocation& allocation, WelfareKind kind);

/// All five measures in one pass.
FairnessReport fairness_report(const Instance& instance, const ContiguousAllocation& allocation);
FairnessReport fairness_report(const Instance& instance, const GeneralAllocation& allocation);

/// u_i(M_j) for every agent pair: cross[i][j] is agent i's utility for
/// agent j's bundle. The building block for all measures.
std::vector<std::vector<Rational>> cross_utilities(const Instance& instance,
                                                   const ContiguousAllocation& allocation);
std::vector<std::vector<Rational>> cross_utilities(const Instance& instance,
                                                   const GeneralAllocation& allocation);

} // namespace fairline

#endif
