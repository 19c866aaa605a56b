#pragma once

#include <cstdint>
#include <string>

#include "semisched/schedule.hpp"

namespace semisched {

/// Which denominator a ratio uses. Published competitive analyses for these
/// policies divide by the lower-bound formula max{Sum/m, p_max}; the exact
/// optimum is the honest competitive denominator. Both are kept first-class
/// and every report labels the one it used.
enum class RatioKind { VsLbFormula, VsExact };

std::string to_string(RatioKind kind);

/// Ground-truth reference for one instance: the lower-bound formula value
/// and the true minimal makespan with a witnessing assignment.
struct OptReference {
    Instance instance;
    Rational lb_formula;
    Rational exact;
    std::vector<int> exact_assignment;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

/// max{Sum/m, p_max}.
Rational opt_lower_bound(const Instance& instance);

/// Exact optimal makespan by depth-first branch-and-bound (lb-formula and
/// incumbent pruning, equal-load symmetry skipping, first job pinned to
/// machine 1). Throws SearchBudgetExceeded once `node_budget` expansions
/// are spent.
OptReference opt_exact(const Instance& instance,
                       std::uint64_t node_budget = kDefaultNodeBudget);

/// Exact optimal makespan by plain enumeration of all m^n assignments.
/// Deliberately unpruned; the independent cross-check for opt_exact.
OptReference opt_exact_enumerate(const Instance& instance);

/// makespan divided by the chosen reference value, exact. Throws
/// MismatchedInstance when outcome and reference come from different
/// instances.
Rational competitive_ratio(const ScheduleOutcome& outcome,
                           const OptReference& ref, RatioKind kind);

} // namespace semisched
