#pragma once

#include <map>
#include <optional>

#include "semisched/enumerate.hpp"
#include "semisched/oracle.hpp"
#include "semisched/policies.hpp"

namespace semisched {

enum class Verdict { ConfirmedOnDomain, CounterexampleFound };

std::string to_string(Verdict verdict);

struct PatternStats {
    long long examined = 0;
    std::optional<Rational> worst;
};

/// Result of sweeping a policy over an enumeration domain: the worst
/// competitive ratio under the requested denominator, a reproducible
/// witness, and the verdict against the claimed bound.
struct AuditReport {
    PolicyKind policy;
    EnumerationDomain domain;
    RatioKind kind;
    Rational claimed;

    long long examined = 0;
    long long skipped = 0;      // SearchBudgetExceeded instances, counted not hidden
    long long unspecified = 0;  // instances the policy has no rule for (SD gaps)
    std::map<PatternClass, PatternStats> per_pattern;

    Rational worst;
    std::optional<Instance> witness;           // absent only on empty domains
    std::optional<ScheduleOutcome> witness_outcome;
    std::optional<Rational> witness_reference;  // denominator value at the witness

    Verdict verdict = Verdict::ConfirmedOnDomain;
};

/// Runs `policy` over every instance of `domain`, computing ratios against
/// the requested denominator, and returns the maximum with a witness. Ties
/// break to the smallest instance under instance_less, independent of
/// evaluation order; `threads` affects wall-clock only. Instances whose
/// exact optimum blows the node budget are skipped and counted.
AuditReport audit_upper_bound(PolicyKind policy, const EnumerationDomain& domain,
                              RatioKind kind, const Rational& claimed,
                              int threads = 1,
                              std::uint64_t node_budget = kDefaultNodeBudget);

} // namespace semisched
