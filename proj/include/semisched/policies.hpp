#pragma once

#include <optional>
#include <span>
#include <string>

#include "semisched/schedule.hpp"

namespace semisched {

/// The online policies plus the offline LPT baseline. TwoDS, I2DS and SD
/// require m = 2; ThreeDS and I3DS require m = 3; LS and LPT take any m >= 2.
enum class PolicyKind { LS, LPT, SD, TwoDS, I2DS, ThreeDS, I3DS };

std::string to_string(PolicyKind policy);
PolicyKind parse_policy(std::string_view name);  // "2ds", "i2ds", "3ds", "i3ds", "sd", "ls", "lpt"

/// Machine count a policy demands, or 0 when any m >= 2 works.
int required_machines(PolicyKind policy);

/// Mutable per-run state seen by the step functions. `sum` is the declared
/// total the thresholds are fractions of; `designated` is SD's
/// all-remaining-jobs machine once a stopping rule has fired.
struct PolicyState {
    Loads loads;
    Rational sum;
    int jobs_seen = 0;
    std::optional<int> designated;

    static PolicyState fresh(int machines, Rational sum) {
        return PolicyState{Loads(static_cast<std::size_t>(machines), Rational(0)),
                           sum, 0, std::nullopt};
    }
};

// Single-step decision rules. Each returns the 1-based machine for the next
// job; the caller applies the load update and increments jobs_seen.
int step_2ds(const PolicyState& state, const Rational& p);
int step_i2ds(const PolicyState& state, const Rational& p);
int step_3ds(const PolicyState& state, const Rational& p);
int step_i3ds(const PolicyState& state, const Rational& p);
int step_ls(const PolicyState& state, const Rational& p);
/// SD is stateful: the chosen branch may designate the machine that receives
/// every remaining job, recorded in state.designated. Throws
/// UnspecifiedBranch where the published description has no rule.
int step_sd(PolicyState& state, const Rational& p, int job_index);

/// Core engine: assignment for each job as a function of the revealed
/// prefix, the declared total and the policy only. `declared_sum` need not
/// equal the prefix total (prefix replays pass the full-sequence Sum).
std::vector<int> run_assignments(int machines, std::span<const Rational> sizes,
                                 const Rational& declared_sum, PolicyKind policy);

/// Runs a policy online over an instance and returns the full outcome.
/// Throws MachineCountMismatch when the policy's machine requirement does
/// not match the instance.
ScheduleOutcome run_online(const Instance& instance, PolicyKind policy);

/// Offline LPT: greedy min-load over the non-increasing order (already
/// sorted by the Instance invariant), ties to the lowest machine index.
ScheduleOutcome lpt_offline(const Instance& instance);

} // namespace semisched
