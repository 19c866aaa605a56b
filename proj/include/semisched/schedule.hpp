#pragma once

#include <vector>

#include "semisched/instance.hpp"

namespace semisched {

/// Per-machine load vector, indexed 0-based internally; machine indices in
/// assignments and traces are 1-based as in reports.
using Loads = std::vector<Rational>;

struct TraceStep {
    int job;                // 1-based job index
    Rational size;
    int machine;            // 1-based chosen machine
    Loads loads_after;
};

/// A completed schedule: the per-job machine assignment, the induced loads,
/// the makespan (max load) and the step-by-step trace.
struct ScheduleOutcome {
    Instance instance;
    std::vector<int> assignment;  // 1-based machine index per job
    Loads loads;
    Rational makespan;
    std::vector<TraceStep> trace;
};

/// Replays an assignment over an instance, producing loads, makespan and a
/// full trace. Throws LengthMismatch / MachineIndexOutOfRange.
ScheduleOutcome apply_assignment(const Instance& instance,
                                 const std::vector<int>& assignment);

} // namespace semisched
