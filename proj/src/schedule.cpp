#include "semisched/schedule.hpp"

#include <algorithm>

namespace semisched {

ScheduleOutcome apply_assignment(const Instance& instance,
                                 const std::vector<int>& assignment) {
    if (assignment.size() != instance.jobs())
        throw LengthMismatch("assignment has " + std::to_string(assignment.size()) +
                             " entries for " + std::to_string(instance.jobs()) +
                             " jobs");
    Loads loads(static_cast<std::size_t>(instance.machines()), Rational(0));
    std::vector<TraceStep> trace;
    trace.reserve(instance.jobs());
    for (std::size_t i = 0; i < assignment.size(); ++i) {
        const int machine = assignment[i];
        if (machine < 1 || machine > instance.machines())
            throw MachineIndexOutOfRange("machine index " + std::to_string(machine) +
                                         " for job " + std::to_string(i + 1) +
                                         " outside [1, " +
                                         std::to_string(instance.machines()) + "]");
        loads[static_cast<std::size_t>(machine - 1)] += instance.sizes()[i];
        trace.push_back(TraceStep{static_cast<int>(i + 1), instance.sizes()[i],
                                  machine, loads});
    }
    const Rational makespan = *std::max_element(loads.begin(), loads.end());
    return ScheduleOutcome{instance, assignment, std::move(loads), makespan,
                           std::move(trace)};
}

} // namespace semisched
