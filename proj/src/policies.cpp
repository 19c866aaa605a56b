#include "semisched/policies.hpp"

#include <algorithm>

namespace semisched {

std::string to_string(PolicyKind policy) {
    switch (policy) {
        case PolicyKind::LS: return "ls";
        case PolicyKind::LPT: return "lpt";
        case PolicyKind::SD: return "sd";
        case PolicyKind::TwoDS: return "2ds";
        case PolicyKind::I2DS: return "i2ds";
        case PolicyKind::ThreeDS: return "3ds";
        case PolicyKind::I3DS: return "i3ds";
    }
    return "?";
}

PolicyKind parse_policy(std::string_view name) {
    if (name == "ls") return PolicyKind::LS;
    if (name == "lpt") return PolicyKind::LPT;
    if (name == "sd") return PolicyKind::SD;
    if (name == "2ds") return PolicyKind::TwoDS;
    if (name == "i2ds") return PolicyKind::I2DS;
    if (name == "3ds") return PolicyKind::ThreeDS;
    if (name == "i3ds") return PolicyKind::I3DS;
    throw ParseError("unknown policy '" + std::string(name) + "'");
}

int required_machines(PolicyKind policy) {
    switch (policy) {
        case PolicyKind::TwoDS:
        case PolicyKind::I2DS:
        case PolicyKind::SD:
            return 2;
        case PolicyKind::ThreeDS:
        case PolicyKind::I3DS:
            return 3;
        case PolicyKind::LS:
        case PolicyKind::LPT:
            return 0;
    }
    return 0;
}

int step_2ds(const PolicyState& state, const Rational& p) {
    return state.loads[0] + p <= state.sum / Rational(2) ? 1 : 2;
}

int step_i2ds(const PolicyState& state, const Rational& p) {
    return state.loads[0] + p <= Rational(7, 12) * state.sum ? 1 : 2;
}

int step_3ds(const PolicyState& state, const Rational& p) {
    if (state.loads[0] + p <= state.sum / Rational(3)) return 1;
    // min of l_2, l_3; equal loads go to the lower index.
    return state.loads[1] <= state.loads[2] ? 2 : 3;
}

int step_i3ds(const PolicyState& state, const Rational& p) {
    if (state.loads[0] + p <= state.sum / Rational(3)) return 1;
    if (state.loads[1] + p <= Rational(10, 27) * state.sum) return 2;
    return 3;
}

int step_ls(const PolicyState& state, const Rational& /*p*/) {
    const auto it = std::min_element(state.loads.begin(), state.loads.end());
    return static_cast<int>(it - state.loads.begin()) + 1;
}

namespace {

// SD helper: min-load machine of two, with the published l_1 = l_2 tie rule
// sending the job to M2.
int sd_min_load_machine(const PolicyState& state) {
    if (state.loads[0] == state.loads[1]) return 2;
    return state.loads[0] < state.loads[1] ? 1 : 2;
}

} // namespace

int step_sd(PolicyState& state, const Rational& p, int job_index) {
    if (state.designated) return *state.designated;

    if (job_index == 1) return 1;

    const Rational c59 = Rational(5, 9) * state.sum;

    if (job_index == 2) {
        const Rational top = state.loads[0] + p;
        const Rational c718 = Rational(7, 18) * state.sum;
        const Rational c49 = Rational(4, 9) * state.sum;
        // The two windows routed to M2 take precedence; what survives of the
        // "<= 5/9" rule is [4/9, 5/9]. Below 7/18 no rule applies.
        if ((c718 <= top && top < c49) || top > c59) return 2;
        if (c49 <= top && top <= c59) {
            state.designated = 2;
            return 1;
        }
        throw UnspecifiedBranch(
            "SD has no rule for l_1 + p_2 = " + top.str() + " < 7/18 * Sum with Sum = " +
            state.sum.str());
    }

    // Jobs i >= 3 after the J_2 -> M2 branch: the first one triggers a
    // stopping criterion, which also fixes the machine for all later jobs.
    const bool fits1 = state.loads[0] + p <= c59;
    const bool fits2 = state.loads[1] + p <= c59;
    int machine;
    if (fits1 || fits2) {
        // Criterion 1. When both machines fit, take the higher-loaded one
        // (the designated machine then receives the smaller remainder);
        // equal loads go to M2.
        if (fits1 && fits2) {
            if (state.loads[0] == state.loads[1]) {
                machine = 2;
            } else {
                machine = state.loads[0] > state.loads[1] ? 1 : 2;
            }
        } else {
            machine = fits1 ? 1 : 2;
        }
    } else {
        // Criterion 2: min-load machine.
        machine = sd_min_load_machine(state);
    }
    state.designated = machine == 1 ? 2 : 1;
    return machine;
}

std::vector<int> run_assignments(int machines, std::span<const Rational> sizes,
                                 const Rational& declared_sum, PolicyKind policy) {
    PolicyState state = PolicyState::fresh(machines, declared_sum);
    std::vector<int> assignment;
    assignment.reserve(sizes.size());
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        const Rational& p = sizes[i];
        int machine = 0;
        switch (policy) {
            case PolicyKind::TwoDS: machine = step_2ds(state, p); break;
            case PolicyKind::I2DS: machine = step_i2ds(state, p); break;
            case PolicyKind::ThreeDS: machine = step_3ds(state, p); break;
            case PolicyKind::I3DS: machine = step_i3ds(state, p); break;
            case PolicyKind::SD:
                machine = step_sd(state, p, static_cast<int>(i + 1));
                break;
            case PolicyKind::LS:
            case PolicyKind::LPT:
                machine = step_ls(state, p);
                break;
        }
        state.loads[static_cast<std::size_t>(machine - 1)] += p;
        state.jobs_seen += 1;
        assignment.push_back(machine);
    }
    return assignment;
}

namespace {

void check_machines(const Instance& instance, PolicyKind policy) {
    const int need = required_machines(policy);
    if (need != 0 && need != instance.machines())
        throw MachineCountMismatch(to_string(policy) + " requires m = " +
                                   std::to_string(need) + ", instance has m = " +
                                   std::to_string(instance.machines()));
}

} // namespace

ScheduleOutcome run_online(const Instance& instance, PolicyKind policy) {
    check_machines(instance, policy);
    const auto assignment =
        run_assignments(instance.machines(), instance.sizes(), instance.sum(), policy);
    return apply_assignment(instance, assignment);
}

ScheduleOutcome lpt_offline(const Instance& instance) {
    // Instance sizes are non-increasing by invariant, so the LPT sort is a
    // no-op and the schedule is plain greedy min-load.
    return run_online(instance, PolicyKind::LPT);
}

} // namespace semisched
