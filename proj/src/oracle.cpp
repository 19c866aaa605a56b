#include "semisched/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "semisched/policies.hpp"

namespace semisched {

std::string to_string(RatioKind kind) {
    return kind == RatioKind::VsLbFormula ? "vs_lb_formula" : "vs_exact";
}

Rational opt_lower_bound(const Instance& instance) {
    return max(instance.sum() / Rational(instance.machines()), instance.pmax());
}

namespace {

struct Search {
    const Instance& instance;
    Rational lb;
    std::uint64_t budget;
    std::uint64_t expanded = 0;

    Rational best;
    std::vector<int> best_assignment;
    Loads loads;
    std::vector<int> assignment;

    Search(const Instance& inst, std::uint64_t node_budget)
        : instance(inst),
          lb(opt_lower_bound(inst)),
          budget(node_budget),
          loads(static_cast<std::size_t>(inst.machines()), Rational(0)),
          assignment(inst.jobs(), 0) {
        // Greedy schedule seeds the incumbent.
        const auto seed = lpt_offline(inst);
        best = seed.makespan;
        best_assignment = seed.assignment;
    }

    void dfs(std::size_t job, const Rational& cur_max) {
        if (best == lb) return;  // incumbent already meets the lower bound
        if (job == instance.jobs()) {
            if (cur_max < best) {
                best = cur_max;
                best_assignment = assignment;
            }
            return;
        }
        if (++expanded > budget)
            throw SearchBudgetExceeded("opt_exact exceeded " +
                                       std::to_string(budget) +
                                       " node expansions");
        const Rational& p = instance.sizes()[job];

        // Visit machines in nondecreasing-load order, skipping equal-load
        // duplicates (placing on either of two equally loaded machines
        // yields symmetric subtrees). The first job is pinned to machine 1.
        const int m = instance.machines();
        std::vector<int> order(static_cast<std::size_t>(m));
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return loads[static_cast<std::size_t>(a)] <
                   loads[static_cast<std::size_t>(b)];
        });
        const int tries = job == 0 ? 1 : m;
        const Rational* prev_load = nullptr;
        for (int t = 0; t < tries; ++t) {
            const auto j = static_cast<std::size_t>(order[static_cast<std::size_t>(t)]);
            if (prev_load && loads[j] == *prev_load) continue;
            prev_load = &loads[j];
            const Rational new_load = loads[j] + p;
            if (new_load >= best) continue;  // cannot strictly improve
            const Rational child_max = max(cur_max, new_load);
            loads[j] += p;
            assignment[job] = static_cast<int>(j) + 1;
            dfs(job + 1, child_max);
            loads[j] -= p;
        }
    }
};

} // namespace

OptReference opt_exact(const Instance& instance, std::uint64_t node_budget) {
    Search search(instance, node_budget);
    search.dfs(0, Rational(0));
    return OptReference{instance, search.lb, search.best,
                        std::move(search.best_assignment)};
}

OptReference opt_exact_enumerate(const Instance& instance) {
    const int m = instance.machines();
    const std::size_t n = instance.jobs();
    std::vector<int> digits(n, 0);  // base-m counter, digit = machine - 1
    std::vector<int> best_assignment;
    Rational best;
    bool have_best = false;
    for (;;) {
        Loads loads(static_cast<std::size_t>(m), Rational(0));
        for (std::size_t i = 0; i < n; ++i)
            loads[static_cast<std::size_t>(digits[i])] += instance.sizes()[i];
        const Rational makespan = *std::max_element(loads.begin(), loads.end());
        if (!have_best || makespan < best) {
            best = makespan;
            have_best = true;
            best_assignment.assign(n, 0);
            for (std::size_t i = 0; i < n; ++i) best_assignment[i] = digits[i] + 1;
        }
        std::size_t pos = 0;
        while (pos < n && ++digits[pos] == m) digits[pos++] = 0;
        if (pos == n) break;
    }
    return OptReference{instance, opt_lower_bound(instance), best,
                        std::move(best_assignment)};
}

Rational competitive_ratio(const ScheduleOutcome& outcome,
                           const OptReference& ref, RatioKind kind) {
    if (!(outcome.instance == ref.instance))
        throw MismatchedInstance(
            "outcome and optimum reference come from different instances");
    return outcome.makespan /
           (kind == RatioKind::VsLbFormula ? ref.lb_formula : ref.exact);
}

} // namespace semisched
