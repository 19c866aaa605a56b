#include "semisched/audit.hpp"

#include <atomic>
#include <exception>
#include <thread>

namespace semisched {

std::string to_string(Verdict verdict) {
    return verdict == Verdict::ConfirmedOnDomain ? "ConfirmedOnDomain"
                                                 : "CounterexampleFound";
}

namespace {

struct Evaluation {
    bool skipped = false;      // exact-optimum budget exhausted
    bool unspecified = false;  // the policy raised UnspecifiedBranch
    Rational ratio;
    PatternClass pattern = PatternClass::I1;
    std::exception_ptr error;  // anything else, rethrown on the reducing thread
};

Evaluation evaluate(const std::vector<long long>& parts, int machines,
                    PolicyKind policy, RatioKind kind,
                    std::uint64_t node_budget) noexcept {
    Evaluation ev;
    try {
        std::vector<Rational> sizes;
        sizes.reserve(parts.size());
        for (const long long p : parts) sizes.emplace_back(p);
        const Instance instance = build_instance(machines, std::move(sizes));
        ev.pattern = instance.pattern();
        const auto outcome = run_online(instance, policy);
        if (kind == RatioKind::VsLbFormula) {
            ev.ratio = outcome.makespan / opt_lower_bound(instance);
        } else {
            ev.ratio = outcome.makespan / opt_exact(instance, node_budget).exact;
        }
    } catch (const SearchBudgetExceeded&) {
        ev.skipped = true;
    } catch (const UnspecifiedBranch&) {
        ev.unspecified = true;
    } catch (...) {
        ev.error = std::current_exception();
    }
    return ev;
}

} // namespace

AuditReport audit_upper_bound(PolicyKind policy, const EnumerationDomain& domain,
                              RatioKind kind, const Rational& claimed,
                              int threads, std::uint64_t node_budget) {
    domain.validate();
    const int need = required_machines(policy);
    if (need != 0 && need != domain.machines)
        throw MachineCountMismatch(to_string(policy) + " requires m = " +
                                   std::to_string(need) + ", domain has m = " +
                                   std::to_string(domain.machines));

    std::vector<std::vector<long long>> all;
    for_each_size_vector(domain,
                         [&](const std::vector<long long>& parts) { all.push_back(parts); });
    if (all.empty()) throw InvalidDomain("domain is empty: " + domain.describe());

    std::vector<Evaluation> results(all.size());
    if (threads <= 1 || all.size() < 2) {
        for (std::size_t i = 0; i < all.size(); ++i)
            results[i] = evaluate(all[i], domain.machines, policy, kind, node_budget);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= all.size()) return;
                results[i] = evaluate(all[i], domain.machines, policy, kind, node_budget);
            }
        };
        std::vector<std::thread> pool;
        const int count = std::min<int>(threads, static_cast<int>(all.size()));
        pool.reserve(static_cast<std::size_t>(count));
        for (int t = 0; t < count; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    // Single-threaded reduction in enumeration order; ratio ties resolve to
    // the instance_less-smallest witness no matter how work was scheduled.
    AuditReport report;
    report.policy = policy;
    report.domain = domain;
    report.kind = kind;
    report.claimed = claimed;

    for (const auto& ev : results)
        if (ev.error) std::rethrow_exception(ev.error);

    std::optional<std::size_t> worst_index;
    for (std::size_t i = 0; i < all.size(); ++i) {
        const Evaluation& ev = results[i];
        if (ev.skipped) {
            report.skipped += 1;
            continue;
        }
        if (ev.unspecified) {
            report.unspecified += 1;
            continue;
        }
        report.examined += 1;
        auto& stats = report.per_pattern[ev.pattern];
        stats.examined += 1;
        if (!stats.worst || ev.ratio > *stats.worst) stats.worst = ev.ratio;
        if (!worst_index || ev.ratio > results[*worst_index].ratio) worst_index = i;
        // Enumeration emits n ascending then lexicographically descending
        // sequences, so instance_less order needs an explicit tie check.
        else if (ev.ratio == results[*worst_index].ratio) {
            std::vector<Rational> a, b;
            for (const long long p : all[i]) a.emplace_back(p);
            for (const long long p : all[*worst_index]) b.emplace_back(p);
            if (instance_less(build_instance(domain.machines, a),
                              build_instance(domain.machines, b)))
                worst_index = i;
        }
    }
    if (!worst_index) {
        if (report.skipped > 0)
            throw SearchBudgetExceeded(
                "every scoreable instance exceeded the exact-optimum budget");
        throw UnspecifiedBranch(
            "the policy has no rule on any instance of the domain");
    }

    std::vector<Rational> sizes;
    for (const long long p : all[*worst_index]) sizes.emplace_back(p);
    const Instance witness = build_instance(domain.machines, std::move(sizes));
    report.worst = results[*worst_index].ratio;
    report.witness = witness;
    report.witness_outcome = run_online(witness, policy);
    report.witness_reference = kind == RatioKind::VsLbFormula
                                   ? opt_lower_bound(witness)
                                   : opt_exact(witness, node_budget).exact;
    report.verdict = report.worst <= claimed ? Verdict::ConfirmedOnDomain
                                             : Verdict::CounterexampleFound;
    return report;
}

} // namespace semisched
