#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "semisched/json_io.hpp"

namespace {

using namespace semisched;

// Exit codes: 0 success, 2 parse/validation, 3 machine-count mismatch,
// 4 search budget exceeded, 5 unspecified policy branch.
enum ExitCode {
    kOk = 0,
    kValidation = 2,
    kMachineMismatch = 3,
    kBudget = 4,
    kUnspecified = 5,
};

std::uint64_t node_budget_from_env() {
    if (const char* env = std::getenv("SEMISCHED_NODE_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        throw ParseError("SEMISCHED_NODE_BUDGET must be a positive integer, got '" +
                         std::string(env) + "'");
    }
    return kDefaultNodeBudget;
}

int cmd_run(const std::string& algo, const std::string& input,
            const std::string& ratio, bool trace) {
    const PolicyKind policy = parse_policy(algo);
    const Instance instance = parse_instance_file(input);
    const ScheduleOutcome outcome = policy == PolicyKind::LPT
                                        ? lpt_offline(instance)
                                        : run_online(instance, policy);
    const bool want_lb = ratio == "lb" || ratio == "both";
    const bool want_exact = ratio == "exact" || ratio == "both";
    std::optional<OptReference> ref;
    if (want_exact) ref = opt_exact(instance, node_budget_from_env());
    std::cout << run_report(outcome, policy, ref, want_lb, want_exact, trace).dump(2)
              << "\n";
    return kOk;
}

int cmd_lowerbound(const std::string& family, const std::string& k_text,
                   const std::string& ratio) {
    std::optional<Rational> k;
    AdversaryTree tree;
    if (family == "t1" || family == "t2") {
        if (k_text.empty())
            throw ParseError("--k is required for family " + family);
        k = Rational::parse(k_text);
        tree = family == "t1" ? theorem1_tree(*k) : theorem2_tree(*k);
    } else {
        if (!k_text.empty())
            throw ParseError("--k is not accepted for family t6");
        tree = theorem6_tree();
    }
    const RatioKind kind = ratio == "lb" ? RatioKind::VsLbFormula : RatioKind::VsExact;
    const MinimaxResult result = minimax_solve(tree, kind, node_budget_from_env());
    std::cout << lowerbound_report(family, k, tree, kind, result).dump(2) << "\n";
    return kOk;
}

int cmd_audit(const std::string& algo, int machines, int n_min, int n_max,
              std::optional<long long> sum_max, std::optional<long long> size_cap,
              std::optional<long long> size_min, const std::string& last_min_frac,
              const std::string& pattern, const std::string& ratio,
              const std::string& claimed, int parallel) {
    EnumerationDomain domain;
    domain.machines = machines;
    domain.n_min = n_min;
    domain.n_max = n_max;
    domain.sum_max = sum_max;
    domain.size_cap = size_cap;
    domain.size_min = size_min;
    if (!last_min_frac.empty())
        domain.last_min_fraction = Rational::parse(last_min_frac);
    domain.filter = parse_pattern_filter(pattern);
    const RatioKind kind = ratio == "lb" ? RatioKind::VsLbFormula : RatioKind::VsExact;
    const AuditReport report =
        audit_upper_bound(parse_policy(algo), domain, kind, Rational::parse(claimed),
                          parallel, node_budget_from_env());
    std::cout << audit_report_json(report).dump(2) << "\n";
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Semi-online makespan scheduling: policies, exact oracle, "
                 "adversary families and bound audits"};
    app.require_subcommand(1);

    std::string algo, input, family, k_text, claimed, last_min_frac;
    std::string ratio = "lb";
    std::string pattern = "decr";
    bool trace = false;
    int machines = 2, n_min = 1, n_max = 1, parallel = 1;
    std::optional<long long> sum_max, size_cap, size_min;

    auto* run = app.add_subcommand("run", "Run a policy on a JSON instance file");
    run->add_option("--algo", algo, "Policy: 2ds|i2ds|3ds|i3ds|sd|ls|lpt")->required();
    run->add_option("--input", input, "Instance file path")->required();
    run->add_option("--ratio", ratio, "Denominator: lb|exact|both")
        ->check(CLI::IsMember({"lb", "exact", "both"}));
    run->add_flag("--trace", trace, "Include the step-by-step trace");

    auto* lower = app.add_subcommand("lowerbound", "Solve an adversary family");
    lower->add_option("--family", family, "Family: t1|t2|t6")
        ->required()
        ->check(CLI::IsMember({"t1", "t2", "t6"}));
    lower->add_option("--k", k_text, "Family Sum parameter (t1, t2)");
    lower->add_option("--ratio", ratio, "Denominator: lb|exact")
        ->check(CLI::IsMember({"lb", "exact"}));

    auto* audit = app.add_subcommand("audit", "Sweep a policy over a domain");
    audit->add_option("--algo", algo, "Policy: 2ds|i2ds|3ds|i3ds|sd|ls|lpt")->required();
    audit->add_option("--machines", machines, "Machine count")->required();
    audit->add_option("--n-min", n_min, "Smallest job count")->required();
    audit->add_option("--n-max", n_max, "Largest job count")->required();
    audit->add_option("--sum-max", sum_max, "Largest size total (optional for i1)");
    audit->add_option("--size-cap", size_cap, "Largest single size (optional)");
    audit->add_option("--size-min", size_min, "Smallest admitted size (optional)");
    audit->add_option("--last-min-frac", last_min_frac,
                      "Require p_n >= FRAC * Sum, e.g. 1/4 (optional)");
    audit->add_option("--pattern", pattern, "Filter: i1|i2|decr")
        ->check(CLI::IsMember({"i1", "i2", "decr"}));
    audit->add_option("--ratio", ratio, "Denominator: lb|exact")
        ->check(CLI::IsMember({"lb", "exact"}));
    audit->add_option("--claimed", claimed, "Claimed bound, e.g. 4/3")->required();
    audit->add_option("--parallel", parallel, "Worker threads (wall-clock only)")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
        if (run->parsed()) return cmd_run(algo, input, ratio, trace);
        if (lower->parsed()) return cmd_lowerbound(family, k_text, ratio);
        return cmd_audit(algo, machines, n_min, n_max, sum_max, size_cap, size_min,
                         last_min_frac, pattern, ratio, claimed, parallel);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kValidation;
    } catch (const MachineCountMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kMachineMismatch;
    } catch (const SearchBudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBudget;
    } catch (const UnspecifiedBranch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUnspecified;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kValidation;
    }
}
