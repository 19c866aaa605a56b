#include <doctest.h>

#include "semisched/enumerate.hpp"
#include "semisched/oracle.hpp"
#include "semisched/policies.hpp"

using namespace semisched;

namespace {

std::vector<Rational> sizes_of(std::initializer_list<long long> values) {
    std::vector<Rational> out;
    for (const long long v : values) out.emplace_back(v);
    return out;
}

} // namespace

TEST_CASE("opt_lower_bound is max of average and largest") {
    CHECK(opt_lower_bound(build_instance(3, sizes_of({6, 5, 4, 3, 2}))) ==
          Rational(20, 3));
    CHECK(opt_lower_bound(build_instance(2, sizes_of({12, 1}))) == Rational(12));
    CHECK(opt_lower_bound(build_instance(2, sizes_of({3, 2, 1}))) == Rational(3));
}

TEST_CASE("opt_exact finds the optimal partition") {
    const Instance inst = build_instance(2, sizes_of({30, 25, 24, 21}));
    const auto ref = opt_exact(inst);
    CHECK(ref.exact == Rational(51));
    // witness reproduces the optimum
    const auto replay = apply_assignment(inst, ref.exact_assignment);
    CHECK(replay.makespan == Rational(51));
    // the optimal split pairs the largest with the smallest
    const auto on_first = ref.exact_assignment[0];
    CHECK(ref.exact_assignment[3] == on_first);
    CHECK(ref.exact_assignment[1] != on_first);
    CHECK(ref.exact_assignment[2] != on_first);

    CHECK(opt_exact(build_instance(3, sizes_of({6, 5, 4, 3, 2}))).exact == Rational(7));
    CHECK(opt_exact(build_instance(2, sizes_of({5}))).exact == Rational(5));
}

TEST_CASE("branch and bound matches plain enumeration on a small sweep") {
    EnumerationDomain domain;
    domain.n_min = 1;
    domain.n_max = 5;
    domain.sum_max = 14;
    domain.filter = PatternFilter::AnyDecr;
    for (const int m : {2, 3}) {
        domain.machines = m;
        for_each_instance(domain, [&](const Instance& inst) {
            const auto fast = opt_exact(inst);
            const auto slow = opt_exact_enumerate(inst);
            CHECK(fast.exact == slow.exact);
            CHECK(fast.lb_formula <= fast.exact);
            CHECK(apply_assignment(inst, fast.exact_assignment).makespan ==
                  fast.exact);
            CHECK(apply_assignment(inst, slow.exact_assignment).makespan ==
                  slow.exact);
        });
    }
}

TEST_CASE("oracle sandwich under every policy") {
    EnumerationDomain domain;
    domain.n_min = 1;
    domain.n_max = 5;
    domain.sum_max = 12;
    domain.filter = PatternFilter::AnyDecr;
    const struct {
        PolicyKind policy;
        int machines;
    } setups[] = {{PolicyKind::TwoDS, 2}, {PolicyKind::I2DS, 2},
                  {PolicyKind::ThreeDS, 3}, {PolicyKind::I3DS, 3},
                  {PolicyKind::LS, 2}, {PolicyKind::LPT, 3}};
    for (const auto& setup : setups) {
        domain.machines = setup.machines;
        for_each_instance(domain, [&](const Instance& inst) {
            const auto ref = opt_exact(inst);
            const auto out = run_online(inst, setup.policy);
            CHECK(ref.lb_formula <= ref.exact);
            CHECK(ref.exact <= out.makespan);
        });
    }
}

TEST_CASE("search budget is an error, not an approximation") {
    const Instance inst = build_instance(2, sizes_of({9, 8, 7, 6, 5, 4}));
    CHECK_THROWS_AS(opt_exact(inst, 2), SearchBudgetExceeded);
    CHECK_NOTHROW(opt_exact(inst));
}

TEST_CASE("competitive ratios against both denominators") {
    const Instance sigma3 = build_instance(3, sizes_of({6, 5, 4, 3, 2}));
    const auto ref = opt_exact(sigma3);
    const auto out = run_online(sigma3, PolicyKind::ThreeDS);
    CHECK(competitive_ratio(out, ref, RatioKind::VsLbFormula) == Rational(21, 20));
    CHECK(ref.exact == Rational(7));
    CHECK(competitive_ratio(out, ref, RatioKind::VsExact) == Rational(1));

    // replaying the exact witness scores 1 against the exact denominator
    const auto witness_outcome = apply_assignment(sigma3, ref.exact_assignment);
    CHECK(competitive_ratio(witness_outcome, ref, RatioKind::VsExact) == Rational(1));

    const Instance units = build_instance(2, sizes_of({1, 1, 1}));
    const auto units_ref = opt_exact(units);
    const auto units_out = run_online(units, PolicyKind::TwoDS);
    CHECK(competitive_ratio(units_out, units_ref, RatioKind::VsLbFormula) ==
          Rational(4, 3));
    CHECK(units_ref.exact == Rational(2));
    CHECK(competitive_ratio(units_out, units_ref, RatioKind::VsExact) == Rational(1));
}

TEST_CASE("ratio computation rejects mixed instances") {
    const auto ref = opt_exact(build_instance(2, sizes_of({5, 4, 3})));
    const auto out = run_online(build_instance(2, sizes_of({5, 4, 2})), PolicyKind::TwoDS);
    CHECK_THROWS_AS(competitive_ratio(out, ref, RatioKind::VsExact),
                    MismatchedInstance);
}
