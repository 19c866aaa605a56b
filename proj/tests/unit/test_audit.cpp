#include <doctest.h>

#include "semisched/audit.hpp"
#include "semisched/json_io.hpp"

using namespace semisched;

namespace {

EnumerationDomain unit_i1(int machines, int n_min, int n_max) {
    EnumerationDomain domain;
    domain.machines = machines;
    domain.n_min = n_min;
    domain.n_max = n_max;
    domain.filter = PatternFilter::I1Only;
    return domain;
}

} // namespace

TEST_CASE("2ds over equal-size sequences is 4/3-competitive, tight at n=3") {
    const auto report = audit_upper_bound(PolicyKind::TwoDS, unit_i1(2, 3, 10),
                                          RatioKind::VsLbFormula, Rational(4, 3));
    CHECK(report.verdict == Verdict::ConfirmedOnDomain);
    CHECK(report.worst == Rational(4, 3));
    REQUIRE(report.witness.has_value());
    CHECK(report.witness->jobs() == 3);
    CHECK(report.witness->sizes() ==
          std::vector<Rational>{Rational(1), Rational(1), Rational(1)});
    CHECK(report.examined == 8);
    CHECK(report.per_pattern.at(PatternClass::I1).examined == 8);
}

TEST_CASE("3ds over equal-size sequences is 3/2-competitive, tight at n=4") {
    const auto report = audit_upper_bound(PolicyKind::ThreeDS, unit_i1(3, 4, 10),
                                          RatioKind::VsLbFormula, Rational(3, 2));
    CHECK(report.verdict == Verdict::ConfirmedOnDomain);
    CHECK(report.worst == Rational(3, 2));
    REQUIRE(report.witness.has_value());
    CHECK(report.witness->jobs() == 4);
}

TEST_CASE("2ds against the exact optimum exceeds 4/3 on strict descents") {
    EnumerationDomain domain;
    domain.machines = 2;
    domain.n_min = 4;
    domain.n_max = 4;
    domain.sum_max = 100;
    domain.size_cap = 30;
    domain.filter = PatternFilter::I2Only;
    const auto report = audit_upper_bound(PolicyKind::TwoDS, domain,
                                          RatioKind::VsExact, Rational(4, 3));
    CHECK(report.verdict == Verdict::CounterexampleFound);
    CHECK(report.worst >= Rational(70, 51));
    REQUIRE(report.witness.has_value());

    // the witness reproduces its reported ratio from scratch
    const auto replay = run_online(*report.witness, PolicyKind::TwoDS);
    const auto exact = opt_exact_enumerate(*report.witness);
    CHECK(replay.makespan / exact.exact == report.worst);
    CHECK(*report.witness_reference == exact.exact);

    // the flagged instance from the sweep is in-domain and scores 70/51
    const Instance flagged = build_instance(
        2, {Rational(30), Rational(25), Rational(24), Rational(21)});
    const auto flagged_out = run_online(flagged, PolicyKind::TwoDS);
    CHECK(flagged_out.makespan == Rational(70));
    CHECK(opt_exact_enumerate(flagged).exact == Rational(51));
}

TEST_CASE("audit reports are identical for any worker count") {
    EnumerationDomain domain;
    domain.machines = 2;
    domain.n_min = 1;
    domain.n_max = 5;
    domain.sum_max = 16;
    domain.filter = PatternFilter::AnyDecr;
    const auto one = audit_upper_bound(PolicyKind::TwoDS, domain,
                                       RatioKind::VsExact, Rational(4, 3), 1);
    const auto eight = audit_upper_bound(PolicyKind::TwoDS, domain,
                                         RatioKind::VsExact, Rational(4, 3), 8);
    CHECK(audit_report_json(one).dump(2) == audit_report_json(eight).dump(2));
}

TEST_CASE("budget-starved instances are skipped and counted") {
    EnumerationDomain domain;
    domain.machines = 2;
    domain.n_min = 1;
    domain.n_max = 4;
    domain.sum_max = 8;
    domain.filter = PatternFilter::AnyDecr;
    const auto report = audit_upper_bound(PolicyKind::TwoDS, domain,
                                          RatioKind::VsExact, Rational(4, 3), 1,
                                          /*node_budget=*/1);
    CHECK(report.skipped > 0);
    CHECK(report.examined > 0);  // single-job instances fit any budget
    long long per_pattern_total = 0;
    for (const auto& [pattern, stats] : report.per_pattern)
        per_pattern_total += stats.examined;
    CHECK(per_pattern_total == report.examined);
}

TEST_CASE("sd audits count instances outside its branches") {
    // Some sequences ([1,1,1,1,1,1] among them) put l_1 + p_2 below every
    // second-job window, so sd has no rule; such instances must be counted,
    // not crash the sweep (also under threads).
    EnumerationDomain domain;
    domain.machines = 2;
    domain.n_min = 2;
    domain.n_max = 6;
    domain.sum_max = 8;
    domain.filter = PatternFilter::AnyDecr;
    const auto report = audit_upper_bound(PolicyKind::SD, domain,
                                          RatioKind::VsLbFormula, Rational(10, 9), 4);
    CHECK(report.unspecified > 0);
    CHECK(report.examined > 0);
    CHECK(report.witness.has_value());
    const auto serial = audit_upper_bound(PolicyKind::SD, domain,
                                          RatioKind::VsLbFormula, Rational(10, 9), 1);
    CHECK(audit_report_json(serial).dump(2) == audit_report_json(report).dump(2));
}

TEST_CASE("audits reject impossible setups") {
    EnumerationDomain empty;
    empty.machines = 2;
    empty.n_min = 3;
    empty.n_max = 3;
    empty.sum_max = 3;
    empty.filter = PatternFilter::I2Only;  // no strict descent sums to <= 3
    CHECK_THROWS_AS(audit_upper_bound(PolicyKind::TwoDS, empty,
                                      RatioKind::VsLbFormula, Rational(1)),
                    InvalidDomain);

    CHECK_THROWS_AS(audit_upper_bound(PolicyKind::TwoDS, unit_i1(3, 3, 4),
                                      RatioKind::VsLbFormula, Rational(1)),
                    MachineCountMismatch);
}

TEST_CASE("per-pattern worsts split the domain") {
    EnumerationDomain domain;
    domain.machines = 2;
    domain.n_min = 2;
    domain.n_max = 4;
    domain.sum_max = 10;
    domain.filter = PatternFilter::AnyDecr;
    const auto report = audit_upper_bound(PolicyKind::TwoDS, domain,
                                          RatioKind::VsLbFormula, Rational(4, 3));
    Rational overall(0);
    for (const auto& [pattern, stats] : report.per_pattern) {
        REQUIRE(stats.worst.has_value());
        if (*stats.worst > overall) overall = *stats.worst;
    }
    CHECK(overall == report.worst);
}
