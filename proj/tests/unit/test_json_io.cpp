#include <doctest.h>

#include "semisched/json_io.hpp"

using namespace semisched;
using nlohmann::json;

TEST_CASE("instance files parse with fraction strings and numbers") {
    const auto doc = json::parse(R"({
        "machines": 3,
        "sizes": ["6", "5", "4", "3", "2"],
        "declared_sum": "20"
    })");
    const Instance inst = parse_instance_json(doc);
    CHECK(inst.machines() == 3);
    CHECK(inst.sum() == Rational(20));
    CHECK(inst.pmax() == Rational(6));

    const auto mixed = json::parse(R"({"machines": 2, "sizes": [4, 4, 2.5, "5/2"]})");
    const Instance m = parse_instance_json(mixed);
    CHECK(m.sizes() == std::vector<Rational>{Rational(4), Rational(4),
                                             Rational(5, 2), Rational(5, 2)});
}

TEST_CASE("instance files validate") {
    CHECK_THROWS_AS(parse_instance_json(json::parse(
                        R"({"machines": 2, "sizes": ["3"], "declared_sum": "4"})")),
                    DeclaredSumMismatch);
    CHECK_THROWS_AS(parse_instance_json(json::parse(R"({"sizes": ["3"]})")),
                    ParseError);
    CHECK_THROWS_AS(parse_instance_json(json::parse(R"({"machines": 2})")),
                    ParseError);
    CHECK_THROWS_AS(parse_instance_json(json::parse(
                        R"({"machines": 2, "sizes": ["3"], "extra": 1})")),
                    ParseError);
    CHECK_THROWS_AS(parse_instance_json(json::parse(
                        R"({"machines": 2, "sizes": [true]})")),
                    ParseError);
    CHECK_THROWS_AS(parse_instance_json(json::parse(
                        R"({"machines": 2, "sizes": ["3", "5"]})")),
                    NotNonIncreasing);
    CHECK_THROWS_AS(parse_instance_json(json::parse(
                        R"({"machines": 1, "sizes": ["3"]})")),
                    MachineCountTooSmall);
}

TEST_CASE("canonical serialization is a parse fixed point") {
    const Instance inst =
        build_instance(3, {Rational(6), Rational(5), Rational(4), Rational(3), Rational(2)});
    const std::string once = serialize_instance_file(inst);
    const Instance reparsed = parse_instance_json(json::parse(once));
    CHECK(reparsed == inst);
    CHECK(serialize_instance_file(reparsed) == once);

    const Instance halves = build_instance(2, {Rational(5, 2), Rational(5, 2)});
    const std::string h = serialize_instance_file(halves);
    CHECK(parse_instance_json(json::parse(h)) == halves);
    CHECK(serialize_instance_file(parse_instance_json(json::parse(h))) == h);
}

TEST_CASE("run reports carry exact fraction strings") {
    const Instance sigma3 =
        build_instance(3, {Rational(6), Rational(5), Rational(4), Rational(3), Rational(2)});
    const auto outcome = run_online(sigma3, PolicyKind::ThreeDS);
    const auto ref = opt_exact(sigma3);
    const json doc = run_report(outcome, PolicyKind::ThreeDS, ref, true, true, true);

    CHECK(doc["report_version"] == 1);
    CHECK(doc["policy"] == "3ds");
    CHECK(doc["makespan"] == "7");
    CHECK(doc["opt_lb_formula"] == "20/3");
    CHECK(doc["opt_exact"] == "7");
    CHECK(doc["ratios"]["vs_lb_formula"] == "21/20");
    CHECK(doc["ratios"]["vs_exact"] == "1");
    CHECK(doc["pattern"] == "I2");
    CHECK(doc["assignment"] == json::array({1, 2, 3, 3, 2}));
    CHECK(doc["loads"] == json::array({"6", "7", "7"}));
    REQUIRE(doc.contains("trace"));
    CHECK(doc["trace"].size() == 5);
    CHECK(doc["trace"][4]["loads"] == json::array({"6", "7", "7"}));
    // machine-readable numbers are strings; decimals live in *_decimal only
    CHECK(doc["makespan"].is_string());
    CHECK(doc["ratios"]["vs_lb_formula"].is_string());
    CHECK(doc["ratios"]["vs_lb_formula_decimal"].is_number());
}

TEST_CASE("lowerbound reports include the principal play") {
    const auto tree = theorem2_tree(Rational(25));
    const auto solved = minimax_solve(tree, RatioKind::VsLbFormula);
    const json doc =
        lowerbound_report("t2", Rational(25), tree, RatioKind::VsLbFormula, solved);
    CHECK(doc["value"] == "26/25");
    CHECK(doc["family"] == "t2");
    CHECK(doc["k"] == "25");
    CHECK(doc["machines"] == 2);
    CHECK(doc["tree"]["leaves"].get<int>() > 0);
    CHECK(doc["principal_play"].size() == 6);  // three reveals, three placements
}

TEST_CASE("audit reports serialize the witness") {
    EnumerationDomain domain;
    domain.machines = 2;
    domain.n_min = 3;
    domain.n_max = 3;
    domain.sum_max = 6;
    domain.filter = PatternFilter::AnyDecr;
    const auto report = audit_upper_bound(PolicyKind::TwoDS, domain,
                                          RatioKind::VsLbFormula, Rational(4, 3));
    const json doc = audit_report_json(report);
    CHECK(doc["report_version"] == 1);
    CHECK(doc["policy"] == "2ds");
    CHECK(doc["worst"].is_string());
    CHECK(doc["verdict"].is_string());
    REQUIRE(doc.contains("witness"));
    CHECK(doc["witness"]["instance"]["sizes"].is_array());
    CHECK(doc["witness"]["trace"].is_array());
}
