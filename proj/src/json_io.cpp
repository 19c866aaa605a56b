#include "semisched/json_io.hpp"

#include <fstream>
#include <sstream>

namespace semisched {

using nlohmann::json;

namespace {

Rational size_from_json(const json& value) {
    if (value.is_string()) return Rational::parse(value.get<std::string>());
    if (value.is_number_integer()) return Rational(value.get<long long>());
    if (value.is_number_float()) {
        // Shortest round-trip decimal of the stored double, read exactly.
        // Fraction strings are the recommended lossless form.
        return Rational::parse(value.dump());
    }
    throw ParseError("size entries must be numbers or fraction strings, got " +
                     value.dump());
}

json loads_to_json(const Loads& loads) {
    json arr = json::array();
    for (const auto& l : loads) arr.push_back(l.str());
    return arr;
}

} // namespace

Instance parse_instance_json(const json& doc) {
    if (!doc.is_object()) throw ParseError("instance file must be a JSON object");
    if (!doc.contains("machines") || !doc["machines"].is_number_integer())
        throw ParseError("instance file needs an integer \"machines\" field");
    if (!doc.contains("sizes") || !doc["sizes"].is_array())
        throw ParseError("instance file needs a \"sizes\" array");
    const int machines = doc["machines"].get<int>();
    std::vector<Rational> sizes;
    sizes.reserve(doc["sizes"].size());
    for (const auto& entry : doc["sizes"]) sizes.push_back(size_from_json(entry));
    Instance instance = build_instance(machines, std::move(sizes));
    if (doc.contains("declared_sum")) {
        const Rational declared = size_from_json(doc["declared_sum"]);
        if (declared != instance.sum())
            throw DeclaredSumMismatch("declared_sum " + declared.str() +
                                      " does not equal the size total " +
                                      instance.sum().str());
    }
    for (const auto& [key, value] : doc.items()) {
        (void)value;
        if (key != "machines" && key != "sizes" && key != "declared_sum")
            throw ParseError("unknown instance file field \"" + key + "\"");
    }
    return instance;
}

Instance parse_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open instance file '" + path + "'");
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw ParseError("invalid JSON in '" + path + "': " + e.what());
    }
    return parse_instance_json(doc);
}

std::string serialize_instance_file(const Instance& instance) {
    json doc;
    doc["machines"] = instance.machines();
    json sizes = json::array();
    for (const auto& p : instance.sizes()) sizes.push_back(p.str());
    doc["sizes"] = std::move(sizes);
    doc["declared_sum"] = instance.sum().str();
    return doc.dump(2) + "\n";
}

json instance_to_json(const Instance& instance) {
    json doc;
    doc["machines"] = instance.machines();
    json sizes = json::array();
    for (const auto& p : instance.sizes()) sizes.push_back(p.str());
    doc["sizes"] = std::move(sizes);
    doc["sum"] = instance.sum().str();
    doc["pmax"] = instance.pmax().str();
    doc["pattern"] = to_string(instance.pattern());
    return doc;
}

json trace_to_json(const std::vector<TraceStep>& trace) {
    json arr = json::array();
    for (const auto& step : trace) {
        json rec;
        rec["job"] = step.job;
        rec["size"] = step.size.str();
        rec["machine"] = step.machine;
        rec["loads"] = loads_to_json(step.loads_after);
        arr.push_back(std::move(rec));
    }
    return arr;
}

json run_report(const ScheduleOutcome& outcome, PolicyKind policy,
                const std::optional<OptReference>& ref, bool want_lb_ratio,
                bool want_exact_ratio, bool include_trace) {
    json doc;
    doc["report_version"] = kReportVersion;
    doc["policy"] = to_string(policy);
    doc["instance"] = instance_to_json(outcome.instance);
    doc["pattern"] = to_string(outcome.instance.pattern());
    doc["assignment"] = outcome.assignment;
    doc["loads"] = loads_to_json(outcome.loads);
    doc["makespan"] = outcome.makespan.str();
    const Rational lb = opt_lower_bound(outcome.instance);
    doc["opt_lb_formula"] = lb.str();
    json ratios;
    if (want_lb_ratio) {
        const Rational r = outcome.makespan / lb;
        ratios["vs_lb_formula"] = r.str();
        ratios["vs_lb_formula_decimal"] = r.to_double();
    }
    if (want_exact_ratio) {
        const Rational r = outcome.makespan / ref->exact;
        doc["opt_exact"] = ref->exact.str();
        doc["opt_exact_assignment"] = ref->exact_assignment;
        ratios["vs_exact"] = r.str();
        ratios["vs_exact_decimal"] = r.to_double();
    }
    doc["ratios"] = std::move(ratios);
    if (include_trace) doc["trace"] = trace_to_json(outcome.trace);
    return doc;
}

namespace {

json play_to_json(const std::vector<PlayStep>& play) {
    json arr = json::array();
    for (const auto& step : play) {
        json rec;
        if (step.kind == PlayStep::Kind::Reveal) {
            rec["reveal"] = step.size.str();
        } else {
            rec["place"] = step.size.str();
            rec["machine"] = step.machine;
        }
        arr.push_back(std::move(rec));
    }
    return arr;
}

struct TreeStats {
    int leaves = 0;
    int adversary_moves = 0;
    int algorithm_moves = 0;
};

void count_nodes(const AdversaryTree::NodePtr& node, TreeStats& stats) {
    if (const auto* adv =
            std::get_if<AdversaryTree::AdversaryMove>(&node->move)) {
        stats.adversary_moves += 1;
        for (const auto& option : adv->options) count_nodes(option.child, stats);
        return;
    }
    if (const auto* alg =
            std::get_if<AdversaryTree::AlgorithmMove>(&node->move)) {
        stats.algorithm_moves += 1;
        for (const auto& child : alg->children) count_nodes(child, stats);
        return;
    }
    stats.leaves += 1;
}

} // namespace

json lowerbound_report(const std::string& family, const std::optional<Rational>& k,
                       const AdversaryTree& tree, RatioKind kind,
                       const MinimaxResult& result) {
    json doc;
    doc["report_version"] = kReportVersion;
    doc["family"] = family;
    if (k) doc["k"] = k->str();
    doc["machines"] = tree.machines;
    doc["sum"] = tree.total.str();
    doc["ratio_kind"] = to_string(kind);
    doc["value"] = result.value.str();
    doc["value_decimal"] = result.value.to_double();
    doc["principal_play"] = play_to_json(result.principal_play);
    TreeStats stats;
    count_nodes(tree.root, stats);
    doc["tree"] = {{"leaves", stats.leaves},
                   {"adversary_moves", stats.adversary_moves},
                   {"algorithm_moves", stats.algorithm_moves}};
    return doc;
}

json audit_report_json(const AuditReport& report) {
    json doc;
    doc["report_version"] = kReportVersion;
    doc["policy"] = to_string(report.policy);
    doc["domain"] = report.domain.describe();
    doc["ratio_kind"] = to_string(report.kind);
    doc["claimed"] = report.claimed.str();
    doc["examined"] = report.examined;
    doc["skipped"] = report.skipped;
    doc["unspecified"] = report.unspecified;
    json patterns;
    for (const auto& [pattern, stats] : report.per_pattern) {
        json entry;
        entry["examined"] = stats.examined;
        if (stats.worst) {
            entry["worst"] = stats.worst->str();
            entry["worst_decimal"] = stats.worst->to_double();
        }
        patterns[to_string(pattern)] = std::move(entry);
    }
    doc["per_pattern"] = std::move(patterns);
    doc["worst"] = report.worst.str();
    doc["worst_decimal"] = report.worst.to_double();
    if (report.witness) {
        json witness;
        witness["instance"] = instance_to_json(*report.witness);
        witness["assignment"] = report.witness_outcome->assignment;
        witness["loads"] = loads_to_json(report.witness_outcome->loads);
        witness["makespan"] = report.witness_outcome->makespan.str();
        witness["reference"] = report.witness_reference->str();
        witness["trace"] = trace_to_json(report.witness_outcome->trace);
        doc["witness"] = std::move(witness);
    }
    doc["verdict"] = to_string(report.verdict);
    return doc;
}

} // namespace semisched
