#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "semisched/adversary.hpp"
#include "semisched/audit.hpp"
#include "semisched/oracle.hpp"
#include "semisched/policies.hpp"

namespace semisched {

/// Parses the documented instance file: {"machines": m, "sizes": [...],
/// "declared_sum": "20"}. Sizes may be integers, finite decimals or "a/b"
/// fraction strings. declared_sum, when present, must equal the size total
/// exactly (DeclaredSumMismatch otherwise).
Instance parse_instance_json(const nlohmann::json& doc);
Instance parse_instance_file(const std::string& path);

/// Canonical serialized form; parse followed by serialize is a fixed point
/// byte for byte.
std::string serialize_instance_file(const Instance& instance);

nlohmann::json instance_to_json(const Instance& instance);
nlohmann::json trace_to_json(const std::vector<TraceStep>& trace);

/// The `run` report. Exact values serialize as canonical fraction strings;
/// the *_decimal fields are an additive human-readable column.
nlohmann::json run_report(const ScheduleOutcome& outcome, PolicyKind policy,
                          const std::optional<OptReference>& ref,
                          bool want_lb_ratio, bool want_exact_ratio,
                          bool include_trace);

/// The `lowerbound` report for a solved family.
nlohmann::json lowerbound_report(const std::string& family,
                                 const std::optional<Rational>& k,
                                 const AdversaryTree& tree, RatioKind kind,
                                 const MinimaxResult& result);

/// The `audit` report.
nlohmann::json audit_report_json(const AuditReport& report);

inline constexpr int kReportVersion = 1;

} // namespace semisched
