#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "qtcss/errors.hpp"

namespace qtcss::harness {

enum class ScenarioKind {
    classical_demo,
    classical_attack,
    quantum_lifecycle,
    leakage_sweep,
    hiding_test,
};

const char* scenario_kind_name(ScenarioKind kind) noexcept;

/// A validated scenario: kind, seed, and fully-defaulted parameters. The
/// seed pins every random choice, so a (scenario, seed) pair reproduces its
/// report byte-identically.
struct Scenario {
    ScenarioKind kind;
    std::uint64_t seed;
    nlohmann::json params;
};

/// Parses and validates a scenario document
///   { "kind": "...", "seed": <u64>, "params": { ... } }
/// filling in per-kind defaults. Unknown kinds, unknown parameter names and
/// out-of-range values raise Errc::invalid_scenario with a field-level
/// message.
Scenario parse_scenario(const nlohmann::json& document);
Scenario parse_scenario_text(const std::string& text);

struct RunReport {
    nlohmann::json document; // {scenario, seed, steps[], verdicts{}, tables{}}
    bool all_passed;
};

/// Executes the scenario against the library and collects the report.
/// Verdicts record whether each demonstrated property held; the
/// classical-attack scenario passes when the attack succeeds, since the
/// succeeding attack is the demonstrated property.
RunReport run_scenario(const Scenario& scenario);

enum class ReportFormat { text, structured };

/// Renders the report. Text is a human narrative with 12-significant-digit
/// numbers; structured is a stable machine-readable JSON document with
/// fields (scenario, seed, steps[], verdicts{}, tables{}).
std::string emit_report(const RunReport& report, ReportFormat format);

} // namespace qtcss::harness
