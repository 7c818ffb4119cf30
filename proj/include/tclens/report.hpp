#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tclens/diagnostics.hpp"
#include "tclens/ensemble.hpp"
#include "tclens/loss.hpp"

namespace tclens {

/// Tolerance of the decomposition self-audit every report runs on itself.
inline constexpr double kDecompositionTolerance = 1e-12;

struct UnitRow {
    std::string unit_id;
    double prob_above = 0.0;
    std::optional<double> estimate;  // absent when the input carried bare labels
    bool label_above = false;
    double risk = 0.0;
};

struct ReportAggregates {
    double expected_tcl = 0.0;            // posterior expected weighted loss
    double expected_tcl_unweighted = 0.0; // posterior expected unweighted loss
    std::optional<double> tpr;            // nullopt => undefined (zero denominator)
    std::optional<double> tnr;
    std::optional<double> fpr;
    std::optional<double> fnr;
    double mass_above = 0.0;
    double mass_below = 0.0;
    std::optional<DecompositionSides> decomposition;  // absent when a rate is undefined
};

/// Label agreement between the supplied estimate and the exceedance rule
/// D(alpha = p, C), plus both achieved risks.
struct RichardsonComparison {
    double alpha = 0.0;
    std::size_t disagreements = 0;
    double risk_richardson = 0.0;
    double risk_estimate = 0.0;
};

/// Machine-readable result of one command run: config echo, one row per
/// unit, recomputable aggregates and the decomposition self-audit.
struct ReportDocument {
    std::string command;
    DecisionConfig config;
    std::string input_path;
    std::string input_digest;
    std::optional<std::uint64_t> seed;
    std::vector<UnitRow> units;
    ReportAggregates aggregates;
    std::optional<RichardsonComparison> richardson;

    /// True when the decomposition sides agree within tolerance (vacuously
    /// true when the rates are undefined).
    bool self_audit_ok() const;
};

/// Assembles rows and aggregates for `est` against `m`. `with_estimates`
/// controls whether the estimate column is emitted; `with_richardson` adds
/// the D(alpha = p, C) comparison.
ReportDocument build_report(const std::string& command,
                            const DrawMatrix& m,
                            const ClassificationEstimate& est,
                            const DecisionConfig& cfg,
                            bool with_estimates,
                            bool with_richardson);

std::string report_to_json(const ReportDocument& doc);
std::string report_to_csv(const ReportDocument& doc);
std::string report_to_table(const ReportDocument& doc, bool color);

}  // namespace tclens
