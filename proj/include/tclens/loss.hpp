#pragma once

#include <span>

#include "tclens/ensemble.hpp"

namespace tclens {

/// Posterior expected loss of an estimate, split per unit.
/// per_unit_risk[i] is p * P[theta_i <= C | y] when unit i is labelled above
/// the cut-off and (1-p) * P[theta_i > C | y] otherwise; total_risk is their
/// mean under compensated accumulation.
struct RiskBreakdown {
    std::vector<double> per_unit_risk;
    double total_risk = 0.0;
    DecisionConfig config;
};

/// Labels picked by independent per-unit enumeration plus the risk they
/// achieve. Certifies the quantile classifier: the two risks must agree.
struct OracleLabels {
    std::vector<bool> labels;
    double risk = 0.0;
};

/// 1 iff theta <= threshold while theta_est > threshold.
int fp_indicator(double threshold, double theta, double theta_est);

/// 1 iff theta > threshold while theta_est <= threshold.
int fn_indicator(double threshold, double theta, double theta_est);

/// Weighted misclassification loss: mean over units of
/// weight * FP + (1 - weight) * FN. Always lies in [0,1].
/// Throws std::invalid_argument on length mismatch or invalid weight.
double tcl_weighted(double threshold,
                    std::span<const double> truth,
                    std::span<const double> estimate,
                    double weight);

/// Unweighted variant: mean of FP + FN, in [0,1]. Equals exactly twice the
/// weighted loss at weight 0.5.
double tcl_unweighted(double threshold,
                      std::span<const double> truth,
                      std::span<const double> estimate);

/// Posterior expected weighted loss of `est` under the empirical posterior.
/// Every unit contributes: a unit labelled above pays p times the mass at or
/// below the cut-off even when that mass is small.
/// Throws std::invalid_argument if unit ids of `m` and `est` differ.
RiskBreakdown posterior_risk(const DrawMatrix& m,
                             const ClassificationEstimate& est,
                             const DecisionConfig& cfg);

/// Risk-optimal estimate: the per-unit type-1 (1-p)-quantiles, labelled by
/// comparison with the cut-off. weight 0.5 gives the posterior medians;
/// weight 1 the per-unit minima; weight 0 the maxima.
ClassificationEstimate optimal_estimate(const DrawMatrix& m, const DecisionConfig& cfg);

/// Probability-rule classifier: label unit i above iff
/// P[theta_i > C | y] > p. Estimates are filled with the (1-p)-quantiles so
/// reports stay comparable with optimal_estimate, whose labels this rule
/// reproduces.
ClassificationEstimate classify_by_probability(const DrawMatrix& m, const DecisionConfig& cfg);

/// Independent certification: per unit, evaluate both candidate risks
/// {p * P[theta<=C], (1-p) * P[theta>C]} and keep the smaller (ties side
/// with below). Returns the labels and the minimal total risk.
OracleLabels oracle_best_labels(const DrawMatrix& m, const DecisionConfig& cfg);

/// Posterior expected unweighted loss of a labelling:
/// mean over units of P[theta<=C] for above-labelled units and P[theta>C]
/// for below-labelled ones.
double posterior_unweighted_tcl(const DrawMatrix& m,
                                const ClassificationEstimate& est,
                                double threshold);

}  // namespace tclens
