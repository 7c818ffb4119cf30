#pragma once

#include "tclens/ensemble.hpp"

namespace tclens {

/// Posterior classification rates of an estimate at a fixed cut-off,
/// together with the posterior masses and the expected unweighted loss they
/// decompose. fpr/fnr are stored as 1 - tnr and 1 - tpr exactly as computed;
/// mass_above and mass_below come from the complementary integer draw counts
/// and sum to the unit count exactly.
struct DiagnosticsReport {
    double tpr = 0.0;
    double tnr = 0.0;
    double fpr = 0.0;
    double fnr = 0.0;
    double mass_above = 0.0;
    double mass_below = 0.0;
    double expected_tcl = 0.0;
};

/// Both sides of the identity
///   E[TCL | y] = FPR * mass_below / n + FNR * mass_above / n.
struct DecompositionSides {
    double lhs = 0.0;
    double rhs = 0.0;
};

/// Posterior true positive rate: the above-threshold posterior mass captured
/// by the above-labelled units over the total above-threshold mass.
/// Throws std::domain_error("TPR undefined...") when no unit carries mass
/// above the threshold.
double posterior_tpr(const DrawMatrix& m, const ClassificationEstimate& est, double threshold);

/// Posterior true negative rate, the at-or-below mirror of posterior_tpr.
/// Throws std::domain_error("TNR undefined...") on zero below-mass.
double posterior_tnr(const DrawMatrix& m, const ClassificationEstimate& est, double threshold);

/// Evaluates both sides of the loss/rate decomposition so callers can audit
/// |lhs - rhs|. Undefined rates propagate as exceptions.
DecompositionSides decomposition_check(const DrawMatrix& m,
                                       const ClassificationEstimate& est,
                                       double threshold);

/// Full rate report. Throws if either rate is undefined.
DiagnosticsReport diagnostics_report(const DrawMatrix& m,
                                     const ClassificationEstimate& est,
                                     double threshold);

/// Exceedance-probability classifier D(alpha, C): label unit i above iff
/// P[theta_i > C | y] > alpha. Estimates carry the (1-alpha)-quantiles.
/// Throws std::invalid_argument for alpha outside [0,1].
ClassificationEstimate richardson_rule(const DrawMatrix& m, double threshold, double alpha);

}  // namespace tclens
