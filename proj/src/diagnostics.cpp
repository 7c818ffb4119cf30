#include "tclens/diagnostics.hpp"

#include <cmath>
#include <stdexcept>

#include "tclens/loss.hpp"

namespace tclens {

namespace {

void require_aligned(const DrawMatrix& m, const ClassificationEstimate& est) {
    if (est.unit_ids != m.unit_ids()) {
        throw std::invalid_argument("unit_id mismatch between ensemble and estimate");
    }
    if (est.labels.size() != m.unit_count()) {
        throw std::invalid_argument("estimate label count does not match unit count");
    }
}

// All units share the same S, so every rate is a ratio of pooled integer
// draw counts. Keeping the counts exact makes the degenerate rates (0 and 1)
// exact and the mass columns sum to the unit count without rounding.
struct PooledCounts {
    std::size_t above = 0;           // draws above the threshold, all units
    std::size_t below = 0;           // draws at or below, all units
    std::size_t true_positive = 0;   // above-draws of above-labelled units
    std::size_t true_negative = 0;   // below-draws of below-labelled units
};

PooledCounts pool_counts(const DrawMatrix& m, const ClassificationEstimate& est,
                         double threshold) {
    if (!std::isfinite(threshold)) {
        throw std::invalid_argument("decision threshold must be finite");
    }
    PooledCounts counts;
    for (std::size_t i = 0; i < m.unit_count(); ++i) {
        const std::size_t below_count = m.count_at_or_below(i, threshold);
        const std::size_t above_count = m.draw_count() - below_count;
        counts.below += below_count;
        counts.above += above_count;
        if (est.labels[i]) {
            counts.true_positive += above_count;
        } else {
            counts.true_negative += below_count;
        }
    }
    return counts;
}

}  // namespace

double posterior_tpr(const DrawMatrix& m, const ClassificationEstimate& est, double threshold) {
    require_aligned(m, est);
    const PooledCounts counts = pool_counts(m, est, threshold);
    if (counts.above == 0) {
        throw std::domain_error("TPR undefined: no posterior mass above the threshold");
    }
    return static_cast<double>(counts.true_positive) / static_cast<double>(counts.above);
}

double posterior_tnr(const DrawMatrix& m, const ClassificationEstimate& est, double threshold) {
    require_aligned(m, est);
    const PooledCounts counts = pool_counts(m, est, threshold);
    if (counts.below == 0) {
        throw std::domain_error("TNR undefined: no posterior mass at or below the threshold");
    }
    return static_cast<double>(counts.true_negative) / static_cast<double>(counts.below);
}

DecompositionSides decomposition_check(const DrawMatrix& m,
                                       const ClassificationEstimate& est,
                                       double threshold) {
    const DiagnosticsReport report = diagnostics_report(m, est, threshold);
    DecompositionSides sides;
    sides.lhs = report.expected_tcl;
    const double n = static_cast<double>(m.unit_count());
    sides.rhs = report.fpr * report.mass_below / n + report.fnr * report.mass_above / n;
    return sides;
}

DiagnosticsReport diagnostics_report(const DrawMatrix& m,
                                     const ClassificationEstimate& est,
                                     double threshold) {
    require_aligned(m, est);
    const PooledCounts counts = pool_counts(m, est, threshold);
    if (counts.above == 0) {
        throw std::domain_error("TPR undefined: no posterior mass above the threshold");
    }
    if (counts.below == 0) {
        throw std::domain_error("TNR undefined: no posterior mass at or below the threshold");
    }
    const double s = static_cast<double>(m.draw_count());
    DiagnosticsReport report;
    report.mass_above = static_cast<double>(counts.above) / s;
    report.mass_below = static_cast<double>(counts.below) / s;
    report.tpr = static_cast<double>(counts.true_positive) / static_cast<double>(counts.above);
    report.tnr = static_cast<double>(counts.true_negative) / static_cast<double>(counts.below);
    report.fpr = 1.0 - report.tnr;
    report.fnr = 1.0 - report.tpr;
    report.expected_tcl = posterior_unweighted_tcl(m, est, threshold);
    return report;
}

ClassificationEstimate richardson_rule(const DrawMatrix& m, double threshold, double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw std::invalid_argument("alpha must lie in [0,1]");
    }
    if (!std::isfinite(threshold)) {
        throw std::invalid_argument("decision threshold must be finite");
    }
    ClassificationEstimate est;
    est.unit_ids = m.unit_ids();
    est.estimates.reserve(m.unit_count());
    est.labels.reserve(m.unit_count());
    const double denom = static_cast<double>(m.draw_count());
    for (std::size_t i = 0; i < m.unit_count(); ++i) {
        const std::size_t below = m.count_at_or_below(i, threshold);
        const double prob_above = static_cast<double>(m.draw_count() - below) / denom;
        est.estimates.push_back(m.quantile(i, 1.0 - alpha));
        est.labels.push_back(prob_above > alpha);
    }
    return est;
}

}  // namespace tclens
