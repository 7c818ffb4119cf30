#include "tclens/loss.hpp"

#include <cmath>
#include <stdexcept>

#include "tclens/compensated.hpp"

namespace tclens {

namespace {

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) {
        throw std::invalid_argument(std::string(what) + " must be finite");
    }
}

void require_aligned(const DrawMatrix& m, const ClassificationEstimate& est) {
    if (est.unit_ids != m.unit_ids()) {
        throw std::invalid_argument("unit_id mismatch between ensemble and estimate");
    }
    if (est.labels.size() != m.unit_count()) {
        throw std::invalid_argument("estimate label count does not match unit count");
    }
}

// Unit i pays p * P[theta_i <= C] when labelled above, (1-p) * P[theta_i > C]
// when labelled below.
double unit_risk(const DrawMatrix& m, std::size_t unit, bool label_above,
                 double threshold, double weight) {
    const double denom = static_cast<double>(m.draw_count());
    const std::size_t below_count = m.count_at_or_below(unit, threshold);
    if (label_above) {
        return weight * (static_cast<double>(below_count) / denom);
    }
    const double above = static_cast<double>(m.draw_count() - below_count) / denom;
    return (1.0 - weight) * above;
}

}  // namespace

int fp_indicator(double threshold, double theta, double theta_est) {
    require_finite(threshold, "threshold");
    require_finite(theta, "theta");
    require_finite(theta_est, "theta_est");
    return (theta <= threshold && theta_est > threshold) ? 1 : 0;
}

int fn_indicator(double threshold, double theta, double theta_est) {
    require_finite(threshold, "threshold");
    require_finite(theta, "theta");
    require_finite(theta_est, "theta_est");
    return (theta > threshold && theta_est <= threshold) ? 1 : 0;
}

double tcl_weighted(double threshold,
                    std::span<const double> truth,
                    std::span<const double> estimate,
                    double weight) {
    if (truth.size() != estimate.size()) {
        throw std::invalid_argument("truth and estimate must have the same length");
    }
    if (truth.empty()) {
        throw std::invalid_argument("loss needs at least one unit");
    }
    if (!(weight >= 0.0 && weight <= 1.0)) {
        throw std::invalid_argument("decision weight must lie in [0,1]");
    }
    CompensatedSum sum;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        sum.add(weight * fp_indicator(threshold, truth[i], estimate[i]) +
                (1.0 - weight) * fn_indicator(threshold, truth[i], estimate[i]));
    }
    return sum.value() / static_cast<double>(truth.size());
}

double tcl_unweighted(double threshold,
                      std::span<const double> truth,
                      std::span<const double> estimate) {
    if (truth.size() != estimate.size()) {
        throw std::invalid_argument("truth and estimate must have the same length");
    }
    if (truth.empty()) {
        throw std::invalid_argument("loss needs at least one unit");
    }
    CompensatedSum sum;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        sum.add(static_cast<double>(fp_indicator(threshold, truth[i], estimate[i]) +
                                    fn_indicator(threshold, truth[i], estimate[i])));
    }
    return sum.value() / static_cast<double>(truth.size());
}

RiskBreakdown posterior_risk(const DrawMatrix& m,
                             const ClassificationEstimate& est,
                             const DecisionConfig& cfg) {
    cfg.validate();
    require_aligned(m, est);
    RiskBreakdown breakdown;
    breakdown.config = cfg;
    breakdown.per_unit_risk.reserve(m.unit_count());
    CompensatedSum total;
    for (std::size_t i = 0; i < m.unit_count(); ++i) {
        const double r = unit_risk(m, i, est.labels[i], cfg.threshold, cfg.weight);
        breakdown.per_unit_risk.push_back(r);
        total.add(r);
    }
    breakdown.total_risk = total.value() / static_cast<double>(m.unit_count());
    return breakdown;
}

ClassificationEstimate optimal_estimate(const DrawMatrix& m, const DecisionConfig& cfg) {
    cfg.validate();
    ClassificationEstimate est;
    est.unit_ids = m.unit_ids();
    est.estimates.reserve(m.unit_count());
    est.labels.reserve(m.unit_count());
    const double level = 1.0 - cfg.weight;
    for (std::size_t i = 0; i < m.unit_count(); ++i) {
        const double q = m.quantile(i, level);
        est.estimates.push_back(q);
        est.labels.push_back(q > cfg.threshold);
    }
    return est;
}

ClassificationEstimate classify_by_probability(const DrawMatrix& m, const DecisionConfig& cfg) {
    cfg.validate();
    ClassificationEstimate est;
    est.unit_ids = m.unit_ids();
    est.estimates.reserve(m.unit_count());
    est.labels.reserve(m.unit_count());
    const double denom = static_cast<double>(m.draw_count());
    for (std::size_t i = 0; i < m.unit_count(); ++i) {
        const std::size_t below = m.count_at_or_below(i, cfg.threshold);
        const double prob_above = static_cast<double>(m.draw_count() - below) / denom;
        est.estimates.push_back(m.quantile(i, 1.0 - cfg.weight));
        est.labels.push_back(prob_above > cfg.weight);
    }
    return est;
}

OracleLabels oracle_best_labels(const DrawMatrix& m, const DecisionConfig& cfg) {
    cfg.validate();
    OracleLabels result;
    result.labels.reserve(m.unit_count());
    CompensatedSum total;
    const double denom = static_cast<double>(m.draw_count());
    for (std::size_t i = 0; i < m.unit_count(); ++i) {
        const std::size_t below_count = m.count_at_or_below(i, cfg.threshold);
        const double below = static_cast<double>(below_count) / denom;
        const double above = static_cast<double>(m.draw_count() - below_count) / denom;
        const double risk_above = cfg.weight * below;
        const double risk_below = (1.0 - cfg.weight) * above;
        const bool label_above = risk_above < risk_below;  // ties side with below
        result.labels.push_back(label_above);
        total.add(label_above ? risk_above : risk_below);
    }
    result.risk = total.value() / static_cast<double>(m.unit_count());
    return result;
}

double posterior_unweighted_tcl(const DrawMatrix& m,
                                const ClassificationEstimate& est,
                                double threshold) {
    require_finite(threshold, "threshold");
    require_aligned(m, est);
    CompensatedSum total;
    const double denom = static_cast<double>(m.draw_count());
    for (std::size_t i = 0; i < m.unit_count(); ++i) {
        const std::size_t below_count = m.count_at_or_below(i, threshold);
        if (est.labels[i]) {
            total.add(static_cast<double>(below_count) / denom);
        } else {
            total.add(static_cast<double>(m.draw_count() - below_count) / denom);
        }
    }
    return total.value() / static_cast<double>(m.unit_count());
}

}  // namespace tclens
