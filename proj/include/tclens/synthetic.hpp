#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "tclens/ensemble.hpp"

namespace tclens {

/// theta_i ~ Normal(prior_mean, prior_var), y_i ~ Normal(theta_i, obs_var_i)
/// with known observation variances. obs_var holds either one shared value
/// or one value per unit.
struct NormalNormalHyper {
    double prior_mean = 0.0;
    double prior_var = 1.0;
    std::vector<double> obs_var = {1.0};
};

/// theta_i ~ Gamma(shape, rate), y_i ~ Poisson(exposure_i * theta_i) with
/// known exposures (one shared value or one per unit).
struct PoissonGammaHyper {
    double shape = 1.0;
    double rate = 1.0;
    std::vector<double> exposure = {1.0};
};

enum class ModelKind { normal_normal, poisson_gamma };

/// A conjugate two-layer sampling model instance: likelihood layer over the
/// observations, prior layer over the ensemble. Generation is fully
/// determined by `seed`.
struct ModelSpec {
    std::size_t n = 1;
    std::uint64_t seed = 0;
    std::variant<NormalNormalHyper, PoissonGammaHyper> hyper = NormalNormalHyper{};

    ModelKind kind() const noexcept;

    /// Throws std::invalid_argument on n == 0, non-positive variances,
    /// shapes, rates or exposures, or a hyper vector sized neither 1 nor n.
    void validate() const;
};

/// Simulated truth, observations, exact posterior draws and the analytic
/// per-unit posteriors they came from.
///
/// Unit i of a normal-normal spec has posterior
/// Normal(precision-weighted mean, pooled variance); unit i of a
/// poisson-gamma spec has posterior Gamma(shape + y_i, rate + exposure_i).
class SyntheticDataset {
public:
    SyntheticDataset(ModelKind kind,
                     std::vector<double> truth,
                     std::vector<double> observations,
                     DrawMatrix posterior,
                     std::vector<double> param1,
                     std::vector<double> param2,
                     std::uint64_t seed);

    ModelKind kind() const noexcept { return kind_; }
    std::uint64_t seed() const noexcept { return seed_; }
    const std::vector<double>& truth() const noexcept { return truth_; }
    const std::vector<double>& observations() const noexcept { return observations_; }
    const DrawMatrix& posterior() const noexcept { return posterior_; }

    /// Normal mean / gamma shape of unit's analytic posterior.
    double posterior_param1(std::size_t unit) const { return param1_.at(unit); }
    /// Normal sd / gamma rate of unit's analytic posterior.
    double posterior_param2(std::size_t unit) const { return param2_.at(unit); }

    double analytic_mean(std::size_t unit) const;
    double analytic_sd(std::size_t unit) const;

    /// Exact posterior q-quantile of one unit (support bounds at q = 0, 1).
    double analytic_quantile(std::size_t unit, double q) const;

    /// Exact P[theta_unit > threshold].
    double analytic_prob_above(std::size_t unit, double threshold) const;

private:
    ModelKind kind_;
    std::vector<double> truth_;
    std::vector<double> observations_;
    DrawMatrix posterior_;
    std::vector<double> param1_;
    std::vector<double> param2_;
    std::uint64_t seed_;
};

/// Simulates truth, observations and S exact posterior draws per unit.
/// Unit i consumes only substream i of spec.seed, so the first k units of
/// any run coincide with the first k units of a larger run under the same
/// seed, and per-unit generation can run in parallel without changing the
/// result.
SyntheticDataset simulate(const ModelSpec& spec, std::size_t draw_count);

/// Labels from the exact posterior quantiles: unit i goes above iff its
/// analytic (1-p)-quantile exceeds the cut-off.
std::vector<bool> analytic_optimal_labels(const SyntheticDataset& d, const DecisionConfig& cfg);

}  // namespace tclens
