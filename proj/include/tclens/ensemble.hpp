#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace tclens {

/// Decision problem: a real cut-off and the false-positive weight p in [0,1].
/// A candidate estimate above the cut-off charges p times the posterior mass
/// at or below it; an estimate at or below the cut-off charges (1-p) times
/// the mass above.
struct DecisionConfig {
    double threshold = 0.0;
    double weight = 0.5;

    /// Throws std::invalid_argument if threshold is non-finite or weight
    /// is outside [0,1].
    void validate() const;
};

/// Empirical joint posterior of a parameter ensemble: n units by S draws.
///
/// Draws are stored unit-major (the S draws of one unit are contiguous) and
/// a per-unit ascending copy is built once at construction, so CDF and
/// quantile lookups are O(log S). All cells must be finite; unit ids must be
/// unique. Instances are immutable after construction and safe to share
/// across threads.
class DrawMatrix {
public:
    /// `draws_unit_major` holds unit_ids.size() * draw_count values, the
    /// draws of unit i occupying [i*draw_count, (i+1)*draw_count).
    DrawMatrix(std::vector<std::string> unit_ids,
               std::vector<double> draws_unit_major,
               std::size_t draw_count);

    static DrawMatrix from_rows(std::vector<std::string> unit_ids,
                                const std::vector<std::vector<double>>& per_unit_draws);

    std::size_t unit_count() const noexcept { return ids_.size(); }
    std::size_t draw_count() const noexcept { return draw_count_; }
    const std::vector<std::string>& unit_ids() const noexcept { return ids_; }

    std::span<const double> draws_of(std::size_t unit) const;
    std::span<const double> sorted_draws_of(std::size_t unit) const;

    /// Number of draws of `unit` that are <= x (a draw equal to x counts).
    std::size_t count_at_or_below(std::size_t unit, double x) const;

    /// Empirical posterior CDF of `unit` at x: count_at_or_below / S.
    double ecdf_at(std::size_t unit, double x) const;

    /// Type-1 empirical quantile of `unit`: the smallest draw whose ECDF
    /// value reaches q. quantile(u, 0) is the smallest draw, quantile(u, 1)
    /// the largest. No interpolation.
    double quantile(std::size_t unit, double q) const;

private:
    std::vector<std::string> ids_;
    std::vector<double> draws_;
    std::vector<double> sorted_;
    std::size_t draw_count_ = 0;
};

/// Per-unit posterior masses on either side of a threshold. Both columns are
/// computed from the complementary integer draw counts over the same S, so
/// prob_above[i] + prob_at_or_below[i] == 1 holds exactly.
struct ExceedanceProfile {
    std::vector<std::string> unit_ids;
    std::vector<double> prob_above;
    std::vector<double> prob_at_or_below;
};

/// Point estimates for every unit plus the above/below labels they induce.
/// For estimates produced against a DecisionConfig, labels[i] is
/// estimates[i] > threshold.
struct ClassificationEstimate {
    std::vector<std::string> unit_ids;
    std::vector<double> estimates;
    std::vector<bool> labels;
};

/// Empirical CDF of a single unit's draws at x. A draw equal to x counts as
/// at-or-below. Throws std::invalid_argument on an empty draw list or
/// non-finite x.
double ecdf_at(std::span<const double> draws, double x);

/// Type-1 quantile of a single unit's draws (see DrawMatrix::quantile).
/// Throws std::invalid_argument for q outside [0,1] or an empty draw list.
double quantile(std::span<const double> draws, double q);

/// Per-unit exceedance masses of the whole ensemble at `threshold`.
ExceedanceProfile exceedance_profile(const DrawMatrix& m, double threshold);

}  // namespace tclens
