#include "tclens/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace tclens {

namespace {

// Smallest 1-based rank k in [1, S] whose ECDF step k/S reaches q, under the
// same double division ecdf_at performs. Binary search is valid because
// correctly rounded division preserves monotonicity in k.
std::size_t type1_rank(std::size_t draw_count, double q) {
    const double denom = static_cast<double>(draw_count);
    std::size_t lo = 1, hi = draw_count;
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (static_cast<double>(mid) / denom >= q) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    return lo;
}

void require_quantile_level(double q) {
    if (!(q >= 0.0 && q <= 1.0)) {
        throw std::invalid_argument("invalid quantile level: must lie in [0,1]");
    }
}

}  // namespace

void DecisionConfig::validate() const {
    if (!std::isfinite(threshold)) {
        throw std::invalid_argument("decision threshold must be finite");
    }
    if (!(weight >= 0.0 && weight <= 1.0)) {
        throw std::invalid_argument("decision weight must lie in [0,1]");
    }
}

DrawMatrix::DrawMatrix(std::vector<std::string> unit_ids,
                       std::vector<double> draws_unit_major,
                       std::size_t draw_count)
    : ids_(std::move(unit_ids)), draws_(std::move(draws_unit_major)), draw_count_(draw_count) {
    if (ids_.empty()) {
        throw std::invalid_argument("ensemble must contain at least one unit");
    }
    if (draw_count_ == 0) {
        throw std::invalid_argument("empty ensemble unit: draw count must be positive");
    }
    if (draws_.size() != ids_.size() * draw_count_) {
        throw std::invalid_argument("draw storage size does not match unit count times draw count");
    }
    std::unordered_set<std::string_view> seen;
    seen.reserve(ids_.size());
    for (const auto& id : ids_) {
        if (!seen.insert(id).second) {
            throw std::invalid_argument("duplicate unit id: " + id);
        }
    }
    for (double v : draws_) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("ensemble draws must be finite");
        }
    }
    sorted_ = draws_;
    for (std::size_t i = 0; i < ids_.size(); ++i) {
        auto begin = sorted_.begin() + static_cast<std::ptrdiff_t>(i * draw_count_);
        std::sort(begin, begin + static_cast<std::ptrdiff_t>(draw_count_));
    }
}

DrawMatrix DrawMatrix::from_rows(std::vector<std::string> unit_ids,
                                 const std::vector<std::vector<double>>& per_unit_draws) {
    if (unit_ids.size() != per_unit_draws.size()) {
        throw std::invalid_argument("unit id count does not match draw row count");
    }
    if (per_unit_draws.empty() || per_unit_draws.front().empty()) {
        throw std::invalid_argument("empty ensemble unit");
    }
    const std::size_t s = per_unit_draws.front().size();
    std::vector<double> flat;
    flat.reserve(unit_ids.size() * s);
    for (const auto& row : per_unit_draws) {
        if (row.size() != s) {
            throw std::invalid_argument("all units must have the same draw count");
        }
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return DrawMatrix(std::move(unit_ids), std::move(flat), s);
}

std::span<const double> DrawMatrix::draws_of(std::size_t unit) const {
    if (unit >= ids_.size()) {
        throw std::out_of_range("unit index out of range");
    }
    return {draws_.data() + unit * draw_count_, draw_count_};
}

std::span<const double> DrawMatrix::sorted_draws_of(std::size_t unit) const {
    if (unit >= ids_.size()) {
        throw std::out_of_range("unit index out of range");
    }
    return {sorted_.data() + unit * draw_count_, draw_count_};
}

std::size_t DrawMatrix::count_at_or_below(std::size_t unit, double x) const {
    const auto sorted = sorted_draws_of(unit);
    return static_cast<std::size_t>(std::upper_bound(sorted.begin(), sorted.end(), x) -
                                    sorted.begin());
}

double DrawMatrix::ecdf_at(std::size_t unit, double x) const {
    if (!std::isfinite(x)) {
        throw std::invalid_argument("ecdf evaluation point must be finite");
    }
    return static_cast<double>(count_at_or_below(unit, x)) / static_cast<double>(draw_count_);
}

double DrawMatrix::quantile(std::size_t unit, double q) const {
    require_quantile_level(q);
    const auto sorted = sorted_draws_of(unit);
    return sorted[type1_rank(draw_count_, q) - 1];
}

double ecdf_at(std::span<const double> draws, double x) {
    if (draws.empty()) {
        throw std::invalid_argument("empty ensemble unit");
    }
    if (!std::isfinite(x)) {
        throw std::invalid_argument("ecdf evaluation point must be finite");
    }
    std::size_t count = 0;
    for (double v : draws) {
        if (v <= x) ++count;
    }
    return static_cast<double>(count) / static_cast<double>(draws.size());
}

double quantile(std::span<const double> draws, double q) {
    if (draws.empty()) {
        throw std::invalid_argument("empty ensemble unit");
    }
    require_quantile_level(q);
    std::vector<double> sorted(draws.begin(), draws.end());
    std::sort(sorted.begin(), sorted.end());
    return sorted[type1_rank(sorted.size(), q) - 1];
}

ExceedanceProfile exceedance_profile(const DrawMatrix& m, double threshold) {
    if (!std::isfinite(threshold)) {
        throw std::invalid_argument("decision threshold must be finite");
    }
    ExceedanceProfile profile;
    profile.unit_ids = m.unit_ids();
    profile.prob_above.reserve(m.unit_count());
    profile.prob_at_or_below.reserve(m.unit_count());
    const double denom = static_cast<double>(m.draw_count());
    for (std::size_t i = 0; i < m.unit_count(); ++i) {
        const std::size_t below = m.count_at_or_below(i, threshold);
        const std::size_t above = m.draw_count() - below;
        profile.prob_at_or_below.push_back(static_cast<double>(below) / denom);
        profile.prob_above.push_back(static_cast<double>(above) / denom);
    }
    return profile;
}

}  // namespace tclens
