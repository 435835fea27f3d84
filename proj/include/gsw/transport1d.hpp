#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace gsw {

// Equal-weight empirical measure on the line; values kept sorted ascending.
class Empirical1D {
public:
    // Sorts (stably) and validates: at least one value, all finite.
    explicit Empirical1D(std::vector<double> values);

    std::span<const double> values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    double mean() const;

private:
    std::vector<double> values_;
};

// Zero-mean Gaussian on the line.
struct Gaussian1D {
    explicit Gaussian1D(double variance);
    double variance;
};

// (1/K) sum_i |a_(i) - b_(i)|^p over order statistics, without the final root.
// Both spans must already be sorted and of equal length.
double sorted_cost_pow(std::span<const double> a, std::span<const double> b, double p);

// Exact W_p between two equal-size empirical measures.
double wasserstein_1d(const Empirical1D& a, const Empirical1D& b, double p);
double wasserstein_1d_pow(const Empirical1D& a, const Empirical1D& b, double p);

double w2_gaussian_zero_mean(const Gaussian1D& a, const Gaussian1D& b);

struct MeanShiftParts {
    double centered_w2_sq = 0.0;
    double mean_gap_sq = 0.0;
};

// Splits W_2^2(a, b) into the cost between the centred measures and the
// squared gap between the means.
MeanShiftParts mean_shift_decompose(const Empirical1D& a, const Empirical1D& b);

}  // namespace gsw
