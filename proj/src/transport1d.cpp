#include "gsw/transport1d.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gsw/error.hpp"

namespace gsw {

namespace {

void require_equal_support(std::size_t ka, std::size_t kb) {
    if (ka != kb) {
        throw UnequalSupportError("empirical measures have " + std::to_string(ka) + " and " +
                                  std::to_string(kb) + " atoms; equal counts are required");
    }
}

void require_order(double p) {
    if (!(p >= 1.0) || !std::isfinite(p)) {
        throw InvalidArgument("Wasserstein order p must be a finite real >= 1");
    }
}

}  // namespace

Empirical1D::Empirical1D(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) {
        throw InvalidArgument("empirical measure needs at least one atom");
    }
    if (!std::all_of(values_.begin(), values_.end(), [](double v) { return std::isfinite(v); })) {
        throw InvalidArgument("empirical measure atoms must be finite");
    }
    std::stable_sort(values_.begin(), values_.end());
}

double Empirical1D::mean() const {
    double s = 0.0;
    for (const double v : values_) {
        s += v;
    }
    return s / static_cast<double>(values_.size());
}

Gaussian1D::Gaussian1D(double var) : variance(var) {
    if (!(var >= 0.0) || !std::isfinite(var)) {
        throw InvalidArgument("Gaussian variance must be a finite non-negative real");
    }
}

double sorted_cost_pow(std::span<const double> a, std::span<const double> b, double p) {
    double total = 0.0;
    const std::size_t k = a.size();
    if (p == 2.0) {
        for (std::size_t i = 0; i < k; ++i) {
            const double diff = a[i] - b[i];
            total += diff * diff;
        }
    } else if (p == 1.0) {
        for (std::size_t i = 0; i < k; ++i) {
            total += std::abs(a[i] - b[i]);
        }
    } else {
        for (std::size_t i = 0; i < k; ++i) {
            total += std::pow(std::abs(a[i] - b[i]), p);
        }
    }
    return total / static_cast<double>(k);
}

double wasserstein_1d_pow(const Empirical1D& a, const Empirical1D& b, double p) {
    require_order(p);
    require_equal_support(a.size(), b.size());
    return sorted_cost_pow(a.values(), b.values(), p);
}

double wasserstein_1d(const Empirical1D& a, const Empirical1D& b, double p) {
    const double cost = wasserstein_1d_pow(a, b, p);
    if (p == 1.0) {
        return cost;
    }
    if (p == 2.0) {
        return std::sqrt(cost);
    }
    return std::pow(cost, 1.0 / p);
}

double w2_gaussian_zero_mean(const Gaussian1D& a, const Gaussian1D& b) {
    return std::abs(std::sqrt(a.variance) - std::sqrt(b.variance));
}

MeanShiftParts mean_shift_decompose(const Empirical1D& a, const Empirical1D& b) {
    require_equal_support(a.size(), b.size());
    const double ma = a.mean();
    const double mb = b.mean();
    const auto av = a.values();
    const auto bv = b.values();
    double centered = 0.0;
    for (std::size_t i = 0; i < av.size(); ++i) {
        const double diff = (av[i] - ma) - (bv[i] - mb);
        centered += diff * diff;
    }
    const double gap = ma - mb;
    return {centered / static_cast<double>(av.size()), gap * gap};
}

}  // namespace gsw
