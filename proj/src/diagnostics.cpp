#include "gsw/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "gsw/error.hpp"
#include "gsw/kernels.hpp"

namespace gsw {

Pairing default_pairing(std::size_t n_samples) {
    return n_samples <= kAllPairsLimit ? Pairing::AllPairs : Pairing::SplitHalves;
}

XiComponents xi_from_matrix(ConstMatrixView x, Pairing pairing, const RngHandle& rng) {
    const std::size_t n = x.rows;
    if (n < 2) {
        throw InsufficientSamplesError("error-bound estimate needs at least 2 samples, got " +
                                       std::to_string(n));
    }
    const auto inv_n = 1.0 / static_cast<double>(n);
    const std::vector<double> norms = kernels::row_sq_norms(x);

    XiComponents out;
    out.ambient_dim = x.cols;
    double total = 0.0;
    for (const double r : norms) {
        total += r;
    }
    out.m2 = total * inv_n;
    double dev = 0.0;
    for (const double r : norms) {
        dev += std::abs(r - out.m2);
    }
    out.a_term = dev * inv_n;

    if (pairing == Pairing::AllPairs) {
        const kernels::PairStats stats = kernels::pair_inner_stats(x);
        const auto pairs = static_cast<double>(stats.pairs);
        out.b1 = stats.sum_abs / pairs;
        out.b2 = std::sqrt(stats.sum_sq / pairs);
    } else {
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        Engine engine = make_engine(rng);
        std::shuffle(perm.begin(), perm.end(), engine);
        const std::size_t half = n / 2;
        double sum_abs = 0.0;
        double sum_sq = 0.0;
        for (std::size_t k = 0; k < half; ++k) {
            const double v = kernels::serial::dot(x.row(perm[k]), x.row(perm[k + half]), x.cols);
            sum_abs += std::abs(v);
            sum_sq = kernels::madd(v, v, sum_sq);
        }
        out.b1 = sum_abs / static_cast<double>(half);
        out.b2 = std::sqrt(sum_sq / static_cast<double>(half));
    }

    out.xi = (out.a_term + std::sqrt(out.m2 * out.b1) +
              std::pow(out.m2, 0.2) * std::pow(out.b2, 0.8)) /
             static_cast<double>(out.ambient_dim);
    return out;
}

XiComponents xi_hat(const SampleSet& s, Pairing pairing, const RngHandle& rng) {
    return xi_from_matrix(s.data(), pairing, rng);
}

XiComponents xi_poly(const SampleSet& s, unsigned m, Pairing pairing, const RngHandle& rng,
                     const ResourceLimits& limits) {
    if (s.n_samples() < 2) {
        throw InsufficientSamplesError("error-bound estimate needs at least 2 samples");
    }
    const MultiIndexSet idx = enumerate_multi_indices(s.dim(), m, limits.index_cap);
    const FeatureSet features = poly_features(s, idx);
    return xi_from_matrix(features.data, pairing, rng);
}

XiComponents xi_neural(const SampleSet& s, unsigned n, Pairing pairing, const RngHandle& rng) {
    if (s.n_samples() < 2) {
        throw InsufficientSamplesError("error-bound estimate needs at least 2 samples");
    }
    const NeuralStack stack = build_neural_stack(s.dim(), n, derive_stream(rng, "stack", 0));
    const FeatureSet features = apply_neural_stack(stack, s);
    return xi_from_matrix(features.data, pairing, derive_stream(rng, "pairing", 0));
}

RateFit fit_rate(std::span<const RatePoint> points) {
    if (points.size() < 3) {
        throw DegenerateFitError("rate fit needs at least 3 points, got " +
                                 std::to_string(points.size()));
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!(points[i].value > 0.0) || !std::isfinite(points[i].value)) {
            throw DegenerateFitError("rate fit needs positive finite values");
        }
        if (!(points[i].dim > 0.0) || (i > 0 && !(points[i].dim > points[i - 1].dim))) {
            throw DegenerateFitError("rate fit needs positive, strictly increasing dims");
        }
    }
    const auto k = static_cast<double>(points.size());
    double mx = 0.0;
    double my = 0.0;
    for (const auto& p : points) {
        mx += std::log(p.dim);
        my += std::log(p.value);
    }
    mx /= k;
    my /= k;
    double sxx = 0.0;
    double sxy = 0.0;
    double syy = 0.0;
    for (const auto& p : points) {
        const double dx = std::log(p.dim) - mx;
        const double dy = std::log(p.value) - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    RateFit fit;
    fit.points.assign(points.begin(), points.end());
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    if (syy == 0.0) {
        fit.r_squared = 1.0;
    } else {
        double ss_res = 0.0;
        for (const auto& p : points) {
            const double e = std::log(p.value) - (fit.intercept + fit.slope * std::log(p.dim));
            ss_res += e * e;
        }
        fit.r_squared = std::clamp(1.0 - ss_res / syy, 0.0, 1.0);
    }
    return fit;
}

}  // namespace gsw
