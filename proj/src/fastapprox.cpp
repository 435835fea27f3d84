#include "gsw/fastapprox.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gsw/error.hpp"
#include "gsw/kernels.hpp"

namespace gsw {

namespace {

void require_same_dim(const SampleSet& mu, const SampleSet& nu) {
    if (mu.dim() != nu.dim()) {
        throw DimensionMismatchError("inputs have dimensions " + std::to_string(mu.dim()) +
                                     " and " + std::to_string(nu.dim()));
    }
}

}  // namespace

FastResult fast_from_moments(const MomentSummary& mu, const MomentSummary& nu, std::size_t dim) {
    const auto inv_dim = 1.0 / static_cast<double>(dim);
    const double gap =
        std::sqrt(mu.centered_second_moment) - std::sqrt(nu.centered_second_moment);
    double mean_gap = 0.0;
    for (std::size_t i = 0; i < mu.mean.size(); ++i) {
        const double diff = mu.mean[i] - nu.mean[i];
        mean_gap = kernels::madd(diff, diff, mean_gap);
    }
    FastResult r;
    r.centered_term = gap * gap * inv_dim;
    r.mean_term = mean_gap * inv_dim;
    r.distance = std::sqrt(r.centered_term + r.mean_term);
    r.ambient_dim_used = dim;
    return r;
}

FastResult hat_sw2(const SampleSet& mu, const SampleSet& nu) {
    require_same_dim(mu, nu);
    return fast_from_moments(moment_summary(mu), moment_summary(nu), mu.dim());
}

ColumnMoments monomial_moments(const SampleSet& s, const MultiIndexSet& idx) {
    if (s.dim() != idx.dim()) {
        throw DimensionMismatchError("sample dimension does not match multi-index dimension");
    }
    const std::size_t q = idx.size();
    ColumnMoments out{s.n_samples(), std::vector<double>(q, 0.0), std::vector<double>(q, 0.0)};
    constexpr std::size_t kBlock = 256;
    const auto blocks = static_cast<std::ptrdiff_t>((q + kBlock - 1) / kBlock);
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t blk = 0; blk < blocks; ++blk) {
        const std::size_t i0 = static_cast<std::size_t>(blk) * kBlock;
        const std::size_t i1 = std::min(q, i0 + kBlock);
        double* sum = out.sum.data();
        double* sum_sq = out.sum_sq.data();
        for (std::size_t j = 0; j < s.n_samples(); ++j) {
            const double* x = s.row(j).data();
            for (std::size_t i = i0; i < i1; ++i) {
                const double v = idx.evaluate(i, x);
                sum[i] += v;
                sum_sq[i] = kernels::madd(v, v, sum_sq[i]);
            }
        }
    }
    return out;
}

namespace serial {

ColumnMoments monomial_moments(const SampleSet& s, const MultiIndexSet& idx) {
    const std::size_t q = idx.size();
    ColumnMoments out{s.n_samples(), std::vector<double>(q, 0.0), std::vector<double>(q, 0.0)};
    for (std::size_t i = 0; i < q; ++i) {
        double sum = 0.0;
        double sum_sq = 0.0;
        for (std::size_t j = 0; j < s.n_samples(); ++j) {
            const double v = idx.evaluate(i, s.row(j).data());
            sum += v;
            sum_sq = kernels::madd(v, v, sum_sq);
        }
        out.sum[i] = sum;
        out.sum_sq[i] = sum_sq;
    }
    return out;
}

}  // namespace serial

FastResult hat_poly_gsw2(const SampleSet& mu, const SampleSet& nu, unsigned m, PolyPath path,
                         const ResourceLimits& limits) {
    require_same_dim(mu, nu);
    const MultiIndexSet idx = enumerate_multi_indices(mu.dim(), m, limits.index_cap);
    const std::size_t q = idx.size();
    if (path == PolyPath::Auto) {
        const double bytes = static_cast<double>(std::max(mu.n_samples(), nu.n_samples())) *
                             static_cast<double>(q) * sizeof(double);
        path = bytes <= static_cast<double>(limits.feature_budget_bytes) ? PolyPath::Materialized
                                                                         : PolyPath::Streaming;
    }
    if (path == PolyPath::Streaming) {
        return fast_from_moments(summarize(monomial_moments(mu, idx)),
                                 summarize(monomial_moments(nu, idx)), q);
    }
    const FeatureSet fa = poly_features(mu, idx);
    const FeatureSet fb = poly_features(nu, idx);
    return fast_from_moments(summarize(kernels::column_moments(fa.data)),
                             summarize(kernels::column_moments(fb.data)), q);
}

FastResult hat_neural_gsw2(const SampleSet& mu, const SampleSet& nu, unsigned n) {
    require_same_dim(mu, nu);
    if (n == 0) {
        throw LayerCountError(
            "neural fast approximation needs n >= 1; with no layers the distance is plain SW, "
            "use the linear fast approximation (which keeps the mean term)");
    }
    const auto raw_m2 = [](const SampleSet& s) {
        const ColumnMoments cm = kernels::column_moments(s.data());
        double total = 0.0;
        for (const double v : cm.sum_sq) {
            total += v / static_cast<double>(cm.n_rows);
        }
        return total;
    };
    const auto d = static_cast<double>(mu.dim());
    const double gap = std::sqrt(raw_m2(mu)) - std::sqrt(raw_m2(nu));
    FastResult r;
    r.centered_term = gap * gap / d;
    r.mean_term = 0.0;
    r.distance = std::sqrt(r.centered_term);
    r.ambient_dim_used = mu.dim();
    return r;
}

}  // namespace gsw
