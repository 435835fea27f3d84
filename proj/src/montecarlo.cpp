#include "gsw/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "gsw/error.hpp"
#include "gsw/kernels.hpp"
#include "gsw/transport1d.hpp"

namespace gsw {

namespace {

constexpr std::size_t kPanelWidth = 128;
constexpr std::size_t kStreamRows = 64;

void validate(const SampleSet& mu, const SampleSet& nu, const DefiningFunctionSpec& g,
              const McConfig& cfg) {
    g.validate();
    if (cfg.n_projections == 0) {
        throw InvalidArgument("number of projections must be at least 1");
    }
    if (!(cfg.p >= 1.0) || !std::isfinite(cfg.p)) {
        throw InvalidArgument("Wasserstein order p must be a finite real >= 1");
    }
    if (mu.dim() != nu.dim()) {
        throw DimensionMismatchError("inputs have dimensions " + std::to_string(mu.dim()) +
                                     " and " + std::to_string(nu.dim()));
    }
    if (mu.n_samples() != nu.n_samples()) {
        throw UnequalSupportError("inputs have " + std::to_string(mu.n_samples()) + " and " +
                                  std::to_string(nu.n_samples()) +
                                  " samples; equal counts are required");
    }
}

double finish(const std::vector<double>& terms, double p) {
    double total = 0.0;
    for (const double t : terms) {
        total += t;
    }
    const double mean = total / static_cast<double>(terms.size());
    if (p == 1.0) {
        return mean;
    }
    if (p == 2.0) {
        return std::sqrt(mean);
    }
    return std::pow(mean, 1.0 / p);
}

// Lifted representation of one input: either a materialised matrix or the
// raw samples plus a monomial map evaluated per row block.
struct Lifted {
    std::optional<Matrix> owned;
    const SampleSet* raw = nullptr;
    const MultiIndexSet* monomials = nullptr;
    std::size_t rows = 0;
    std::size_t cols = 0;

    bool streaming() const { return monomials != nullptr && !owned; }
    ConstMatrixView view() const {
        return owned ? ConstMatrixView(*owned) : ConstMatrixView(raw->data());
    }
};

// out = lifted * panel, rows in tiles; streaming inputs regenerate the
// monomial features for each tile.
void project_panel(const Lifted& in, ConstMatrixView panel, MatrixView out) {
    if (!in.streaming()) {
        kernels::matmul(in.view(), panel, out);
        return;
    }
    const auto tiles = static_cast<std::ptrdiff_t>((in.rows + kStreamRows - 1) / kStreamRows);
#pragma omp parallel
    {
        Matrix buffer(kStreamRows, in.cols);
#pragma omp for schedule(dynamic)
        for (std::ptrdiff_t t = 0; t < tiles; ++t) {
            const std::size_t r0 = static_cast<std::size_t>(t) * kStreamRows;
            const std::size_t nr = std::min(kStreamRows, in.rows - r0);
            MatrixView feats(buffer.values().data(), nr, in.cols, in.cols);
            poly_features_rows(*in.raw, *in.monomials, r0, feats);
            kernels::matmul_local(ConstMatrixView(feats.data, nr, in.cols, in.cols), panel,
                                  out.row_block(r0, nr));
        }
    }
}

std::vector<double> linear_terms(const Lifted& mu, const Lifted& nu, const McConfig& cfg) {
    const std::size_t q = mu.cols;
    const std::size_t n = mu.rows;
    const std::size_t total = cfg.n_projections;
    std::vector<double> terms(total);

    Matrix panel_t;
    Matrix proj_mu;
    Matrix proj_nu;
    for (std::size_t start = 0; start < total; start += kPanelWidth) {
        const std::size_t width = std::min(kPanelWidth, total - start);
        panel_t = Matrix(q, width);
        const auto w = static_cast<std::ptrdiff_t>(width);
#pragma omp parallel
        {
            std::vector<double> theta(q);
#pragma omp for schedule(static)
            for (std::ptrdiff_t b = 0; b < w; ++b) {
                const auto col = static_cast<std::size_t>(b);
                fill_normal(theta, 1.0 / static_cast<double>(q),
                            derive_stream(cfg.rng, "proj", start + col));
                for (std::size_t i = 0; i < q; ++i) {
                    panel_t(i, col) = theta[i];
                }
            }
        }
        proj_mu = Matrix(n, width);
        proj_nu = Matrix(n, width);
        project_panel(mu, panel_t, proj_mu);
        project_panel(nu, panel_t, proj_nu);
#pragma omp parallel
        {
            std::vector<double> a(n);
            std::vector<double> b(n);
#pragma omp for schedule(static)
            for (std::ptrdiff_t c = 0; c < w; ++c) {
                const auto col = static_cast<std::size_t>(c);
                for (std::size_t j = 0; j < n; ++j) {
                    a[j] = proj_mu(j, col);
                    b[j] = proj_nu(j, col);
                }
                std::sort(a.begin(), a.end());
                std::sort(b.begin(), b.end());
                terms[start + col] = sorted_cost_pow(a, b, cfg.p);
            }
        }
    }
    return terms;
}

std::vector<double> circular_terms(const SampleSet& mu, const SampleSet& nu, double t,
                                   const McConfig& cfg) {
    const std::size_t d = mu.dim();
    const std::size_t n = mu.n_samples();
    std::vector<double> terms(cfg.n_projections);
    const auto total = static_cast<std::ptrdiff_t>(cfg.n_projections);
#pragma omp parallel
    {
        std::vector<double> theta(d);
        std::vector<double> a(n);
        std::vector<double> b(n);
        auto radial = [&](const SampleSet& s, std::vector<double>& out) {
            for (std::size_t j = 0; j < n; ++j) {
                const auto x = s.row(j);
                double acc = 0.0;
                for (std::size_t k = 0; k < d; ++k) {
                    const double diff = x[k] - t * theta[k];
                    acc = kernels::madd(diff, diff, acc);
                }
                out[j] = std::sqrt(acc);
            }
            std::sort(out.begin(), out.end());
        };
#pragma omp for schedule(static)
        for (std::ptrdiff_t l = 0; l < total; ++l) {
            const auto idx = static_cast<std::size_t>(l);
            fill_normal(theta, 1.0 / static_cast<double>(d), derive_stream(cfg.rng, "proj", idx));
            radial(mu, a);
            radial(nu, b);
            terms[idx] = sorted_cost_pow(a, b, cfg.p);
        }
    }
    return terms;
}

}  // namespace

std::vector<double> mc_gsw_terms(const SampleSet& mu, const SampleSet& nu,
                                 const DefiningFunctionSpec& g, const McConfig& cfg) {
    validate(mu, nu, g, cfg);
    switch (g.kind) {
        case DefiningKind::Circular:
            return circular_terms(mu, nu, g.radius, cfg);
        case DefiningKind::Linear: {
            Lifted a{std::nullopt, &mu, nullptr, mu.n_samples(), mu.dim()};
            Lifted b{std::nullopt, &nu, nullptr, nu.n_samples(), nu.dim()};
            return linear_terms(a, b, cfg);
        }
        case DefiningKind::Neural: {
            const NeuralStack stack =
                build_neural_stack(mu.dim(), g.layers, derive_stream(cfg.rng, "stack", 0));
            Lifted a{apply_neural_stack(stack, mu).data, nullptr, nullptr, mu.n_samples(),
                     mu.dim()};
            Lifted b{apply_neural_stack(stack, nu).data, nullptr, nullptr, nu.n_samples(),
                     nu.dim()};
            return linear_terms(a, b, cfg);
        }
        case DefiningKind::Polynomial: {
            const MultiIndexSet idx =
                enumerate_multi_indices(mu.dim(), g.degree, cfg.limits.index_cap);
            const std::size_t q = idx.size();
            const double bytes = 2.0 * static_cast<double>(mu.n_samples()) *
                                 static_cast<double>(q) * sizeof(double);
            Lifted a{std::nullopt, &mu, &idx, mu.n_samples(), q};
            Lifted b{std::nullopt, &nu, &idx, nu.n_samples(), q};
            if (bytes <= static_cast<double>(cfg.limits.feature_budget_bytes)) {
                a.owned = poly_features(mu, idx).data;
                b.owned = poly_features(nu, idx).data;
            }
            return linear_terms(a, b, cfg);
        }
    }
    throw InvalidArgument("unknown defining function");
}

double mc_gsw(const SampleSet& mu, const SampleSet& nu, const DefiningFunctionSpec& g,
              const McConfig& cfg) {
    return finish(mc_gsw_terms(mu, nu, g, cfg), cfg.p);
}

namespace reference {

double mc_gsw(const SampleSet& mu, const SampleSet& nu, const DefiningFunctionSpec& g,
              const McConfig& cfg) {
    validate(mu, nu, g, cfg);
    std::vector<double> terms(cfg.n_projections);
    if (g.kind == DefiningKind::Circular) {
        for (std::size_t l = 0; l < cfg.n_projections; ++l) {
            const Direction theta = sample_direction(mu.dim(), derive_stream(cfg.rng, "proj", l));
            terms[l] = wasserstein_1d_pow(project_circular(mu, theta, g.radius),
                                          project_circular(nu, theta, g.radius), cfg.p);
        }
        return finish(terms, cfg.p);
    }
    Matrix a = mu.data();
    Matrix b = nu.data();
    if (g.kind == DefiningKind::Polynomial) {
        const MultiIndexSet idx = enumerate_multi_indices(mu.dim(), g.degree, cfg.limits.index_cap);
        a = poly_features(mu, idx).data;
        b = poly_features(nu, idx).data;
    } else if (g.kind == DefiningKind::Neural) {
        const NeuralStack stack =
            build_neural_stack(mu.dim(), g.layers, derive_stream(cfg.rng, "stack", 0));
        a = apply_neural_stack(stack, mu).data;
        b = apply_neural_stack(stack, nu).data;
    }
    for (std::size_t l = 0; l < cfg.n_projections; ++l) {
        const Direction theta = sample_direction(a.cols(), derive_stream(cfg.rng, "proj", l));
        terms[l] = wasserstein_1d_pow(project(a, theta), project(b, theta), cfg.p);
    }
    return finish(terms, cfg.p);
}

}  // namespace reference

}  // namespace gsw
