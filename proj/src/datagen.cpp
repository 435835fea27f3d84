#include "gsw/datagen.hpp"

#include <cmath>
#include <random>
#include <string>

#include "gsw/error.hpp"

namespace gsw {

namespace {

void require_shape(std::size_t n, std::size_t d) {
    if (n == 0 || d == 0) {
        throw InvalidArgument("generators need n >= 1 and d >= 1");
    }
}

// Fills each row of an n x d matrix with `draw(engine, row_span)`.
template <typename RowFill>
Matrix fill_rows(std::size_t n, std::size_t d, const RngHandle& rng, RowFill draw) {
    Matrix out(n, d);
    const auto rows = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t j = 0; j < rows; ++j) {
        const auto row = static_cast<std::size_t>(j);
        Engine engine = make_engine(derive_stream(rng, "row", row));
        draw(engine, out.row(row));
    }
    return out;
}

}  // namespace

SampleSet gen_gaussian(std::size_t n, std::size_t d, std::span<const double> mean,
                       double cov_scale, const RngHandle& rng) {
    require_shape(n, d);
    if (mean.size() != d && mean.size() != 1) {
        throw DimensionMismatchError("mean must have 1 or " + std::to_string(d) + " entries");
    }
    if (!(cov_scale > 0.0) || !std::isfinite(cov_scale)) {
        throw InvalidArgument("covariance scale must be positive");
    }
    const double sd = std::sqrt(cov_scale);
    return SampleSet(fill_rows(n, d, rng, [&](Engine& engine, std::span<double> row) {
        std::normal_distribution<double> normal(0.0, 1.0);
        for (std::size_t k = 0; k < row.size(); ++k) {
            const double m = mean.size() == 1 ? mean[0] : mean[k];
            row[k] = m + sd * normal(engine);
        }
    }));
}

SampleSet gen_gaussian(std::size_t n, std::size_t d, double mean, double cov_scale,
                       const RngHandle& rng) {
    const double m[1] = {mean};
    return gen_gaussian(n, d, std::span<const double>(m), cov_scale, rng);
}

SampleSet gen_gamma(std::size_t n, std::size_t d, double shape, double scale,
                    const RngHandle& rng) {
    require_shape(n, d);
    if (!(shape > 0.0) || !(scale > 0.0)) {
        throw InvalidArgument("gamma shape and scale must be positive");
    }
    return SampleSet(fill_rows(n, d, rng, [&](Engine& engine, std::span<double> row) {
        std::gamma_distribution<double> gamma(shape, scale);
        for (double& v : row) {
            v = gamma(engine);
        }
    }));
}

void Ar1Config::validate() const {
    if (!(alpha >= 0.0 && alpha < 1.0)) {
        throw InvalidArgument("AR(1) alpha must lie in [0, 1)");
    }
    if (dim == 0) {
        throw InvalidArgument("AR(1) dimension must be positive");
    }
    if (noise == NoiseKind::Gaussian && !(sigma > 0.0)) {
        throw InvalidArgument("AR(1) Gaussian noise sigma must be positive");
    }
    if (noise == NoiseKind::StudentT && !(df > 2.0)) {
        throw InvalidArgument("AR(1) Student-t noise needs df > 2 for finite variance");
    }
}

SampleSet gen_ar1(std::size_t n, const Ar1Config& cfg, const RngHandle& rng) {
    cfg.validate();
    require_shape(n, cfg.dim);
    const std::size_t steps = cfg.burn_in + cfg.dim;
    return SampleSet(fill_rows(n, cfg.dim, rng, [&](Engine& engine, std::span<double> row) {
        std::normal_distribution<double> normal(0.0, cfg.noise == NoiseKind::Gaussian ? cfg.sigma : 1.0);
        std::student_t_distribution<double> student(cfg.df);
        double x = 0.0;
        for (std::size_t t = 0; t < steps; ++t) {
            const double eps =
                cfg.noise == NoiseKind::Gaussian ? normal(engine) : student(engine);
            x = cfg.alpha * x + eps;
            if (t >= cfg.burn_in) {
                row[t - cfg.burn_in] = x;
            }
        }
    }));
}

}  // namespace gsw
