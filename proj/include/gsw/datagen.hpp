#pragma once

#include <cstddef>
#include <span>

#include "gsw/core.hpp"
#include "gsw/rng.hpp"

namespace gsw {

// Every generator draws row j from derive_stream(rng, "row", j), so output
// is identical for any thread count.

// Rows i.i.d. N(mean, cov_scale * I_d); `mean` has d entries or one (broadcast).
SampleSet gen_gaussian(std::size_t n, std::size_t d, std::span<const double> mean,
                       double cov_scale, const RngHandle& rng);
SampleSet gen_gaussian(std::size_t n, std::size_t d, double mean, double cov_scale,
                       const RngHandle& rng);

// Entries i.i.d. Gamma(shape, scale): mean shape * scale, variance shape * scale^2.
SampleSet gen_gamma(std::size_t n, std::size_t d, double shape, double scale,
                    const RngHandle& rng);

enum class NoiseKind { Gaussian, StudentT };

struct Ar1Config {
    double alpha = 0.5;
    NoiseKind noise = NoiseKind::Gaussian;
    double sigma = 1.0;  // Gaussian noise standard deviation
    double df = 5.0;     // Student-t degrees of freedom (raw draws, unscaled)
    std::size_t burn_in = 10000;
    std::size_t dim = 1;

    void validate() const;
};

// Each row is an independent path X_t = alpha X_{t-1} + eps_t started at
// X_0 = 0, run for burn_in + dim steps; the last dim values are kept.
SampleSet gen_ar1(std::size_t n, const Ar1Config& cfg, const RngHandle& rng);

}  // namespace gsw
