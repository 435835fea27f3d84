#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gsw/core.hpp"
#include "gsw/rng.hpp"
#include "gsw/slicer.hpp"

namespace gsw {

// How the independent copy X' in B_k is emulated from one sample set.
enum class Pairing {
    SplitHalves,  // random permutation, first half against second half
    AllPairs,     // U-statistic over all pairs j != k
};

// AllPairs up to this many samples, SplitHalves above.
inline constexpr std::size_t kAllPairsLimit = 4000;

Pairing default_pairing(std::size_t n_samples);

// Empirical error-bound components:
//   m2 = E||X||^2, A = E| ||X||^2 - m2 |, B_k = E^{1/k} |<X, X'>|^k,
//   xi = (A + sqrt(m2 B1) + m2^{1/5} B2^{4/5}) / dim.
struct XiComponents {
    double m2 = 0.0;
    double a_term = 0.0;
    double b1 = 0.0;
    double b2 = 0.0;
    double xi = 0.0;
    std::size_t ambient_dim = 0;
};

XiComponents xi_from_matrix(ConstMatrixView x, Pairing pairing, const RngHandle& rng);

XiComponents xi_hat(const SampleSet& s, Pairing pairing, const RngHandle& rng);

// xi_hat on the degree-m monomial lift (ambient dimension q).
XiComponents xi_poly(const SampleSet& s, unsigned m, Pairing pairing, const RngHandle& rng,
                     const ResourceLimits& limits = {});

// xi_hat on the lift through a neural stack drawn from derive_stream(rng, "stack", 0).
XiComponents xi_neural(const SampleSet& s, unsigned n, Pairing pairing, const RngHandle& rng);

struct RatePoint {
    double dim = 0.0;
    double value = 0.0;
};

struct RateFit {
    std::vector<RatePoint> points;
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};

// Least squares of log(value) on log(dim). Needs >= 3 points with positive
// values and strictly increasing dims; otherwise DegenerateFitError.
RateFit fit_rate(std::span<const RatePoint> points);

}  // namespace gsw
