#pragma once

#include <cstddef>
#include <vector>

#include "gsw/core.hpp"
#include "gsw/rng.hpp"
#include "gsw/slicer.hpp"

namespace gsw {

struct McConfig {
    std::size_t n_projections = 2000;
    double p = 2.0;
    RngHandle rng;
    ResourceLimits limits;
};

// Monte Carlo GSW_p: ((1/L) sum_l W_p^p(g^theta_l # mu, g^theta_l # nu))^(1/p).
// theta_l comes from derive_stream(rng, "proj", l). A neural stack, when
// needed, comes from derive_stream(rng, "stack", 0) and is shared by every
// projection and both inputs. The sum runs in index order, so the value
// does not depend on the thread count.
double mc_gsw(const SampleSet& mu, const SampleSet& nu, const DefiningFunctionSpec& g,
              const McConfig& cfg);

// Per-projection costs W_p^p in projection order (the terms of the sum above).
std::vector<double> mc_gsw_terms(const SampleSet& mu, const SampleSet& nu,
                                 const DefiningFunctionSpec& g, const McConfig& cfg);

namespace reference {

// One direction at a time through project()/wasserstein_1d_pow(); kept as the
// serial oracle for the panel kernel.
double mc_gsw(const SampleSet& mu, const SampleSet& nu, const DefiningFunctionSpec& g,
              const McConfig& cfg);

}  // namespace reference

}  // namespace gsw
