#pragma once

// Projection-free approximations of SW_2 / GSW_2 built from the closed-form
// W_2 between fitted zero-mean Gaussians plus a mean-gap term.

#include <cstddef>

#include "gsw/core.hpp"
#include "gsw/slicer.hpp"

namespace gsw {

struct FastResult {
    double distance = 0.0;
    double centered_term = 0.0;  // (sqrt(m2(mu_bar)) - sqrt(m2(nu_bar)))^2 / dim
    double mean_term = 0.0;      // ||m_mu - m_nu||^2 / dim
    std::size_t ambient_dim_used = 0;
};

// Combines two moment summaries living in a `dim`-dimensional space.
FastResult fast_from_moments(const MomentSummary& mu, const MomentSummary& nu, std::size_t dim);

FastResult hat_sw2(const SampleSet& mu, const SampleSet& nu);

enum class PolyPath { Auto, Streaming, Materialized };

// Monomial lift of degree m followed by hat_sw2 in R^q. The streaming path
// keeps only per-monomial running sums; the materialised path builds the
// N x q feature matrix. Both accumulate in the same order.
FastResult hat_poly_gsw2(const SampleSet& mu, const SampleSet& nu, unsigned m,
                         PolyPath path = PolyPath::Auto, const ResourceLimits& limits = {});

// Uses raw second moments: the lifted measures are zero-mean for n >= 1.
// n = 0 throws LayerCountError (use hat_sw2).
FastResult hat_neural_gsw2(const SampleSet& mu, const SampleSet& nu, unsigned n);

// Per-monomial sums of U_i and U_i^2 without materialising features.
ColumnMoments monomial_moments(const SampleSet& s, const MultiIndexSet& idx);

namespace serial {
ColumnMoments monomial_moments(const SampleSet& s, const MultiIndexSet& idx);
}

}  // namespace gsw
