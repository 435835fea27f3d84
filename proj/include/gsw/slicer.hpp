#pragma once

// Defining functions realised as pushforwards of finite samples: Gaussian
// directions, monomial feature lifts, random linear stacks and the circular map.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gsw/core.hpp"
#include "gsw/matrix.hpp"
#include "gsw/rng.hpp"
#include "gsw/transport1d.hpp"

namespace gsw {

struct ResourceLimits {
    // Largest admissible monomial count q.
    std::uint64_t index_cap = 10'000'000;
    // Feature matrices larger than this are generated on the fly instead.
    std::size_t feature_budget_bytes = std::size_t{1} << 30;
};

struct Direction {
    std::vector<double> coords;
    std::size_t ambient_dim() const noexcept { return coords.size(); }
};

// theta ~ N(0, I / ambient_dim), drawn from `rng`.
Direction sample_direction(std::size_t ambient_dim, const RngHandle& rng);

// C(m + d - 1, d - 1), saturating at UINT64_MAX.
std::uint64_t multi_index_count(std::size_t d, unsigned m);

// All exponent vectors alpha in N^d with |alpha| = m, in descending
// lexicographic order of alpha. Each monomial is stored as its m variable
// indices in non-decreasing order, e.g. x0^2 x1 -> {0, 0, 1}.
class MultiIndexSet {
public:
    MultiIndexSet(std::size_t dim, unsigned degree, std::vector<std::uint32_t> factors);

    unsigned degree() const noexcept { return degree_; }
    std::size_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return size_; }

    std::span<const std::uint32_t> factors(std::size_t i) const {
        return {factors_.data() + i * degree_, degree_};
    }
    std::vector<unsigned> exponents(std::size_t i) const;

    // x^alpha_i, multiplied left to right over the factor list.
    double evaluate(std::size_t i, const double* x) const {
        const std::uint32_t* f = factors_.data() + i * degree_;
        double v = x[f[0]];
        for (unsigned t = 1; t < degree_; ++t) {
            v *= x[f[t]];
        }
        return v;
    }

    void evaluate_all(const double* x, double* out) const {
        for (std::size_t i = 0; i < size_; ++i) {
            out[i] = evaluate(i, x);
        }
    }

private:
    std::size_t dim_;
    unsigned degree_;
    std::size_t size_;
    std::vector<std::uint32_t> factors_;
};

// Throws InvalidArgument for even/zero m and CapExceededError when q > cap.
MultiIndexSet enumerate_multi_indices(std::size_t d, unsigned m,
                                      std::uint64_t cap = ResourceLimits{}.index_cap);

enum class FeatureKind { Identity, Monomial, NeuralStack };

struct FeatureSet {
    Matrix data;
    FeatureKind kind = FeatureKind::Identity;
    SampleSet source;
};

FeatureSet poly_features(const SampleSet& s, const MultiIndexSet& idx);

// Features for rows [first, first + out.rows) written into `out` (q columns).
void poly_features_rows(const SampleSet& s, const MultiIndexSet& idx, std::size_t first,
                        MatrixView out);

// Theta^(1) ... Theta^(n): n square d x d matrices.
class NeuralStack {
public:
    NeuralStack(std::size_t dim, std::vector<Matrix> layers, RngHandle provenance = {});

    std::size_t dim() const noexcept { return dim_; }
    std::size_t depth() const noexcept { return layers_.size(); }
    const Matrix& layer(std::size_t k) const { return layers_.at(k); }
    const RngHandle& provenance() const noexcept { return provenance_; }

private:
    std::size_t dim_;
    std::vector<Matrix> layers_;
    RngHandle provenance_;
};

// Entries i.i.d. N(0, 1/d); layer k uses derive_stream(rng, "layer", k).
NeuralStack build_neural_stack(std::size_t d, std::size_t n, const RngHandle& rng);

// Row j becomes Theta^(1)(Theta^(2)(... Theta^(n) x_j)).
FeatureSet apply_neural_stack(const NeuralStack& stack, const SampleSet& s);

// Sorted inner products <theta, u_j> over the rows u_j.
Empirical1D project(ConstMatrixView features, const Direction& theta);
Empirical1D project(const FeatureSet& features, const Direction& theta);
Empirical1D project(const SampleSet& s, const Direction& theta);

// Unsorted inner products, row order preserved.
std::vector<double> project_values(ConstMatrixView features, const Direction& theta);

// Sorted ||x_j - t theta||.
Empirical1D project_circular(const SampleSet& s, const Direction& theta, double t);

}  // namespace gsw
