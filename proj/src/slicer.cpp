#include "gsw/slicer.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "gsw/error.hpp"
#include "gsw/kernels.hpp"

namespace gsw {

Direction sample_direction(std::size_t ambient_dim, const RngHandle& rng) {
    if (ambient_dim == 0) {
        throw InvalidArgument("direction dimension must be positive");
    }
    Direction theta{std::vector<double>(ambient_dim)};
    fill_normal(theta.coords, 1.0 / static_cast<double>(ambient_dim), rng);
    return theta;
}

std::uint64_t multi_index_count(std::size_t d, unsigned m) {
    if (d == 0) {
        return 0;
    }
    // prod_{i=1..m} (d - 1 + i) / i; every prefix is itself a binomial.
    unsigned __int128 r = 1;
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    for (unsigned i = 1; i <= m; ++i) {
        r = r * (d - 1 + i) / i;
        if (r > kMax) {
            return kMax;
        }
    }
    return static_cast<std::uint64_t>(r);
}

MultiIndexSet::MultiIndexSet(std::size_t dim, unsigned degree, std::vector<std::uint32_t> factors)
    : dim_(dim), degree_(degree), size_(degree ? factors.size() / degree : 0),
      factors_(std::move(factors)) {
    if (dim_ == 0 || degree_ == 0 || factors_.size() != size_ * degree_) {
        throw InvalidArgument("malformed multi-index set");
    }
}

std::vector<unsigned> MultiIndexSet::exponents(std::size_t i) const {
    std::vector<unsigned> alpha(dim_, 0);
    for (const auto v : factors(i)) {
        ++alpha[v];
    }
    return alpha;
}

MultiIndexSet enumerate_multi_indices(std::size_t d, unsigned m, std::uint64_t cap) {
    if (d == 0) {
        throw InvalidArgument("dimension must be positive");
    }
    if (m == 0 || m % 2 == 0) {
        throw InvalidArgument("polynomial degree must be an odd positive integer, got " +
                              std::to_string(m));
    }
    const std::uint64_t q = multi_index_count(d, m);
    if (q > cap) {
        throw CapExceededError("monomial count q = " + std::to_string(q) + " exceeds cap " +
                                   std::to_string(cap) + " (d = " + std::to_string(d) +
                                   ", m = " + std::to_string(m) + ")",
                               q);
    }
    // Non-decreasing index tuples in lexicographic order correspond to
    // exponent vectors in descending lexicographic order.
    std::vector<std::uint32_t> factors;
    factors.reserve(static_cast<std::size_t>(q) * m);
    std::vector<std::uint32_t> cur(m, 0);
    const auto last = static_cast<std::uint32_t>(d - 1);
    while (true) {
        factors.insert(factors.end(), cur.begin(), cur.end());
        int pos = static_cast<int>(m) - 1;
        while (pos >= 0 && cur[static_cast<std::size_t>(pos)] == last) {
            --pos;
        }
        if (pos < 0) {
            break;
        }
        const std::uint32_t next = cur[static_cast<std::size_t>(pos)] + 1;
        for (auto t = static_cast<std::size_t>(pos); t < m; ++t) {
            cur[t] = next;
        }
    }
    return MultiIndexSet(d, m, std::move(factors));
}

void poly_features_rows(const SampleSet& s, const MultiIndexSet& idx, std::size_t first,
                        MatrixView out) {
    for (std::size_t r = 0; r < out.rows; ++r) {
        idx.evaluate_all(s.row(first + r).data(), out.row(r));
    }
}

FeatureSet poly_features(const SampleSet& s, const MultiIndexSet& idx) {
    if (s.dim() != idx.dim()) {
        throw DimensionMismatchError("sample dimension " + std::to_string(s.dim()) +
                                     " does not match multi-index dimension " +
                                     std::to_string(idx.dim()));
    }
    Matrix data(s.n_samples(), idx.size());
    const auto n = static_cast<std::ptrdiff_t>(s.n_samples());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t j = 0; j < n; ++j) {
        idx.evaluate_all(s.row(static_cast<std::size_t>(j)).data(),
                         data.row(static_cast<std::size_t>(j)).data());
    }
    return {std::move(data), FeatureKind::Monomial, s};
}

NeuralStack::NeuralStack(std::size_t dim, std::vector<Matrix> layers, RngHandle provenance)
    : dim_(dim), layers_(std::move(layers)), provenance_(provenance) {
    if (dim_ == 0) {
        throw InvalidArgument("neural stack dimension must be positive");
    }
    for (const auto& layer : layers_) {
        if (layer.rows() != dim_ || layer.cols() != dim_) {
            throw DimensionMismatchError("neural stack layers must be " + std::to_string(dim_) +
                                         " x " + std::to_string(dim_));
        }
    }
}

NeuralStack build_neural_stack(std::size_t d, std::size_t n, const RngHandle& rng) {
    if (d == 0) {
        throw InvalidArgument("neural stack dimension must be positive");
    }
    std::vector<Matrix> layers;
    layers.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        Matrix theta(d, d);
        fill_normal(theta.values(), 1.0 / static_cast<double>(d), derive_stream(rng, "layer", k));
        layers.push_back(std::move(theta));
    }
    return NeuralStack(d, std::move(layers), rng);
}

FeatureSet apply_neural_stack(const NeuralStack& stack, const SampleSet& s) {
    if (stack.dim() != s.dim()) {
        throw DimensionMismatchError("neural stack dimension " + std::to_string(stack.dim()) +
                                     " does not match sample dimension " +
                                     std::to_string(s.dim()));
    }
    Matrix current = s.data();
    // Innermost layer first: x -> Theta^(n) x -> ... -> Theta^(1) (...).
    for (std::size_t k = stack.depth(); k-- > 0;) {
        const Matrix weights_t = stack.layer(k).transposed();
        Matrix next(current.rows(), current.cols());
        kernels::matmul(current, weights_t, next);
        current = std::move(next);
    }
    return {std::move(current), FeatureKind::NeuralStack, s};
}

std::vector<double> project_values(ConstMatrixView features, const Direction& theta) {
    if (theta.ambient_dim() != features.cols) {
        throw DimensionMismatchError("direction has " + std::to_string(theta.ambient_dim()) +
                                     " coordinates but features have " +
                                     std::to_string(features.cols) + " columns");
    }
    std::vector<double> out(features.rows);
    for (std::size_t j = 0; j < features.rows; ++j) {
        out[j] = kernels::serial::dot(features.row(j), theta.coords.data(), features.cols);
    }
    return out;
}

Empirical1D project(ConstMatrixView features, const Direction& theta) {
    return Empirical1D(project_values(features, theta));
}

Empirical1D project(const FeatureSet& features, const Direction& theta) {
    return project(ConstMatrixView(features.data), theta);
}

Empirical1D project(const SampleSet& s, const Direction& theta) {
    return project(ConstMatrixView(s.data()), theta);
}

Empirical1D project_circular(const SampleSet& s, const Direction& theta, double t) {
    if (theta.ambient_dim() != s.dim()) {
        throw DimensionMismatchError("direction has " + std::to_string(theta.ambient_dim()) +
                                     " coordinates but samples have dimension " +
                                     std::to_string(s.dim()));
    }
    if (!(t > 0.0)) {
        throw InvalidArgument("circular radius t must be positive");
    }
    std::vector<double> out(s.n_samples());
    for (std::size_t j = 0; j < s.n_samples(); ++j) {
        const auto x = s.row(j);
        double acc = 0.0;
        for (std::size_t k = 0; k < x.size(); ++k) {
            const double diff = x[k] - t * theta.coords[k];
            acc = kernels::madd(diff, diff, acc);
        }
        out[j] = std::sqrt(acc);
    }
    return Empirical1D(std::move(out));
}

}  // namespace gsw
