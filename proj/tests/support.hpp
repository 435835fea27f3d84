#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "gsw/core.hpp"

namespace gsw::test {

inline Matrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed,
                            double scale = 1.0) {
    std::mt19937_64 eng(seed);
    std::normal_distribution<double> dist(0.0, scale);
    Matrix m(rows, cols);
    for (double& v : m.values()) {
        v = dist(eng);
    }
    return m;
}

inline SampleSet random_samples(std::size_t n, std::size_t d, std::uint64_t seed,
                                double scale = 1.0, double shift = 0.0) {
    Matrix m = random_matrix(n, d, seed, scale);
    for (double& v : m.values()) {
        v += shift;
    }
    return SampleSet(std::move(m));
}

inline SampleSet rows_of(std::vector<std::vector<double>> rows) {
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            m(i, j) = rows[i][j];
        }
    }
    return SampleSet(std::move(m));
}

}  // namespace gsw::test
