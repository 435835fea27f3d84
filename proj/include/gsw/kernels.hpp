#pragma once

// Data-parallel building blocks. Every kernel here has a serial twin in
// gsw::kernels::serial that performs the same floating-point operations in
// the same order, so the two agree bit-for-bit for any thread count.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "gsw/core.hpp"
#include "gsw/matrix.hpp"

namespace gsw::kernels {

// Multiply-accumulate used by every reduction in the library.
inline double madd(double a, double b, double acc) {
#if defined(__FMA__)
    return std::fma(a, b, acc);
#else
    return a * b + acc;
#endif
}

// c = a * b for row-major a (N x K) and b (K x P). Each entry is the madd
// chain over k = 0..K-1 starting from zero.
void matmul(ConstMatrixView a, ConstMatrixView b, MatrixView c);

// Single-threaded tiled product; safe to call from inside a parallel region.
void matmul_local(ConstMatrixView a, ConstMatrixView b, MatrixView c);

ColumnMoments column_moments(ConstMatrixView x);

std::vector<double> row_sq_norms(ConstMatrixView x);

// Sums of |<x_j, x_k>| and <x_j, x_k>^2 over unordered pairs j < k.
struct PairStats {
    double sum_abs = 0.0;
    double sum_sq = 0.0;
    std::uint64_t pairs = 0;
};

PairStats pair_inner_stats(ConstMatrixView x);

// Sets the OpenMP team size for subsequent kernels (0 = runtime default).
void set_thread_count(int threads);
int thread_count();

namespace serial {

void matmul(ConstMatrixView a, ConstMatrixView b, MatrixView c);
ColumnMoments column_moments(ConstMatrixView x);
std::vector<double> row_sq_norms(ConstMatrixView x);
PairStats pair_inner_stats(ConstMatrixView x);

inline double dot(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        acc = madd(a[k], b[k], acc);
    }
    return acc;
}

}  // namespace serial

}  // namespace gsw::kernels
