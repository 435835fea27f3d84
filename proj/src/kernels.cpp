#include "gsw/kernels.hpp"

#include <algorithm>
#include <cmath>

#include <omp.h>

namespace gsw::kernels {

namespace {

constexpr std::size_t kTileRows = 4;
constexpr std::size_t kTileCols = 16;
constexpr std::size_t kDepthChunk = 256;
constexpr std::size_t kRowChunk = 64;

// Full 4 x 16 register tile over depth [k0, k1).
inline void tile_full(ConstMatrixView a, ConstMatrixView b, MatrixView c, std::size_t r0,
                      std::size_t c0, std::size_t k0, std::size_t k1) {
    double acc[kTileRows][kTileCols];
    for (std::size_t r = 0; r < kTileRows; ++r) {
        const double* crow = c.row(r0 + r) + c0;
        for (std::size_t q = 0; q < kTileCols; ++q) {
            acc[r][q] = k0 == 0 ? 0.0 : crow[q];
        }
    }
    const double* a0 = a.row(r0);
    const double* a1 = a.row(r0 + 1);
    const double* a2 = a.row(r0 + 2);
    const double* a3 = a.row(r0 + 3);
    for (std::size_t k = k0; k < k1; ++k) {
        const double* brow = b.row(k) + c0;
        const double v0 = a0[k];
        const double v1 = a1[k];
        const double v2 = a2[k];
        const double v3 = a3[k];
#pragma omp simd
        for (std::size_t q = 0; q < kTileCols; ++q) {
            const double bv = brow[q];
            acc[0][q] = madd(v0, bv, acc[0][q]);
            acc[1][q] = madd(v1, bv, acc[1][q]);
            acc[2][q] = madd(v2, bv, acc[2][q]);
            acc[3][q] = madd(v3, bv, acc[3][q]);
        }
    }
    for (std::size_t r = 0; r < kTileRows; ++r) {
        double* crow = c.row(r0 + r) + c0;
        for (std::size_t q = 0; q < kTileCols; ++q) {
            crow[q] = acc[r][q];
        }
    }
}

// Ragged edge tile; same madd chain per entry as tile_full.
inline void tile_edge(ConstMatrixView a, ConstMatrixView b, MatrixView c, std::size_t r0,
                      std::size_t nr, std::size_t c0, std::size_t nc, std::size_t k0,
                      std::size_t k1) {
    for (std::size_t r = 0; r < nr; ++r) {
        const double* arow = a.row(r0 + r);
        double* crow = c.row(r0 + r) + c0;
        for (std::size_t q = 0; q < nc; ++q) {
            double acc = k0 == 0 ? 0.0 : crow[q];
            for (std::size_t k = k0; k < k1; ++k) {
                acc = madd(arow[k], b.row(k)[c0 + q], acc);
            }
            crow[q] = acc;
        }
    }
}

void matmul_rows(ConstMatrixView a, ConstMatrixView b, MatrixView c, std::size_t row_begin,
                 std::size_t row_end) {
    const std::size_t depth = a.cols;
    const std::size_t width = b.cols;
    if (depth == 0) {
        for (std::size_t r = row_begin; r < row_end; ++r) {
            std::fill(c.row(r), c.row(r) + width, 0.0);
        }
        return;
    }
    for (std::size_t k0 = 0; k0 < depth; k0 += kDepthChunk) {
        const std::size_t k1 = std::min(depth, k0 + kDepthChunk);
        std::size_t r0 = row_begin;
        for (; r0 + kTileRows <= row_end; r0 += kTileRows) {
            std::size_t c0 = 0;
            for (; c0 + kTileCols <= width; c0 += kTileCols) {
                tile_full(a, b, c, r0, c0, k0, k1);
            }
            if (c0 < width) {
                tile_edge(a, b, c, r0, kTileRows, c0, width - c0, k0, k1);
            }
        }
        if (r0 < row_end) {
            tile_edge(a, b, c, r0, row_end - r0, 0, width, k0, k1);
        }
    }
}

}  // namespace

void set_thread_count(int threads) {
    if (threads > 0) {
        omp_set_num_threads(threads);
    }
}

int thread_count() { return omp_get_max_threads(); }

void matmul_local(ConstMatrixView a, ConstMatrixView b, MatrixView c) {
    matmul_rows(a, b, c, 0, a.rows);
}

void matmul(ConstMatrixView a, ConstMatrixView b, MatrixView c) {
    const std::size_t n = a.rows;
    const auto chunks = static_cast<std::ptrdiff_t>((n + kRowChunk - 1) / kRowChunk);
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t ch = 0; ch < chunks; ++ch) {
        const std::size_t begin = static_cast<std::size_t>(ch) * kRowChunk;
        matmul_rows(a, b, c, begin, std::min(n, begin + kRowChunk));
    }
}

ColumnMoments column_moments(ConstMatrixView x) {
    ColumnMoments out{x.rows, std::vector<double>(x.cols, 0.0), std::vector<double>(x.cols, 0.0)};
    constexpr std::size_t kColBlock = 64;
    const auto blocks = static_cast<std::ptrdiff_t>((x.cols + kColBlock - 1) / kColBlock);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t blk = 0; blk < blocks; ++blk) {
        const std::size_t c0 = static_cast<std::size_t>(blk) * kColBlock;
        const std::size_t c1 = std::min(x.cols, c0 + kColBlock);
        double* s = out.sum.data();
        double* ss = out.sum_sq.data();
        for (std::size_t j = 0; j < x.rows; ++j) {
            const double* row = x.row(j);
            for (std::size_t c = c0; c < c1; ++c) {
                const double v = row[c];
                s[c] += v;
                ss[c] = madd(v, v, ss[c]);
            }
        }
    }
    return out;
}

std::vector<double> row_sq_norms(ConstMatrixView x) {
    std::vector<double> out(x.rows);
    const auto n = static_cast<std::ptrdiff_t>(x.rows);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t j = 0; j < n; ++j) {
        const double* row = x.row(static_cast<std::size_t>(j));
        out[static_cast<std::size_t>(j)] = serial::dot(row, row, x.cols);
    }
    return out;
}

PairStats pair_inner_stats(ConstMatrixView x) {
    const std::size_t n = x.rows;
    PairStats stats;
    if (n < 2) {
        return stats;
    }
    const std::size_t depth = x.cols;
    Matrix xt(depth, n);
    for (std::size_t j = 0; j < n; ++j) {
        const double* row = x.row(j);
        for (std::size_t k = 0; k < depth; ++k) {
            xt(k, j) = row[k];
        }
    }

    constexpr std::size_t kColChunk = 512;
    std::vector<double> row_abs(n, 0.0);
    std::vector<double> row_sq(n, 0.0);
    const auto chunks = static_cast<std::ptrdiff_t>((n + kRowChunk - 1) / kRowChunk);
#pragma omp parallel
    {
        std::vector<double> gram(kRowChunk * kColChunk);
#pragma omp for schedule(dynamic)
        for (std::ptrdiff_t ch = 0; ch < chunks; ++ch) {
            const std::size_t r0 = static_cast<std::size_t>(ch) * kRowChunk;
            const std::size_t r1 = std::min(n, r0 + kRowChunk);
            // Columns below r0 + 1 never contribute (pairs need col > row).
            for (std::size_t c0 = (r0 + 1) / kColChunk * kColChunk; c0 < n; c0 += kColChunk) {
                const std::size_t c1 = std::min(n, c0 + kColChunk);
                const std::size_t width = c1 - c0;
                MatrixView g(gram.data(), r1 - r0, width, width);
                ConstMatrixView lhs = x.row_block(r0, r1 - r0);
                ConstMatrixView rhs(xt.values().data() + c0, depth, width, n);
                matmul_rows(lhs, rhs, g, 0, r1 - r0);
                for (std::size_t r = r0; r < r1; ++r) {
                    const double* grow = g.row(r - r0);
                    double sa = row_abs[r];
                    double sq = row_sq[r];
                    for (std::size_t c = std::max(c0, r + 1); c < c1; ++c) {
                        const double v = grow[c - c0];
                        sa += std::abs(v);
                        sq = madd(v, v, sq);
                    }
                    row_abs[r] = sa;
                    row_sq[r] = sq;
                }
            }
        }
    }
    for (std::size_t r = 0; r < n; ++r) {
        stats.sum_abs += row_abs[r];
        stats.sum_sq += row_sq[r];
    }
    stats.pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    return stats;
}

namespace serial {

void matmul(ConstMatrixView a, ConstMatrixView b, MatrixView c) {
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t p = 0; p < b.cols; ++p) {
            double acc = 0.0;
            for (std::size_t k = 0; k < a.cols; ++k) {
                acc = madd(a.row(i)[k], b.row(k)[p], acc);
            }
            c.row(i)[p] = acc;
        }
    }
}

ColumnMoments column_moments(ConstMatrixView x) {
    ColumnMoments out{x.rows, std::vector<double>(x.cols, 0.0), std::vector<double>(x.cols, 0.0)};
    for (std::size_t c = 0; c < x.cols; ++c) {
        double s = 0.0;
        double ss = 0.0;
        for (std::size_t j = 0; j < x.rows; ++j) {
            const double v = x.row(j)[c];
            s += v;
            ss = madd(v, v, ss);
        }
        out.sum[c] = s;
        out.sum_sq[c] = ss;
    }
    return out;
}

std::vector<double> row_sq_norms(ConstMatrixView x) {
    std::vector<double> out(x.rows);
    for (std::size_t j = 0; j < x.rows; ++j) {
        out[j] = dot(x.row(j), x.row(j), x.cols);
    }
    return out;
}

PairStats pair_inner_stats(ConstMatrixView x) {
    PairStats stats;
    const std::size_t n = x.rows;
    for (std::size_t j = 0; j < n; ++j) {
        double sa = 0.0;
        double sq = 0.0;
        for (std::size_t k = j + 1; k < n; ++k) {
            const double v = dot(x.row(j), x.row(k), x.cols);
            sa += std::abs(v);
            sq = madd(v, v, sq);
        }
        stats.sum_abs += sa;
        stats.sum_sq += sq;
    }
    stats.pairs = n < 2 ? 0 : static_cast<std::uint64_t>(n) * (n - 1) / 2;
    return stats;
}

}  // namespace serial

}  // namespace gsw::kernels
