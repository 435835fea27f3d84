#include <gtest/gtest.h>

#include <cmath>

#include "gsw/kernels.hpp"
#include "support.hpp"

namespace gsw {
namespace {

class ThreadCount : public ::testing::TestWithParam<int> {
protected:
    void SetUp() override { kernels::set_thread_count(GetParam()); }
    void TearDown() override { kernels::set_thread_count(0); }
};

TEST_P(ThreadCount, MatmulEqualsSerialBitForBit) {
    for (const auto& [n, k, p] : {std::tuple{1, 1, 1}, std::tuple{5, 3, 17}, std::tuple{67, 300, 33},
                                  std::tuple{130, 513, 129}, std::tuple{4, 16, 16}}) {
        const Matrix a = test::random_matrix(n, k, 1 + n);
        const Matrix b = test::random_matrix(k, p, 2 + p);
        Matrix fast(n, p);
        Matrix local(n, p);
        Matrix slow(n, p);
        kernels::matmul(a, b, fast);
        kernels::matmul_local(a, b, local);
        kernels::serial::matmul(a, b, slow);
        EXPECT_EQ(fast, slow) << n << "x" << k << "x" << p;
        EXPECT_EQ(local, slow);
        for (int r = 0; r < n; ++r) {
            for (int c = 0; c < p; ++c) {
                double naive = 0.0;
                for (int t = 0; t < k; ++t) {
                    naive += a(r, t) * b(t, c);
                }
                ASSERT_NEAR(slow(r, c), naive, 1e-11 * k);
            }
        }
    }
}

TEST_P(ThreadCount, MatmulOnStridedViews) {
    const Matrix a = test::random_matrix(40, 30, 3);
    const Matrix b = test::random_matrix(20, 25, 4);
    const ConstMatrixView av(a.values().data() + 5, 10, 20, a.cols());
    Matrix fast(10, 25);
    Matrix slow(10, 25);
    kernels::matmul(av, b, fast);
    kernels::serial::matmul(av, b, slow);
    EXPECT_EQ(fast, slow);
}

TEST_P(ThreadCount, ColumnMomentsEqualSerial) {
    const Matrix x = test::random_matrix(1001, 150, 9, 3.0);
    const ColumnMoments fast = kernels::column_moments(x);
    const ColumnMoments slow = kernels::serial::column_moments(x);
    EXPECT_EQ(fast.n_rows, 1001u);
    EXPECT_EQ(fast.sum, slow.sum);
    EXPECT_EQ(fast.sum_sq, slow.sum_sq);
    EXPECT_EQ(kernels::row_sq_norms(x), kernels::serial::row_sq_norms(x));
}

TEST_P(ThreadCount, PairStatsEqualSerialAndNaive) {
    for (const int n : {2, 3, 70, 600}) {
        const Matrix x = test::random_matrix(n, 11, 100 + n);
        const kernels::PairStats fast = kernels::pair_inner_stats(x);
        const kernels::PairStats slow = kernels::serial::pair_inner_stats(x);
        EXPECT_EQ(fast.sum_abs, slow.sum_abs);
        EXPECT_EQ(fast.sum_sq, slow.sum_sq);
        EXPECT_EQ(fast.pairs, static_cast<std::uint64_t>(n) * (n - 1) / 2);
        double abs_sum = 0.0;
        double sq_sum = 0.0;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                double ip = 0.0;
                for (int c = 0; c < 11; ++c) {
                    ip += x(i, c) * x(j, c);
                }
                abs_sum += std::abs(ip);
                sq_sum += ip * ip;
            }
        }
        EXPECT_NEAR(fast.sum_abs, abs_sum, 1e-10 * abs_sum);
        EXPECT_NEAR(fast.sum_sq, sq_sum, 1e-10 * sq_sum);
    }
}

INSTANTIATE_TEST_SUITE_P(Threads, ThreadCount, ::testing::Values(1, 2, 3, 8));

}  // namespace
}  // namespace gsw
