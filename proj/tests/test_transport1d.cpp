#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "gsw/error.hpp"
#include "gsw/transport1d.hpp"

namespace gsw {
namespace {

// Minimum over every bijection of the mean transport cost.
double brute_force_pow(std::vector<double> a, const std::vector<double>& b, double p) {
    std::vector<std::size_t> perm(a.size());
    std::iota(perm.begin(), perm.end(), 0);
    double best = INFINITY;
    do {
        double cost = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            cost += std::pow(std::abs(a[i] - b[perm[i]]), p);
        }
        best = std::min(best, cost / static_cast<double>(a.size()));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

TEST(Wasserstein1D, SmallExamples) {
    EXPECT_EQ(wasserstein_1d(Empirical1D({0, 1}), Empirical1D({0, 1}), 2.0), 0.0);
    EXPECT_DOUBLE_EQ(wasserstein_1d(Empirical1D({0}), Empirical1D({3}), 2.0), 3.0);
    EXPECT_DOUBLE_EQ(wasserstein_1d(Empirical1D({1, 3}), Empirical1D({6, 2}), 2.0), std::sqrt(5.0));
}

TEST(Wasserstein1D, MatchesBruteForceCoupling) {
    std::mt19937_64 eng(3);
    std::uniform_int_distribution<int> size(1, 6);
    std::normal_distribution<double> val(0.0, 2.0);
    for (int rep = 0; rep < 300; ++rep) {
        const int k = size(eng);
        std::vector<double> a(k);
        std::vector<double> b(k);
        for (int i = 0; i < k; ++i) {
            a[i] = val(eng);
            b[i] = val(eng) + 1.0;
        }
        for (const double p : {1.0, 1.5, 2.0, 3.0}) {
            const double expected = std::pow(brute_force_pow(a, b, p), 1.0 / p);
            EXPECT_NEAR(wasserstein_1d(Empirical1D(a), Empirical1D(b), p), expected, 1e-12)
                << "k=" << k << " p=" << p;
        }
    }
}

TEST(Wasserstein1D, MetricProperties) {
    std::mt19937_64 eng(8);
    std::normal_distribution<double> val;
    for (int rep = 0; rep < 50; ++rep) {
        std::vector<double> a(20), b(20), c(20);
        for (int i = 0; i < 20; ++i) {
            a[i] = val(eng);
            b[i] = 2.0 * val(eng);
            c[i] = val(eng) - 1.0;
        }
        const Empirical1D ea(a), eb(b), ec(c);
        EXPECT_EQ(wasserstein_1d(ea, eb, 2.0), wasserstein_1d(eb, ea, 2.0));
        EXPECT_LE(wasserstein_1d(ea, ec, 2.0),
                  wasserstein_1d(ea, eb, 2.0) + wasserstein_1d(eb, ec, 2.0) + 1e-12);
    }
}

TEST(Wasserstein1D, Errors) {
    EXPECT_THROW(Empirical1D({}), InvalidArgument);
    EXPECT_THROW(Empirical1D({1.0, NAN}), InvalidArgument);
    EXPECT_THROW(wasserstein_1d(Empirical1D({1, 2}), Empirical1D({1}), 2.0), UnequalSupportError);
    EXPECT_THROW(wasserstein_1d(Empirical1D({1}), Empirical1D({1}), 0.5), InvalidArgument);
}

TEST(Empirical1D, SortsAndAverages) {
    const Empirical1D e({3.0, -1.0, 2.0});
    EXPECT_TRUE(std::is_sorted(e.values().begin(), e.values().end()));
    EXPECT_DOUBLE_EQ(e.mean(), 4.0 / 3.0);
}

TEST(GaussianW2, ClosedForm) {
    EXPECT_EQ(w2_gaussian_zero_mean(Gaussian1D(1.0), Gaussian1D(1.0)), 0.0);
    EXPECT_DOUBLE_EQ(w2_gaussian_zero_mean(Gaussian1D(1.0), Gaussian1D(2.0)), std::sqrt(2.0) - 1.0);
    EXPECT_DOUBLE_EQ(w2_gaussian_zero_mean(Gaussian1D(0.0), Gaussian1D(4.0)), 2.0);
    EXPECT_THROW(Gaussian1D(-1.0), InvalidArgument);
}

TEST(MeanShift, Examples) {
    MeanShiftParts parts = mean_shift_decompose(Empirical1D({0, 2}), Empirical1D({5, 7}));
    EXPECT_NEAR(parts.centered_w2_sq, 0.0, 1e-15);
    EXPECT_DOUBLE_EQ(parts.mean_gap_sq, 25.0);
    parts = mean_shift_decompose(Empirical1D({0, 4}), Empirical1D({1, 3}));
    EXPECT_DOUBLE_EQ(parts.centered_w2_sq, 1.0);
    EXPECT_EQ(parts.mean_gap_sq, 0.0);
    parts = mean_shift_decompose(Empirical1D({1, 5, 2}), Empirical1D({1, 5, 2}));
    EXPECT_EQ(parts.centered_w2_sq, 0.0);
    EXPECT_EQ(parts.mean_gap_sq, 0.0);
}

TEST(MeanShift, SumsToSquaredDistance) {
    std::mt19937_64 eng(21);
    std::normal_distribution<double> val;
    for (int rep = 0; rep < 200; ++rep) {
        std::vector<double> a(31), b(31);
        for (int i = 0; i < 31; ++i) {
            a[i] = val(eng) + 3.0;
            b[i] = 0.5 * val(eng);
        }
        const Empirical1D ea(a), eb(b);
        const MeanShiftParts parts = mean_shift_decompose(ea, eb);
        const double w2sq = wasserstein_1d_pow(ea, eb, 2.0);
        EXPECT_NEAR(parts.centered_w2_sq + parts.mean_gap_sq, w2sq, 1e-10 * w2sq);
    }
}

}  // namespace
}  // namespace gsw
