#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "gsw/datagen.hpp"
#include "gsw/error.hpp"
#include "gsw/kernels.hpp"

namespace gsw {
namespace {

double lag1_pooled(const Matrix& x) {
    double grand = 0.0;
    for (const double v : x.values()) grand += v;
    grand /= static_cast<double>(x.values().size());
    double num = 0.0;
    double den = 0.0;
    for (std::size_t r = 0; r < x.rows(); ++r) {
        for (std::size_t c = 0; c < x.cols(); ++c) {
            const double a = x(r, c) - grand;
            den += a * a;
            if (c + 1 < x.cols()) num += a * (x(r, c + 1) - grand);
        }
    }
    const double pairs = static_cast<double>(x.rows() * (x.cols() - 1));
    const double cells = static_cast<double>(x.rows() * x.cols());
    return (num / pairs) / (den / cells);
}

TEST(GenGaussian, ColumnMomentsStandard) {
    const SampleSet s = gen_gaussian(10000, 50, 0.0, 1.0, root_stream(1));
    for (std::size_t c = 0; c < 50; ++c) {
        double mean = 0.0;
        for (std::size_t r = 0; r < 10000; ++r) mean += s.data()(r, c);
        mean /= 10000.0;
        double var = 0.0;
        for (std::size_t r = 0; r < 10000; ++r) var += std::pow(s.data()(r, c) - mean, 2);
        var /= 9999.0;
        EXPECT_NEAR(mean, 0.0, 0.04);
        EXPECT_NEAR(var, 1.0, 0.06);
    }
}

TEST(GenGaussian, CovarianceScalesAboutTheMean) {
    const SampleSet a = gen_gaussian(100, 6, 1.5, 1.0, root_stream(2));
    const SampleSet b = gen_gaussian(100, 6, 1.5, 2.0, root_stream(2));
    for (std::size_t r = 0; r < 100; ++r) {
        for (std::size_t c = 0; c < 6; ++c) {
            EXPECT_NEAR(b.data()(r, c) - 1.5, std::sqrt(2.0) * (a.data()(r, c) - 1.5), 1e-12);
        }
    }
}

TEST(GenGaussian, VectorMeanAndSingleRow) {
    const std::vector<double> mean{1.0, -2.0, 3.0};
    const SampleSet one = gen_gaussian(1, 3, mean, 1.0, root_stream(3));
    EXPECT_EQ(one.n_samples(), 1u);
    EXPECT_EQ(one.data(), gen_gaussian(1, 3, mean, 1.0, root_stream(3)).data());
    const std::vector<double> wrong{1.0, 2.0};
    EXPECT_THROW(gen_gaussian(2, 3, wrong, 1.0, root_stream(3)), DimensionMismatchError);
    EXPECT_THROW(gen_gaussian(2, 3, 0.0, 0.0, root_stream(3)), InvalidArgument);
}

TEST(GenGamma, Means) {
    const auto grand_mean = [](const SampleSet& s) {
        double total = 0.0;
        for (const double v : s.data().values()) total += v;
        return total / static_cast<double>(s.data().values().size());
    };
    const SampleSet two = gen_gamma(10000, 10, 1.0, 2.0, root_stream(4));
    const SampleSet three = gen_gamma(10000, 10, 1.0, 3.0, root_stream(5));
    EXPECT_NEAR(grand_mean(two), 2.0, 0.05);
    EXPECT_NEAR(grand_mean(three), 3.0, 0.08);
    for (const double v : two.data().values()) ASSERT_GT(v, 0.0);
    EXPECT_THROW(gen_gamma(2, 2, 0.0, 1.0, root_stream(1)), InvalidArgument);
}

TEST(GenAr1, WhiteNoiseHasNoLagCorrelation) {
    Ar1Config cfg;
    cfg.alpha = 0.0;
    cfg.dim = 10000;
    cfg.burn_in = 0;
    const SampleSet s = gen_ar1(1, cfg, root_stream(6));
    EXPECT_NEAR(lag1_pooled(s.data()), 0.0, 0.03);
}

TEST(GenAr1, StationaryVariance) {
    Ar1Config cfg;
    cfg.alpha = 0.5;
    cfg.dim = 8;
    const SampleSet s = gen_ar1(10000, cfg, root_stream(7));
    for (std::size_t c = 0; c < 8; ++c) {
        double mean = 0.0;
        for (std::size_t r = 0; r < 10000; ++r) mean += s.data()(r, c);
        mean /= 10000.0;
        double var = 0.0;
        for (std::size_t r = 0; r < 10000; ++r) var += std::pow(s.data()(r, c) - mean, 2);
        EXPECT_NEAR(var / 9999.0, 4.0 / 3.0, 0.07);
    }
}

TEST(GenAr1, StrongDependence) {
    Ar1Config cfg;
    cfg.alpha = 0.9;
    cfg.dim = 100;
    cfg.burn_in = 1000;
    const SampleSet s = gen_ar1(10000, cfg, root_stream(8));
    EXPECT_NEAR(lag1_pooled(s.data()), 0.9, 0.03);
}

TEST(GenAr1, RowsIndependent) {
    Ar1Config cfg;
    cfg.alpha = 0.5;
    cfg.dim = 4;
    cfg.burn_in = 100;
    const SampleSet s = gen_ar1(10000, cfg, root_stream(9));
    double num = 0.0, den = 0.0;
    for (std::size_t r = 0; r + 1 < 10000; r += 2) {
        num += s.data()(r, 2) * s.data()(r + 1, 2);
        den += 0.5 * (std::pow(s.data()(r, 2), 2) + std::pow(s.data()(r + 1, 2), 2));
    }
    EXPECT_NEAR(num / den, 0.0, 0.05);
}

TEST(GenAr1, StudentNoiseHasFiniteSpread) {
    Ar1Config cfg;
    cfg.alpha = 0.5;
    cfg.noise = NoiseKind::StudentT;
    cfg.df = 5.0;
    cfg.dim = 1;
    cfg.burn_in = 200;
    std::vector<double> spreads;
    for (const std::size_t n : {2000u, 8000u}) {
        const SampleSet s = gen_ar1(n, cfg, root_stream(10));
        std::vector<double> v(s.data().values().begin(), s.data().values().end());
        std::sort(v.begin(), v.end());
        spreads.push_back(v[3 * n / 4] - v[n / 4]);
        double var = 0.0;
        for (const double x : v) var += x * x;
        var /= static_cast<double>(n);
        // Raw t_5 innovations have variance 5/3; stationary variance is that over 1 - alpha^2.
        EXPECT_NEAR(var, (5.0 / 3.0) / 0.75, 0.4);
    }
    EXPECT_NEAR(spreads[0], spreads[1], 0.25 * spreads[1]);
}

TEST(GenAr1, Validation) {
    Ar1Config cfg;
    cfg.alpha = 1.0;
    EXPECT_THROW(cfg.validate(), InvalidArgument);
    cfg.alpha = -0.1;
    EXPECT_THROW(cfg.validate(), InvalidArgument);
    cfg.alpha = 0.5;
    cfg.sigma = 0.0;
    EXPECT_THROW(cfg.validate(), InvalidArgument);
    cfg.noise = NoiseKind::StudentT;
    EXPECT_NO_THROW(cfg.validate());
    cfg.df = 2.0;
    EXPECT_THROW(cfg.validate(), InvalidArgument);
}

TEST(Generators, ReproducibleAndThreadIndependent) {
    Ar1Config cfg;
    cfg.dim = 7;
    cfg.burn_in = 50;
    kernels::set_thread_count(1);
    const SampleSet g1 = gen_gaussian(500, 9, 0.0, 1.0, root_stream(11));
    const SampleSet m1 = gen_gamma(500, 9, 2.0, 1.0, root_stream(11));
    const SampleSet a1 = gen_ar1(500, cfg, root_stream(11));
    kernels::set_thread_count(4);
    EXPECT_EQ(gen_gaussian(500, 9, 0.0, 1.0, root_stream(11)).data(), g1.data());
    EXPECT_EQ(gen_gamma(500, 9, 2.0, 1.0, root_stream(11)).data(), m1.data());
    EXPECT_EQ(gen_ar1(500, cfg, root_stream(11)).data(), a1.data());
    kernels::set_thread_count(0);
    EXPECT_NE(gen_gaussian(500, 9, 0.0, 1.0, root_stream(12)).data(), g1.data());
}

}  // namespace
}  // namespace gsw
