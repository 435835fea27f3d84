#include <gtest/gtest.h>

#include <cmath>

#include "gsw/datagen.hpp"
#include "gsw/error.hpp"
#include "gsw/kernels.hpp"
#include "gsw/montecarlo.hpp"
#include "support.hpp"

namespace gsw {
namespace {

McConfig config(std::size_t projections, std::uint64_t seed, double p = 2.0) {
    McConfig cfg;
    cfg.n_projections = projections;
    cfg.p = p;
    cfg.rng = root_stream(seed);
    return cfg;
}

std::vector<DefiningFunctionSpec> all_functions() {
    return {DefiningFunctionSpec::linear(), DefiningFunctionSpec::polynomial(3),
            DefiningFunctionSpec::polynomial(5), DefiningFunctionSpec::neural(0),
            DefiningFunctionSpec::neural(2), DefiningFunctionSpec::circular(1.0)};
}

double sample_std(const std::vector<double>& v) {
    double mean = 0.0;
    for (const double x : v) mean += x;
    mean /= static_cast<double>(v.size());
    double ss = 0.0;
    for (const double x : v) ss += (x - mean) * (x - mean);
    return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

TEST(McGsw, ParallelEqualsReferenceForEveryFunction) {
    const SampleSet mu = test::random_samples(150, 4, 1);
    const SampleSet nu = test::random_samples(150, 4, 2, 1.3, 0.4);
    for (const auto& g : all_functions()) {
        for (const double p : {1.0, 2.0, 3.0}) {
            const McConfig cfg = config(300, 17, p);
            EXPECT_EQ(mc_gsw(mu, nu, g, cfg), reference::mc_gsw(mu, nu, g, cfg))
                << to_string(g.kind) << " p=" << p;
        }
    }
}

TEST(McGsw, StreamingPolyPathEqualsMaterialized) {
    const SampleSet mu = test::random_samples(200, 5, 3);
    const SampleSet nu = test::random_samples(200, 5, 4, 0.7);
    McConfig cfg = config(150, 5);
    const double materialized = mc_gsw(mu, nu, DefiningFunctionSpec::polynomial(3), cfg);
    cfg.limits.feature_budget_bytes = 0;
    EXPECT_EQ(mc_gsw(mu, nu, DefiningFunctionSpec::polynomial(3), cfg), materialized);
}

TEST(McGsw, IndependentOfThreadCount) {
    const SampleSet mu = test::random_samples(300, 6, 5);
    const SampleSet nu = test::random_samples(300, 6, 6, 2.0);
    for (const auto& g : all_functions()) {
        kernels::set_thread_count(1);
        const double one = mc_gsw(mu, nu, g, config(260, 9));
        kernels::set_thread_count(4);
        const double four = mc_gsw(mu, nu, g, config(260, 9));
        kernels::set_thread_count(0);
        EXPECT_EQ(one, four) << to_string(g.kind);
    }
}

TEST(McGsw, IdentityAndSymmetry) {
    const SampleSet mu = test::random_samples(80, 3, 7);
    const SampleSet nu = test::random_samples(80, 3, 8, 1.0, 2.0);
    for (const auto& g : all_functions()) {
        EXPECT_EQ(mc_gsw(mu, mu, g, config(64, 1)), 0.0) << to_string(g.kind);
        const double ab = mc_gsw(mu, nu, g, config(64, 1));
        EXPECT_GT(ab, 0.0);
        EXPECT_EQ(ab, mc_gsw(nu, mu, g, config(64, 1))) << to_string(g.kind);
    }
}

TEST(McGsw, DegreeOnePolyEqualsLinear) {
    const SampleSet mu = test::random_samples(120, 7, 9);
    const SampleSet nu = test::random_samples(120, 7, 10, 1.5, -1.0);
    for (const std::uint64_t seed : {1u, 2u, 3u}) {
        EXPECT_EQ(mc_gsw(mu, nu, DefiningFunctionSpec::polynomial(1), config(500, seed)),
                  mc_gsw(mu, nu, DefiningFunctionSpec::linear(), config(500, seed)));
    }
}

TEST(McGsw, TermsMatchResult) {
    const SampleSet mu = test::random_samples(50, 3, 11);
    const SampleSet nu = test::random_samples(50, 3, 12, 2.0);
    const auto terms = mc_gsw_terms(mu, nu, DefiningFunctionSpec::linear(), config(40, 4));
    ASSERT_EQ(terms.size(), 40u);
    double sum = 0.0;
    for (const double t : terms) sum += t;
    EXPECT_DOUBLE_EQ(std::sqrt(sum / 40.0), mc_gsw(mu, nu, DefiningFunctionSpec::linear(), config(40, 4)));
}

TEST(McGsw, PointMassLaw) {
    std::vector<double> a(10), b(10);
    for (int i = 0; i < 10; ++i) {
        a[i] = 0.3 * i;
        b[i] = 1.0 - 0.1 * i * i;
    }
    const SampleSet mu = test::rows_of({a});
    const SampleSet nu = test::rows_of({b});
    double gap = 0.0;
    for (int i = 0; i < 10; ++i) gap += (a[i] - b[i]) * (a[i] - b[i]);
    const double expected = std::sqrt(gap / 10.0);
    EXPECT_NEAR(mc_gsw(mu, nu, DefiningFunctionSpec::linear(), config(20000, 42)), expected,
                0.02 * expected);
}

TEST(McGsw, OneDimensionalScaling) {
    // In one dimension every projection scales W2 by |theta| and E[theta^2] = 1.
    const SampleSet mu = test::random_samples(200, 1, 13);
    const SampleSet nu = test::random_samples(200, 1, 14, 1.7, 0.5);
    std::vector<double> a, b;
    for (std::size_t j = 0; j < 200; ++j) {
        a.push_back(mu.data()(j, 0));
        b.push_back(nu.data()(j, 0));
    }
    const double w2 = wasserstein_1d(Empirical1D(a), Empirical1D(b), 2.0);
    for (const std::uint64_t seed : {1u, 2u, 3u, 4u}) {
        const double sw = mc_gsw(mu, nu, DefiningFunctionSpec::linear(), config(4000, seed));
        EXPECT_NEAR(sw / w2, 1.0, 0.05);
    }
}

TEST(McGsw, SpreadShrinksWithMoreProjections) {
    const SampleSet mu = test::random_samples(200, 20, 15);
    const SampleSet nu = test::random_samples(200, 20, 16, 1.4, 0.3);
    std::vector<double> few, many;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        few.push_back(mc_gsw(mu, nu, DefiningFunctionSpec::linear(), config(250, seed)));
        many.push_back(mc_gsw(mu, nu, DefiningFunctionSpec::linear(), config(4000, seed)));
    }
    EXPECT_LT(sample_std(many), sample_std(few));
}

TEST(McGsw, SeedsAgreeWithinProjectionError) {
    const SampleSet mu = gen_gaussian(500, 10, 0.0, 1.0, root_stream(1));
    const SampleSet nu = gen_gaussian(500, 10, 0.0, 1.0, root_stream(2));
    const auto terms = mc_gsw_terms(mu, nu, DefiningFunctionSpec::linear(), config(20000, 1));
    const double a = mc_gsw(mu, nu, DefiningFunctionSpec::linear(), config(20000, 1));
    const double b = mc_gsw(mu, nu, DefiningFunctionSpec::linear(), config(20000, 2));
    // Standard error of the root via the delta method, doubled for a difference.
    const double se = sample_std(terms) / std::sqrt(20000.0) / (2.0 * a) * std::sqrt(2.0);
    EXPECT_LT(std::abs(a - b), 3.0 * se);
}

TEST(McGsw, Errors) {
    const SampleSet mu = test::random_samples(10, 3, 1);
    EXPECT_THROW(mc_gsw(mu, test::random_samples(10, 4, 1), DefiningFunctionSpec::linear(), config(5, 1)),
                 DimensionMismatchError);
    EXPECT_THROW(mc_gsw(mu, test::random_samples(11, 3, 1), DefiningFunctionSpec::linear(), config(5, 1)),
                 UnequalSupportError);
    EXPECT_THROW(mc_gsw(mu, mu, DefiningFunctionSpec::linear(), config(0, 1)), InvalidArgument);
    EXPECT_THROW(mc_gsw(mu, mu, DefiningFunctionSpec::linear(), config(5, 1, 0.5)), InvalidArgument);
    McConfig capped = config(5, 1);
    capped.limits.index_cap = 3;
    EXPECT_THROW(mc_gsw(mu, mu, DefiningFunctionSpec::polynomial(3), capped), CapExceededError);
}

}  // namespace
}  // namespace gsw
