#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oalstm/gan.hpp"
#include "grad_fixtures.hpp"
#include "test_support.hpp"

using namespace oalstm;
using oalstm::testing::finite_difference_check;
using oalstm::testing::noises;
using oalstm::testing::random_tensor;
using oalstm::testing::toy_params;

TEST(GanLosses, UniformDiscriminatorClosedForm) {
    const std::vector<double> half(5, 0.5);
    const auto l = gan_losses(half, half);
    EXPECT_DOUBLE_EQ(l.discriminator, 2.0 * std::numbers::ln2);
    EXPECT_DOUBLE_EQ(l.generator, std::numbers::ln2);
}

TEST(GanLosses, PerfectDiscriminatorLimit) {
    const std::vector<double> one(3, 1.0), zero(3, 0.0);
    const auto l = gan_losses(one, zero);
    EXPECT_LT(l.discriminator, 1e-6);
    EXPECT_THROW(gan_losses({}, zero), ArgumentError);
}

TEST(GanLosses, ScalarOracle) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(0.01, 0.99);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> r(7), f(4);
        for (auto& v : r) v = u(rng);
        for (auto& v : f) v = u(rng);
        double ld = 0, lg = 0;
        for (double v : r) ld -= std::log(v) / 7.0;
        for (double v : f) {
            ld -= std::log(1.0 - v) / 4.0;
            lg -= std::log(v) / 4.0;
        }
        const auto l = gan_losses(r, f);
        EXPECT_NEAR(l.discriminator, ld, 1e-12);
        EXPECT_NEAR(l.generator, lg, 1e-12);
    }
}

// The training losses work on logits; they must agree with the probability form.
TEST(GanLosses, LogitLossesAgreeWithProbabilityForm) {
    std::mt19937_64 rng(2);
    auto p = toy_params(1, 3);
    std::vector<Image> reals{random_tensor({1, 8, 8}, rng, 0, 1), random_tensor({1, 8, 8}, rng, 0, 1)};
    const auto z = noises(3, p.arch.noise_dim, rng);
    std::vector<double> dr, df;
    for (const auto& x : reals) dr.push_back(sigmoid(discriminator_logit(p, x)));
    for (const auto& n : z) df.push_back(sigmoid(discriminator_logit(p, generator_forward(p, n))));
    const auto l = gan_losses(dr, df);
    EXPECT_NEAR(discriminator_loss_grads(p, reals, z).loss, l.discriminator, 1e-12);
    EXPECT_NEAR(generator_loss_grads(p, z).loss, l.generator, 1e-12);
}

TEST(GanShapes, DeskAndToyArchitectures) {
    for (std::size_t c : {1u, 3u}) {
        const auto desk = GanArchitecture::desk(c);
        EXPECT_EQ(desk.generator_output_extent(), 32u);
        EXPECT_EQ(desk.discriminator_flat_size(), 16u * 7 * 7);
        const auto p = GanParams::random(desk, 1);
        std::mt19937_64 rng(1);
        EXPECT_EQ(generator_forward(p, sample_noise(desk.noise_dim, rng)).shape(), (Shape{c, 32, 32}));
        EXPECT_EQ(GanArchitecture::toy(c).generator_output_extent(), 8u);
    }
}

class GanGradient : public ::testing::TestWithParam<std::size_t> {};

TEST_P(GanGradient, DiscriminatorTensors) {
    const std::size_t c = GetParam();
    std::mt19937_64 rng(10 + c);
    auto p = toy_params(c, 20 + c);
    std::vector<Image> reals{random_tensor({c, 8, 8}, rng, 0, 1), random_tensor({c, 8, 8}, rng, 0, 1),
                             random_tensor({c, 8, 8}, rng, 0, 1)};
    const auto z = noises(3, p.arch.noise_dim, rng);
    const auto analytic = discriminator_loss_grads(p, reals, z);
    auto params = p.discriminator_tensors();
    for (std::size_t i = 0; i < params.size(); ++i) {
        const auto r = finite_difference_check(
            *params[i], analytic.grads[i], [&] { return discriminator_loss_grads(p, reals, z).loss; },
            "D" + std::to_string(i), 1e-5, 1e-3, 1e-8);
        EXPECT_EQ(r.failures, 0u) << r.worst;
    }
}

TEST_P(GanGradient, GeneratorTensors) {
    const std::size_t c = GetParam();
    std::mt19937_64 rng(30 + c);
    auto p = toy_params(c, 40 + c);
    const auto z = noises(4, p.arch.noise_dim, rng);
    const auto analytic = generator_loss_grads(p, z);
    auto params = p.generator_tensors();
    for (std::size_t i = 0; i < params.size(); ++i) {
        const auto r = finite_difference_check(
            *params[i], analytic.grads[i], [&] { return generator_loss_grads(p, z).loss; },
            "G" + std::to_string(i), 1e-5, 1e-3, 1e-8);
        EXPECT_EQ(r.failures, 0u) << r.worst;
    }
}

TEST_P(GanGradient, DiscriminatorInputGradient) {
    const std::size_t c = GetParam();
    std::mt19937_64 rng(50 + c);
    auto p = toy_params(c, 60 + c);
    Image x = random_tensor({c, 8, 8}, rng, 0, 1);
    DiscriminatorCache dc;
    discriminator_logit(p, x, &dc);
    const Tensor analytic = discriminator_backward(p, dc, 1.0, nullptr);
    const auto r = finite_difference_check(x, analytic, [&] { return discriminator_logit(p, x); }, "image", 1e-5,
                                           1e-3, 1e-8);
    EXPECT_EQ(r.failures, 0u) << r.worst;
}

INSTANTIATE_TEST_SUITE_P(Channels, GanGradient, ::testing::Values(1u, 3u));

// The full desk-size nets as well, on a subset of the cheapest tensors.
TEST(GanGradientDesk, GeneratorOutputLayerAndDiscriminatorDense) {
    std::mt19937_64 rng(70);
    auto p = GanParams::random(GanArchitecture::desk(1), 71);
    const auto z = noises(2, p.arch.noise_dim, rng);
    const auto ga = generator_loss_grads(p, z);
    auto gt = p.generator_tensors();
    const auto r1 = finite_difference_check(*gt.back(), ga.grads.back(), [&] { return generator_loss_grads(p, z).loss; },
                                            "g_out_bias", 1e-5, 1e-3, 1e-8);
    EXPECT_EQ(r1.failures, 0u) << r1.worst;
    std::vector<Image> reals{random_tensor({1, 32, 32}, rng, 0, 1)};
    const auto da = discriminator_loss_grads(p, reals, z);
    auto dt = p.discriminator_tensors();
    const auto r2 = finite_difference_check(*dt[1], da.grads[1], [&] { return discriminator_loss_grads(p, reals, z).loss; },
                                            "d_layer0_bias", 1e-5, 1e-3, 1e-8);
    EXPECT_EQ(r2.failures, 0u) << r2.worst;
}

TEST(GanTrain, ZeroStepsLeaveParams) {
    auto p = GanParams::random(GanArchitecture::toy(1), 5);
    const auto before = p;
    GanOptimizer opt(p, {});
    PositiveBank bank(4);
    bank.push(Image({1, 8, 8}, 0.4));
    std::mt19937_64 rng(1);
    train_gan(p, opt, bank, 0, rng);
    EXPECT_TRUE(p == before);
    PositiveBank empty(4);
    EXPECT_THROW(train_gan(p, opt, empty, 3, rng), ArgumentError);
}

TEST(GanTrain, DeterministicGivenSeed) {
    auto run = [] {
        auto p = GanParams::random(GanArchitecture::desk(1), 9);
        GanOptimizer opt(p, {});
        PositiveBank bank(8);
        std::mt19937_64 data(3);
        for (int i = 0; i < 5; ++i) bank.push(random_tensor({1, 32, 32}, data, 0, 1));
        std::mt19937_64 rng(42);
        train_gan(p, opt, bank, 5, rng);
        return p;
    };
    EXPECT_TRUE(run() == run());
}

TEST(GanTrain, SingleGrayPatchConverges) {
    const double gray = 0.35;
    auto p = GanParams::random(GanArchitecture::desk(1), 123);
    GanOptimizer opt(p, {});
    PositiveBank bank(256);
    bank.push(Image({1, 32, 32}, gray));
    std::mt19937_64 rng(7);
    train_gan(p, opt, bank, 500, rng);
    const auto samples = generate_positives(p, 64, rng);
    double mae = 0.0;
    for (const auto& s : samples)
        for (double v : s.data()) mae += std::abs(v - gray);
    mae /= 64.0 * 32 * 32;
    EXPECT_LT(mae, 0.15);
}

TEST(PositiveBankTest, FifoEviction) {
    PositiveBank b(3);
    for (int i = 0; i < 5; ++i) b.push(Image({1, 1, 1}, double(i)));
    ASSERT_EQ(b.size(), 3u);
    EXPECT_EQ(b.at(0)[0], 2.0);
    EXPECT_EQ(b.at(2)[0], 4.0);
    EXPECT_THROW(PositiveBank(0), ArgumentError);
}

TEST(GeneratePositives, CountRangeAndZeroNetwork) {
    auto p = GanParams::random(GanArchitecture::desk(1), 4);
    std::mt19937_64 a(5), b(5);
    const auto s1 = generate_positives(p, 64, a);
    const auto s2 = generate_positives(p, 64, b);
    ASSERT_EQ(s1.size(), 64u);
    for (std::size_t i = 0; i < 64; ++i) {
        EXPECT_EQ(s1[i], s2[i]);
        for (double v : s1[i].data()) {
            EXPECT_GE(v, 0.0);
            EXPECT_LE(v, 1.0);
        }
    }
    const auto z = GanParams::zeros(GanArchitecture::desk(1));
    for (const auto& s : generate_positives(z, 3, a))
        for (double v : s.data()) EXPECT_EQ(v, 0.5);
}

TEST(FeaturesForGenerated, ShapesDuplicatesAndTemplateEquality) {
    const auto e = Embedding::random(1, Embedding::default_architecture(), 3);
    std::mt19937_64 rng(6);
    const auto patch = random_tensor({1, 32, 32}, rng, 0, 1);
    const auto f = features_for_generated({patch, patch}, e, 71);
    ASSERT_EQ(f.shape(), (Shape{2, 8 * 17 * 17}));
    for (std::size_t k = 0; k < f.dim(1); ++k) ASSERT_EQ(f.at(0, k), f.at(1, k));
    const auto exemplar = random_tensor({1, 71, 71}, rng, 0, 1);
    const auto tf = e.embed(exemplar);
    const auto g = features_for_generated({exemplar}, e, 71);
    for (std::size_t k = 0; k < tf.size(); ++k) ASSERT_NEAR(g[k], tf[k], 1e-12);
}

TEST(GanParamsTest, NamedRoundTrip) {
    const auto p = GanParams::random(GanArchitecture::desk(3), 8);
    EXPECT_TRUE(GanParams::from_named(p.arch, decode_weights(encode_weights(p.to_named()))) == p);
}
