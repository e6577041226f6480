#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oalstm/adam.hpp"
#include "oalstm/kernels.hpp"
#include "oalstm/weight_file.hpp"
#include "test_support.hpp"

using namespace oalstm;
using oalstm::testing::finite_difference_check;
using oalstm::testing::random_tensor;

namespace {

// direct quadruple-loop summation, independent of the axpy ordering in conv2d_valid
Tensor conv_oracle(const Tensor& in, const Tensor& k, std::size_t stride) {
    const std::size_t cin = in.dim(0), h = in.dim(1), w = in.dim(2), cout = k.dim(0), kk = k.dim(2);
    const std::size_t oh = (h - kk) / stride + 1, ow = (w - kk) / stride + 1;
    Tensor out({cout, oh, ow});
    for (std::size_t o = 0; o < cout; ++o)
        for (std::size_t i = 0; i < oh; ++i)
            for (std::size_t j = 0; j < ow; ++j) {
                long double acc = 0.0L;
                for (std::size_t c = 0; c < cin; ++c)
                    for (std::size_t u = 0; u < kk; ++u)
                        for (std::size_t v = 0; v < kk; ++v)
                            acc += static_cast<long double>(k.at(o, c, u, v)) * in.at(c, i * stride + u, j * stride + v);
                out.at(o, i, j) = static_cast<double>(acc);
            }
    return out;
}

Tensor xcorr_oracle(const Tensor& t, const Tensor& s, double offset) {
    const std::size_t c = t.dim(0), k = t.dim(1);
    const std::size_t oh = s.dim(1) - k + 1, ow = s.dim(2) - k + 1;
    Tensor out({oh, ow});
    for (std::size_t i = 0; i < oh; ++i)
        for (std::size_t j = 0; j < ow; ++j) {
            long double dot = 0.0L;
            for (std::size_t ch = 0; ch < c; ++ch)
                for (std::size_t u = 0; u < k; ++u)
                    for (std::size_t v = 0; v < k; ++v) dot += static_cast<long double>(t.at(ch, u, v)) * s.at(ch, i + u, j + v);
            out.at(i, j) = static_cast<double>(dot) + offset;
        }
    return out;
}

double weighted_sum(const Tensor& out, const Tensor& weights) {
    double s = 0.0;
    for (std::size_t i = 0; i < out.size(); ++i) s += out[i] * weights[i];
    return s;
}

}  // namespace

TEST(Conv2dValid, IdentityKernelReturnsInput) {
    std::mt19937_64 rng(1);
    const Tensor in = random_tensor({1, 3, 3}, rng);
    const Tensor k({1, 1, 1, 1}, 1.0);
    EXPECT_EQ(conv2d_valid(in, k, 1), in);
}

TEST(Conv2dValid, MatchesDirectSummationOracle) {
    std::mt19937_64 rng(2);
    const Tensor in = random_tensor({2, 5, 5}, rng);
    const Tensor k = random_tensor({3, 2, 3, 3}, rng);
    EXPECT_LT(max_abs_diff(conv2d_valid(in, k, 1), conv_oracle(in, k, 1)), 1e-10);
}

TEST(Conv2dValid, OracleAgreementOnShapeGrid) {
    std::mt19937_64 rng(3);
    for (std::size_t c = 1; c <= 4; ++c)
        for (std::size_t h = 3; h <= 8; ++h)
            for (std::size_t k = 1; k <= 3; ++k)
                for (std::size_t s = 1; s <= 2; ++s) {
                    const Tensor in = random_tensor({c, h, 8}, rng);
                    const Tensor kern = random_tensor({2, c, k, k}, rng);
                    EXPECT_LT(max_abs_diff(conv2d_valid(in, kern, s), conv_oracle(in, kern, s)), 1e-10);
                }
}

TEST(Conv2dValid, FeatureGeometryOfSearchAndTemplate) {
    // 49x49 search features against a 17x17 template give the 33x33 score map
    EXPECT_EQ(valid_extent(49, 17, 1), 33u);
    const Tensor s({1, 49, 49}, 0.5), t({1, 17, 17}, 0.5);
    EXPECT_EQ(cross_correlate(t, s).shape(), (Shape{33, 33}));
}

TEST(Conv2dValid, ShapeErrorsNameTheAxes) {
    const Tensor in({2, 5, 5});
    try {
        (void)conv2d_valid(in, Tensor({1, 3, 3, 3}), 1);
        FAIL() << "expected DimensionError";
    } catch (const DimensionError& e) {
        EXPECT_NE(std::string(e.what()).find("channel"), std::string::npos);
    }
    EXPECT_THROW((void)conv2d_valid(in, Tensor({1, 2, 6, 6}), 1), DimensionError);
    EXPECT_THROW((void)conv2d_valid(in, Tensor({1, 2, 3, 3}), 0), ArgumentError);
}

TEST(Conv2dValid, IsPure) {
    std::mt19937_64 rng(4);
    const Tensor in = random_tensor({3, 8, 8}, rng), k = random_tensor({4, 3, 3, 3}, rng), b = random_tensor({4}, rng);
    const Tensor a = conv2d_valid(in, k, b, 2);
    EXPECT_EQ(a, conv2d_valid(in, k, b, 2));
}

TEST(Conv2dValid, GradientsMatchFiniteDifferences) {
    std::mt19937_64 rng(5);
    for (std::size_t stride : {1u, 2u}) {
        Tensor in = random_tensor({2, 7, 7}, rng), k = random_tensor({3, 2, 3, 3}, rng), b = random_tensor({3}, rng);
        const Tensor wts = random_tensor(conv2d_valid(in, k, b, stride).shape(), rng);
        auto loss = [&] { return weighted_sum(conv2d_valid(in, k, b, stride), wts); };
        const ConvGrads g = conv2d_valid_backward(in, k, stride, wts);
        for (auto* pair : {&in, &k, &b}) {
            const Tensor& analytic = pair == &in ? g.input : pair == &k ? g.kernels : g.bias;
            const auto r = finite_difference_check(*pair, analytic, loss, "conv");
            EXPECT_EQ(r.failures, 0u) << r.worst;
        }
    }
}

TEST(ConvTranspose2d, IsAdjointOfConv) {
    // <conv(x), y> == <x, conv_t(y)> with shared kernels
    std::mt19937_64 rng(6);
    const Tensor x = random_tensor({2, 9, 9}, rng);
    const Tensor k = random_tensor({3, 2, 3, 3}, rng);  // conv: 2 -> 3 channels
    const Tensor y = random_tensor(conv2d_valid(x, k, 2).shape(), rng);
    const Tensor ty = conv_transpose2d(y, k, Tensor{}, 2);  // transposed: 3 -> 2 channels, kernels [3,2,k,k]
    ASSERT_EQ(ty.shape(), x.shape());
    EXPECT_NEAR(weighted_sum(conv2d_valid(x, k, 2), y), weighted_sum(x, ty), 1e-10);
}

TEST(ConvTranspose2d, GradientsMatchFiniteDifferences) {
    std::mt19937_64 rng(7);
    Tensor in = random_tensor({2, 3, 3}, rng), k = random_tensor({2, 3, 4, 4}, rng), b = random_tensor({3}, rng);
    const Tensor wts = random_tensor(conv_transpose2d(in, k, b, 2).shape(), rng);
    auto loss = [&] { return weighted_sum(conv_transpose2d(in, k, b, 2), wts); };
    const ConvGrads g = conv_transpose2d_backward(in, k, 2, wts);
    EXPECT_EQ(finite_difference_check(in, g.input, loss, "in").failures, 0u);
    EXPECT_EQ(finite_difference_check(k, g.kernels, loss, "k").failures, 0u);
    EXPECT_EQ(finite_difference_check(b, g.bias, loss, "b").failures, 0u);
}

TEST(CrossCorrelate, SelfMatchPeaksAtPlantedOffset) {
    std::mt19937_64 rng(8);
    const Tensor t = random_tensor({2, 3, 3}, rng);
    Tensor s({2, 9, 9});
    for (std::size_t c = 0; c < 2; ++c)
        for (std::size_t u = 0; u < 3; ++u)
            for (std::size_t v = 0; v < 3; ++v) s.at(c, 4 + u, 2 + v) = t.at(c, u, v);
    const Tensor out = cross_correlate(t, s);
    double norm2 = 0.0;
    for (double v : t.data()) norm2 += v * v;
    std::size_t best = 0;
    for (std::size_t i = 1; i < out.size(); ++i)
        if (out[i] > out[best]) best = i;
    EXPECT_EQ(best, 4 * out.dim(1) + 2);
    EXPECT_NEAR(out.at(4, 2), norm2, 1e-12);
}

TEST(CrossCorrelate, MatchesSlidingWindowOracle) {
    std::mt19937_64 rng(9);
    const Tensor t = random_tensor({2, 4, 4}, rng), s = random_tensor({2, 6, 6}, rng);
    EXPECT_LT(max_abs_diff(cross_correlate(t, s), xcorr_oracle(t, s, 0.0)), 1e-10);
    EXPECT_LT(max_abs_diff(cross_correlate(t, s, 0.25), xcorr_oracle(t, s, 0.25)), 1e-10);
    for (std::size_t c = 1; c <= 4; ++c)
        for (std::size_t k = 1; k <= 4; ++k) {
            const Tensor tt = random_tensor({c, k, k}, rng), ss = random_tensor({c, 8, 8}, rng);
            EXPECT_LT(max_abs_diff(cross_correlate(tt, ss), xcorr_oracle(tt, ss, 0.0)), 1e-10);
        }
}

TEST(CrossCorrelate, ChannelMismatchIsDimensionError) {
    EXPECT_THROW((void)cross_correlate(Tensor({2, 3, 3}), Tensor({3, 6, 6})), DimensionError);
}

TEST(Adam, ZeroGradientLeavesParameterUnchanged) {
    Tensor p({3}, 1.5);
    AdamState s(p.shape(), {});
    adam_step(p, Tensor({3}), s);
    EXPECT_EQ(p, Tensor({3}, 1.5));
    EXPECT_EQ(s.first_moment, Tensor({3}));
    EXPECT_EQ(s.second_moment, Tensor({3}));
    EXPECT_EQ(s.step, 1u);
}

TEST(Adam, FirstStepMovesBySignedLearningRate) {
    for (double g : {0.37, -2.5, 0.05}) {
        Tensor p({1}, 0.0);
        AdamState s(p.shape(), {0.01, 0.9, 0.999, 1e-8});
        adam_step(p, Tensor({1}, {g}), s);
        EXPECT_NEAR(p[0], -0.01 * (g > 0 ? 1.0 : -1.0), 1e-6 * 0.01);
    }
}

TEST(Adam, ConvergesOnQuadraticLikeScalarRecurrence) {
    Tensor p({1}, 0.0);
    AdamState s(p.shape(), {0.1, 0.9, 0.999, 1e-8});
    double q = 0.0, m = 0.0, v = 0.0;
    for (int t = 1; t <= 200; ++t) {
        adam_step(p, Tensor({1}, {2.0 * (p[0] - 3.0)}), s);
        const double g = 2.0 * (q - 3.0);
        m = 0.9 * m + 0.1 * g;
        v = 0.999 * v + 0.001 * g * g;
        q -= 0.1 * (m / (1 - std::pow(0.9, t))) / (std::sqrt(v / (1 - std::pow(0.999, t))) + 1e-8);
    }
    EXPECT_NEAR(p[0], q, 1e-12);
    EXPECT_LT(std::abs(p[0] - 3.0), 0.1);
    EXPECT_EQ(s.step, 200u);
}

TEST(Adam, RejectsNonFiniteGradientByName) {
    Tensor p({2});
    AdamState s(p.shape(), {});
    try {
        adam_step(p, Tensor({2}, {0.0, NAN}), s, "w_output");
        FAIL();
    } catch (const NumericError& e) {
        EXPECT_NE(std::string(e.what()).find("w_output"), std::string::npos);
    }
}

TEST(SoftmaxXent, UniformLogits) {
    const int label[] = {1};
    const auto r = softmax_xent(Tensor({1, 2}), label);
    EXPECT_NEAR(r.loss, std::log(2.0), 1e-12);
    EXPECT_NEAR(r.grad.at(0, 0), 0.5, 1e-12);
    EXPECT_NEAR(r.grad.at(0, 1), -0.5, 1e-12);
}

TEST(SoftmaxXent, SaturatedLogitsDoNotOverflow) {
    const int label[] = {0};
    const auto r = softmax_xent(Tensor({1, 2}, {1000.0, -1000.0}), label);
    EXPECT_NEAR(r.loss, 0.0, 1e-12);
    EXPECT_TRUE(std::isfinite(r.grad.at(0, 1)));
}

TEST(SoftmaxXent, GradientMatchesFiniteDifferences) {
    std::mt19937_64 rng(10);
    Tensor logits = random_tensor({8, 2}, rng, -3, 3);
    const std::vector<int> labels{0, 1, 1, 0, 1, 0, 0, 1};
    const auto r = softmax_xent(logits, labels);
    auto loss = [&] { return softmax_xent(logits, labels).loss; };
    const auto check = finite_difference_check(logits, r.grad, loss, "logits", 1e-4, 1e-4, 0.0);
    EXPECT_LT(check.max_rel_error, 1e-4) << check.worst;
}

TEST(SoftmaxXent, EmptyBatchIsArgumentError) {
    EXPECT_THROW((void)softmax_xent(Tensor({0, 2}), std::span<const int>{}), ArgumentError);
}

TEST(WeightFile, DocumentedByteLayout) {
    const NamedTensors t{{"ab", Tensor({2}, {1.0, -2.0})}};
    const auto bytes = encode_weights(t);
    // 8 magic + 4 count + (4 + 2 + 4 + 8) header + 16 payload
    ASSERT_EQ(bytes.size(), 8u + 4 + 18 + 16);
    EXPECT_EQ(std::string(bytes.begin(), bytes.begin() + 8), "OALSTMW1");
    EXPECT_EQ(bytes[8], 1);
    EXPECT_EQ(bytes[12], 2);
    EXPECT_EQ(bytes[16], 'a');
    EXPECT_EQ(bytes[18], 1);   // rank
    EXPECT_EQ(bytes[22], 2);   // extent
    EXPECT_EQ(bytes[30 + 7], 0x3F);  // 1.0 little-endian: 00 .. F0 3F
    EXPECT_EQ(bytes[30 + 6], 0xF0);
}

TEST(WeightFile, RandomRoundTripIsIdentity) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> dim(0, 4);
    for (int trial = 0; trial < 20; ++trial) {
        NamedTensors t;
        const int count = dim(rng) + 1;
        for (int i = 0; i < count; ++i) {
            Shape s(static_cast<std::size_t>(dim(rng)));
            for (auto& e : s) e = static_cast<std::size_t>(dim(rng));
            t.emplace_back("t" + std::to_string(i), random_tensor(s, rng, -1e6, 1e6));
        }
        EXPECT_EQ(decode_weights(encode_weights(t)), t);
    }
}

TEST(WeightFile, TruncatedInputIsFormatError) {
    auto bytes = encode_weights({{"x", Tensor({3}, 1.0)}});
    bytes.pop_back();
    EXPECT_THROW((void)decode_weights(bytes), FormatError);
    bytes[0] = 'X';
    EXPECT_THROW((void)decode_weights(bytes), FormatError);
}
