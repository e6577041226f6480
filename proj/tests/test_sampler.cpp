#include <gtest/gtest.h>

#include <random>

#include "oalstm/sampler.hpp"
#include "test_support.hpp"

using namespace oalstm;
using oalstm::testing::random_tensor;

namespace {

SearchGeometry desk_geometry() {
    static const auto e = Embedding::random(1, Embedding::default_architecture(), 3);
    return SearchGeometry::derive(e, GeometrySettings{});
}

void paste(Image& frame, const Image& obj, std::size_t top, std::size_t left) {
    for (std::size_t i = 0; i < obj.dim(1); ++i)
        for (std::size_t j = 0; j < obj.dim(2); ++j) frame.at(0, top + i, left + j) = obj.at(0, i, j);
}

}  // namespace

TEST(Iou, HandComputedValues) {
    EXPECT_DOUBLE_EQ(iou(Box{0, 0, 2, 2}, Box{1, 1, 2, 2}), 1.0 / 7.0);
    EXPECT_DOUBLE_EQ(iou(Box{3, 4, 5, 6}, Box{3, 4, 5, 6}), 1.0);
    EXPECT_EQ(iou(Box{0, 0, 2, 2}, Box{5, 5, 2, 2}), 0.0);
    EXPECT_EQ(iou(Box{0, 0, 2, 2}, Box{2, 0, 2, 2}), 0.0);  // touching edges
    EXPECT_EQ(iou(Box{0, 0, 0, 2}, Box{0, 0, 2, 2}), 0.0);
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(0, 10);
    for (int i = 0; i < 100; ++i) {
        const Box a{u(rng), u(rng), u(rng) + 0.1, u(rng) + 0.1}, b{u(rng), u(rng), u(rng) + 0.1, u(rng) + 0.1};
        EXPECT_EQ(iou(a, b), iou(b, a));
        EXPECT_EQ(iou(a, a), 1.0);
        EXPECT_GE(iou(a, b), 0.0);
        EXPECT_LE(iou(a, b), 1.0);
    }
}

TEST(GaussianSamples, DegenerateDistribution) {
    std::mt19937_64 rng(2);
    const auto frame = random_tensor({1, 120, 120}, rng, 0, 1);
    SamplerSettings s;
    s.sigma_xy = s.sigma_scale = s.neg_sigma_xy = 0.0;
    const Box c{40, 50, 30, 20};
    const auto set = draw_gaussian_samples(frame, c, desk_geometry(), s, rng);
    ASSERT_EQ(set.positives.size(), 32u);
    EXPECT_TRUE(set.negatives.empty());
    for (const auto& p : set.positives) {
        EXPECT_EQ(p.box, c);
        EXPECT_EQ(iou(p.box, c), 1.0);
    }
}

TEST(GaussianSamples, DefaultCountsAndLabelConsistency) {
    std::mt19937_64 rng(3);
    const auto frame = random_tensor({1, 240, 240}, rng, 0, 1);
    const Box c{100, 90, 36, 28};
    const SamplerSettings s;
    const auto set = draw_gaussian_samples(frame, c, desk_geometry(), s, rng);
    ASSERT_EQ(set.positives.size(), 32u);
    ASSERT_EQ(set.negatives.size(), 96u);
    for (const auto& p : set.positives) {
        EXPECT_GE(iou(p.box, c), 0.7);
        EXPECT_EQ(p.patch.shape(), (Shape{1, 71, 71}));
        EXPECT_EQ(p.provenance, Provenance::Gaussian);
    }
    for (const auto& n : set.negatives) EXPECT_LE(iou(n.box, c), 0.3);
}

TEST(GaussianSamples, DeterministicForSeed) {
    std::mt19937_64 data(4);
    const auto frame = random_tensor({1, 160, 160}, data, 0, 1);
    std::mt19937_64 a(9), b(9);
    const auto s1 = draw_gaussian_samples(frame, Box{60, 60, 30, 30}, desk_geometry(), {}, a);
    const auto s2 = draw_gaussian_samples(frame, Box{60, 60, 30, 30}, desk_geometry(), {}, b);
    ASSERT_EQ(s1.positives.size(), s2.positives.size());
    ASSERT_EQ(s1.negatives.size(), s2.negatives.size());
    for (std::size_t i = 0; i < s1.positives.size(); ++i) {
        EXPECT_EQ(s1.positives[i].box, s2.positives[i].box);
        EXPECT_EQ(s1.positives[i].patch, s2.positives[i].patch);
    }
    for (std::size_t i = 0; i < s1.negatives.size(); ++i) EXPECT_EQ(s1.negatives[i].box, s2.negatives[i].box);
}

TEST(GaussianSamples, ExhaustedBudgetWithoutPositivesThrows) {
    std::mt19937_64 rng(5);
    const Image frame({1, 64, 64}, 0.5);
    SamplerSettings s;
    s.pos_iou_min = 1.01;  // unattainable
    EXPECT_THROW(draw_gaussian_samples(frame, Box{20, 20, 10, 10}, desk_geometry(), s, rng), SamplingError);
}

TEST(HardNegatives, ZeroKAndNothingQualifying) {
    ScoreMapSet m;
    m.feature_stride = 1;
    m.template_extent = 1;
    m.exemplar_size = 1;
    ScaleResponse r;
    r.scores = Tensor({3, 3}, 1.0);
    r.search_features = Tensor({1, 3, 3});
    r.search_image = Tensor({1, 3, 3});
    r.box_w = r.box_h = 20.0;
    r.origin_x = r.origin_y = 9.0;
    m.responses.push_back(r);
    const Box est = m.cell_box(0, 1, 1);
    EXPECT_TRUE(hard_negative_mine(m, est, 0).empty());
    // every cell sits within 1 px of the estimate: all IoUs far above 0.3
    EXPECT_TRUE(hard_negative_mine(m, est, 5).empty());
}

TEST(HardNegatives, SortedAndUnderIouCeiling) {
    const auto e = Embedding::random(1, Embedding::default_architecture(), 8);
    const auto g = SearchGeometry::derive(e, GeometrySettings{});
    std::mt19937_64 rng(6);
    const auto frame = random_tensor({1, 200, 200}, rng, 0, 1);
    const Box b{80, 80, 30, 30};
    const auto t = make_template(e, g, frame, b);
    const auto maps = score_search(e, g, t.features, frame, b);
    const auto hn = hard_negative_mine(maps, b, 16);
    ASSERT_EQ(hn.size(), 16u);
    for (std::size_t i = 0; i < hn.size(); ++i) {
        EXPECT_LE(iou(hn[i].box, b), 0.3);
        if (i) EXPECT_GE(hn[i - 1].confidence, hn[i].confidence);
        EXPECT_EQ(hn[i].features, crop_features(maps.responses[hn[i].scale_index].search_features, hn[i].row,
                                                hn[i].col, 17));
        EXPECT_EQ(hn[i].patch.shape(), (Shape{1, 71, 71}));
    }
}

TEST(HardNegatives, PlantedDistractorMinedFirst) {
    const auto e = Embedding::random(1, Embedding::default_architecture(), 12);
    const auto g = SearchGeometry::derive(e, GeometrySettings{});
    std::mt19937_64 rng(7);
    const auto obj = random_tensor({1, 30, 30}, rng, 0.2, 1.0);
    Image frame({1, 220, 220}, 0.0);
    paste(frame, obj, 95, 70);   // target
    paste(frame, obj, 95, 101);  // identical distractor 31 px to the right
    const Box target{70, 95, 30, 30};
    const Box distractor{101, 95, 30, 30};
    const auto t = make_template(e, g, frame, target);
    const auto maps = score_search(e, g, t.features, frame, target);

    // full-sort oracle: best cell whose box overlaps the target by at most 0.3
    double best = -1e300;
    Box best_box;
    for (std::size_t s = 0; s < maps.responses.size(); ++s)
        for (std::size_t r = 0; r < 33; ++r)
            for (std::size_t c = 0; c < 33; ++c) {
                const Box cb = maps.cell_box(s, r, c);
                if (iou(cb, target) <= 0.3 && maps.responses[s].scores.at(r, c) > best) {
                    best = maps.responses[s].scores.at(r, c);
                    best_box = cb;
                }
            }
    const auto hn = hard_negative_mine(maps, target, 4);
    ASSERT_FALSE(hn.empty());
    EXPECT_EQ(hn[0].confidence, best);
    EXPECT_EQ(hn[0].box, best_box);
    EXPECT_LT(center_distance(hn[0].box, distractor), 4.0);
}
