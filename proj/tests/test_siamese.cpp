#include <gtest/gtest.h>

#include <random>

#include "oalstm/proposals.hpp"
#include "oalstm/siamese.hpp"
#include "test_support.hpp"

using namespace oalstm;
using oalstm::testing::random_tensor;

namespace {

Embedding desk_embedding(std::uint64_t seed = 7) { return Embedding::random(1, Embedding::default_architecture(), seed); }

SearchGeometry desk_geometry(const Embedding& e) { return SearchGeometry::derive(e, GeometrySettings{}); }

// Textured square on a black background.
Image planted_frame(std::size_t h, std::size_t w, const Box& obj, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.2, 1.0);
    Image f({1, h, w}, 0.0);
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < w; ++j)
            if (j >= obj.x && j < obj.x + obj.w && i >= obj.y && i < obj.y + obj.h) f.at(0, i, j) = u(rng);
    return f;
}

// Brute-force sliding dot product with long-double accumulation.
Tensor sliding_dot(const Tensor& t, const Tensor& s) {
    const std::size_t c = t.dim(0), k = t.dim(1), n = s.dim(1) - k + 1;
    Tensor out({n, n});
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t q = 0; q < n; ++q) {
            long double acc = 0;
            for (std::size_t ch = 0; ch < c; ++ch)
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) acc += (long double)t.at(ch, i, j) * s.at(ch, r + i, q + j);
            out.at(r, q) = static_cast<double>(acc);
        }
    return out;
}

}  // namespace

TEST(Embedding, DeskArchitectureShapes) {
    const auto e = desk_embedding();
    EXPECT_EQ(e.total_stride(), 4u);
    EXPECT_EQ(e.receptive_field(), 7u);
    EXPECT_EQ(e.embed(Tensor({1, 71, 71}, 0.5)).shape(), (Shape{8, 17, 17}));
    EXPECT_EQ(e.embed(Tensor({1, 199, 199}, 0.5)).shape(), (Shape{8, 49, 49}));
    const auto g = desk_geometry(e);
    EXPECT_EQ(g.template_extent, 17u);
    EXPECT_EQ(g.search_extent, 49u);
    EXPECT_EQ(g.score_extent, 33u);
}

TEST(Embedding, ZeroWeightsGiveZeroFeatures) {
    auto e = desk_embedding();
    auto named = e.to_named();
    for (auto& [name, t] : named)
        if (name.find("kernels") != std::string::npos || name.find("bias") != std::string::npos) t.fill(0.0);
    const auto z = Embedding::from_named(named);
    std::mt19937_64 rng(3);
    const auto f = z.embed(random_tensor({1, 71, 71}, rng));
    for (double v : f.data()) EXPECT_EQ(v, 0.0);
}

TEST(Embedding, RejectsPatchBelowReceptiveField) {
    const auto e = desk_embedding();
    EXPECT_THROW(e.embed(Tensor({1, 6, 6})), GeometryError);
    EXPECT_THROW(e.embed(Tensor({3, 71, 71})), DimensionError);
}

TEST(Embedding, NamedRoundTrip) {
    const auto e = desk_embedding(11);
    const auto back = Embedding::from_named(decode_weights(encode_weights(e.to_named())));
    std::mt19937_64 rng(5);
    const auto p = random_tensor({1, 71, 71}, rng);
    EXPECT_EQ(e.embed(p), back.embed(p));
}

// Geometry identity across a grid of architectures, checked against the shapes
// actually produced by embedding and correlating.
TEST(Geometry, IdentityAcrossArchitectures) {
    std::size_t checked = 0;
    for (std::size_t k1 : {3u, 5u})
        for (std::size_t s1 : {1u, 2u})
            for (std::size_t k2 : {1u, 3u})
                for (std::size_t s2 : {1u, 2u})
                    for (std::size_t depth : {2u, 3u}) {
                        std::vector<ConvLayerSpec> specs{{4, k1, s1, true}, {4, k2, s2, depth == 3}};
                        if (depth == 3) specs.push_back({3, 1, 1, false});
                        const auto e = Embedding::random(1, specs, 17);
                        const std::size_t stride = e.total_stride();
                        const std::size_t rf = e.receptive_field();
                        // smallest exemplar above 20 px that tiles exactly
                        std::size_t ez = rf;
                        while (ez < 20) ez += stride;
                        for (std::size_t extra : {2u, 5u, 8u}) {
                            GeometrySettings gs;
                            gs.exemplar_size = ez;
                            gs.search_size = ez + extra * stride;
                            const auto g = SearchGeometry::derive(e, gs);
                            const auto tf = e.embed(Tensor({1, ez, ez}, 0.3));
                            const auto sf = e.embed(Tensor({1, gs.search_size, gs.search_size}, 0.3));
                            const auto sc = cross_correlate(tf, sf);
                            EXPECT_EQ(g.template_extent, tf.dim(1));
                            EXPECT_EQ(g.search_extent, sf.dim(1));
                            EXPECT_EQ(g.score_extent, sc.dim(0));
                            EXPECT_EQ(g.score_extent, g.search_extent - g.template_extent + 1);
                            EXPECT_EQ(g.score_extent, extra + 1);
                            ++checked;
                        }
                    }
    EXPECT_EQ(checked, 96u);
}

TEST(Geometry, MisalignedSizesRejected) {
    const auto e = desk_embedding();
    GeometrySettings gs;
    gs.search_size = 200;
    EXPECT_THROW(SearchGeometry::derive(e, gs), GeometryError);
    gs = GeometrySettings{};
    gs.scales.clear();
    EXPECT_THROW(SearchGeometry::derive(e, gs), ArgumentError);
}

TEST(Geometry, ContextRule) {
    const auto g = desk_geometry(desk_embedding());
    // square box: side grows by exactly the context factor
    EXPECT_NEAR(g.exemplar_side(50, 50), 60.0, 1e-12);
    EXPECT_NEAR(g.exemplar_side(40, 10), std::sqrt((40 + 5.0) * (10 + 5.0)), 1e-12);
    EXPECT_NEAR(g.search_side(50, 50, 1.0), 60.0 * 199.0 / 71.0, 1e-12);
}

TEST(Template, FullFrameAnnotationIsResizedFrame) {
    auto e = desk_embedding();
    GeometrySettings gs;
    gs.context = 0.0;
    const auto g = SearchGeometry::derive(e, gs);
    std::mt19937_64 rng(2);
    const auto frame = random_tensor({1, 71, 71}, rng, 0, 1);
    const auto t = make_template(e, g, frame, Box{0, 0, 71, 71});
    EXPECT_LT(max_abs_diff(t.exemplar, frame), 1e-12);
    const auto t2 = make_template(e, g, frame, Box{0, 0, 71, 71});
    EXPECT_EQ(t.features, t2.features);
}

TEST(Template, RejectsBadAnnotations) {
    auto e = desk_embedding();
    const auto g = desk_geometry(e);
    Image frame({1, 100, 100}, 0.5);
    EXPECT_THROW(make_template(e, g, frame, Box{10, 10, 0, 20}), AnnotationError);
    EXPECT_THROW(make_template(e, g, frame, Box{120, 10, 10, 20}), AnnotationError);
}

TEST(ScoreSearch, ThreeMapsOf33) {
    auto e = desk_embedding();
    const auto g = desk_geometry(e);
    std::mt19937_64 rng(9);
    const auto frame = random_tensor({1, 240, 240}, rng, 0, 1);
    const Box b{100, 90, 40, 30};
    const auto t = make_template(e, g, frame, b);
    const auto maps = score_search(e, g, t.features, frame, b);
    ASSERT_EQ(maps.responses.size(), 3u);
    for (const auto& r : maps.responses) {
        EXPECT_EQ(r.scores.shape(), (Shape{33, 33}));
        EXPECT_EQ(r.search_features.shape(), (Shape{8, 49, 49}));
    }
}

TEST(ScoreSearch, MatchesEmbedThenSlidingDotOracle) {
    auto e = desk_embedding(21);
    const auto g = desk_geometry(e);
    std::mt19937_64 rng(4);
    const auto frame = random_tensor({1, 200, 220}, rng, 0, 1);
    const Box b{60, 70, 30, 45};
    const auto t = make_template(e, g, frame, b);
    const auto maps = score_search(e, g, t.features, frame, b);
    for (const auto& r : maps.responses) {
        const auto oracle = sliding_dot(t.features, e.embed(r.search_image));
        EXPECT_LT(max_abs_diff(r.scores, oracle), 1e-9);
    }
}

TEST(ScoreSearch, SelfMatchPeaksAtCenter) {
    auto e = desk_embedding(5);
    const auto g = desk_geometry(e);
    const Box obj{100, 110, 40, 40};
    const auto frame = planted_frame(256, 256, obj, 8);
    const auto t = make_template(e, g, frame, obj);
    const auto maps = score_search(e, g, t.features, frame, obj);
    const auto& r = maps.responses[1];
    ASSERT_EQ(r.scale, 1.0);
    std::size_t best = 0;
    for (std::size_t i = 1; i < r.scores.size(); ++i)
        if (r.scores[i] > r.scores[best]) best = i;
    EXPECT_EQ(best / 33, 16u);
    EXPECT_EQ(best % 33, 16u);
    const auto cb = maps.cell_box(1, 16, 16);
    EXPECT_NEAR(cb.cx(), obj.cx(), 1e-9);
    EXPECT_NEAR(cb.cy(), obj.cy(), 1e-9);
}

TEST(ScoreSearch, BorderCentersAreClampedAndTinyFramesRejected) {
    auto e = desk_embedding();
    const auto g = desk_geometry(e);
    std::mt19937_64 rng(1);
    const auto frame = random_tensor({1, 120, 120}, rng, 0, 1);
    const auto t = make_template(e, g, frame, Box{10, 10, 20, 20});
    const auto maps = score_search(e, g, t.features, frame, Box{-50, -60, 20, 20});
    for (const auto& r : maps.responses) EXPECT_TRUE(all_finite(r.scores.data()));
    const double side = g.search_side(20, 20, 1.0);
    EXPECT_NEAR(maps.responses[1].origin_x, -0.5 * side, 1e-12);
    EXPECT_THROW(score_search(e, g, t.features, Tensor({1, 5, 5}), Box{0, 0, 2, 2}), GeometryError);
}

TEST(ScoreSearch, CellBoxRoundTrip) {
    auto e = desk_embedding();
    const auto g = desk_geometry(e);
    std::mt19937_64 rng(6);
    const auto frame = random_tensor({1, 150, 170}, rng, 0, 1);
    const Box b{50, 40, 37, 23};
    const auto t = make_template(e, g, frame, b);
    const auto maps = score_search(e, g, t.features, frame, b);
    for (std::size_t s = 0; s < 3; ++s)
        for (std::size_t r = 0; r < 33; ++r)
            for (std::size_t c = 0; c < 33; ++c) {
                const auto [rr, cc] = maps.box_cell(s, maps.cell_box(s, r, c));
                ASSERT_EQ(rr, static_cast<long>(r));
                ASSERT_EQ(cc, static_cast<long>(c));
            }
}

// Sub-windows behind every score cell lie inside the search image.
TEST(ScoreSearch, EveryCellWindowInsideSearchImage) {
    auto e = desk_embedding();
    const auto g = desk_geometry(e);
    const std::size_t last = (g.score_extent - 1) * g.feature_stride + g.settings.exemplar_size;
    EXPECT_EQ(last, g.settings.search_size);
}

TEST(ScoreSearch, TranslationEquivarianceAtFeatureStride) {
    auto e = desk_embedding(13);
    const auto g = desk_geometry(e);
    std::mt19937_64 rng(12);
    const auto target = random_tensor({1, 71, 71}, rng, 0.1, 1.0);
    const auto tf = e.embed(target);
    auto argmax_for = [&](std::size_t top, std::size_t left) {
        Image search({1, 199, 199}, 0.0);
        for (std::size_t i = 0; i < 71; ++i)
            for (std::size_t j = 0; j < 71; ++j) search.at(0, top + i, left + j) = target.at(0, i, j);
        const auto sc = cross_correlate(tf, e.embed(search));
        std::size_t best = 0;
        for (std::size_t i = 1; i < sc.size(); ++i)
            if (sc[i] > sc[best]) best = i;
        return std::pair{best / 33, best % 33};
    };
    for (auto [r, c] : std::vector<std::pair<std::size_t, std::size_t>>{{3, 5}, {10, 20}, {31, 0}}) {
        const auto base = argmax_for(4 * r, 4 * c);
        EXPECT_EQ(base, std::pair(r, c));
        EXPECT_EQ(argmax_for(4 * r + 4, 4 * c), std::pair(r + 1, c));
        EXPECT_EQ(argmax_for(4 * r, 4 * c + 4), std::pair(r, c + 1));
    }
}
