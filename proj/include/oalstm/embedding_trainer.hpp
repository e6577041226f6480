#pragma once

// Tiny offline trainer for the Siamese embedding: logistic loss on the response
// map of synthetic exemplar/search pairs. Pairs are rendered directly at crop
// scale, so no resampling sits between the scripted geometry and the labels.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>
#include <random>
#include <vector>

#include "oalstm/adam.hpp"
#include "oalstm/embedding.hpp"
#include "oalstm/errors.hpp"
#include "oalstm/synth.hpp"

namespace oalstm {

struct PairSettings {
    std::size_t exemplar_size = 71;
    std::size_t search_size = 135;    // small search crop keeps training cheap; 17x17 response
    double object_min = 48.0;         // object side range in crop pixels
    double object_max = 62.0;
    double max_shift = 28.0;          // displacement of the search object, px
    double positive_radius = 8.0;     // cells within this distance of the true center are positives
    double max_drift = 0.6;           // largest blend towards a second texture
    double max_gain = 0.2;            // illumination jitter
    double scale_jitter = 0.06;
    double noise = 0.02;
    double distractor_probability = 0.7;
    std::size_t channels = 1;
};

struct EmbeddingTrainSettings {
    std::size_t pairs = 3000;
    std::size_t batch = 8;
    AdamSettings adam{2e-3, 0.9, 0.999, 1e-8};
    std::uint64_t seed = 1;
    PairSettings pair;
};

struct TrainingPair {
    Image exemplar;   // [C, E, E]
    Image search;     // [C, S, S]
    double dx = 0.0;  // object displacement from the search-crop center, px
    double dy = 0.0;
};

/// Per-cell labels (1/0) and class-balanced weights for a response map.
struct ResponseLabels {
    Tensor labels;
    Tensor weights;
};

namespace detail {

inline Image flat_canvas(std::size_t c, std::size_t side, double cell, double contrast, std::mt19937_64& rng) {
    Image im = colored_noise(c, side, side, cell, rng);
    for (auto& v : im.data()) v = 0.5 + contrast * (v - 0.5);
    return im;
}

}  // namespace detail

/// One synthetic pair: the same object (drifted, relit, rescaled) shifted inside a search crop,
/// optionally beside a different object of similar statistics.
inline TrainingPair make_training_pair(const PairSettings& p, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    auto uni = [&](double a, double b) { return a + (b - a) * u01(rng); };
    const std::size_t c = p.channels;
    const double cell = uni(4.0, 10.0), bg_cell = uni(8.0, 16.0), contrast = uni(0.2, 0.6);
    const double ow = uni(p.object_min, p.object_max), oh = ow * uni(0.8, 1.25);
    const auto tw = static_cast<std::size_t>(std::round(ow)), th = static_cast<std::size_t>(std::round(oh));
    const Tensor tex_a = detail::colored_noise(c, th, tw, cell, rng);
    const Tensor tex_b = detail::colored_noise(c, th, tw, cell, rng);

    TrainingPair out;
    const double e = static_cast<double>(p.exemplar_size), s = static_cast<double>(p.search_size);
    out.exemplar = detail::flat_canvas(c, p.exemplar_size, bg_cell, contrast, rng);
    detail::paint(out.exemplar, Box::from_center(0.5 * e, 0.5 * e, ow, oh), tex_a, 0.0, nullptr);

    out.search = detail::flat_canvas(c, p.search_size, bg_cell, contrast, rng);
    out.dx = uni(-p.max_shift, p.max_shift);
    out.dy = uni(-p.max_shift, p.max_shift);
    if (u01(rng) < p.distractor_probability) {
        // a different instance, kept clear of the target center
        const Tensor tex_d = detail::colored_noise(c, th, tw, cell, rng);
        double ddx = 0, ddy = 0;
        for (int tries = 0; tries < 20; ++tries) {
            ddx = uni(-p.max_shift - 10, p.max_shift + 10);
            ddy = uni(-p.max_shift - 10, p.max_shift + 10);
            if (std::hypot(ddx - out.dx, ddy - out.dy) > 0.8 * ow) break;
        }
        detail::paint(out.search, Box::from_center(0.5 * s + ddx, 0.5 * s + ddy, ow, oh), tex_d, uni(0.0, p.max_drift),
                      &tex_a);
    }
    const double k = 1.0 + uni(-p.scale_jitter, p.scale_jitter);
    detail::paint(out.search, Box::from_center(0.5 * s + out.dx, 0.5 * s + out.dy, ow * k, oh * k), tex_a,
                  uni(0.0, p.max_drift), &tex_b);
    const double gain = 1.0 + uni(-p.max_gain, p.max_gain);
    std::normal_distribution<double> nd(0.0, p.noise);
    for (auto& v : out.search.data()) v = std::clamp(v * gain + nd(rng), 0.0, 1.0);
    return out;
}

/// Cell (i, j) of a response map looks at search center + ((j - r) * stride, (i - r) * stride).
inline ResponseLabels response_labels(std::size_t extent, std::size_t stride, double dx, double dy, double radius) {
    ResponseLabels l{Tensor({extent, extent}), Tensor({extent, extent})};
    const double r = 0.5 * static_cast<double>(extent - 1);
    std::size_t pos = 0;
    for (std::size_t i = 0; i < extent; ++i)
        for (std::size_t j = 0; j < extent; ++j) {
            const double ox = (static_cast<double>(j) - r) * static_cast<double>(stride);
            const double oy = (static_cast<double>(i) - r) * static_cast<double>(stride);
            if (std::hypot(ox - dx, oy - dy) <= radius) {
                l.labels.at(i, j) = 1.0;
                ++pos;
            }
        }
    const std::size_t n = extent * extent;
    for (std::size_t k = 0; k < n; ++k) {
        const bool is_pos = l.labels[k] == 1.0;
        const std::size_t count = is_pos ? pos : n - pos;
        l.weights[k] = count ? 0.5 / static_cast<double>(count) : 0.0;
    }
    return l;
}

/// Learned affine map from raw correlation to logits; used only while training.
struct ResponseCalibration {
    Tensor scale{Shape{1}, 1e-2};
    Tensor bias{Shape{1}, 0.0};
};

struct PairGradients {
    double loss = 0.0;
    std::vector<Tensor> kernels;  // per layer
    std::vector<Tensor> biases;
    Tensor scale{Shape{1}};
    Tensor bias{Shape{1}};
};

namespace detail {

struct EmbedTrace {
    std::vector<Tensor> inputs;  // input of each layer
    Tensor output;
};

inline EmbedTrace embed_traced(const Embedding& e, const Tensor& x0) {
    EmbedTrace t;
    Tensor x = x0;
    for (const auto& l : e.layers()) {
        t.inputs.push_back(x);
        x = conv2d_valid(x, l.kernels, l.bias, l.spec.stride);
        if (l.spec.relu)
            for (auto& v : x.data()) v = relu(v);
    }
    t.output = std::move(x);
    return t;
}

inline void embed_backward(const Embedding& e, const EmbedTrace& t, Tensor grad, PairGradients& g) {
    for (std::size_t li = e.layers().size(); li-- > 0;) {
        const auto& l = e.layers()[li];
        if (l.spec.relu) {
            // relu output is stored as the next layer's input (or the final output)
            const Tensor& act = li + 1 < t.inputs.size() ? t.inputs[li + 1] : t.output;
            for (std::size_t k = 0; k < grad.size(); ++k)
                if (act[k] <= 0.0) grad[k] = 0.0;
        }
        ConvGrads cg = conv2d_valid_backward(t.inputs[li], l.kernels, l.spec.stride, grad);
        for (std::size_t k = 0; k < cg.kernels.size(); ++k) g.kernels[li][k] += cg.kernels[k];
        for (std::size_t k = 0; k < cg.bias.size(); ++k) g.biases[li][k] += cg.bias[k];
        grad = std::move(cg.input);
    }
}

}  // namespace detail

inline PairGradients zero_pair_gradients(const Embedding& e) {
    PairGradients g;
    for (const auto& l : e.layers()) {
        g.kernels.emplace_back(l.kernels.shape());
        g.biases.emplace_back(l.bias.shape());
    }
    return g;
}

/// Weighted logistic loss of one pair; gradients are accumulated into g (loss added to g.loss).
inline double pair_loss_grads(const Embedding& e, const ResponseCalibration& cal, const TrainingPair& pair,
                              double positive_radius, PairGradients* g) {
    const auto te = detail::embed_traced(e, pair.exemplar);
    const auto ts = detail::embed_traced(e, pair.search);
    const Tensor raw = cross_correlate(te.output, ts.output);
    if (raw.dim(0) != raw.dim(1) || raw.dim(0) % 2 == 0)
        throw GeometryError("pair_loss_grads: response map must be square with a center cell");
    const auto lab = response_labels(raw.dim(0), e.total_stride(), pair.dx, pair.dy, positive_radius);
    const double a = cal.scale[0], b = cal.bias[0];

    double loss = 0.0;
    Tensor dz(raw.shape());
    for (std::size_t k = 0; k < raw.size(); ++k) {
        const double z = a * raw[k] + b, y = lab.labels[k], w = lab.weights[k];
        // log(1 + exp(-z)) for positives, log(1 + exp(z)) for negatives, stably
        const double m = y == 1.0 ? -z : z;
        loss += w * (std::max(m, 0.0) + std::log1p(std::exp(-std::abs(m))));
        dz[k] = w * (sigmoid(z) - y);
    }
    if (!g) return loss;

    g->loss += loss;
    Tensor dx(raw.shape());
    for (std::size_t k = 0; k < raw.size(); ++k) {
        g->scale[0] += dz[k] * raw[k];
        g->bias[0] += dz[k];
        dx[k] = a * dz[k];
    }
    const Tensor& T = te.output;
    const Tensor& S = ts.output;
    Tensor gT(T.shape()), gS(S.shape());
    const std::size_t ch = T.dim(0), kh = T.dim(1), kw = T.dim(2), oh = raw.dim(0), ow = raw.dim(1);
    for (std::size_t c = 0; c < ch; ++c)
        for (std::size_t u = 0; u < kh; ++u)
            for (std::size_t v = 0; v < kw; ++v) {
                const double t = T.at(c, u, v);
                double acc = 0.0;
                for (std::size_t i = 0; i < oh; ++i) {
                    const double* srow = &S.at(c, i + u, v);
                    double* grow = &gS.at(c, i + u, v);
                    const double* drow = &dx.at(i, 0);
                    for (std::size_t j = 0; j < ow; ++j) {
                        acc += drow[j] * srow[j];
                        grow[j] += drow[j] * t;
                    }
                }
                gT.at(c, u, v) = acc;
            }
    detail::embed_backward(e, te, std::move(gT), *g);
    detail::embed_backward(e, ts, std::move(gS), *g);
    return loss;
}

struct EmbeddingTrainReport {
    std::vector<double> batch_losses;
};

/// Trains `e` in place on freshly rendered pairs; deterministic given settings.seed.
inline EmbeddingTrainReport train_embedding(Embedding& e, const EmbeddingTrainSettings& s,
                                            const std::function<void(std::size_t, double)>& progress = {}) {
    if (s.batch == 0) throw ArgumentError("train_embedding: batch must be positive");
    if (s.pair.channels != e.input_channels())
        throw DimensionError("train_embedding: pair channels " + std::to_string(s.pair.channels) +
                             " differ from embedding input channels " + std::to_string(e.input_channels()));
    if (!e.tiles_exactly(s.pair.exemplar_size) || !e.tiles_exactly(s.pair.search_size))
        throw GeometryError("train_embedding: crop sizes do not tile the embedding exactly");
    std::mt19937_64 rng(s.seed);
    ResponseCalibration cal;
    {
        // start with logits of order one
        std::mt19937_64 probe(s.seed ^ 0x5bd1e995ULL);
        const auto pair = make_training_pair(s.pair, probe);
        const Tensor raw = cross_correlate(e.embed(pair.exemplar), e.embed(pair.search));
        double mean = 0, sq = 0;
        for (double v : raw.data()) mean += v / static_cast<double>(raw.size());
        for (double v : raw.data()) sq += (v - mean) * (v - mean) / static_cast<double>(raw.size());
        cal.scale[0] = sq > 0 ? 1.0 / std::sqrt(sq) : 1.0;
        cal.bias[0] = -cal.scale[0] * mean;
    }
    auto& layers = e.mutable_layers();
    std::vector<AdamState> k_state, b_state;
    for (const auto& l : layers) {
        k_state.emplace_back(l.kernels.shape(), s.adam);
        b_state.emplace_back(l.bias.shape(), s.adam);
    }
    AdamState sc_state(Shape{1}, s.adam), bi_state(Shape{1}, s.adam);

    EmbeddingTrainReport report;
    const std::size_t batches = (s.pairs + s.batch - 1) / s.batch;
    for (std::size_t bi = 0; bi < batches; ++bi) {
        PairGradients g = zero_pair_gradients(e);
        const std::size_t n = std::min(s.batch, s.pairs - bi * s.batch);
        for (std::size_t k = 0; k < n; ++k)
            pair_loss_grads(e, cal, make_training_pair(s.pair, rng), s.pair.positive_radius, &g);
        const double inv = 1.0 / static_cast<double>(n);
        for (std::size_t li = 0; li < layers.size(); ++li) {
            for (auto& v : g.kernels[li].data()) v *= inv;
            for (auto& v : g.biases[li].data()) v *= inv;
            adam_step(layers[li].kernels, g.kernels[li], k_state[li], "embedding kernels");
            adam_step(layers[li].bias, g.biases[li], b_state[li], "embedding bias");
        }
        g.scale[0] *= inv;
        g.bias[0] *= inv;
        adam_step(cal.scale, g.scale, sc_state, "response scale");
        adam_step(cal.bias, g.bias, bi_state, "response bias");
        const double loss = g.loss * inv;
        if (!std::isfinite(loss)) throw NumericError("train_embedding: non-finite loss at batch " + std::to_string(bi));
        report.batch_losses.push_back(loss);
        if (progress) progress(bi, loss);
    }
    return report;
}

/// C++ source defining `builtin_embedding()` with the weights as exact hex-float literals.
inline void write_embedding_header(std::ostream& os, const Embedding& e, const std::string& note) {
    os << "#pragma once\n\n// " << note << "\n// Generated file; regenerate instead of editing.\n\n"
       << "#include \"oalstm/embedding.hpp\"\n\nnamespace oalstm {\n\n"
       << "inline Embedding builtin_embedding() {\n    NamedTensors t;\n";
    char buf[64];
    for (const auto& [name, tensor] : e.to_named()) {
        os << "    t.emplace_back(\"" << name << "\", Tensor({";
        for (std::size_t d = 0; d < tensor.rank(); ++d) os << (d ? ", " : "") << tensor.dim(d);
        os << "}, {";
        for (std::size_t k = 0; k < tensor.size(); ++k) {
            std::snprintf(buf, sizeof buf, "%a", tensor[k]);
            os << (k ? "," : "") << (k % 6 == 0 ? "\n        " : " ") << buf;
        }
        os << "}));\n";
    }
    os << "    return Embedding::from_named(t);\n}\n\n}  // namespace oalstm\n";
}

}  // namespace oalstm
