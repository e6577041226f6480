#pragma once

// Small DCGAN-style generator/discriminator pair trained online on positive
// image patches, used to augment the classifier's positive samples.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "oalstm/adam.hpp"
#include "oalstm/embedding.hpp"
#include "oalstm/errors.hpp"
#include "oalstm/image.hpp"
#include "oalstm/kernels.hpp"
#include "oalstm/tensor.hpp"
#include "oalstm/weight_file.hpp"

namespace oalstm {

struct GanArchitecture {
    std::size_t channels = 1;
    std::size_t patch_size = 32;
    std::size_t noise_dim = 16;
    std::size_t base_channels = 16;  // generator seed volume after the dense layer
    std::size_t base_extent = 6;
    std::vector<ConvLayerSpec> generator_layers{{8, 4, 2, true}, {1, 6, 2, false}};  // transposed convs
    std::vector<ConvLayerSpec> discriminator_layers{{8, 4, 2, true}, {16, 3, 2, true}};
    double leaky_slope = 0.2;

    /// 32x32: 16x6x6 -> 8x14x14 -> Cx32x32; discriminator 32 -> 15 -> 7 -> dense.
    static GanArchitecture desk(std::size_t channels) {
        GanArchitecture a;
        a.channels = channels;
        a.generator_layers.back().out_channels = channels;
        return a;
    }

    /// 8x8 toy nets for gradient checks: 2x3x3 -> Cx8x8; discriminator 8 -> 3 -> dense.
    static GanArchitecture toy(std::size_t channels) {
        GanArchitecture a;
        a.channels = channels;
        a.patch_size = 8;
        a.noise_dim = 4;
        a.base_channels = 2;
        a.base_extent = 3;
        a.generator_layers = {{channels, 4, 2, false}};
        a.discriminator_layers = {{4, 4, 2, true}};
        return a;
    }

    std::size_t generator_output_extent() const {
        std::size_t e = base_extent;
        for (const auto& l : generator_layers) e = (e - 1) * l.stride + l.kernel;
        return e;
    }

    std::size_t discriminator_flat_size() const {
        std::size_t e = patch_size, c = channels;
        for (const auto& l : discriminator_layers) {
            e = valid_extent(e, l.kernel, l.stride);
            c = l.out_channels;
        }
        return e * e * c;
    }

    void validate() const {
        if (generator_layers.empty() || generator_layers.back().out_channels != channels)
            throw ArgumentError("GAN generator must end with " + std::to_string(channels) + " channels");
        if (generator_output_extent() != patch_size)
            throw ArgumentError("GAN generator emits " + std::to_string(generator_output_extent()) +
                                " px, patch size is " + std::to_string(patch_size));
        (void)discriminator_flat_size();
    }
};

struct ConvParams {
    ConvLayerSpec spec;
    Tensor kernels;
    Tensor bias;
};

struct GanParams {
    GanArchitecture arch;
    // generator
    Tensor g_dense_w;  // [base_c * e * e, noise_dim]
    Tensor g_dense_b;
    std::vector<ConvParams> g_layers;  // kernels [in, out, k, k]
    // discriminator
    std::vector<ConvParams> d_layers;  // kernels [out, in, k, k]
    Tensor d_dense_w;                  // [1, flat]
    Tensor d_dense_b;                  // [1]

    static GanParams zeros(const GanArchitecture& a) {
        a.validate();
        GanParams p;
        p.arch = a;
        const std::size_t seed_len = a.base_channels * a.base_extent * a.base_extent;
        p.g_dense_w = Tensor({seed_len, a.noise_dim});
        p.g_dense_b = Tensor({seed_len});
        std::size_t cin = a.base_channels;
        for (const auto& l : a.generator_layers) {
            p.g_layers.push_back({l, Tensor({cin, l.out_channels, l.kernel, l.kernel}), Tensor({l.out_channels})});
            cin = l.out_channels;
        }
        cin = a.channels;
        for (const auto& l : a.discriminator_layers) {
            p.d_layers.push_back({l, Tensor({l.out_channels, cin, l.kernel, l.kernel}), Tensor({l.out_channels})});
            cin = l.out_channels;
        }
        p.d_dense_w = Tensor({1, a.discriminator_flat_size()});
        p.d_dense_b = Tensor({1});
        return p;
    }

    static GanParams random(const GanArchitecture& a, std::uint64_t seed) {
        GanParams p = zeros(a);
        std::mt19937_64 rng(seed);
        std::normal_distribution<double> nd(0.0, 1.0);
        auto fill = [&](Tensor& t, std::size_t fan_in) {
            const double sd = std::sqrt(1.0 / static_cast<double>(fan_in));
            for (auto& v : t.data()) v = sd * nd(rng);
        };
        fill(p.g_dense_w, a.noise_dim);
        for (auto& l : p.g_layers) fill(l.kernels, l.kernels.dim(0) * l.spec.kernel * l.spec.kernel / l.spec.stride / l.spec.stride);
        for (auto& l : p.d_layers) fill(l.kernels, l.kernels.dim(1) * l.spec.kernel * l.spec.kernel);
        fill(p.d_dense_w, p.d_dense_w.dim(1));
        return p;
    }

    std::vector<Tensor*> generator_tensors() {
        std::vector<Tensor*> out{&g_dense_w, &g_dense_b};
        for (auto& l : g_layers) {
            out.push_back(&l.kernels);
            out.push_back(&l.bias);
        }
        return out;
    }
    std::vector<Tensor*> discriminator_tensors() {
        std::vector<Tensor*> out;
        for (auto& l : d_layers) {
            out.push_back(&l.kernels);
            out.push_back(&l.bias);
        }
        out.push_back(&d_dense_w);
        out.push_back(&d_dense_b);
        return out;
    }

    NamedTensors to_named() const {
        NamedTensors out;
        out.emplace_back("gan.g_dense_w", g_dense_w);
        out.emplace_back("gan.g_dense_b", g_dense_b);
        for (std::size_t i = 0; i < g_layers.size(); ++i) {
            out.emplace_back("gan.g_layer" + std::to_string(i) + ".kernels", g_layers[i].kernels);
            out.emplace_back("gan.g_layer" + std::to_string(i) + ".bias", g_layers[i].bias);
        }
        for (std::size_t i = 0; i < d_layers.size(); ++i) {
            out.emplace_back("gan.d_layer" + std::to_string(i) + ".kernels", d_layers[i].kernels);
            out.emplace_back("gan.d_layer" + std::to_string(i) + ".bias", d_layers[i].bias);
        }
        out.emplace_back("gan.d_dense_w", d_dense_w);
        out.emplace_back("gan.d_dense_b", d_dense_b);
        return out;
    }

    /// Loads tensors into a parameter set of the given architecture.
    static GanParams from_named(const GanArchitecture& a, const NamedTensors& named) {
        GanParams p = zeros(a);
        const NamedTensors layout = p.to_named();
        auto targets = p.generator_tensors();
        for (Tensor* t : p.discriminator_tensors()) targets.push_back(t);
        // to_named lists generator tensors then discriminator tensors, matching `targets`
        for (std::size_t i = 0; i < layout.size(); ++i) {
            const Tensor& src = find_tensor(named, layout[i].first);
            require_shape(src, layout[i].second.shape(), layout[i].first);
            *targets[i] = src;
        }
        return p;
    }

    bool operator==(const GanParams& o) const {
        const auto a = to_named(), b = o.to_named();
        return a == b;
    }
};

// ---------------------------------------------------------------------------
// generator

struct GeneratorCache {
    std::vector<double> noise;
    Tensor seed_pre;             // dense output before ReLU, [base_c, e, e]
    std::vector<Tensor> inputs;  // input of each transposed conv (post-activation)
    std::vector<Tensor> pre;     // pre-activation output of each transposed conv
    Image output;
};

inline Image generator_forward(const GanParams& p, std::span<const double> noise, GeneratorCache* cache = nullptr) {
    const auto& a = p.arch;
    if (noise.size() != a.noise_dim) throw DimensionError("generator: noise length mismatch");
    Tensor seed({a.base_channels, a.base_extent, a.base_extent});
    std::copy(p.g_dense_b.data().begin(), p.g_dense_b.data().end(), seed.data().begin());
    gemv_acc(p.g_dense_w.data(), p.g_dense_w.dim(0), a.noise_dim, noise, seed.data());
    if (cache) {
        cache->noise.assign(noise.begin(), noise.end());
        cache->seed_pre = seed;
        cache->inputs.clear();
        cache->pre.clear();
    }
    Tensor x = seed;
    for (auto& v : x.data()) v = relu(v);
    for (std::size_t i = 0; i < p.g_layers.size(); ++i) {
        const auto& l = p.g_layers[i];
        Tensor y = conv_transpose2d(x, l.kernels, l.bias, l.spec.stride);
        if (cache) {
            cache->inputs.push_back(x);
            cache->pre.push_back(y);
        }
        const bool last = i + 1 == p.g_layers.size();
        if (last)
            for (auto& v : y.data()) v = sigmoid(v);
        else
            for (auto& v : y.data()) v = relu(v);
        x = std::move(y);
    }
    check_finite(x, "generator output");
    if (cache) cache->output = x;
    return x;
}

/// Accumulates generator parameter gradients (same order as generator_tensors()) given dL/d(output image).
inline void generator_backward(const GanParams& p, const GeneratorCache& cache, const Tensor& grad_image,
                               std::vector<Tensor>& grads) {
    Tensor g = grad_image;
    for (std::size_t i = p.g_layers.size(); i-- > 0;) {
        const auto& l = p.g_layers[i];
        const bool last = i + 1 == p.g_layers.size();
        const Tensor& pre = cache.pre[i];
        if (last) {
            for (std::size_t k = 0; k < g.size(); ++k) {
                const double s = sigmoid(pre[k]);
                g[k] *= s * (1.0 - s);
            }
        } else {
            for (std::size_t k = 0; k < g.size(); ++k)
                if (pre[k] <= 0.0) g[k] = 0.0;
        }
        ConvGrads cg = conv_transpose2d_backward(cache.inputs[i], l.kernels, l.spec.stride, g);
        for (std::size_t k = 0; k < cg.kernels.size(); ++k) grads[2 + 2 * i][k] += cg.kernels[k];
        for (std::size_t k = 0; k < cg.bias.size(); ++k) grads[3 + 2 * i][k] += cg.bias[k];
        g = std::move(cg.input);
    }
    for (std::size_t k = 0; k < g.size(); ++k)
        if (cache.seed_pre[k] <= 0.0) g[k] = 0.0;
    outer_acc(grads[0].data(), g.data(), cache.noise);
    for (std::size_t k = 0; k < g.size(); ++k) grads[1][k] += g[k];
}

// ---------------------------------------------------------------------------
// discriminator

struct DiscriminatorCache {
    std::vector<Tensor> inputs;  // input of each conv layer
    std::vector<Tensor> pre;     // pre-activation output of each conv layer
    Tensor flat;                 // activated features feeding the dense layer
    double logit = 0.0;
};

inline double discriminator_logit(const GanParams& p, const Image& image, DiscriminatorCache* cache = nullptr) {
    if (cache) {
        cache->inputs.clear();
        cache->pre.clear();
    }
    Tensor x = image;
    for (const auto& l : p.d_layers) {
        Tensor y = conv2d_valid(x, l.kernels, l.bias, l.spec.stride);
        if (cache) {
            cache->inputs.push_back(x);
            cache->pre.push_back(y);
        }
        for (auto& v : y.data()) v = leaky_relu(v, p.arch.leaky_slope);
        x = std::move(y);
    }
    double logit = p.d_dense_b[0];
    const auto w = p.d_dense_w.data();
    if (w.size() != x.size()) throw DimensionError("discriminator: dense layer size mismatch");
    for (std::size_t k = 0; k < w.size(); ++k) logit += w[k] * x[k];
    if (!std::isfinite(logit)) throw NumericError("discriminator: non-finite logit");
    if (cache) {
        cache->flat = x;
        cache->logit = logit;
    }
    return logit;
}

/// Accumulates discriminator gradients (order of discriminator_tensors()) given dL/d(logit);
/// returns dL/d(image).
inline Tensor discriminator_backward(const GanParams& p, const DiscriminatorCache& cache, double grad_logit,
                                     std::vector<Tensor>* grads) {
    const std::size_t nl = p.d_layers.size();
    Tensor g(cache.flat.shape());
    for (std::size_t k = 0; k < g.size(); ++k) g[k] = p.d_dense_w[k] * grad_logit;
    if (grads) {
        for (std::size_t k = 0; k < g.size(); ++k) (*grads)[2 * nl][k] += cache.flat[k] * grad_logit;
        (*grads)[2 * nl + 1][0] += grad_logit;
    }
    for (std::size_t i = nl; i-- > 0;) {
        const auto& l = p.d_layers[i];
        const Tensor& pre = cache.pre[i];
        for (std::size_t k = 0; k < g.size(); ++k)
            if (pre[k] <= 0.0) g[k] *= p.arch.leaky_slope;
        ConvGrads cg = conv2d_valid_backward(cache.inputs[i], l.kernels, l.spec.stride, g);
        if (grads) {
            for (std::size_t k = 0; k < cg.kernels.size(); ++k) (*grads)[2 * i][k] += cg.kernels[k];
            for (std::size_t k = 0; k < cg.bias.size(); ++k) (*grads)[2 * i + 1][k] += cg.bias[k];
        }
        g = std::move(cg.input);
    }
    return g;
}

// ---------------------------------------------------------------------------
// losses

struct GanLosses {
    double discriminator = 0.0;
    double generator = 0.0;
};

/// Discriminator loss -mean log D(x) - mean log(1 - D(G(z))) and non-saturating
/// generator loss -mean log D(G(z)); probabilities are clamped to [1e-7, 1 - 1e-7].
inline GanLosses gan_losses(std::span<const double> d_real, std::span<const double> d_fake) {
    if (d_real.empty() || d_fake.empty()) throw ArgumentError("gan_losses: empty batch");
    constexpr double lo = 1e-7, hi = 1.0 - 1e-7;
    GanLosses out;
    double sr = 0.0, sf = 0.0, sg = 0.0;
    for (double d : d_real) sr += std::log(std::clamp(d, lo, hi));
    for (double d : d_fake) {
        const double c = std::clamp(d, lo, hi);
        sf += std::log(1.0 - c);
        sg += std::log(c);
    }
    const double nr = static_cast<double>(d_real.size()), nf = static_cast<double>(d_fake.size());
    out.discriminator = -sr / nr - sf / nf;
    out.generator = -sg / nf;
    return out;
}

inline double softplus(double x) { return x > 0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x)); }

inline std::vector<Tensor> zero_grads(const std::vector<Tensor*>& params) {
    std::vector<Tensor> out;
    for (const Tensor* t : params) out.emplace_back(t->shape());
    return out;
}

struct LossAndGrads {
    double loss = 0.0;
    std::vector<Tensor> grads;
};

/// Discriminator loss on real images and generator samples from `noises`, with exact gradients.
inline LossAndGrads discriminator_loss_grads(GanParams& p, const std::vector<Image>& reals,
                                             const std::vector<std::vector<double>>& noises) {
    if (reals.empty() || noises.empty()) throw ArgumentError("discriminator_loss_grads: empty batch");
    LossAndGrads out{0.0, zero_grads(p.discriminator_tensors())};
    const double nr = static_cast<double>(reals.size()), nf = static_cast<double>(noises.size());
    DiscriminatorCache dc;
    for (const auto& x : reals) {
        const double l = discriminator_logit(p, x, &dc);
        out.loss += softplus(-l) / nr;
        discriminator_backward(p, dc, -(1.0 - sigmoid(l)) / nr, &out.grads);
    }
    for (const auto& z : noises) {
        const Image fake = generator_forward(p, z);
        const double l = discriminator_logit(p, fake, &dc);
        out.loss += softplus(l) / nf;
        discriminator_backward(p, dc, sigmoid(l) / nf, &out.grads);
    }
    return out;
}

/// Non-saturating generator loss -mean log D(G(z)) with exact generator gradients.
inline LossAndGrads generator_loss_grads(GanParams& p, const std::vector<std::vector<double>>& noises) {
    if (noises.empty()) throw ArgumentError("generator_loss_grads: empty batch");
    LossAndGrads out{0.0, zero_grads(p.generator_tensors())};
    const double nf = static_cast<double>(noises.size());
    GeneratorCache gc;
    DiscriminatorCache dc;
    for (const auto& z : noises) {
        const Image fake = generator_forward(p, z, &gc);
        const double l = discriminator_logit(p, fake, &dc);
        out.loss += softplus(-l) / nf;
        const Tensor dimg = discriminator_backward(p, dc, -(1.0 - sigmoid(l)) / nf, nullptr);
        generator_backward(p, gc, dimg, out.grads);
    }
    return out;
}

// ---------------------------------------------------------------------------
// online training

/// FIFO ring buffer of real positive patches.
class PositiveBank {
public:
    explicit PositiveBank(std::size_t capacity = 256) : capacity_(capacity) {
        if (capacity == 0) throw ArgumentError("PositiveBank capacity must be positive");
    }
    void push(Image patch) {
        if (patches_.size() == capacity_) patches_.pop_front();
        patches_.push_back(std::move(patch));
    }
    std::size_t size() const noexcept { return patches_.size(); }
    bool empty() const noexcept { return patches_.empty(); }
    std::size_t capacity() const noexcept { return capacity_; }
    const Image& at(std::size_t i) const { return patches_.at(i); }

private:
    std::size_t capacity_;
    std::deque<Image> patches_;
};

struct GanTrainSettings {
    std::size_t batch = 8;
    AdamSettings generator_adam{2e-3, 0.5, 0.999, 1e-8};
    AdamSettings discriminator_adam{2e-3, 0.5, 0.999, 1e-8};
};

struct GanOptimizer {
    std::vector<AdamState> generator;
    std::vector<AdamState> discriminator;

    GanOptimizer() = default;
    GanOptimizer(GanParams& p, const GanTrainSettings& s) {
        for (Tensor* t : p.generator_tensors()) generator.emplace_back(t->shape(), s.generator_adam);
        for (Tensor* t : p.discriminator_tensors()) discriminator.emplace_back(t->shape(), s.discriminator_adam);
    }
};

inline std::vector<double> sample_noise(std::size_t dim, std::mt19937_64& rng) {
    std::normal_distribution<double> nd(0.0, 1.0);
    std::vector<double> z(dim);
    for (auto& v : z) v = nd(rng);
    return z;
}

/// Alternating 1:1 discriminator/generator ADAM steps; returns the losses of the last step.
inline GanLosses train_gan(GanParams& p, GanOptimizer& opt, const PositiveBank& bank, std::size_t steps,
                           std::mt19937_64& rng, const GanTrainSettings& settings = {}) {
    if (bank.empty()) throw ArgumentError("train_gan: positive bank is empty");
    GanLosses last;
    std::uniform_int_distribution<std::size_t> pick(0, bank.size() - 1);
    for (std::size_t step = 0; step < steps; ++step) {
        std::vector<Image> reals;
        std::vector<std::vector<double>> noises;
        for (std::size_t i = 0; i < settings.batch; ++i) {
            reals.push_back(bank.at(pick(rng)));
            noises.push_back(sample_noise(p.arch.noise_dim, rng));
        }
        LossAndGrads d = discriminator_loss_grads(p, reals, noises);
        if (!std::isfinite(d.loss)) throw NumericError("train_gan: non-finite discriminator loss at step " + std::to_string(step));
        auto dt = p.discriminator_tensors();
        for (std::size_t i = 0; i < dt.size(); ++i) adam_step(*dt[i], d.grads[i], opt.discriminator[i], "discriminator");

        for (auto& z : noises) z = sample_noise(p.arch.noise_dim, rng);
        LossAndGrads g = generator_loss_grads(p, noises);
        if (!std::isfinite(g.loss)) throw NumericError("train_gan: non-finite generator loss at step " + std::to_string(step));
        auto gt = p.generator_tensors();
        for (std::size_t i = 0; i < gt.size(); ++i) adam_step(*gt[i], g.grads[i], opt.generator[i], "generator");
        last = {d.loss, g.loss};
    }
    return last;
}

inline std::vector<Image> generate_positives(const GanParams& p, std::size_t count, std::mt19937_64& rng) {
    std::vector<Image> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(generator_forward(p, sample_noise(p.arch.noise_dim, rng)));
    return out;
}

/// Resizes each patch to exemplar size, embeds it, and flattens channel-major: [B, m].
inline Tensor features_for_generated(const std::vector<Image>& patches, const Embedding& embedding,
                                     std::size_t exemplar_size) {
    if (patches.empty()) return Tensor({0, 0});
    std::vector<double> rows;
    std::size_t m = 0;
    for (const auto& patch : patches) {
        const double w = static_cast<double>(image_width(patch)), h = static_cast<double>(image_height(patch));
        const Image resized = crop_resize(patch, 0.5 * w, 0.5 * h, w, h, exemplar_size, exemplar_size);
        const Tensor f = embedding.embed(resized);
        if (m == 0) m = f.size();
        rows.insert(rows.end(), f.data().begin(), f.data().end());
    }
    return Tensor({patches.size(), m}, std::move(rows));
}

}  // namespace oalstm
