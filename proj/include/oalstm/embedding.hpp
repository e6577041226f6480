#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "oalstm/errors.hpp"
#include "oalstm/kernels.hpp"
#include "oalstm/tensor.hpp"
#include "oalstm/weight_file.hpp"

namespace oalstm {

struct ConvLayerSpec {
    std::size_t out_channels = 0;
    std::size_t kernel = 1;
    std::size_t stride = 1;
    bool relu = true;
};

struct ConvLayer {
    ConvLayerSpec spec;
    Tensor kernels;  // [out, in, k, k]
    Tensor bias;     // [out]
};

/// Fully valid-padded convolutional embedding used by both Siamese branches.
class Embedding {
public:
    Embedding() = default;

    Embedding(std::size_t input_channels, std::vector<ConvLayer> layers)
        : input_channels_(input_channels), layers_(std::move(layers)) {
        std::size_t cin = input_channels_;
        for (std::size_t i = 0; i < layers_.size(); ++i) {
            const auto& l = layers_[i];
            require_shape(l.kernels, {l.spec.out_channels, cin, l.spec.kernel, l.spec.kernel},
                          "embedding layer " + std::to_string(i) + " kernels");
            require_shape(l.bias, {l.spec.out_channels}, "embedding layer " + std::to_string(i) + " bias");
            cin = l.spec.out_channels;
        }
    }

    /// Desk-scale default: 3x3/2 -> 3x3/2 -> 1x1/1, receptive field 7, total stride 4,
    /// so 71 px exemplars give 17x17 features and 199 px search images give 49x49.
    static std::vector<ConvLayerSpec> default_architecture() {
        return {{16, 3, 2, true}, {16, 3, 2, true}, {8, 1, 1, false}};
    }

    /// He-style normal init; first-layer kernels are made zero-mean so flat regions embed to the bias.
    static Embedding random(std::size_t input_channels, const std::vector<ConvLayerSpec>& specs, std::uint64_t seed) {
        std::mt19937_64 rng(seed);
        std::vector<ConvLayer> layers;
        std::size_t cin = input_channels;
        for (std::size_t li = 0; li < specs.size(); ++li) {
            const auto& s = specs[li];
            ConvLayer l{s, Tensor({s.out_channels, cin, s.kernel, s.kernel}), Tensor({s.out_channels})};
            const std::size_t fan_in = cin * s.kernel * s.kernel;
            std::normal_distribution<double> nd(0.0, std::sqrt(2.0 / static_cast<double>(fan_in)));
            for (auto& v : l.kernels.data()) v = nd(rng);
            if (li == 0 && fan_in > 1) {
                for (std::size_t o = 0; o < s.out_channels; ++o) {
                    double* k = &l.kernels.at(o, 0, 0, 0);
                    double mean = 0.0;
                    for (std::size_t i = 0; i < fan_in; ++i) mean += k[i];
                    mean /= static_cast<double>(fan_in);
                    for (std::size_t i = 0; i < fan_in; ++i) k[i] -= mean;
                }
            }
            layers.push_back(std::move(l));
            cin = s.out_channels;
        }
        return Embedding(input_channels, std::move(layers));
    }

    std::size_t input_channels() const noexcept { return input_channels_; }
    std::size_t output_channels() const noexcept {
        return layers_.empty() ? input_channels_ : layers_.back().spec.out_channels;
    }
    const std::vector<ConvLayer>& layers() const noexcept { return layers_; }
    std::vector<ConvLayer>& mutable_layers() noexcept { return layers_; }  // shapes must be kept

    std::size_t total_stride() const noexcept {
        std::size_t s = 1;
        for (const auto& l : layers_) s *= l.spec.stride;
        return s;
    }

    std::size_t receptive_field() const noexcept {
        std::size_t rf = 1, jump = 1;
        for (const auto& l : layers_) {
            rf += (l.spec.kernel - 1) * jump;
            jump *= l.spec.stride;
        }
        return rf;
    }

    /// Spatial output extent for a square input of `extent` pixels.
    std::size_t output_extent(std::size_t extent) const {
        if (extent < receptive_field())
            throw GeometryError("input extent " + std::to_string(extent) + " smaller than receptive field " +
                                std::to_string(receptive_field()));
        std::size_t e = extent;
        for (const auto& l : layers_) e = valid_extent(e, l.spec.kernel, l.spec.stride);
        return e;
    }

    /// True when every layer consumes its input without a ragged remainder.
    bool tiles_exactly(std::size_t extent) const {
        std::size_t e = extent;
        for (const auto& l : layers_) {
            if (e < l.spec.kernel || (e - l.spec.kernel) % l.spec.stride != 0) return false;
            e = (e - l.spec.kernel) / l.spec.stride + 1;
        }
        return true;
    }

    /// Multiply-accumulates for embedding one h x w patch.
    std::uint64_t macs(std::size_t h, std::size_t w) const {
        std::uint64_t total = 0;
        std::size_t cin = input_channels_;
        for (const auto& l : layers_) {
            total += conv2d_macs(cin, h, w, l.spec.out_channels, l.spec.kernel, l.spec.stride);
            h = valid_extent(h, l.spec.kernel, l.spec.stride);
            w = valid_extent(w, l.spec.kernel, l.spec.stride);
            cin = l.spec.out_channels;
        }
        return total;
    }

    Tensor embed(const Tensor& patch) const {
        if (patch.rank() != 3) throw DimensionError("embed: patch must be rank 3, got " + shape_string(patch.shape()));
        if (patch.dim(0) != input_channels_)
            throw DimensionError("embed: patch has " + std::to_string(patch.dim(0)) + " channels, embedding expects " +
                                 std::to_string(input_channels_));
        const std::size_t rf = receptive_field();
        if (patch.dim(1) < rf || patch.dim(2) < rf)
            throw GeometryError("embed: patch " + std::to_string(patch.dim(1)) + "x" + std::to_string(patch.dim(2)) +
                                " smaller than receptive field " + std::to_string(rf));
        Tensor x = patch;
        for (const auto& l : layers_) {
            x = conv2d_valid(x, l.kernels, l.bias, l.spec.stride);
            if (l.spec.relu)
                for (auto& v : x.data()) v = relu(v);
        }
        return x;
    }

    NamedTensors to_named() const {
        NamedTensors out;
        out.emplace_back("embedding.input_channels", Tensor({1}, {static_cast<double>(input_channels_)}));
        for (std::size_t i = 0; i < layers_.size(); ++i) {
            const auto& l = layers_[i];
            const std::string p = "embedding.layer" + std::to_string(i);
            out.emplace_back(p + ".config", Tensor({2}, {static_cast<double>(l.spec.stride), l.spec.relu ? 1.0 : 0.0}));
            out.emplace_back(p + ".kernels", l.kernels);
            out.emplace_back(p + ".bias", l.bias);
        }
        return out;
    }

    static Embedding from_named(const NamedTensors& tensors) {
        const auto cin = static_cast<std::size_t>(find_tensor(tensors, "embedding.input_channels")[0]);
        std::vector<ConvLayer> layers;
        for (std::size_t i = 0;; ++i) {
            const std::string p = "embedding.layer" + std::to_string(i);
            bool present = false;
            for (const auto& e : tensors) present = present || e.first == p + ".kernels";
            if (!present) break;
            const Tensor& cfg = find_tensor(tensors, p + ".config");
            const Tensor& k = find_tensor(tensors, p + ".kernels");
            if (k.rank() != 4 || k.dim(2) != k.dim(3)) throw FormatError(p + ".kernels must be [out,in,k,k]");
            ConvLayerSpec spec{k.dim(0), k.dim(2), static_cast<std::size_t>(cfg[0]), cfg[1] != 0.0};
            layers.push_back({spec, k, find_tensor(tensors, p + ".bias")});
        }
        if (layers.empty()) throw FormatError("weight file contains no embedding layers");
        return Embedding(cin, std::move(layers));
    }

private:
    std::size_t input_channels_ = 1;
    std::vector<ConvLayer> layers_;
};

}  // namespace oalstm
