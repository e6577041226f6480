#pragma once

// Object-adaptive LSTM classifier. Every proposal in a frame is evaluated
// against the same previously estimated state; training is a single
// timestep deep and treats that state as a constant.

#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "oalstm/adam.hpp"
#include "oalstm/errors.hpp"
#include "oalstm/kernels.hpp"
#include "oalstm/tensor.hpp"
#include "oalstm/weight_file.hpp"

namespace oalstm {

enum Gate : std::size_t { kInputGate = 0, kForgetGate = 1, kOutputGate = 2, kCellGate = 3 };
inline constexpr std::array<const char*, 4> kGateNames{"input", "forget", "output", "cell"};

// Logit/class layout: index 0 = negative, index 1 = positive; label 1 means positive.
inline constexpr std::size_t kNegativeClass = 0;
inline constexpr std::size_t kPositiveClass = 1;

struct LstmLayerParams {
    std::array<Tensor, 4> u;  // [n, n] input-to-gate
    std::array<Tensor, 4> v;  // [n, n] hidden-to-gate
    std::array<Tensor, 4> b;  // [n]
};

struct LstmParams {
    Tensor w_input;  // [m, n]
    Tensor b_input;  // [n]
    std::vector<LstmLayerParams> layers;
    Tensor w_output;  // [n, 2]
    Tensor b_output;  // [2]

    std::size_t input_dim() const { return w_input.dim(0); }
    std::size_t units() const { return w_input.dim(1); }

    static LstmParams zeros(std::size_t m, std::size_t n, std::size_t layer_count) {
        if (m == 0 || n == 0 || layer_count == 0) throw ArgumentError("LstmParams: sizes must be positive");
        LstmParams p;
        p.w_input = Tensor({m, n});
        p.b_input = Tensor({n});
        p.layers.resize(layer_count);
        for (auto& l : p.layers)
            for (std::size_t g = 0; g < 4; ++g) {
                l.u[g] = Tensor({n, n});
                l.v[g] = Tensor({n, n});
                l.b[g] = Tensor({n});
            }
        p.w_output = Tensor({n, 2});
        p.b_output = Tensor({2});
        return p;
    }

    /// Uniform fan-in init; forget-gate biases start at +1.
    static LstmParams random(std::size_t m, std::size_t n, std::size_t layer_count, std::uint64_t seed) {
        LstmParams p = zeros(m, n, layer_count);
        std::mt19937_64 rng(seed);
        auto fill = [&rng](Tensor& t, double bound) {
            std::uniform_real_distribution<double> u(-bound, bound);
            for (auto& v : t.data()) v = u(rng);
        };
        const double bn = 1.0 / std::sqrt(static_cast<double>(n));
        fill(p.w_input, 1.0 / std::sqrt(static_cast<double>(m)));
        for (auto& l : p.layers)
            for (std::size_t g = 0; g < 4; ++g) {
                fill(l.u[g], bn);
                fill(l.v[g], bn);
            }
        for (auto& l : p.layers) l.b[kForgetGate].fill(1.0);
        fill(p.w_output, bn);
        return p;
    }

    std::vector<std::string> names() const {
        std::vector<std::string> out{"lstm.w_input", "lstm.b_input"};
        for (std::size_t li = 0; li < layers.size(); ++li)
            for (std::size_t g = 0; g < 4; ++g) {
                const std::string p = "lstm.layer" + std::to_string(li) + ".";
                out.push_back(p + "u_" + kGateNames[g]);
                out.push_back(p + "v_" + kGateNames[g]);
                out.push_back(p + "b_" + kGateNames[g]);
            }
        out.push_back("lstm.w_output");
        out.push_back("lstm.b_output");
        return out;
    }

    template <typename Self>
    static auto tensors_of(Self& self) {
        using Ptr = std::conditional_t<std::is_const_v<Self>, const Tensor*, Tensor*>;
        std::vector<Ptr> out{&self.w_input, &self.b_input};
        for (auto& l : self.layers)
            for (std::size_t g = 0; g < 4; ++g) {
                out.push_back(&l.u[g]);
                out.push_back(&l.v[g]);
                out.push_back(&l.b[g]);
            }
        out.push_back(&self.w_output);
        out.push_back(&self.b_output);
        return out;
    }
    std::vector<Tensor*> tensors() { return tensors_of(*this); }
    std::vector<const Tensor*> tensors() const { return tensors_of(*this); }

    NamedTensors to_named() const {
        NamedTensors out;
        const auto n = names();
        const auto t = tensors();
        for (std::size_t i = 0; i < n.size(); ++i) out.emplace_back(n[i], *t[i]);
        return out;
    }

    static LstmParams from_named(const NamedTensors& named) {
        const Tensor& w_in = find_tensor(named, "lstm.w_input");
        std::size_t layer_count = 0;
        for (const auto& e : named)
            if (e.first.rfind("lstm.layer", 0) == 0 && e.first.ends_with(".u_input")) ++layer_count;
        LstmParams p = zeros(w_in.dim(0), w_in.dim(1), layer_count);
        const auto n = p.names();
        auto t = p.tensors();
        for (std::size_t i = 0; i < n.size(); ++i) {
            const Tensor& src = find_tensor(named, n[i]);
            require_shape(src, t[i]->shape(), n[i]);
            *t[i] = src;
        }
        return p;
    }

    bool operator==(const LstmParams& o) const {
        const auto a = tensors(), b = o.tensors();
        if (a.size() != b.size()) return false;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (!(*a[i] == *b[i])) return false;
        return true;
    }
};

struct LayerState {
    std::vector<double> c;
    std::vector<double> h;
    bool operator==(const LayerState&) const = default;
};

struct LstmState {
    std::vector<LayerState> layers;

    static LstmState zeros(std::size_t layer_count, std::size_t n) {
        LstmState s;
        s.layers.assign(layer_count, LayerState{std::vector<double>(n, 0.0), std::vector<double>(n, 0.0)});
        return s;
    }
    bool operator==(const LstmState&) const = default;
};

struct ClassScores {
    double p_pos = 0.5;
    double p_neg = 0.5;
    LstmState state;  // candidate state generated by this proposal
};

namespace detail {

struct LayerCache {
    std::vector<double> in;
    std::array<std::vector<double>, 4> gate;  // post-activation i, f, o, g
    std::vector<double> c;
    std::vector<double> tanh_c;
    std::vector<double> h;
};

struct StepCache {
    std::vector<double> z;
    std::vector<LayerCache> layers;
    std::array<double, 2> logits{};
};

inline void check_vector(const std::vector<double>& v, std::size_t layer, const char* what) {
    if (!all_finite(v))
        throw NumericError("non-finite value in " + std::string(what) + " of LSTM layer " + std::to_string(layer));
}

inline void forward_step(const LstmParams& p, const LstmState& prev, std::span<const double> x, StepCache& cache) {
    const std::size_t m = p.input_dim(), n = p.units();
    if (x.size() != m)
        throw DimensionError("LSTM input length " + std::to_string(x.size()) + ", expected " + std::to_string(m));
    if (prev.layers.size() != p.layers.size())
        throw DimensionError("LSTM state has " + std::to_string(prev.layers.size()) + " layers, params have " +
                             std::to_string(p.layers.size()));

    cache.z.assign(p.b_input.data().begin(), p.b_input.data().end());
    gemv_t_acc(p.w_input.data(), m, n, x, cache.z);
    if (!all_finite(cache.z)) throw NumericError("non-finite value in LSTM input layer");

    cache.layers.resize(p.layers.size());
    const std::vector<double>* in = &cache.z;
    for (std::size_t li = 0; li < p.layers.size(); ++li) {
        const auto& lp = p.layers[li];
        const auto& ps = prev.layers[li];
        if (ps.c.size() != n || ps.h.size() != n) throw DimensionError("LSTM state vector length mismatch");
        auto& lc = cache.layers[li];
        lc.in = *in;
        for (std::size_t g = 0; g < 4; ++g) {
            auto& a = lc.gate[g];
            a.assign(lp.b[g].data().begin(), lp.b[g].data().end());
            gemv_acc(lp.u[g].data(), n, n, lc.in, a);
            gemv_acc(lp.v[g].data(), n, n, ps.h, a);
            if (g == kCellGate)
                for (auto& v : a) v = std::tanh(v);
            else
                for (auto& v : a) v = sigmoid(v);
            check_vector(a, li, (std::string(kGateNames[g]) + " gate").c_str());
        }
        lc.c.resize(n);
        lc.tanh_c.resize(n);
        lc.h.resize(n);
        for (std::size_t j = 0; j < n; ++j) {
            lc.c[j] = lc.gate[kForgetGate][j] * ps.c[j] + lc.gate[kInputGate][j] * lc.gate[kCellGate][j];
            lc.tanh_c[j] = std::tanh(lc.c[j]);
            lc.h[j] = lc.gate[kOutputGate][j] * lc.tanh_c[j];
        }
        check_vector(lc.c, li, "cell state");
        in = &lc.h;
    }
    const auto& top = cache.layers.back().h;
    for (std::size_t k = 0; k < 2; ++k) cache.logits[k] = p.b_output[k];
    for (std::size_t j = 0; j < n; ++j) {
        cache.logits[0] += p.w_output.at(j, 0) * top[j];
        cache.logits[1] += p.w_output.at(j, 1) * top[j];
    }
    if (!std::isfinite(cache.logits[0]) || !std::isfinite(cache.logits[1]))
        throw NumericError("non-finite value in LSTM output layer");
}

inline LstmState state_from_cache(const StepCache& cache) {
    LstmState s;
    for (const auto& l : cache.layers) s.layers.push_back({l.c, l.h});
    return s;
}

}  // namespace detail

/// Two-class softmax of a logit pair, returned as (p_pos, p_neg).
inline std::pair<double, double> class_probabilities(const std::array<double, 2>& logits) {
    const double d = logits[kPositiveClass] - logits[kNegativeClass];
    const double p_pos = sigmoid(d);
    return {p_pos, 1.0 - p_pos};
}

/// Runs one step from the zero state on the initial target feature.
inline LstmState init_state(const LstmParams& params, std::span<const double> initial_feature) {
    detail::StepCache cache;
    detail::forward_step(params, LstmState::zeros(params.layers.size(), params.units()), initial_feature, cache);
    return detail::state_from_cache(cache);
}

/// Classifies each row of `features` ([B, m]) against the same previous state.
inline std::vector<ClassScores> lstm_forward(const LstmParams& params, const LstmState& prev_state,
                                             const Tensor& features) {
    if (features.rank() != 2 || features.dim(0) == 0)
        throw DimensionError("lstm_forward: features must be a non-empty [B, m] batch");
    const std::size_t b = features.dim(0), m = features.dim(1);
    std::vector<ClassScores> out(b);
    detail::StepCache cache;
    for (std::size_t i = 0; i < b; ++i) {
        detail::forward_step(params, prev_state, features.data().subspan(i * m, m), cache);
        std::tie(out[i].p_pos, out[i].p_neg) = class_probabilities(cache.logits);
        out[i].state = detail::state_from_cache(cache);
    }
    return out;
}

struct LstmGradients {
    double loss = 0.0;
    LstmParams grads;
};

/// Batch-mean cross-entropy and its exact gradient w.r.t. every parameter.
/// prev_state is a constant: nothing propagates into it.
inline LstmGradients lstm_backward(const LstmParams& params, const LstmState& prev_state, const Tensor& features,
                                   std::span<const int> labels) {
    if (features.rank() != 2 || features.dim(0) == 0)
        throw DimensionError("lstm_backward: features must be a non-empty [B, m] batch");
    const std::size_t b = features.dim(0), m = features.dim(1), n = params.units();
    if (labels.size() != b)
        throw DimensionError("lstm_backward: " + std::to_string(labels.size()) + " labels for " + std::to_string(b) +
                             " samples");

    std::vector<detail::StepCache> caches(b);
    Tensor logits({b, 2});
    for (std::size_t i = 0; i < b; ++i) {
        detail::forward_step(params, prev_state, features.data().subspan(i * m, m), caches[i]);
        logits.at(i, 0) = caches[i].logits[0];
        logits.at(i, 1) = caches[i].logits[1];
    }
    const XentResult xent = softmax_xent(logits, labels);

    LstmGradients out{xent.loss, LstmParams::zeros(m, n, params.layers.size())};
    auto& g = out.grads;
    std::vector<double> dh(n), dc(n), din(n);
    std::array<std::vector<double>, 4> da;
    for (auto& v : da) v.resize(n);

    for (std::size_t i = 0; i < b; ++i) {
        const auto& cache = caches[i];
        const double dl[2] = {xent.grad.at(i, 0), xent.grad.at(i, 1)};
        const auto& top = cache.layers.back().h;
        for (std::size_t k = 0; k < 2; ++k) g.b_output[k] += dl[k];
        outer_acc(g.w_output.data(), top, std::span<const double>(dl, 2));
        // error at the top hidden state: W_output * d(logits)
        std::fill(dh.begin(), dh.end(), 0.0);
        gemv_acc(params.w_output.data(), n, 2, std::span<const double>(dl, 2), dh);

        for (std::size_t li = params.layers.size(); li-- > 0;) {
            const auto& lc = cache.layers[li];
            const auto& lp = params.layers[li];
            auto& lg = g.layers[li];
            const auto& ps = prev_state.layers[li];
            const auto& ig = lc.gate[kInputGate];
            const auto& fg = lc.gate[kForgetGate];
            const auto& og = lc.gate[kOutputGate];
            const auto& cg = lc.gate[kCellGate];
            for (std::size_t j = 0; j < n; ++j) {
                // the output gate does not read the cell, so only the tanh path feeds dc
                dc[j] = dh[j] * og[j] * (1.0 - lc.tanh_c[j] * lc.tanh_c[j]);
                da[kOutputGate][j] = dh[j] * lc.tanh_c[j] * og[j] * (1.0 - og[j]);
                da[kInputGate][j] = dc[j] * cg[j] * ig[j] * (1.0 - ig[j]);
                da[kForgetGate][j] = dc[j] * ps.c[j] * fg[j] * (1.0 - fg[j]);
                da[kCellGate][j] = dc[j] * ig[j] * (1.0 - cg[j] * cg[j]);
            }
            std::fill(din.begin(), din.end(), 0.0);
            for (std::size_t gi = 0; gi < 4; ++gi) {
                outer_acc(lg.u[gi].data(), da[gi], lc.in);
                outer_acc(lg.v[gi].data(), da[gi], ps.h);
                for (std::size_t j = 0; j < n; ++j) lg.b[gi][j] += da[gi][j];
                gemv_t_acc(lp.u[gi].data(), n, n, da[gi], din);
            }
            dh.swap(din);
        }
        // dh now holds d(loss)/dz for the input layer
        for (std::size_t j = 0; j < n; ++j) g.b_input[j] += dh[j];
        outer_acc(g.w_input.data(), features.data().subspan(i * m, m), dh);
    }
    for (const Tensor* t : g.tensors()) check_finite(*t, "LSTM gradient");
    return out;
}

/// One ADAM state per parameter tensor, in LstmParams::tensors() order.
struct LstmOptimizer {
    std::vector<AdamState> states;

    LstmOptimizer() = default;
    LstmOptimizer(const LstmParams& params, AdamSettings settings) {
        for (const Tensor* t : params.tensors()) states.emplace_back(t->shape(), settings);
    }
};

/// Backward pass plus one ADAM update per parameter; returns the pre-update loss.
inline double lstm_train_step(LstmParams& params, const LstmState& prev_state, const Tensor& features,
                              std::span<const int> labels, LstmOptimizer& optimizer) {
    const LstmGradients g = lstm_backward(params, prev_state, features, labels);
    auto p = params.tensors();
    const auto gs = g.grads.tensors();
    const auto names = params.names();
    if (optimizer.states.size() != p.size()) throw ArgumentError("LstmOptimizer does not match parameter layout");
    for (std::size_t i = 0; i < p.size(); ++i) adam_step(*p[i], *gs[i], optimizer.states[i], names[i]);
    return g.loss;
}

/// Index of the highest positive score (lowest index on ties) and its candidate state.
inline std::pair<std::size_t, LstmState> choose_target(const std::vector<ClassScores>& scores) {
    if (scores.empty()) throw ArgumentError("choose_target: empty batch");
    std::size_t best = 0;
    for (std::size_t i = 1; i < scores.size(); ++i)
        if (scores[i].p_pos > scores[best].p_pos) best = i;
    return {best, scores[best].state};
}

}  // namespace oalstm
