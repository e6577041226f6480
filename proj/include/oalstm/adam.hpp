#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>

#include "oalstm/errors.hpp"
#include "oalstm/tensor.hpp"

namespace oalstm {

struct AdamSettings {
    double learning_rate = 1e-3;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
};

/// Per-parameter ADAM moments. Moments start at zero; step counts updates.
struct AdamState {
    Tensor first_moment;
    Tensor second_moment;
    std::uint64_t step = 0;
    AdamSettings settings;

    AdamState() = default;
    AdamState(const Shape& shape, AdamSettings s) : first_moment(shape), second_moment(shape), settings(s) {}
};

/// One bias-corrected ADAM update of `param` in place.
inline void adam_step(Tensor& param, const Tensor& grad, AdamState& state, std::string_view name = "parameter") {
    if (grad.shape() != param.shape() || state.first_moment.shape() != param.shape() ||
        state.second_moment.shape() != param.shape())
        throw DimensionError("adam_step(" + std::string(name) + "): shape mismatch, param " +
                             shape_string(param.shape()) + ", grad " + shape_string(grad.shape()));
    if (!all_finite(grad.data())) throw NumericError("adam_step: non-finite gradient for " + std::string(name));

    const AdamSettings& s = state.settings;
    state.step += 1;
    const double t = static_cast<double>(state.step);
    const double c1 = 1.0 - std::pow(s.beta1, t);
    const double c2 = 1.0 - std::pow(s.beta2, t);
    auto m = state.first_moment.data();
    auto v = state.second_moment.data();
    auto p = param.data();
    auto g = grad.data();
    for (std::size_t i = 0; i < p.size(); ++i) {
        m[i] = s.beta1 * m[i] + (1.0 - s.beta1) * g[i];
        v[i] = s.beta2 * v[i] + (1.0 - s.beta2) * g[i] * g[i];
        const double mhat = m[i] / c1;
        const double vhat = v[i] / c2;
        p[i] -= s.learning_rate * mhat / (std::sqrt(vhat) + s.epsilon);
    }
}

}  // namespace oalstm
