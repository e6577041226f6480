#pragma once

// Dense kernels with hand-derived gradients. Every kernel is a pure function
// of its arguments and rejects non-finite results.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "oalstm/errors.hpp"
#include "oalstm/tensor.hpp"

namespace oalstm {

inline std::size_t valid_extent(std::size_t in, std::size_t k, std::size_t stride) {
    if (stride == 0) throw ArgumentError("stride must be positive");
    if (k == 0 || k > in)
        throw DimensionError("kernel extent " + std::to_string(k) + " exceeds input extent " + std::to_string(in));
    return (in - k) / stride + 1;
}

/// Valid (unpadded) multi-channel convolution, cross-correlation convention.
/// input [C_in, H, W], kernels [C_out, C_in, kh, kw]; bias may be empty or [C_out].
inline Tensor conv2d_valid(const Tensor& input, const Tensor& kernels, const Tensor& bias, std::size_t stride) {
    if (input.rank() != 3) throw DimensionError("conv2d_valid: input must be rank 3, got " + shape_string(input.shape()));
    if (kernels.rank() != 4)
        throw DimensionError("conv2d_valid: kernels must be rank 4, got " + shape_string(kernels.shape()));
    const std::size_t cin = input.dim(0), h = input.dim(1), w = input.dim(2);
    const std::size_t cout = kernels.dim(0), kh = kernels.dim(2), kw = kernels.dim(3);
    if (kernels.dim(1) != cin)
        throw DimensionError("conv2d_valid: channel axis mismatch, input " + std::to_string(cin) + " vs kernels " +
                             std::to_string(kernels.dim(1)));
    if (!bias.empty() && bias.size() != cout)
        throw DimensionError("conv2d_valid: bias length " + std::to_string(bias.size()) + " vs " +
                             std::to_string(cout) + " output channels");
    if (kh > h || kw > w)
        throw DimensionError("conv2d_valid: kernel " + std::to_string(kh) + "x" + std::to_string(kw) +
                             " larger than input " + std::to_string(h) + "x" + std::to_string(w));
    const std::size_t oh = valid_extent(h, kh, stride), ow = valid_extent(w, kw, stride);

    Tensor out({cout, oh, ow});
    const double* in = input.data().data();
    for (std::size_t co = 0; co < cout; ++co) {
        double* o = &out.at(co, 0, 0);
        const double b = bias.empty() ? 0.0 : bias[co];
        for (std::size_t i = 0; i < oh * ow; ++i) o[i] = b;
        for (std::size_t ci = 0; ci < cin; ++ci) {
            for (std::size_t u = 0; u < kh; ++u) {
                for (std::size_t v = 0; v < kw; ++v) {
                    const double k = kernels.at(co, ci, u, v);
                    for (std::size_t i = 0; i < oh; ++i) {
                        const double* row = in + (ci * h + i * stride + u) * w + v;
                        double* orow = o + i * ow;
                        for (std::size_t j = 0; j < ow; ++j) orow[j] += k * row[j * stride];
                    }
                }
            }
        }
    }
    check_finite(out, "conv2d_valid output");
    return out;
}

inline Tensor conv2d_valid(const Tensor& input, const Tensor& kernels, std::size_t stride) {
    return conv2d_valid(input, kernels, Tensor{}, stride);
}

struct ConvGrads {
    Tensor input;
    Tensor kernels;
    Tensor bias;
};

/// Gradients of conv2d_valid given dL/d(output).
inline ConvGrads conv2d_valid_backward(const Tensor& input, const Tensor& kernels, std::size_t stride,
                                       const Tensor& grad_out) {
    const std::size_t cin = input.dim(0), h = input.dim(1), w = input.dim(2);
    const std::size_t cout = kernels.dim(0), kh = kernels.dim(2), kw = kernels.dim(3);
    const std::size_t oh = valid_extent(h, kh, stride), ow = valid_extent(w, kw, stride);
    require_shape(grad_out, {cout, oh, ow}, "conv2d_valid_backward grad_out");

    ConvGrads g{Tensor(input.shape()), Tensor(kernels.shape()), Tensor({cout})};
    const double* in = input.data().data();
    double* gin = g.input.data().data();
    for (std::size_t co = 0; co < cout; ++co) {
        const double* go = &grad_out.at(co, 0, 0);
        double bsum = 0.0;
        for (std::size_t i = 0; i < oh * ow; ++i) bsum += go[i];
        g.bias[co] = bsum;
        for (std::size_t ci = 0; ci < cin; ++ci) {
            for (std::size_t u = 0; u < kh; ++u) {
                for (std::size_t v = 0; v < kw; ++v) {
                    const double k = kernels.at(co, ci, u, v);
                    double acc = 0.0;
                    for (std::size_t i = 0; i < oh; ++i) {
                        const std::size_t base = (ci * h + i * stride + u) * w + v;
                        const double* gorow = go + i * ow;
                        for (std::size_t j = 0; j < ow; ++j) {
                            acc += in[base + j * stride] * gorow[j];
                            gin[base + j * stride] += k * gorow[j];
                        }
                    }
                    g.kernels.at(co, ci, u, v) = acc;
                }
            }
        }
    }
    check_finite(g.input, "conv2d_valid_backward input gradient");
    check_finite(g.kernels, "conv2d_valid_backward kernel gradient");
    return g;
}

/// Transposed convolution (fractionally strided), the adjoint of conv2d_valid.
/// input [C_in, H, W], kernels [C_in, C_out, kh, kw] -> [C_out, (H-1)s+kh, (W-1)s+kw].
inline Tensor conv_transpose2d(const Tensor& input, const Tensor& kernels, const Tensor& bias, std::size_t stride) {
    if (input.rank() != 3 || kernels.rank() != 4)
        throw DimensionError("conv_transpose2d: expected rank 3 input and rank 4 kernels, got " +
                             shape_string(input.shape()) + " and " + shape_string(kernels.shape()));
    if (stride == 0) throw ArgumentError("stride must be positive");
    const std::size_t cin = input.dim(0), h = input.dim(1), w = input.dim(2);
    if (kernels.dim(0) != cin)
        throw DimensionError("conv_transpose2d: channel axis mismatch, input " + std::to_string(cin) + " vs kernels " +
                             std::to_string(kernels.dim(0)));
    const std::size_t cout = kernels.dim(1), kh = kernels.dim(2), kw = kernels.dim(3);
    const std::size_t oh = (h - 1) * stride + kh, ow = (w - 1) * stride + kw;
    if (!bias.empty() && bias.size() != cout)
        throw DimensionError("conv_transpose2d: bias length mismatch");

    Tensor out({cout, oh, ow});
    for (std::size_t co = 0; co < cout; ++co) {
        const double b = bias.empty() ? 0.0 : bias[co];
        double* o = &out.at(co, 0, 0);
        for (std::size_t i = 0; i < oh * ow; ++i) o[i] = b;
        for (std::size_t ci = 0; ci < cin; ++ci) {
            for (std::size_t u = 0; u < kh; ++u) {
                for (std::size_t v = 0; v < kw; ++v) {
                    const double k = kernels.at(ci, co, u, v);
                    for (std::size_t i = 0; i < h; ++i) {
                        const double* irow = &input.at(ci, i, 0);
                        double* orow = o + (i * stride + u) * ow + v;
                        for (std::size_t j = 0; j < w; ++j) orow[j * stride] += k * irow[j];
                    }
                }
            }
        }
    }
    check_finite(out, "conv_transpose2d output");
    return out;
}

inline ConvGrads conv_transpose2d_backward(const Tensor& input, const Tensor& kernels, std::size_t stride,
                                           const Tensor& grad_out) {
    const std::size_t cin = input.dim(0), h = input.dim(1), w = input.dim(2);
    const std::size_t cout = kernels.dim(1), kh = kernels.dim(2), kw = kernels.dim(3);
    const std::size_t oh = (h - 1) * stride + kh, ow = (w - 1) * stride + kw;
    require_shape(grad_out, {cout, oh, ow}, "conv_transpose2d_backward grad_out");

    ConvGrads g{Tensor(input.shape()), Tensor(kernels.shape()), Tensor({cout})};
    for (std::size_t co = 0; co < cout; ++co) {
        const double* go = &grad_out.at(co, 0, 0);
        double bsum = 0.0;
        for (std::size_t i = 0; i < oh * ow; ++i) bsum += go[i];
        g.bias[co] = bsum;
        for (std::size_t ci = 0; ci < cin; ++ci) {
            for (std::size_t u = 0; u < kh; ++u) {
                for (std::size_t v = 0; v < kw; ++v) {
                    const double k = kernels.at(ci, co, u, v);
                    double acc = 0.0;
                    for (std::size_t i = 0; i < h; ++i) {
                        const double* irow = &input.at(ci, i, 0);
                        double* girow = &g.input.at(ci, i, 0);
                        const double* gorow = go + (i * stride + u) * ow + v;
                        for (std::size_t j = 0; j < w; ++j) {
                            acc += irow[j] * gorow[j * stride];
                            girow[j] += k * gorow[j * stride];
                        }
                    }
                    g.kernels.at(ci, co, u, v) = acc;
                }
            }
        }
    }
    check_finite(g.input, "conv_transpose2d_backward input gradient");
    check_finite(g.kernels, "conv_transpose2d_backward kernel gradient");
    return g;
}

/// Dense cross-correlation of a template over a search map, plus a constant offset.
/// template [C, kh, kw], search [C, H, W] -> [H-kh+1, W-kw+1].
inline Tensor cross_correlate(const Tensor& templ, const Tensor& search, double offset = 0.0) {
    if (templ.rank() != 3 || search.rank() != 3)
        throw DimensionError("cross_correlate: expected rank 3 operands, got " + shape_string(templ.shape()) + " and " +
                             shape_string(search.shape()));
    const std::size_t c = templ.dim(0), kh = templ.dim(1), kw = templ.dim(2);
    if (search.dim(0) != c)
        throw DimensionError("cross_correlate: channel mismatch, template " + std::to_string(c) + " vs search " +
                             std::to_string(search.dim(0)));
    const std::size_t h = search.dim(1), w = search.dim(2);
    const std::size_t oh = valid_extent(h, kh, 1), ow = valid_extent(w, kw, 1);
    Tensor out({oh, ow}, offset);
    double* o = out.data().data();
    for (std::size_t ch = 0; ch < c; ++ch) {
        for (std::size_t u = 0; u < kh; ++u) {
            for (std::size_t v = 0; v < kw; ++v) {
                const double t = templ.at(ch, u, v);
                for (std::size_t i = 0; i < oh; ++i) {
                    const double* row = &search.at(ch, i + u, v);
                    double* orow = o + i * ow;
                    for (std::size_t j = 0; j < ow; ++j) orow[j] += t * row[j];
                }
            }
        }
    }
    check_finite(out, "cross_correlate output");
    return out;
}

/// Multiply-accumulate count of conv2d_valid for the given geometry.
inline std::uint64_t conv2d_macs(std::size_t cin, std::size_t h, std::size_t w, std::size_t cout, std::size_t k,
                                 std::size_t stride) {
    const std::uint64_t oh = valid_extent(h, k, stride), ow = valid_extent(w, k, stride);
    return oh * ow * cout * cin * k * k;
}

// ---------------------------------------------------------------------------
// dense helpers on raw spans (row-major matrices)

/// y += A x, A is [rows, cols].
inline void gemv_acc(std::span<const double> a, std::size_t rows, std::size_t cols, std::span<const double> x,
                     std::span<double> y) {
    for (std::size_t r = 0; r < rows; ++r) {
        const double* ar = a.data() + r * cols;
        double acc = 0.0;
        for (std::size_t c = 0; c < cols; ++c) acc += ar[c] * x[c];
        y[r] += acc;
    }
}

/// y += A^T x, A is [rows, cols], x has length rows.
inline void gemv_t_acc(std::span<const double> a, std::size_t rows, std::size_t cols, std::span<const double> x,
                       std::span<double> y) {
    for (std::size_t r = 0; r < rows; ++r) {
        const double xr = x[r];
        if (xr == 0.0) continue;
        const double* ar = a.data() + r * cols;
        for (std::size_t c = 0; c < cols; ++c) y[c] += ar[c] * xr;
    }
}

/// A += u v^T, A is [len(u), len(v)].
inline void outer_acc(std::span<double> a, std::span<const double> u, std::span<const double> v) {
    const std::size_t cols = v.size();
    for (std::size_t r = 0; r < u.size(); ++r) {
        const double ur = u[r];
        if (ur == 0.0) continue;
        double* ar = a.data() + r * cols;
        for (std::size_t c = 0; c < cols; ++c) ar[c] += ur * v[c];
    }
}

// ---------------------------------------------------------------------------
// activations

inline double sigmoid(double x) {
    if (x >= 0) return 1.0 / (1.0 + std::exp(-x));
    const double e = std::exp(x);
    return e / (1.0 + e);
}

inline double relu(double x) { return x > 0.0 ? x : 0.0; }

inline double leaky_relu(double x, double slope) { return x > 0.0 ? x : slope * x; }

// ---------------------------------------------------------------------------
// softmax cross-entropy over two (or more) classes

struct XentResult {
    double loss = 0.0;
    Tensor grad;  // d(loss)/d(logits), same shape as logits
};

/// Batch-mean softmax cross-entropy. logits [B, K], labels index classes.
inline XentResult softmax_xent(const Tensor& logits, std::span<const int> labels) {
    if (logits.rank() != 2) throw DimensionError("softmax_xent: logits must be rank 2, got " + shape_string(logits.shape()));
    const std::size_t b = logits.dim(0), k = logits.dim(1);
    if (b == 0) throw ArgumentError("softmax_xent: empty batch");
    if (labels.size() != b)
        throw DimensionError("softmax_xent: " + std::to_string(labels.size()) + " labels for batch of " +
                             std::to_string(b));
    XentResult r{0.0, Tensor(logits.shape())};
    const double inv_b = 1.0 / static_cast<double>(b);
    for (std::size_t i = 0; i < b; ++i) {
        const int y = labels[i];
        if (y < 0 || static_cast<std::size_t>(y) >= k)
            throw ArgumentError("softmax_xent: label " + std::to_string(y) + " out of range");
        double mx = logits.at(i, 0);
        for (std::size_t j = 1; j < k; ++j) mx = std::max(mx, logits.at(i, j));
        double sum = 0.0;
        for (std::size_t j = 0; j < k; ++j) sum += std::exp(logits.at(i, j) - mx);
        const double lse = mx + std::log(sum);
        r.loss += (lse - logits.at(i, static_cast<std::size_t>(y))) * inv_b;
        for (std::size_t j = 0; j < k; ++j) {
            const double p = std::exp(logits.at(i, j) - lse);
            r.grad.at(i, j) = (p - (static_cast<std::size_t>(y) == j ? 1.0 : 0.0)) * inv_b;
        }
    }
    if (!std::isfinite(r.loss)) throw NumericError("softmax_xent: non-finite loss");
    check_finite(r.grad, "softmax_xent gradient");
    return r;
}

}  // namespace oalstm
