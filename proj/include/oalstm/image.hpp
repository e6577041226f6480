#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>

#include "oalstm/errors.hpp"
#include "oalstm/tensor.hpp"

namespace oalstm {

/// Images are rank-3 tensors [channels, height, width] with intensities in [0, 1].
using Image = Tensor;

inline std::size_t image_channels(const Image& im) { return im.dim(0); }
inline std::size_t image_height(const Image& im) { return im.dim(1); }
inline std::size_t image_width(const Image& im) { return im.dim(2); }

/// Axis-aligned box in continuous pixel coordinates; pixel (r, c) covers [c, c+1) x [r, r+1).
struct Box {
    double x = 0.0;
    double y = 0.0;
    double w = 0.0;
    double h = 0.0;

    double cx() const noexcept { return x + 0.5 * w; }
    double cy() const noexcept { return y + 0.5 * h; }
    double area() const noexcept { return w * h; }
    bool degenerate() const noexcept { return !(w > 0.0) || !(h > 0.0); }

    static Box from_center(double cx, double cy, double w, double h) { return {cx - 0.5 * w, cy - 0.5 * h, w, h}; }

    bool operator==(const Box&) const = default;
};

/// Intersection over union; 0 for disjoint or degenerate boxes.
inline double iou(const Box& a, const Box& b) {
    if (a.degenerate() || b.degenerate()) return 0.0;
    if (a == b) return 1.0;
    const double ix = std::max(0.0, std::min(a.x + a.w, b.x + b.w) - std::max(a.x, b.x));
    const double iy = std::max(0.0, std::min(a.y + a.h, b.y + b.h) - std::max(a.y, b.y));
    const double inter = ix * iy;
    if (inter <= 0.0) return 0.0;
    return std::min(1.0, inter / (a.area() + b.area() - inter));
}

inline double center_distance(const Box& a, const Box& b) { return std::hypot(a.cx() - b.cx(), a.cy() - b.cy()); }

/// Shrinks the box to fit the frame and moves its center inside.
inline Box clamp_box(const Box& b, double frame_w, double frame_h) {
    const double w = std::clamp(b.w, 1.0, frame_w);
    const double h = std::clamp(b.h, 1.0, frame_h);
    const double cx = std::clamp(b.cx(), 0.5 * w, frame_w - 0.5 * w);
    const double cy = std::clamp(b.cy(), 0.5 * h, frame_h - 0.5 * h);
    return Box::from_center(cx, cy, w, h);
}

inline bool box_inside(const Box& b, double frame_w, double frame_h) {
    return b.x >= 0.0 && b.y >= 0.0 && b.x + b.w <= frame_w && b.y + b.h <= frame_h;
}

/// Bilinear crop-and-resize of the region centered at (cx, cy) with extent src_w x src_h
/// to out_w x out_h pixels. Samples outside the frame replicate the nearest edge pixel.
inline Image crop_resize(const Image& image, double cx, double cy, double src_w, double src_h, std::size_t out_w,
                         std::size_t out_h) {
    if (image.rank() != 3) throw DimensionError("crop_resize: image must be rank 3");
    if (!(src_w > 0.0) || !(src_h > 0.0) || out_w == 0 || out_h == 0)
        throw GeometryError("crop_resize: degenerate crop region");
    const std::size_t c = image.dim(0), h = image.dim(1), w = image.dim(2);
    const double x0 = cx - 0.5 * src_w, y0 = cy - 0.5 * src_h;
    const double sx = src_w / static_cast<double>(out_w), sy = src_h / static_cast<double>(out_h);

    std::vector<std::size_t> xl(out_w), xr(out_w);
    std::vector<double> xa(out_w);
    for (std::size_t j = 0; j < out_w; ++j) {
        const double px = std::clamp(x0 + (static_cast<double>(j) + 0.5) * sx - 0.5, 0.0, static_cast<double>(w - 1));
        const double fl = std::floor(px);
        xl[j] = static_cast<std::size_t>(fl);
        xr[j] = std::min(xl[j] + 1, w - 1);
        xa[j] = px - fl;
    }
    Image out({c, out_h, out_w});
    for (std::size_t i = 0; i < out_h; ++i) {
        const double py = std::clamp(y0 + (static_cast<double>(i) + 0.5) * sy - 0.5, 0.0, static_cast<double>(h - 1));
        const double fl = std::floor(py);
        const std::size_t yt = static_cast<std::size_t>(fl), yb = std::min(yt + 1, h - 1);
        const double ya = py - fl;
        for (std::size_t ch = 0; ch < c; ++ch) {
            const double* top = &image.at(ch, yt, 0);
            const double* bot = &image.at(ch, yb, 0);
            double* o = &out.at(ch, i, 0);
            for (std::size_t j = 0; j < out_w; ++j) {
                const double t = top[xl[j]] + xa[j] * (top[xr[j]] - top[xl[j]]);
                const double b = bot[xl[j]] + xa[j] * (bot[xr[j]] - bot[xl[j]]);
                o[j] = t + ya * (b - t);
            }
        }
    }
    return out;
}

/// Integer-offset sub-image copy; the window must lie inside the image.
inline Image sub_image(const Image& image, std::size_t top, std::size_t left, std::size_t height, std::size_t width) {
    const std::size_t c = image.dim(0);
    if (top + height > image.dim(1) || left + width > image.dim(2))
        throw GeometryError("sub_image: window exceeds image bounds");
    Image out({c, height, width});
    for (std::size_t ch = 0; ch < c; ++ch)
        for (std::size_t i = 0; i < height; ++i)
            std::copy_n(&image.at(ch, top + i, left), width, &out.at(ch, i, 0));
    return out;
}

}  // namespace oalstm
