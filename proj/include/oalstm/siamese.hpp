#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "oalstm/embedding.hpp"
#include "oalstm/errors.hpp"
#include "oalstm/image.hpp"
#include "oalstm/kernels.hpp"
#include "oalstm/tensor.hpp"

namespace oalstm {

struct GeometrySettings {
    std::size_t exemplar_size = 71;
    std::size_t search_size = 199;
    double context = 0.2;
    std::vector<double> scales{0.964, 1.0, 1.0375};
    double scale_penalty = 1.0;       // multiplies non-unit-scale confidences; 1.0 disables
    double correlation_offset = 0.0;  // the constant k added to every score cell
};

/// Pixel and feature geometry shared by the matcher and the proposal selector.
struct SearchGeometry {
    GeometrySettings settings;
    std::size_t feature_stride = 0;
    std::size_t template_extent = 0;
    std::size_t search_extent = 0;
    std::size_t score_extent = 0;

    static SearchGeometry derive(const Embedding& embedding, const GeometrySettings& s) {
        if (s.scales.empty()) throw ArgumentError("geometry: at least one scale factor is required");
        if (!(s.context >= 0.0)) throw ArgumentError("geometry: context margin must be non-negative");
        if (s.search_size < s.exemplar_size) throw GeometryError("geometry: search image smaller than exemplar");
        SearchGeometry g;
        g.settings = s;
        g.feature_stride = embedding.total_stride();
        g.template_extent = embedding.output_extent(s.exemplar_size);
        g.search_extent = embedding.output_extent(s.search_size);
        g.score_extent = g.search_extent - g.template_extent + 1;
        if (!embedding.tiles_exactly(s.exemplar_size) || !embedding.tiles_exactly(s.search_size) ||
            (s.search_size - s.exemplar_size) % g.feature_stride != 0)
            throw GeometryError("geometry: exemplar " + std::to_string(s.exemplar_size) + " / search " +
                                std::to_string(s.search_size) +
                                " sizes do not align with the embedding stride; feature crops would not be exact");
        return g;
    }

    /// Side of the square context crop around a w x h object.
    double exemplar_side(double w, double h) const {
        const double pad = settings.context * 0.5 * (w + h);
        return std::sqrt((w + pad) * (h + pad));
    }

    double search_side(double w, double h, double scale) const {
        return exemplar_side(w, h) * scale * static_cast<double>(settings.search_size) /
               static_cast<double>(settings.exemplar_size);
    }
};

struct Template {
    Tensor features;  // [C, template_extent, template_extent]
    Image exemplar;   // exemplar_size x exemplar_size crop that was embedded
    Box annotation;
    double crop_side = 0.0;
};

/// Score map and search features for one scale factor, plus the mapping
/// from score coordinates back to frame pixels.
struct ScaleResponse {
    double scale = 1.0;
    Tensor scores;           // [score_extent, score_extent]
    Tensor search_features;  // [C, search_extent, search_extent]
    Image search_image;      // [channels, search_size, search_size]
    double origin_x = 0.0;   // frame coordinates of the search crop's top-left corner
    double origin_y = 0.0;
    double pixel_ratio = 1.0;  // frame pixels per search-image pixel
    double box_w = 0.0;        // candidate box extent at this scale, frame pixels
    double box_h = 0.0;
};

struct ScoreMapSet {
    std::vector<ScaleResponse> responses;
    std::size_t feature_stride = 0;
    std::size_t template_extent = 0;
    std::size_t exemplar_size = 0;
    std::uint64_t macs = 0;  // conv + correlation multiply-accumulates spent building the set

    std::size_t cell_count() const {
        std::size_t n = 0;
        for (const auto& r : responses) n += r.scores.size();
        return n;
    }

    /// Frame-space box of the sub-window behind score cell (row, col) at scale index s.
    Box cell_box(std::size_t s, std::size_t row, std::size_t col) const {
        const auto& r = responses.at(s);
        const double half = 0.5 * static_cast<double>(exemplar_size);
        const double cx = r.origin_x + (static_cast<double>(feature_stride * col) + half) * r.pixel_ratio;
        const double cy = r.origin_y + (static_cast<double>(feature_stride * row) + half) * r.pixel_ratio;
        return Box::from_center(cx, cy, r.box_w, r.box_h);
    }

    /// Inverse of cell_box: the score cell whose sub-window is centered nearest to the box center.
    std::pair<long, long> box_cell(std::size_t s, const Box& b) const {
        const auto& r = responses.at(s);
        const double half = 0.5 * static_cast<double>(exemplar_size);
        const double stride = static_cast<double>(feature_stride);
        const long col = std::lround(((b.cx() - r.origin_x) / r.pixel_ratio - half) / stride);
        const long row = std::lround(((b.cy() - r.origin_y) / r.pixel_ratio - half) / stride);
        return {row, col};
    }
};

/// Crops the object with its context margin, resizes to exemplar size, and embeds it.
/// The template is built once per sequence and never updated.
inline Template make_template(const Embedding& embedding, const SearchGeometry& geometry, const Image& frame,
                              const Box& annotation) {
    if (annotation.degenerate()) throw AnnotationError("annotation has zero width or height");
    const double fw = static_cast<double>(image_width(frame)), fh = static_cast<double>(image_height(frame));
    if (annotation.x + annotation.w <= 0.0 || annotation.y + annotation.h <= 0.0 || annotation.x >= fw ||
        annotation.y >= fh)
        throw AnnotationError("annotation lies outside the frame");
    Template t;
    t.annotation = annotation;
    t.crop_side = geometry.exemplar_side(annotation.w, annotation.h);
    const auto ez = geometry.settings.exemplar_size;
    t.exemplar = crop_resize(frame, annotation.cx(), annotation.cy(), t.crop_side, t.crop_side, ez, ez);
    t.features = embedding.embed(t.exemplar);
    return t;
}

/// Scores every sub-window of the search region around prev_box at each configured scale.
inline ScoreMapSet score_search(const Embedding& embedding, const SearchGeometry& geometry, const Tensor& template_features,
                                const Image& frame, const Box& prev_box) {
    const double fw = static_cast<double>(image_width(frame)), fh = static_cast<double>(image_height(frame));
    const auto rf = static_cast<double>(embedding.receptive_field());
    if (fw < rf || fh < rf)
        throw GeometryError("frame " + std::to_string(image_width(frame)) + "x" + std::to_string(image_height(frame)) +
                            " smaller than the minimum search crop");
    if (prev_box.degenerate()) throw GeometryError("score_search: degenerate previous box");
    const double cx = std::clamp(prev_box.cx(), 0.0, fw);
    const double cy = std::clamp(prev_box.cy(), 0.0, fh);

    const auto& s = geometry.settings;
    ScoreMapSet set;
    set.feature_stride = geometry.feature_stride;
    set.template_extent = geometry.template_extent;
    set.exemplar_size = s.exemplar_size;
    const std::uint64_t search_macs = embedding.macs(s.search_size, s.search_size);
    const std::uint64_t corr_macs = static_cast<std::uint64_t>(geometry.score_extent) * geometry.score_extent *
                                    template_features.size();
    for (double scale : s.scales) {
        ScaleResponse r;
        r.scale = scale;
        const double side = geometry.search_side(prev_box.w, prev_box.h, scale);
        r.pixel_ratio = side / static_cast<double>(s.search_size);
        r.origin_x = cx - 0.5 * side;
        r.origin_y = cy - 0.5 * side;
        r.box_w = prev_box.w * scale;
        r.box_h = prev_box.h * scale;
        r.search_image = crop_resize(frame, cx, cy, side, side, s.search_size, s.search_size);
        r.search_features = embedding.embed(r.search_image);
        r.scores = cross_correlate(template_features, r.search_features, s.correlation_offset);
        set.macs += search_macs + corr_macs;
        set.responses.push_back(std::move(r));
    }
    return set;
}

}  // namespace oalstm
