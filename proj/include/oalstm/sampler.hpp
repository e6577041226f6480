#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "oalstm/errors.hpp"
#include "oalstm/image.hpp"
#include "oalstm/proposals.hpp"
#include "oalstm/siamese.hpp"

namespace oalstm {

enum class Provenance { Gaussian, HardMined, Generated };

inline const char* provenance_name(Provenance p) {
    switch (p) {
        case Provenance::Gaussian: return "gaussian";
        case Provenance::HardMined: return "hard-mined";
        case Provenance::Generated: return "generated";
    }
    return "unknown";
}

struct Sample {
    Image patch;  // exemplar-size context crop
    Box box;
    Provenance provenance = Provenance::Gaussian;
};

struct SamplePatchSet {
    std::vector<Sample> positives;
    std::vector<Sample> negatives;
};

struct SamplerSettings {
    double pos_iou_min = 0.7;
    double neg_iou_max = 0.3;
    double sigma_xy = 0.1;       // positive translation std-dev, fraction of box size
    double sigma_scale = 0.2;    // log-scale std-dev
    double neg_sigma_xy = 1.0;   // negative translation std-dev, fraction of box size
    std::size_t n_pos = 32;
    std::size_t n_neg = 96;
    std::size_t attempts_per_sample = 50;
};

/// Candidate box around `center` with Gaussian translation (relative to size) and log-normal scale.
inline Box jitter_box(const Box& center, double sigma_xy, double sigma_scale, std::mt19937_64& rng) {
    std::normal_distribution<double> nd(0.0, 1.0);
    const double dx = sigma_xy * center.w * nd(rng);
    const double dy = sigma_xy * center.h * nd(rng);
    const double ds = std::exp(sigma_scale * nd(rng));
    return Box::from_center(center.cx() + dx, center.cy() + dy, center.w * ds, center.h * ds);
}

/// Labeled samples drawn around center_box; positives keep IoU >= pos_iou_min, negatives IoU <= neg_iou_max.
/// Patches are context crops resized to the exemplar size.
inline SamplePatchSet draw_gaussian_samples(const Image& frame, const Box& center_box, const SearchGeometry& geometry,
                                            const SamplerSettings& s, std::mt19937_64& rng) {
    if (center_box.degenerate()) throw SamplingError("draw_gaussian_samples: degenerate center box");
    const double fw = static_cast<double>(image_width(frame)), fh = static_cast<double>(image_height(frame));
    const auto ez = geometry.settings.exemplar_size;
    auto make = [&](const Box& b) {
        const double side = geometry.exemplar_side(b.w, b.h);
        return Sample{crop_resize(frame, b.cx(), b.cy(), side, side, ez, ez), b, Provenance::Gaussian};
    };
    auto centered_in_frame = [&](const Box& b) { return b.cx() >= 0 && b.cy() >= 0 && b.cx() < fw && b.cy() < fh; };

    SamplePatchSet out;
    for (std::size_t tries = 0; out.positives.size() < s.n_pos && tries < s.attempts_per_sample * s.n_pos; ++tries) {
        const Box b = jitter_box(center_box, s.sigma_xy, s.sigma_scale, rng);
        if (centered_in_frame(b) && iou(b, center_box) >= s.pos_iou_min) out.positives.push_back(make(b));
    }
    for (std::size_t tries = 0; out.negatives.size() < s.n_neg && tries < s.attempts_per_sample * s.n_neg; ++tries) {
        const Box b = jitter_box(center_box, s.neg_sigma_xy, s.sigma_scale, rng);
        if (centered_in_frame(b) && iou(b, center_box) <= s.neg_iou_max) out.negatives.push_back(make(b));
    }
    if (s.n_pos > 0 && out.positives.empty())
        throw SamplingError("draw_gaussian_samples: attempt budget exhausted without a positive sample");
    return out;
}

struct HardNegative {
    Box box;
    double confidence = 0.0;
    std::size_t scale_index = 0;
    std::size_t row = 0;
    std::size_t col = 0;
    Image patch;      // search-image sub-window behind the cell
    Tensor features;  // cropped from the search feature map
};

/// The k most confident score cells whose boxes overlap the estimate by at most neg_iou_max.
/// Reuses the score maps and feature maps already computed for the frame.
inline std::vector<HardNegative> hard_negative_mine(const ScoreMapSet& maps, const Box& estimated_box, std::size_t k,
                                                    double neg_iou_max = 0.3) {
    std::vector<HardNegative> out;
    if (k == 0) return out;
    for (const auto& cell : ranked_cells(maps, 1.0, maps.cell_count())) {
        const Box b = maps.cell_box(cell.scale_index, cell.row, cell.col);
        if (iou(b, estimated_box) > neg_iou_max) continue;
        HardNegative h;
        h.box = b;
        h.confidence = cell.confidence;
        h.scale_index = cell.scale_index;
        h.row = cell.row;
        h.col = cell.col;
        h.patch = proposal_window(maps, cell.scale_index, cell.row, cell.col);
        h.features = crop_features(maps.responses[cell.scale_index].search_features, cell.row, cell.col,
                                   maps.template_extent);
        out.push_back(std::move(h));
        if (out.size() == k) break;
    }
    return out;
}

}  // namespace oalstm
