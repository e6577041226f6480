#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <tuple>
#include <vector>

#include "oalstm/embedding.hpp"
#include "oalstm/errors.hpp"
#include "oalstm/image.hpp"
#include "oalstm/siamese.hpp"
#include "oalstm/tensor.hpp"

namespace oalstm {

struct Proposal {
    std::size_t scale_index = 0;
    std::size_t row = 0;
    std::size_t col = 0;
    double confidence = 0.0;
    Box box;
    Tensor features;  // [C, template_extent, template_extent]
};

using ProposalSet = std::vector<Proposal>;

struct ScoreCell {
    std::size_t scale_index;
    std::size_t row;
    std::size_t col;
    double confidence;
};

/// Scale penalty that shrinks the confidence of non-unit scales toward -inf
/// regardless of sign. With penalty 1.0 it is the identity.
inline double penalized_confidence(double score, double scale, double penalty) {
    if (scale == 1.0 || penalty == 1.0) return score;
    return score - (1.0 - penalty) * std::abs(score);
}

/// All score cells ordered by descending (penalized) confidence, ties by (scale, row, col).
inline std::vector<ScoreCell> ranked_cells(const ScoreMapSet& maps, double scale_penalty, std::size_t limit) {
    std::vector<ScoreCell> cells;
    cells.reserve(maps.cell_count());
    for (std::size_t s = 0; s < maps.responses.size(); ++s) {
        const auto& r = maps.responses[s];
        const std::size_t rows = r.scores.dim(0), cols = r.scores.dim(1);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                cells.push_back({s, i, j, penalized_confidence(r.scores.at(i, j), r.scale, scale_penalty)});
    }
    auto before = [](const ScoreCell& a, const ScoreCell& b) {
        if (a.confidence != b.confidence) return a.confidence > b.confidence;
        return std::tie(a.scale_index, a.row, a.col) < std::tie(b.scale_index, b.row, b.col);
    };
    limit = std::min(limit, cells.size());
    std::partial_sort(cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(limit), cells.end(), before);
    cells.resize(limit);
    return cells;
}

/// channels x extent x extent block of the search features at spatial offset (row, col).
inline Tensor crop_features(const Tensor& search_features, std::size_t row, std::size_t col, std::size_t extent) {
    if (search_features.rank() != 3) throw DimensionError("crop_features: feature map must be rank 3");
    const std::size_t c = search_features.dim(0), h = search_features.dim(1), w = search_features.dim(2);
    if (extent == 0 || row + extent > h || col + extent > w)
        throw GeometryError("crop_features: window (" + std::to_string(row) + "," + std::to_string(col) + ")+" +
                            std::to_string(extent) + " exceeds " + std::to_string(h) + "x" + std::to_string(w) +
                            " feature map");
    Tensor out({c, extent, extent});
    for (std::size_t ch = 0; ch < c; ++ch)
        for (std::size_t i = 0; i < extent; ++i)
            std::copy_n(&search_features.at(ch, row + i, col), extent, &out.at(ch, i, 0));
    return out;
}

/// The n globally best score cells across scales, each with features cropped from
/// the search feature map of its scale (no additional embedding work).
inline ProposalSet select_top(const ScoreMapSet& maps, std::size_t n, double scale_penalty = 1.0) {
    if (n == 0) throw ArgumentError("select_top: n must be positive");
    if (maps.cell_count() == 0) throw ArgumentError("select_top: empty score map");
    ProposalSet out;
    for (const auto& cell : ranked_cells(maps, scale_penalty, n)) {
        Proposal p;
        p.scale_index = cell.scale_index;
        p.row = cell.row;
        p.col = cell.col;
        p.confidence = cell.confidence;
        p.box = maps.cell_box(cell.scale_index, cell.row, cell.col);
        p.features = crop_features(maps.responses[cell.scale_index].search_features, cell.row, cell.col,
                                   maps.template_extent);
        out.push_back(std::move(p));
    }
    return out;
}

/// The search-image sub-window whose embedding corresponds to score cell (row, col).
inline Image proposal_window(const ScoreMapSet& maps, std::size_t scale_index, std::size_t row, std::size_t col) {
    const auto& r = maps.responses.at(scale_index);
    return sub_image(r.search_image, row * maps.feature_stride, col * maps.feature_stride, maps.exemplar_size,
                     maps.exemplar_size);
}

/// Replaces each proposal's cropped features with a fresh embedding of its image sub-window.
inline void reembed_proposals(ProposalSet& proposals, const ScoreMapSet& maps, const Embedding& embedding) {
    for (auto& p : proposals) p.features = embedding.embed(proposal_window(maps, p.scale_index, p.row, p.col));
}

enum class FeatureMode { PerProposal, Cropped };

/// Multiply-accumulates spent extracting n proposal features under each strategy.
inline std::uint64_t count_embed_flops(FeatureMode mode, std::size_t n, const Embedding& embedding,
                                       const SearchGeometry& geometry) {
    const auto& s = geometry.settings;
    if (mode == FeatureMode::Cropped) return embedding.macs(s.search_size, s.search_size);
    return static_cast<std::uint64_t>(n) * embedding.macs(s.exemplar_size, s.exemplar_size);
}

}  // namespace oalstm
