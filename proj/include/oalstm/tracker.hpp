#pragma once

// Online tracking loop: match -> select -> classify -> choose -> gated update.

#include <bit>
#include <chrono>
#include <functional>
#include <cmath>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "oalstm/embedding.hpp"
#include "oalstm/errors.hpp"
#include "oalstm/gan.hpp"
#include "oalstm/image.hpp"
#include "oalstm/lstm.hpp"
#include "oalstm/proposals.hpp"
#include "oalstm/sampler.hpp"
#include "oalstm/sequence.hpp"
#include "oalstm/siamese.hpp"
#include "oalstm/weight_file.hpp"

namespace oalstm {

struct LstmSettings {
    std::size_t units = 128;
    std::size_t layers = 2;
    std::size_t init_steps = 50;
    std::size_t update_steps = 1;
    AdamSettings adam{};
};

struct GanSettings {
    bool enabled = true;
    std::size_t patch_size = 32;
    std::size_t init_steps = 200;
    std::size_t update_steps = 20;
    std::size_t generated = 64;
    std::size_t bank_capacity = 256;
    GanTrainSettings train{};
};

struct TrackerConfig {
    std::size_t n_proposals = 64;
    double update_threshold = 0.6;
    double box_smoothing = 0.0;  // weight of the previous box; 0 disables
    // p+ values within this distance of the best count as tied; ties go to the
    // proposal the matcher ranked highest. 0 gives the plain argmax.
    double tie_tolerance = 1e-3;
    std::size_t image_channels = 1;
    GeometrySettings geometry{};
    LstmSettings lstm{};
    GanSettings gan{};
    SamplerSettings sampler{};
    bool hard_negative_mining = true;
    std::size_t hard_negatives = 16;
    bool lstm_enabled = true;  // false: matching-only baseline (score-map argmax)
    FeatureMode feature_mode = FeatureMode::Cropped;
    bool normalize_features = true;
    std::uint64_t seed = 1;

    void validate() const {
        if (!(update_threshold > 0.0 && update_threshold < 1.0))
            throw ConfigError("update_threshold must lie in (0, 1)");
        if (n_proposals == 0) throw ConfigError("n_proposals must be at least 1");
        if (!(box_smoothing >= 0.0 && box_smoothing < 1.0)) throw ConfigError("box_smoothing must lie in [0, 1)");
        if (!(tie_tolerance >= 0.0 && tie_tolerance < 1.0)) throw ConfigError("tie_tolerance must lie in [0, 1)");
        if (lstm.units == 0 || lstm.layers == 0) throw ConfigError("LSTM sizes must be positive");
    }
};

struct StageTimes {
    double match_ms = 0.0;
    double classify_ms = 0.0;
    double update_ms = 0.0;
};

struct TrackResult {
    std::size_t frame_index = 0;
    Box box;
    double p_pos = 0.0;
    bool updated = false;
    bool failed = false;
    std::string error;
    std::size_t proposal_index = 0;
    std::uint64_t matcher_macs = 0;
    std::uint64_t embed_macs_cropped = 0;
    std::uint64_t embed_macs_per_proposal = 0;
    StageTimes wall_clock;
};

struct TrackerSession {
    TrackerConfig config;
    std::shared_ptr<const Embedding> embedding;
    SearchGeometry geometry;
    Template templ;
    LstmParams lstm;
    LstmState state;
    LstmOptimizer lstm_optimizer;
    std::optional<GanParams> gan;
    GanOptimizer gan_optimizer;
    PositiveBank bank{256};
    std::mt19937_64 sample_rng;
    std::mt19937_64 gan_rng;
    Box prev_box;
    double frame_w = 0.0;
    double frame_h = 0.0;
    std::size_t frame_index = 0;
    std::size_t state_transitions = 0;
    // observes the augmenter's samples on update frames (frame index, patches); optional
    std::function<void(std::size_t, const std::vector<Image>&)> generated_sink;
};

/// Flattens a feature map channel-major; optionally rescales to unit RMS.
inline void append_feature_row(std::vector<double>& rows, std::span<const double> f, bool normalize) {
    double scale = 1.0;
    if (normalize) {
        double ss = 0.0;
        for (double v : f) ss += v * v;
        if (ss > 0.0) scale = std::sqrt(static_cast<double>(f.size()) / ss);
    }
    for (double v : f) rows.push_back(v * scale);
}

inline Tensor feature_batch(const std::vector<const Tensor*>& maps, bool normalize) {
    if (maps.empty()) return Tensor({0, 0});
    const std::size_t m = maps.front()->size();
    std::vector<double> rows;
    rows.reserve(maps.size() * m);
    for (const Tensor* t : maps) {
        if (t->size() != m) throw DimensionError("feature batch rows differ in length");
        append_feature_row(rows, t->data(), normalize);
    }
    return Tensor({maps.size(), m}, std::move(rows));
}

namespace detail {

using Clock = std::chrono::steady_clock;

inline double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

inline Image bank_patch(const Image& exemplar_patch, std::size_t size) {
    const double w = static_cast<double>(image_width(exemplar_patch)), h = static_cast<double>(image_height(exemplar_patch));
    return crop_resize(exemplar_patch, 0.5 * w, 0.5 * h, w, h, size, size);
}

struct TrainingBatch {
    Tensor features;
    std::vector<int> labels;
    std::size_t positives = 0;
    std::size_t generated = 0;
};

inline TrainingBatch assemble_batch(const TrackerSession& s, const SamplePatchSet& samples,
                                    const std::vector<HardNegative>& hard, const Tensor& generated) {
    const bool norm = s.config.normalize_features;
    std::vector<Tensor> embedded;
    embedded.reserve(samples.positives.size() + samples.negatives.size());
    for (const auto& p : samples.positives) embedded.push_back(s.embedding->embed(p.patch));
    for (const auto& n : samples.negatives) embedded.push_back(s.embedding->embed(n.patch));

    TrainingBatch b;
    std::vector<double> rows;
    std::size_t m = 0;
    auto add = [&](std::span<const double> f, int label) {
        if (m == 0) m = f.size();
        if (f.size() != m) throw DimensionError("training features differ in length");
        append_feature_row(rows, f, norm);
        b.labels.push_back(label);
    };
    for (std::size_t i = 0; i < samples.positives.size(); ++i) add(embedded[i].data(), 1);
    for (std::size_t i = 0; i < generated.dim(0); ++i) add(generated.data().subspan(i * generated.dim(1), generated.dim(1)), 1);
    b.positives = b.labels.size();
    b.generated = generated.dim(0);
    for (std::size_t i = 0; i < samples.negatives.size(); ++i) add(embedded[samples.positives.size() + i].data(), 0);
    for (const auto& h : hard) add(h.features.data(), 0);
    b.features = Tensor({b.labels.size(), m}, std::move(rows));
    return b;
}

}  // namespace detail

/// Builds the template and initial state, trains the classifier on frame-1 samples,
/// and trains the augmenter on the frame-1 positives.
inline TrackerSession initialize(const Image& first_frame, const Box& annotation, const TrackerConfig& config,
                                 std::shared_ptr<const Embedding> embedding) {
    config.validate();
    if (!embedding) throw ArgumentError("initialize: embedding is required");
    if (embedding->input_channels() != image_channels(first_frame))
        throw DimensionError("frame has " + std::to_string(image_channels(first_frame)) +
                             " channels, embedding expects " + std::to_string(embedding->input_channels()));
    TrackerSession s;
    s.config = config;
    s.embedding = std::move(embedding);
    s.geometry = SearchGeometry::derive(*s.embedding, config.geometry);
    s.templ = make_template(*s.embedding, s.geometry, first_frame, annotation);
    s.frame_w = static_cast<double>(image_width(first_frame));
    s.frame_h = static_cast<double>(image_height(first_frame));
    s.prev_box = annotation;
    s.sample_rng.seed(config.seed * 0x9E3779B97F4A7C15ULL + 1);
    s.gan_rng.seed(config.seed * 0x9E3779B97F4A7C15ULL + 2);
    s.bank = PositiveBank(config.gan.bank_capacity);
    if (!config.lstm_enabled) return s;

    const std::size_t m = s.templ.features.size();
    s.lstm = LstmParams::random(m, config.lstm.units, config.lstm.layers, config.seed * 31 + 7);
    s.lstm_optimizer = LstmOptimizer(s.lstm, config.lstm.adam);
    const Tensor x1 = feature_batch({&s.templ.features}, config.normalize_features);
    s.state = init_state(s.lstm, x1.data());
    s.state_transitions = 1;

    const SamplePatchSet samples = draw_gaussian_samples(first_frame, annotation, s.geometry, config.sampler, s.sample_rng);
    const detail::TrainingBatch batch = detail::assemble_batch(s, samples, {}, Tensor({0, 0}));
    for (std::size_t i = 0; i < config.lstm.init_steps; ++i)
        lstm_train_step(s.lstm, s.state, batch.features, batch.labels, s.lstm_optimizer);

    if (config.gan.enabled) {
        GanArchitecture arch = GanArchitecture::desk(image_channels(first_frame));
        if (config.gan.patch_size != arch.patch_size)
            throw ConfigError("GAN patch size " + std::to_string(config.gan.patch_size) + " is not supported (32 only)");
        s.gan = GanParams::random(arch, config.seed * 131 + 11);
        s.gan_optimizer = GanOptimizer(*s.gan, config.gan.train);
        for (const auto& p : samples.positives) s.bank.push(detail::bank_patch(p.patch, arch.patch_size));
        train_gan(*s.gan, s.gan_optimizer, s.bank, config.gan.init_steps, s.gan_rng, config.gan.train);
    }
    return s;
}

namespace detail {

/// Samples around the new estimate, augments with hard negatives and generated
/// positives, and trains against the freshly advanced state (the one the next
/// frame is classified with).
inline bool update_models(TrackerSession& s, const Image& frame, const Box& estimate, const ScoreMapSet& maps,
                          const LstmState& train_state) {
    SamplePatchSet samples;
    try {
        samples = draw_gaussian_samples(frame, estimate, s.geometry, s.config.sampler, s.sample_rng);
    } catch (const SamplingError&) {
        return false;
    }
    std::vector<HardNegative> hard;
    if (s.config.hard_negative_mining)
        hard = hard_negative_mine(maps, estimate, s.config.hard_negatives, s.config.sampler.neg_iou_max);

    Tensor generated({0, 0});
    if (s.gan) {
        for (const auto& p : samples.positives) s.bank.push(bank_patch(p.patch, s.gan->arch.patch_size));
        train_gan(*s.gan, s.gan_optimizer, s.bank, s.config.gan.update_steps, s.gan_rng, s.config.gan.train);
        const auto patches = generate_positives(*s.gan, s.config.gan.generated, s.gan_rng);
        if (s.generated_sink) s.generated_sink(s.frame_index, patches);
        generated = features_for_generated(patches, *s.embedding, s.geometry.settings.exemplar_size);
    }
    const TrainingBatch batch = assemble_batch(s, samples, hard, generated);
    for (std::size_t i = 0; i < s.config.lstm.update_steps; ++i)
        lstm_train_step(s.lstm, train_state, batch.features, batch.labels, s.lstm_optimizer);
    return true;
}

}  // namespace detail

/// Processes the next frame. Library errors mark the frame failed and carry the previous box forward.
inline TrackResult track_frame(TrackerSession& s, const Image& frame) {
    TrackResult r;
    r.frame_index = ++s.frame_index;
    const auto& cfg = s.config;
    const LstmState saved_state = s.state;
    const std::size_t saved_transitions = s.state_transitions;
    std::optional<std::tuple<LstmParams, LstmOptimizer, std::optional<GanParams>, GanOptimizer, PositiveBank,
                             std::mt19937_64, std::mt19937_64>>
        snapshot;
    try {
        auto t0 = detail::Clock::now();
        const ScoreMapSet maps = score_search(*s.embedding, s.geometry, s.templ.features, frame, s.prev_box);
        ProposalSet proposals = select_top(maps, cfg.n_proposals, cfg.geometry.scale_penalty);
        if (cfg.feature_mode == FeatureMode::PerProposal) reembed_proposals(proposals, maps, *s.embedding);
        r.matcher_macs = maps.macs;
        r.embed_macs_cropped = count_embed_flops(FeatureMode::Cropped, proposals.size(), *s.embedding, s.geometry);
        r.embed_macs_per_proposal = count_embed_flops(FeatureMode::PerProposal, proposals.size(), *s.embedding, s.geometry);
        r.wall_clock.match_ms = detail::ms_since(t0);

        t0 = detail::Clock::now();
        std::size_t winner = 0;
        if (cfg.lstm_enabled) {
            std::vector<const Tensor*> maps_ptr;
            for (const auto& p : proposals) maps_ptr.push_back(&p.features);
            const Tensor batch = feature_batch(maps_ptr, cfg.normalize_features);
            const auto scores = lstm_forward(s.lstm, s.state, batch);
            auto [idx, next] = choose_target(scores);
            if (cfg.tie_tolerance > 0.0)
                for (std::size_t i = 0; i < idx; ++i)
                    if (scores[i].p_pos >= scores[idx].p_pos - cfg.tie_tolerance) {
                        idx = i;
                        next = scores[i].state;
                        break;
                    }
            winner = idx;
            r.p_pos = scores[idx].p_pos;
            s.state = std::move(next);
            ++s.state_transitions;
        }
        Box box = proposals[winner].box;
        if (cfg.box_smoothing > 0.0) {
            const double a = cfg.box_smoothing;
            box = Box::from_center((1 - a) * box.cx() + a * s.prev_box.cx(), (1 - a) * box.cy() + a * s.prev_box.cy(),
                                   (1 - a) * box.w + a * s.prev_box.w, (1 - a) * box.h + a * s.prev_box.h);
        }
        box = clamp_box(box, static_cast<double>(image_width(frame)), static_cast<double>(image_height(frame)));
        r.box = box;
        r.proposal_index = winner;
        r.wall_clock.classify_ms = detail::ms_since(t0);

        t0 = detail::Clock::now();
        if (cfg.lstm_enabled && r.p_pos > cfg.update_threshold) {
            // a half-finished update must not leak into the session
            snapshot.emplace(s.lstm, s.lstm_optimizer, s.gan, s.gan_optimizer, s.bank, s.sample_rng, s.gan_rng);
            r.updated = detail::update_models(s, frame, box, maps, s.state);
        }
        r.wall_clock.update_ms = detail::ms_since(t0);
        s.prev_box = box;
    } catch (const Error& e) {
        r.failed = true;
        r.error = e.what();
        s.state = saved_state;
        s.state_transitions = saved_transitions;
        if (snapshot)
            std::tie(s.lstm, s.lstm_optimizer, s.gan, s.gan_optimizer, s.bank, s.sample_rng, s.gan_rng) =
                std::move(*snapshot);
        r.box = s.prev_box;
        r.p_pos = 0.0;
        r.updated = false;
    }
    return r;
}

/// FNV-1a over the bytes of every trainable parameter (classifier and augmenter).
inline std::uint64_t parameter_checksum(const TrackerSession& s) {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](const Tensor& t) {
        for (double v : t.data()) {
            const auto bits = std::bit_cast<std::uint64_t>(v);
            for (int i = 0; i < 8; ++i) {
                h ^= (bits >> (8 * i)) & 0xFF;
                h *= 1099511628211ULL;
            }
        }
    };
    if (s.config.lstm_enabled)
        for (const Tensor* t : s.lstm.tensors()) mix(*t);
    if (s.gan)
        for (const auto& [name, t] : s.gan->to_named()) mix(t);
    return h;
}

/// Session parameters and state as named tensors (weight-file format).
inline NamedTensors session_checkpoint(const TrackerSession& s) {
    NamedTensors out = s.lstm.to_named();
    for (std::size_t i = 0; i < s.state.layers.size(); ++i) {
        const auto& l = s.state.layers[i];
        out.emplace_back("state.layer" + std::to_string(i) + ".c", Tensor({l.c.size()}, l.c));
        out.emplace_back("state.layer" + std::to_string(i) + ".h", Tensor({l.h.size()}, l.h));
    }
    if (s.gan)
        for (auto& e : s.gan->to_named()) out.push_back(std::move(e));
    out.emplace_back("session.prev_box", Tensor({4}, {s.prev_box.x, s.prev_box.y, s.prev_box.w, s.prev_box.h}));
    out.emplace_back("session.frame_index", Tensor({1}, {static_cast<double>(s.frame_index)}));
    return out;
}

inline void restore_checkpoint(TrackerSession& s, const NamedTensors& named) {
    s.lstm = LstmParams::from_named(named);
    for (std::size_t i = 0; i < s.state.layers.size(); ++i) {
        s.state.layers[i].c = find_tensor(named, "state.layer" + std::to_string(i) + ".c").values();
        s.state.layers[i].h = find_tensor(named, "state.layer" + std::to_string(i) + ".h").values();
    }
    if (s.gan) s.gan = GanParams::from_named(s.gan->arch, named);
    const Tensor& b = find_tensor(named, "session.prev_box");
    s.prev_box = {b[0], b[1], b[2], b[3]};
    s.frame_index = static_cast<std::size_t>(find_tensor(named, "session.frame_index")[0]);
}

struct RunSummary {
    std::size_t frames = 0;
    std::size_t tracked_frames = 0;
    std::size_t updates = 0;
    std::size_t failures = 0;
    std::uint64_t matcher_macs = 0;
    std::uint64_t embed_macs_cropped = 0;
    std::uint64_t embed_macs_per_proposal = 0;
    double wall_clock_init_ms = 0.0;
    double wall_clock_total_ms = 0.0;

    double update_rate() const {
        return tracked_frames ? static_cast<double>(updates) / static_cast<double>(tracked_frames) : 0.0;
    }
};

struct RunOutput {
    std::string sequence;
    Box initial_box;
    std::vector<TrackResult> results;
    RunSummary summary;
};

/// One-pass evaluation: initialize on frame 0, then track every remaining frame.
inline RunOutput run_sequence(const TrackerConfig& config, const Sequence& sequence,
                              std::shared_ptr<const Embedding> embedding,
                              std::function<void(std::size_t, const std::vector<Image>&)> generated_sink = {}) {
    sequence.validate();
    RunOutput out;
    out.sequence = sequence.name;
    out.initial_box = sequence.boxes.front();
    auto t0 = detail::Clock::now();
    TrackerSession session = initialize(sequence.frame(0), sequence.boxes.front(), config, std::move(embedding));
    session.generated_sink = std::move(generated_sink);
    out.summary.wall_clock_init_ms = detail::ms_since(t0);
    out.summary.frames = sequence.size();
    for (std::size_t i = 1; i < sequence.size(); ++i) {
        TrackResult r = track_frame(session, sequence.frame(i));
        out.summary.tracked_frames += 1;
        out.summary.updates += r.updated ? 1 : 0;
        out.summary.failures += r.failed ? 1 : 0;
        out.summary.matcher_macs += r.matcher_macs;
        out.summary.embed_macs_cropped += r.embed_macs_cropped;
        out.summary.embed_macs_per_proposal += r.embed_macs_per_proposal;
        out.results.push_back(std::move(r));
    }
    out.summary.wall_clock_total_ms = detail::ms_since(t0);
    return out;
}

}  // namespace oalstm
