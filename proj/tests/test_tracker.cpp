#include <gtest/gtest.h>

#include <memory>

#include "oalstm/builtin_embedding.hpp"
#include "oalstm/synth.hpp"
#include "oalstm/tracker.hpp"

using namespace oalstm;

namespace {

std::shared_ptr<const Embedding> builtin() {
    static const auto e = std::make_shared<const Embedding>(builtin_embedding());
    return e;
}

// Cheaper augmenter settings for properties that do not depend on its quality.
TrackerConfig light_config() {
    TrackerConfig c;
    c.gan.init_steps = 10;
    c.gan.update_steps = 2;
    c.gan.generated = 8;
    c.lstm.init_steps = 20;
    return c;
}

Sequence translating(std::size_t frames, double vx, double contrast = 0.0) {
    SynthSpec s;
    s.frames = frames;
    s.width = 320;
    s.object = {10, 108, 32, 32};
    s.vx = vx;
    s.background_contrast = contrast;
    return synth_sequence(s);
}

double mean_iou(const RunOutput& run, const Sequence& seq) {
    double sum = 0.0;
    for (const auto& r : run.results) sum += iou(r.box, seq.boxes[r.frame_index]);
    return sum / static_cast<double>(run.results.size());
}

}  // namespace

TEST(Tracker, StaticSequenceReproducesTheAnnotation) {
    SynthSpec s;
    s.frames = 6;
    const auto seq = synth_sequence(s);
    const auto run = run_sequence(light_config(), seq, builtin());
    ASSERT_EQ(run.results.size(), 5u);
    for (const auto& r : run.results) {
        EXPECT_FALSE(r.failed) << r.error;
        EXPECT_EQ(r.box, seq.boxes[0]) << "frame " << r.frame_index;
        EXPECT_EQ(iou(r.box, seq.boxes[r.frame_index]), 1.0);
    }
}

TEST(Tracker, InitializationSeparatesTargetFromBackground) {
    SynthSpec s;
    s.frames = 1;
    const auto seq = synth_sequence(s);
    const auto session = initialize(seq.frame(0), seq.boxes[0], light_config(), builtin());
    const Tensor x = feature_batch({&session.templ.features}, true);
    const auto scores = lstm_forward(session.lstm, session.state, x);
    EXPECT_GT(scores[0].p_pos, scores[0].p_neg);
    EXPECT_EQ(session.state_transitions, 1u);
}

TEST(Tracker, ZeroTrainingStepsLeaveParametersAtInit) {
    SynthSpec s;
    s.frames = 1;
    const auto seq = synth_sequence(s);
    TrackerConfig c = light_config();
    c.lstm.init_steps = 0;
    c.gan.init_steps = 0;
    const auto session = initialize(seq.frame(0), seq.boxes[0], c, builtin());
    const auto fresh = LstmParams::random(session.templ.features.size(), c.lstm.units, c.lstm.layers, c.seed * 31 + 7);
    const auto a = session.lstm.tensors();
    const auto b = fresh.tensors();
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(max_abs_diff(*a[i], *b[i]), 0.0);
    const auto gan = GanParams::random(session.gan->arch, c.seed * 131 + 11);
    const auto ga = session.gan->to_named(), gb = gan.to_named();
    for (std::size_t i = 0; i < ga.size(); ++i) EXPECT_EQ(max_abs_diff(ga[i].second, gb[i].second), 0.0);
}

TEST(Tracker, FollowsEightPixelsPerFrame) {
    const auto seq = translating(30, 8.0);
    const auto run = run_sequence(TrackerConfig{}, seq, builtin());
    EXPECT_GE(mean_iou(run, seq), 0.6);
}

TEST(Tracker, OccludedFrameIsNotUpdated) {
    SynthSpec s;
    s.frames = 8;
    s.occluders.push_back({5, 5, {98, 98, 60, 60}, 0.5});  // hides the 40x40 target completely
    const auto seq = synth_sequence(s);
    auto session = initialize(seq.frame(0), seq.boxes[0], TrackerConfig{}, builtin());
    for (std::size_t t = 1; t < seq.size(); ++t) {
        const auto before = parameter_checksum(session);
        const auto r = track_frame(session, seq.frame(t));
        ASSERT_FALSE(r.failed) << r.error;
        if (t == 5) {
            EXPECT_LE(r.p_pos, 0.6);
            EXPECT_FALSE(r.updated);
            EXPECT_EQ(parameter_checksum(session), before);
        }
    }
}

TEST(Tracker, ParametersChangeOnlyOnGatedFrames) {
    const auto specs = benchmark_suite_specs(12);
    const auto seq = synth_sequence(specs[3]);
    auto session = initialize(seq.frame(0), seq.boxes[0], light_config(), builtin());
    std::size_t updated = 0, held = 0;
    for (std::size_t t = 1; t < seq.size(); ++t) {
        const auto before = parameter_checksum(session);
        const auto r = track_frame(session, seq.frame(t));
        const bool changed = parameter_checksum(session) != before;
        EXPECT_EQ(changed, r.p_pos > 0.6) << "frame " << t << " p+ " << r.p_pos;
        EXPECT_EQ(changed, r.updated);
        (r.updated ? updated : held) += 1;
    }
    EXPECT_GT(updated, 0u);
}

TEST(Tracker, StateAdvancesOncePerFrameRegardlessOfUpdate) {
    SynthSpec s;
    s.frames = 7;
    s.occluders.push_back({3, 4, {98, 98, 60, 60}, 0.5});
    const auto seq = synth_sequence(s);
    auto session = initialize(seq.frame(0), seq.boxes[0], light_config(), builtin());
    for (std::size_t t = 1; t < seq.size(); ++t) {
        const LstmState before = session.state;
        track_frame(session, seq.frame(t));
        EXPECT_EQ(session.state_transitions, t + 1);
        EXPECT_FALSE(session.state == before) << "frame " << t;
    }
}

TEST(Tracker, FailedFrameLeavesSessionUsable) {
    SynthSpec s;
    s.frames = 5;
    s.vx = 2.0;
    const auto seq = synth_sequence(s);
    auto session = initialize(seq.frame(0), seq.boxes[0], light_config(), builtin());
    const auto r1 = track_frame(session, seq.frame(1));
    ASSERT_FALSE(r1.failed);
    const auto checksum = parameter_checksum(session);
    const LstmState state = session.state;
    const auto transitions = session.state_transitions;

    const auto bad = track_frame(session, Image({3, 256, 256}, 0.5));  // wrong channel count
    EXPECT_TRUE(bad.failed);
    EXPECT_FALSE(bad.error.empty());
    EXPECT_EQ(bad.box, r1.box);
    EXPECT_FALSE(bad.updated);
    EXPECT_EQ(parameter_checksum(session), checksum);
    EXPECT_TRUE(session.state == state);
    EXPECT_EQ(session.state_transitions, transitions);

    for (std::size_t t = 2; t < seq.size(); ++t) {
        const auto r = track_frame(session, seq.frame(t));
        EXPECT_FALSE(r.failed) << r.error;
        EXPECT_GT(iou(r.box, seq.boxes[t]), 0.5);
    }
}

TEST(RunSequence, SingleFrameGivesEmptyResultsAndValidReport) {
    SynthSpec s;
    s.frames = 1;
    const auto run = run_sequence(light_config(), synth_sequence(s), builtin());
    EXPECT_TRUE(run.results.empty());
    EXPECT_EQ(run.summary.frames, 1u);
    EXPECT_EQ(run.summary.tracked_frames, 0u);
    EXPECT_EQ(run.summary.update_rate(), 0.0);
}

TEST(RunSequence, IdenticalSeedsIdenticalResults) {
    const auto seq = synth_sequence(benchmark_suite_specs(6)[1]);
    const auto a = run_sequence(light_config(), seq, builtin());
    const auto b = run_sequence(light_config(), seq, builtin());
    ASSERT_EQ(a.results.size(), b.results.size());
    for (std::size_t i = 0; i < a.results.size(); ++i) {
        EXPECT_EQ(a.results[i].box, b.results[i].box);
        EXPECT_EQ(a.results[i].p_pos, b.results[i].p_pos);
        EXPECT_EQ(a.results[i].updated, b.results[i].updated);
        EXPECT_EQ(a.results[i].proposal_index, b.results[i].proposal_index);
    }
}

TEST(RunSequence, SummaryFlopsAreSumsOfFrameCounters) {
    const auto seq = translating(5, 3.0, 0.5);
    const auto run = run_sequence(light_config(), seq, builtin());
    std::uint64_t matcher = 0, cropped = 0, per = 0;
    std::size_t updates = 0;
    for (const auto& r : run.results) {
        matcher += r.matcher_macs;
        cropped += r.embed_macs_cropped;
        per += r.embed_macs_per_proposal;
        updates += r.updated;
        EXPECT_GT(r.embed_macs_per_proposal, r.embed_macs_cropped);
    }
    EXPECT_EQ(run.summary.matcher_macs, matcher);
    EXPECT_EQ(run.summary.embed_macs_cropped, cropped);
    EXPECT_EQ(run.summary.embed_macs_per_proposal, per);
    EXPECT_EQ(run.summary.updates, updates);
    EXPECT_EQ(run.summary.tracked_frames, 4u);
}

TEST(RunSequence, MatchingOnlyBaselineTakesScoreMapArgmax) {
    const auto seq = translating(5, 3.0, 0.5);
    TrackerConfig c = light_config();
    c.lstm_enabled = false;
    const auto run = run_sequence(c, seq, builtin());
    for (const auto& r : run.results) {
        EXPECT_EQ(r.proposal_index, 0u);
        EXPECT_FALSE(r.updated);
    }
    EXPECT_EQ(run.summary.updates, 0u);
}

TEST(RunSequence, GeneratedSamplesReachTheSink) {
    const auto seq = translating(4, 2.0, 0.5);
    std::size_t calls = 0;
    const auto run = run_sequence(light_config(), seq, builtin(), [&](std::size_t frame, const std::vector<Image>& p) {
        EXPECT_GE(frame, 1u);
        EXPECT_EQ(p.size(), 8u);
        ++calls;
    });
    EXPECT_EQ(calls, run.summary.updates);
}

TEST(Checkpoint, RestoreReproducesTheContinuation) {
    const auto seq = translating(6, 2.0, 0.5);
    auto a = initialize(seq.frame(0), seq.boxes[0], light_config(), builtin());
    track_frame(a, seq.frame(1));
    const auto saved = session_checkpoint(a);
    auto b = initialize(seq.frame(0), seq.boxes[0], light_config(), builtin());
    restore_checkpoint(b, saved);
    EXPECT_EQ(parameter_checksum(a), parameter_checksum(b));
    EXPECT_TRUE(a.state == b.state);
    EXPECT_EQ(a.prev_box, b.prev_box);
}
