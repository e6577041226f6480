// Track a rendered synthetic sequence in-process and print per-frame overlap.

#include <cstdio>
#include <memory>

#include "oalstm/builtin_embedding.hpp"
#include "oalstm/metrics.hpp"
#include "oalstm/synth.hpp"
#include "oalstm/tracker.hpp"

int main() {
    using namespace oalstm;

    SynthSpec spec;
    spec.name = "quickstart";
    spec.frames = 30;
    spec.vx = 1.5;
    spec.vy = -0.5;
    spec.background_contrast = 0.35;
    spec.deformation = 0.8;
    spec.distractors.push_back({{40, 150, 40, 40}, 1.2, -0.6, 0.4});
    const Sequence seq = synth_sequence(spec);

    const auto embedding = std::make_shared<const Embedding>(builtin_embedding());
    TrackerSession session = initialize(seq.frame(0), seq.boxes[0], TrackerConfig{}, embedding);

    std::vector<Box> predicted{seq.boxes[0]};
    for (std::size_t t = 1; t < seq.size(); ++t) {
        const TrackResult r = track_frame(session, seq.frame(t));
        predicted.push_back(r.box);
        std::printf("frame %2zu  p+ %.3f  %s  IoU %.3f\n", t, r.p_pos, r.updated ? "update" : "hold  ",
                    iou(r.box, seq.boxes[t]));
    }
    std::printf("success AUC %.4f  precision@20 %.3f\n", success_auc(predicted, seq.boxes),
                precision_curve(predicted, seq.boxes).at20);
}
