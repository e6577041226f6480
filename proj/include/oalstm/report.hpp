#pragma once

// Per-sequence result documents. Every nondeterministic value lives under a key
// starting with "wall_clock", so stripping those keys leaves a reproducible record.

#include <string>
#include <vector>

#include "json.hpp"
#include "oalstm/errors.hpp"
#include "oalstm/tracker.hpp"

namespace oalstm {

inline nlohmann::ordered_json box_json(const Box& b) { return nlohmann::ordered_json::array({b.x, b.y, b.w, b.h}); }

inline nlohmann::ordered_json result_json(const RunOutput& run, const nlohmann::ordered_json& config) {
    using ojson = nlohmann::ordered_json;
    ojson j;
    j["sequence"] = run.sequence;
    j["config"] = config;
    j["initial_box"] = box_json(run.initial_box);
    j["frames"] = ojson::array();
    for (const auto& r : run.results) {
        ojson f{{"frame", r.frame_index},
                {"box", box_json(r.box)},
                {"p_pos", r.p_pos},
                {"updated", r.updated},
                {"failed", r.failed},
                {"proposal_index", r.proposal_index},
                {"matcher_macs", r.matcher_macs},
                {"embed_macs_cropped", r.embed_macs_cropped},
                {"embed_macs_per_proposal", r.embed_macs_per_proposal},
                {"wall_clock_ms",
                 {{"match", r.wall_clock.match_ms}, {"classify", r.wall_clock.classify_ms}, {"update", r.wall_clock.update_ms}}}};
        if (r.failed) f["error"] = r.error;
        j["frames"].push_back(std::move(f));
    }
    const auto& s = run.summary;
    const double fps = s.wall_clock_total_ms > 0 ? 1000.0 * static_cast<double>(s.frames) / s.wall_clock_total_ms : 0.0;
    j["summary"] = {{"frames", s.frames},
                    {"tracked_frames", s.tracked_frames},
                    {"updates", s.updates},
                    {"update_rate", s.update_rate()},
                    {"failures", s.failures},
                    {"matcher_macs", s.matcher_macs},
                    {"embed_macs_cropped", s.embed_macs_cropped},
                    {"embed_macs_per_proposal", s.embed_macs_per_proposal},
                    {"wall_clock_init_ms", s.wall_clock_init_ms},
                    {"wall_clock_total_ms", s.wall_clock_total_ms},
                    {"wall_clock_fps", fps}};
    return j;
}

/// Removes every object member whose key starts with "wall_clock", recursively.
inline nlohmann::ordered_json strip_wall_clock(nlohmann::ordered_json j) {
    if (j.is_object()) {
        nlohmann::ordered_json out = nlohmann::ordered_json::object();
        for (auto& [k, v] : j.items())
            if (k.rfind("wall_clock", 0) != 0) out[k] = strip_wall_clock(v);
        return out;
    }
    if (j.is_array())
        for (auto& v : j) v = strip_wall_clock(v);
    return j;
}

struct ResultBoxes {
    std::string sequence;
    std::vector<Box> boxes;  // frame 0 (the annotation) followed by every tracked frame
};

inline ResultBoxes result_boxes(const nlohmann::ordered_json& j, const std::string& source) {
    ResultBoxes r;
    try {
        r.sequence = j.at("sequence").get<std::string>();
        auto box = [](const nlohmann::ordered_json& b) {
            if (!b.is_array() || b.size() != 4) throw FormatError("box must be [x, y, w, h]");
            return Box{b[0].get<double>(), b[1].get<double>(), b[2].get<double>(), b[3].get<double>()};
        };
        r.boxes.push_back(box(j.at("initial_box")));
        for (const auto& f : j.at("frames")) r.boxes.push_back(box(f.at("box")));
    } catch (const nlohmann::json::exception& e) {
        throw FormatError("result '" + source + "': " + e.what());
    } catch (const FormatError& e) {
        throw FormatError("result '" + source + "': " + e.what());
    }
    return r;
}

}  // namespace oalstm
