#pragma once

// Scripted synthetic sequences: a value-noise textured object over a
// value-noise background, with exact ground truth by construction.
// Boxes are kept on a 1/64 px grid and intensities on the 8-bit grid so a
// sequence survives a round trip through PNG + text ground truth unchanged.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "oalstm/errors.hpp"
#include "oalstm/image.hpp"
#include "oalstm/sequence.hpp"

namespace oalstm {

struct Occluder {
    std::size_t first_frame = 0;
    std::size_t last_frame = 0;  // inclusive
    Box box;
    double intensity = 0.5;  // flat fill; negative means textured
};

struct Distractor {
    Box box;                  // initial box
    double vx = 0.0;          // px per frame
    double vy = 0.0;
    double similarity = 1.0;  // blend toward the target's initial appearance; 1 = identical copy
};

struct SynthSpec {
    std::string name = "synthetic";
    std::uint64_t seed = 1;
    std::size_t frames = 50;
    std::size_t width = 256;
    std::size_t height = 256;
    std::size_t channels = 1;
    Box object{108, 108, 40, 40};
    double texture_cell = 6.0;      // value-noise cell size of the object, px
    double background_cell = 12.0;  // value-noise cell size of the background, px
    double background_contrast = 0.5;
    double vx = 0.0;  // constant velocity, px per frame
    double vy = 0.0;
    double wobble_x = 0.0;  // sinusoidal displacement amplitude, px
    double wobble_y = 0.0;
    double wobble_period = 40.0;  // frames
    double scale_drift = 1.0;     // per-frame multiplicative size change
    double deformation = 0.0;     // final blend weight toward a second texture, reached at the last frame
    double illumination = 0.0;    // amplitude of the global gain oscillation
    double illumination_period = 30.0;
    double noise = 0.0;  // per-pixel Gaussian noise std-dev
    std::vector<Occluder> occluders;
    std::vector<Distractor> distractors;
    std::vector<std::string> attributes;  // extra tags, merged with derived ones
};

inline double quantize_px(double v) { return std::round(v * 64.0) / 64.0; }
inline double quantize_intensity(double v) { return std::round(std::clamp(v, 0.0, 1.0) * 255.0) / 255.0; }

// ---------------------------------------------------------------------------
// JSON

namespace detail {

inline void reject_unknown(const nlohmann::json& j, const std::set<std::string>& allowed, const std::string& where) {
    if (!j.is_object()) throw SpecError(where + ": expected an object");
    for (const auto& [k, v] : j.items())
        if (!allowed.count(k)) throw SpecError(where + ": unknown key '" + k + "'");
}

inline Box box_from_json(const nlohmann::json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 4) throw SpecError(where + ": box must be [x, y, w, h]");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>()};
}

inline nlohmann::json box_to_json(const Box& b) { return nlohmann::json::array({b.x, b.y, b.w, b.h}); }

}  // namespace detail

inline SynthSpec synth_spec_from_json(const nlohmann::json& j) {
    using detail::box_from_json;
    detail::reject_unknown(j,
                           {"name", "seed", "frames", "width", "height", "channels", "object", "texture_cell",
                            "background_cell", "background_contrast", "vx", "vy", "wobble_x", "wobble_y",
                            "wobble_period", "scale_drift", "deformation", "illumination", "illumination_period",
                            "noise", "occluders", "distractors", "attributes"},
                           "synth spec");
    SynthSpec s;
    try {
        auto get = [&j](const char* key, auto& field) {
            if (j.contains(key)) field = j.at(key).get<std::decay_t<decltype(field)>>();
        };
        get("name", s.name);
        get("seed", s.seed);
        get("frames", s.frames);
        get("width", s.width);
        get("height", s.height);
        get("channels", s.channels);
        if (j.contains("object")) s.object = box_from_json(j["object"], "object");
        get("texture_cell", s.texture_cell);
        get("background_cell", s.background_cell);
        get("background_contrast", s.background_contrast);
        get("vx", s.vx);
        get("vy", s.vy);
        get("wobble_x", s.wobble_x);
        get("wobble_y", s.wobble_y);
        get("wobble_period", s.wobble_period);
        get("scale_drift", s.scale_drift);
        get("deformation", s.deformation);
        get("illumination", s.illumination);
        get("illumination_period", s.illumination_period);
        get("noise", s.noise);
        get("attributes", s.attributes);
        if (j.contains("occluders"))
            for (const auto& o : j["occluders"]) {
                detail::reject_unknown(o, {"first_frame", "last_frame", "box", "intensity"}, "occluder");
                Occluder oc;
                oc.first_frame = o.value("first_frame", std::size_t{0});
                oc.last_frame = o.value("last_frame", std::size_t{0});
                oc.box = box_from_json(o.at("box"), "occluder box");
                oc.intensity = o.value("intensity", 0.5);
                s.occluders.push_back(oc);
            }
        if (j.contains("distractors"))
            for (const auto& d : j["distractors"]) {
                detail::reject_unknown(d, {"box", "vx", "vy", "similarity"}, "distractor");
                Distractor ds;
                ds.box = box_from_json(d.at("box"), "distractor box");
                ds.vx = d.value("vx", 0.0);
                ds.vy = d.value("vy", 0.0);
                ds.similarity = d.value("similarity", 1.0);
                s.distractors.push_back(ds);
            }
    } catch (const nlohmann::json::exception& e) {
        throw SpecError(std::string("synth spec: ") + e.what());
    }
    return s;
}

inline nlohmann::json synth_spec_to_json(const SynthSpec& s) {
    nlohmann::json j{{"name", s.name},
                     {"seed", s.seed},
                     {"frames", s.frames},
                     {"width", s.width},
                     {"height", s.height},
                     {"channels", s.channels},
                     {"object", detail::box_to_json(s.object)},
                     {"texture_cell", s.texture_cell},
                     {"background_cell", s.background_cell},
                     {"background_contrast", s.background_contrast},
                     {"vx", s.vx},
                     {"vy", s.vy},
                     {"wobble_x", s.wobble_x},
                     {"wobble_y", s.wobble_y},
                     {"wobble_period", s.wobble_period},
                     {"scale_drift", s.scale_drift},
                     {"deformation", s.deformation},
                     {"illumination", s.illumination},
                     {"illumination_period", s.illumination_period},
                     {"noise", s.noise},
                     {"attributes", s.attributes}};
    j["occluders"] = nlohmann::json::array();
    for (const auto& o : s.occluders)
        j["occluders"].push_back({{"first_frame", o.first_frame},
                                  {"last_frame", o.last_frame},
                                  {"box", detail::box_to_json(o.box)},
                                  {"intensity", o.intensity}});
    j["distractors"] = nlohmann::json::array();
    for (const auto& d : s.distractors)
        j["distractors"].push_back(
            {{"box", detail::box_to_json(d.box)}, {"vx", d.vx}, {"vy", d.vy}, {"similarity", d.similarity}});
    return j;
}

// ---------------------------------------------------------------------------
// rendering

/// Smooth value noise in [0, 1]: random lattice values at `cell` px spacing, smoothstep-interpolated.
inline Tensor value_noise(std::size_t h, std::size_t w, double cell, std::mt19937_64& rng) {
    if (!(cell > 0.0)) throw SpecError("value_noise: cell size must be positive");
    const std::size_t gh = static_cast<std::size_t>(std::ceil(static_cast<double>(h) / cell)) + 2;
    const std::size_t gw = static_cast<std::size_t>(std::ceil(static_cast<double>(w) / cell)) + 2;
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> lattice(gh * gw);
    for (auto& v : lattice) v = u(rng);
    auto smooth = [](double t) { return t * t * (3.0 - 2.0 * t); };
    Tensor out({h, w});
    for (std::size_t i = 0; i < h; ++i) {
        const double fy = (static_cast<double>(i) + 0.5) / cell;
        const auto y0 = static_cast<std::size_t>(fy);
        const double ty = smooth(fy - static_cast<double>(y0));
        for (std::size_t j = 0; j < w; ++j) {
            const double fx = (static_cast<double>(j) + 0.5) / cell;
            const auto x0 = static_cast<std::size_t>(fx);
            const double tx = smooth(fx - static_cast<double>(x0));
            const double a = lattice[y0 * gw + x0], b = lattice[y0 * gw + x0 + 1];
            const double c = lattice[(y0 + 1) * gw + x0], d = lattice[(y0 + 1) * gw + x0 + 1];
            out.at(i, j) = (a + tx * (b - a)) + ty * ((c + tx * (d - c)) - (a + tx * (b - a)));
        }
    }
    return out;
}

/// Bilinear lookup of a [C, h, w] texture at continuous texel coordinates (clamped).
inline double sample_texture(const Tensor& tex, std::size_t ch, double u, double v) {
    const double h = static_cast<double>(tex.dim(1)), w = static_cast<double>(tex.dim(2));
    u = std::clamp(u - 0.5, 0.0, w - 1.0);
    v = std::clamp(v - 0.5, 0.0, h - 1.0);
    const auto x0 = static_cast<std::size_t>(u), y0 = static_cast<std::size_t>(v);
    const std::size_t x1 = std::min(x0 + 1, tex.dim(2) - 1), y1 = std::min(y0 + 1, tex.dim(1) - 1);
    const double ax = u - static_cast<double>(x0), ay = v - static_cast<double>(y0);
    const double t = tex.at(ch, y0, x0) + ax * (tex.at(ch, y0, x1) - tex.at(ch, y0, x0));
    const double b = tex.at(ch, y1, x0) + ax * (tex.at(ch, y1, x1) - tex.at(ch, y1, x0));
    return t + ay * (b - t);
}

namespace detail {

inline Tensor colored_noise(std::size_t c, std::size_t h, std::size_t w, double cell, std::mt19937_64& rng) {
    Tensor out({c, h, w});
    for (std::size_t ch = 0; ch < c; ++ch) {
        const Tensor n = value_noise(h, w, cell, rng);
        std::copy(n.data().begin(), n.data().end(), out.data().begin() + ch * h * w);
    }
    return out;
}

/// Paints `tex` stretched over box b; only pixels whose centers fall inside b are touched.
inline void paint(Image& frame, const Box& b, const Tensor& tex, double blend_weight, const Tensor* tex2) {
    const std::size_t c = frame.dim(0), fh = frame.dim(1), fw = frame.dim(2);
    const auto i0 = static_cast<std::size_t>(std::max(0.0, std::ceil(b.y - 0.5)));
    const auto j0 = static_cast<std::size_t>(std::max(0.0, std::ceil(b.x - 0.5)));
    const double th = static_cast<double>(tex.dim(1)), tw = static_cast<double>(tex.dim(2));
    for (std::size_t i = i0; i < fh && static_cast<double>(i) + 0.5 < b.y + b.h; ++i)
        for (std::size_t j = j0; j < fw && static_cast<double>(j) + 0.5 < b.x + b.w; ++j) {
            const double u = (static_cast<double>(j) + 0.5 - b.x) / b.w * tw;
            const double v = (static_cast<double>(i) + 0.5 - b.y) / b.h * th;
            for (std::size_t ch = 0; ch < c; ++ch) {
                double val = sample_texture(tex, ch, u, v);
                if (tex2 && blend_weight > 0.0) val += blend_weight * (sample_texture(*tex2, ch, u, v) - val);
                frame.at(ch, i, j) = val;
            }
        }
}

inline void fill_box(Image& frame, const Box& b, double value) {
    const std::size_t c = frame.dim(0), fh = frame.dim(1), fw = frame.dim(2);
    for (std::size_t i = 0; i < fh; ++i)
        for (std::size_t j = 0; j < fw; ++j) {
            const double px = static_cast<double>(j) + 0.5, py = static_cast<double>(i) + 0.5;
            if (px >= b.x && px < b.x + b.w && py >= b.y && py < b.y + b.h)
                for (std::size_t ch = 0; ch < c; ++ch) frame.at(ch, i, j) = value;
        }
}

}  // namespace detail

/// Scripted ground-truth box for frame t (quantized to the 1/64 px grid).
inline Box synth_box(const SynthSpec& s, std::size_t t) {
    const double td = static_cast<double>(t);
    const double two_pi = 2.0 * std::acos(-1.0);
    const double scale = std::pow(s.scale_drift, td);
    const double wob = s.wobble_period > 0 ? std::sin(two_pi * td / s.wobble_period) : 0.0;
    const double cx = s.object.cx() + s.vx * td + s.wobble_x * wob;
    const double cy = s.object.cy() + s.vy * td + s.wobble_y * wob;
    const double w = quantize_px(s.object.w * scale), h = quantize_px(s.object.h * scale);
    return {quantize_px(cx - 0.5 * w), quantize_px(cy - 0.5 * h), w, h};
}

inline std::vector<std::string> synth_attributes(const SynthSpec& s) {
    std::set<std::string> tags(s.attributes.begin(), s.attributes.end());
    if (s.scale_drift != 1.0) tags.insert("scale-variation");
    if (s.deformation > 0.0) tags.insert("deformation");
    if (s.illumination > 0.0) tags.insert("illumination-variation");
    if (!s.occluders.empty()) tags.insert("occlusion");
    if (!s.distractors.empty()) tags.insert("background-clutter");
    if (std::hypot(s.vx, s.vy) >= 0.25 * std::min(s.object.w, s.object.h)) tags.insert("fast-motion");
    return {tags.begin(), tags.end()};
}

inline void validate_synth_spec(const SynthSpec& s) {
    if (s.frames == 0 || s.width == 0 || s.height == 0) throw SpecError("synth spec: frames and size must be positive");
    if (s.channels != 1 && s.channels != 3) throw SpecError("synth spec: channels must be 1 or 3");
    if (s.object.degenerate()) throw SpecError("synth spec: object box is degenerate");
    if (!(s.scale_drift > 0.0)) throw SpecError("synth spec: scale_drift must be positive");
    if (!(s.texture_cell > 0.0) || !(s.background_cell > 0.0)) throw SpecError("synth spec: cell sizes must be positive");
    for (const auto& d : s.distractors)
        if (d.box.degenerate()) throw SpecError("synth spec: distractor box is degenerate");
    for (const auto& d : s.distractors)
        if (!(d.similarity >= 0.0 && d.similarity <= 1.0)) throw SpecError("synth spec: distractor similarity must lie in [0, 1]");
    const double fw = static_cast<double>(s.width), fh = static_cast<double>(s.height);
    for (std::size_t t = 0; t < s.frames; ++t) {
        const Box b = synth_box(s, t);
        if (b.x < 0.0 || b.y < 0.0 || b.x + b.w > fw || b.y + b.h > fh)
            throw SpecError("synth spec '" + s.name + "': object leaves the frame at frame " + std::to_string(t));
    }
}

/// Renders every frame in memory.
inline Sequence synth_sequence(const SynthSpec& s) {
    validate_synth_spec(s);
    std::mt19937_64 rng(s.seed);
    const std::size_t c = s.channels, h = s.height, w = s.width;
    // textures are generated at the object's initial pixel size
    const auto th = static_cast<std::size_t>(std::max(2.0, std::round(s.object.h)));
    const auto tw = static_cast<std::size_t>(std::max(2.0, std::round(s.object.w)));
    Tensor background = detail::colored_noise(c, h, w, s.background_cell, rng);
    for (auto& v : background.data()) v = 0.5 + s.background_contrast * (v - 0.5);
    const Tensor tex_a = detail::colored_noise(c, th, tw, s.texture_cell, rng);
    const Tensor tex_b = detail::colored_noise(c, th, tw, s.texture_cell, rng);
    std::vector<Tensor> distractor_tex;
    for (std::size_t k = 0; k < s.distractors.size(); ++k)
        distractor_tex.push_back(detail::colored_noise(c, th, tw, s.texture_cell, rng));
    std::vector<Tensor> occluder_tex;
    for (const auto& o : s.occluders) {
        const auto oh = static_cast<std::size_t>(std::max(2.0, std::round(o.box.h)));
        const auto ow = static_cast<std::size_t>(std::max(2.0, std::round(o.box.w)));
        occluder_tex.push_back(o.intensity < 0 ? detail::colored_noise(c, oh, ow, s.background_cell, rng) : Tensor{});
    }
    std::normal_distribution<double> pixel_noise(0.0, 1.0);
    const double two_pi = 2.0 * std::acos(-1.0);

    Sequence seq;
    seq.name = s.name;
    seq.attributes = synth_attributes(s);
    for (std::size_t t = 0; t < s.frames; ++t) {
        const double td = static_cast<double>(t);
        Image frame = background;
        for (std::size_t k = 0; k < s.distractors.size(); ++k) {
            const auto& d = s.distractors[k];
            const Box db{d.box.x + d.vx * td, d.box.y + d.vy * td, d.box.w, d.box.h};
            detail::paint(frame, db, distractor_tex[k], d.similarity, &tex_a);
        }
        const Box b = synth_box(s, t);
        const double blend = s.frames > 1 ? s.deformation * td / static_cast<double>(s.frames - 1) : 0.0;
        detail::paint(frame, b, tex_a, blend, &tex_b);
        for (std::size_t k = 0; k < s.occluders.size(); ++k) {
            const auto& o = s.occluders[k];
            if (t < o.first_frame || t > o.last_frame) continue;
            if (o.intensity < 0)
                detail::paint(frame, o.box, occluder_tex[k], 0.0, nullptr);
            else
                detail::fill_box(frame, o.box, o.intensity);
        }
        const double gain =
            1.0 + (s.illumination_period > 0 ? s.illumination * std::sin(two_pi * td / s.illumination_period) : 0.0);
        for (auto& v : frame.data()) {
            double x = v * gain;
            if (s.noise > 0.0) x += s.noise * pixel_noise(rng);
            v = quantize_intensity(x);
        }
        seq.frames.push_back(std::move(frame));
        seq.boxes.push_back(b);
    }
    return seq;
}

/// Ten fixed-seed sequences: the target drifts fully to a second texture while a
/// look-alike (partly the target's initial appearance) travels alongside it; some
/// sequences add scale drift, illumination change or vertical wobble.
inline std::vector<SynthSpec> benchmark_suite_specs(std::size_t frames = 40) {
    constexpr double kSimilarity[5] = {0.3, 0.5, 0.6, 0.4, 0.5};
    constexpr double kOffset[5] = {34, 38, 32, 36, 40};  // distractor's horizontal offset, px
    std::vector<SynthSpec> out;
    for (std::size_t k = 0; k < 10; ++k) {
        SynthSpec s;
        s.name = "suite" + std::to_string(k);
        s.seed = 2000 + k;
        s.frames = frames;
        const bool even = k % 2 == 0;
        s.object = even ? Box{90, 100, 36, 36} : Box{140, 110, 36, 36};
        s.deformation = 1.0;
        s.background_contrast = 0.35;
        const double speed = 1.0 + 0.25 * static_cast<double>(k % 3);
        s.vx = even ? speed : -0.5 * speed;
        s.vy = k % 3 == 0 ? 0.4 : -0.4;
        const double side = even ? 1.0 : -1.0;
        Distractor d;
        d.box = {s.object.x + side * kOffset[k % 5], s.object.y - 4.0, 36, 36};
        d.vx = 0.8 * s.vx;
        d.vy = s.vy + 0.2 * side;
        d.similarity = kSimilarity[k % 5];
        s.distractors.push_back(d);
        if (k % 5 == 1) s.scale_drift = 1.005;
        if (k % 5 == 2) s.illumination = 0.15;
        if (k % 5 == 4) s.wobble_y = 6.0;
        out.push_back(s);
    }
    return out;
}

}  // namespace oalstm
