#pragma once

// Run configuration: one JSON document covering every tracker knob plus run-level
// settings. The serialized defaults double as the schema, so unknown keys anywhere
// are rejected with their full path.

#include <string>
#include <vector>

#include "json.hpp"
#include "oalstm/errors.hpp"
#include "oalstm/tracker.hpp"

namespace oalstm {

inline const std::vector<std::string>& ablation_names() {
    static const std::vector<std::string> names{"lstm-off", "gan-off", "hardneg-off", "per-proposal-embed"};
    return names;
}

struct RunConfig {
    TrackerConfig tracker;
    std::uint64_t seed = 1;
    std::string embedding = "builtin";  // "builtin", "random", or a weight-file path
    std::vector<std::string> sequences;
    std::string output_dir;  // empty: $OALSTM_OUTPUT_ROOT (or ./oalstm_out) + command name
    std::size_t workers = 1;
    std::vector<std::string> ablations;
    bool dump_gan_samples = false;

    /// Tracker settings with the seed and ablations applied.
    TrackerConfig effective_tracker() const {
        TrackerConfig t = tracker;
        t.seed = seed;
        for (const auto& a : ablations) {
            if (a == "lstm-off") t.lstm_enabled = false;
            else if (a == "gan-off") t.gan.enabled = false;
            else if (a == "hardneg-off") t.hard_negative_mining = false;
            else if (a == "per-proposal-embed") t.feature_mode = FeatureMode::PerProposal;
            else throw ConfigError("unknown ablation '" + a + "'");
        }
        return t;
    }

    void validate() const {
        effective_tracker().validate();
        if (workers == 0) throw ConfigError("workers must be at least 1");
        if (embedding.empty()) throw ConfigError("embedding must be 'builtin', 'random' or a weight-file path");
    }
};

namespace detail {

using ojson = nlohmann::ordered_json;

inline ojson adam_json(const AdamSettings& a) {
    return {{"learning_rate", a.learning_rate}, {"beta1", a.beta1}, {"beta2", a.beta2}, {"epsilon", a.epsilon}};
}

inline void reject_unknown_keys(const ojson& given, const ojson& schema, const std::string& path) {
    if (!given.is_object()) throw ConfigError("config: '" + path + "' must be an object");
    for (const auto& [key, value] : given.items()) {
        const std::string where = path.empty() ? key : path + "." + key;
        if (!schema.contains(key)) throw ConfigError("config: unknown key '" + where + "'");
        if (schema[key].is_object()) reject_unknown_keys(value, schema[key], where);
    }
}

inline void merge_into(ojson& base, const ojson& patch) {
    for (const auto& [key, value] : patch.items()) {
        if (base[key].is_object() && value.is_object())
            merge_into(base[key], value);
        else
            base[key] = value;
    }
}

inline AdamSettings adam_from(const ojson& j) {
    return {j.at("learning_rate").get<double>(), j.at("beta1").get<double>(), j.at("beta2").get<double>(),
            j.at("epsilon").get<double>()};
}

}  // namespace detail

inline nlohmann::ordered_json run_config_to_json(const RunConfig& c) {
    using detail::adam_json;
    const TrackerConfig& t = c.tracker;
    nlohmann::ordered_json j;
    j["seed"] = c.seed;
    j["embedding"] = c.embedding;
    j["sequences"] = c.sequences;
    j["output_dir"] = c.output_dir;
    j["workers"] = c.workers;
    j["ablations"] = c.ablations;
    j["dump_gan_samples"] = c.dump_gan_samples;
    j["tracker"] = {
        {"n_proposals", t.n_proposals},
        {"update_threshold", t.update_threshold},
        {"box_smoothing", t.box_smoothing},
        {"tie_tolerance", t.tie_tolerance},
        {"image_channels", t.image_channels},
        {"hard_negative_mining", t.hard_negative_mining},
        {"hard_negatives", t.hard_negatives},
        {"lstm_enabled", t.lstm_enabled},
        {"feature_mode", t.feature_mode == FeatureMode::Cropped ? "cropped" : "per-proposal"},
        {"normalize_features", t.normalize_features},
        {"geometry",
         {{"exemplar_size", t.geometry.exemplar_size},
          {"search_size", t.geometry.search_size},
          {"context", t.geometry.context},
          {"scales", t.geometry.scales},
          {"scale_penalty", t.geometry.scale_penalty},
          {"correlation_offset", t.geometry.correlation_offset}}},
        {"lstm",
         {{"units", t.lstm.units},
          {"layers", t.lstm.layers},
          {"init_steps", t.lstm.init_steps},
          {"update_steps", t.lstm.update_steps},
          {"adam", adam_json(t.lstm.adam)}}},
        {"gan",
         {{"enabled", t.gan.enabled},
          {"patch_size", t.gan.patch_size},
          {"init_steps", t.gan.init_steps},
          {"update_steps", t.gan.update_steps},
          {"generated", t.gan.generated},
          {"bank_capacity", t.gan.bank_capacity},
          {"batch", t.gan.train.batch},
          {"generator_adam", adam_json(t.gan.train.generator_adam)},
          {"discriminator_adam", adam_json(t.gan.train.discriminator_adam)}}},
        {"sampler",
         {{"pos_iou_min", t.sampler.pos_iou_min},
          {"neg_iou_max", t.sampler.neg_iou_max},
          {"sigma_xy", t.sampler.sigma_xy},
          {"sigma_scale", t.sampler.sigma_scale},
          {"neg_sigma_xy", t.sampler.neg_sigma_xy},
          {"n_pos", t.sampler.n_pos},
          {"n_neg", t.sampler.n_neg},
          {"attempts_per_sample", t.sampler.attempts_per_sample}}}};
    return j;
}

/// Defaults overlaid with `patch`; unknown keys and ill-typed values raise ConfigError.
inline RunConfig run_config_from_json(const nlohmann::ordered_json& patch) {
    using detail::adam_from;
    auto j = run_config_to_json(RunConfig{});
    detail::reject_unknown_keys(patch, j, "");
    detail::merge_into(j, patch);
    RunConfig c;
    try {
        c.seed = j.at("seed").get<std::uint64_t>();
        c.embedding = j.at("embedding").get<std::string>();
        c.sequences = j.at("sequences").get<std::vector<std::string>>();
        c.output_dir = j.at("output_dir").get<std::string>();
        c.workers = j.at("workers").get<std::size_t>();
        c.ablations = j.at("ablations").get<std::vector<std::string>>();
        c.dump_gan_samples = j.at("dump_gan_samples").get<bool>();
        const auto& t = j.at("tracker");
        TrackerConfig& tc = c.tracker;
        tc.n_proposals = t.at("n_proposals").get<std::size_t>();
        tc.update_threshold = t.at("update_threshold").get<double>();
        tc.box_smoothing = t.at("box_smoothing").get<double>();
        tc.tie_tolerance = t.at("tie_tolerance").get<double>();
        tc.image_channels = t.at("image_channels").get<std::size_t>();
        tc.hard_negative_mining = t.at("hard_negative_mining").get<bool>();
        tc.hard_negatives = t.at("hard_negatives").get<std::size_t>();
        tc.lstm_enabled = t.at("lstm_enabled").get<bool>();
        const auto mode = t.at("feature_mode").get<std::string>();
        if (mode == "cropped") tc.feature_mode = FeatureMode::Cropped;
        else if (mode == "per-proposal") tc.feature_mode = FeatureMode::PerProposal;
        else throw ConfigError("config: tracker.feature_mode must be 'cropped' or 'per-proposal', got '" + mode + "'");
        tc.normalize_features = t.at("normalize_features").get<bool>();
        const auto& g = t.at("geometry");
        tc.geometry.exemplar_size = g.at("exemplar_size").get<std::size_t>();
        tc.geometry.search_size = g.at("search_size").get<std::size_t>();
        tc.geometry.context = g.at("context").get<double>();
        tc.geometry.scales = g.at("scales").get<std::vector<double>>();
        tc.geometry.scale_penalty = g.at("scale_penalty").get<double>();
        tc.geometry.correlation_offset = g.at("correlation_offset").get<double>();
        const auto& l = t.at("lstm");
        tc.lstm.units = l.at("units").get<std::size_t>();
        tc.lstm.layers = l.at("layers").get<std::size_t>();
        tc.lstm.init_steps = l.at("init_steps").get<std::size_t>();
        tc.lstm.update_steps = l.at("update_steps").get<std::size_t>();
        tc.lstm.adam = adam_from(l.at("adam"));
        const auto& gn = t.at("gan");
        tc.gan.enabled = gn.at("enabled").get<bool>();
        tc.gan.patch_size = gn.at("patch_size").get<std::size_t>();
        tc.gan.init_steps = gn.at("init_steps").get<std::size_t>();
        tc.gan.update_steps = gn.at("update_steps").get<std::size_t>();
        tc.gan.generated = gn.at("generated").get<std::size_t>();
        tc.gan.bank_capacity = gn.at("bank_capacity").get<std::size_t>();
        tc.gan.train.batch = gn.at("batch").get<std::size_t>();
        tc.gan.train.generator_adam = adam_from(gn.at("generator_adam"));
        tc.gan.train.discriminator_adam = adam_from(gn.at("discriminator_adam"));
        const auto& s = t.at("sampler");
        tc.sampler.pos_iou_min = s.at("pos_iou_min").get<double>();
        tc.sampler.neg_iou_max = s.at("neg_iou_max").get<double>();
        tc.sampler.sigma_xy = s.at("sigma_xy").get<double>();
        tc.sampler.sigma_scale = s.at("sigma_scale").get<double>();
        tc.sampler.neg_sigma_xy = s.at("neg_sigma_xy").get<double>();
        tc.sampler.n_pos = s.at("n_pos").get<std::size_t>();
        tc.sampler.n_neg = s.at("n_neg").get<std::size_t>();
        tc.sampler.attempts_per_sample = s.at("attempts_per_sample").get<std::size_t>();
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    c.validate();
    return c;
}

inline RunConfig parse_run_config(const std::string& text) {
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    return run_config_from_json(j);
}

}  // namespace oalstm
