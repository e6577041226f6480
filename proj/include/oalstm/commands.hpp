#pragma once

// Command implementations behind the `oalstm` executable. Each returns an exit
// status and writes diagnostics to `err`; nothing here calls std::exit.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <ostream>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "oalstm/builtin_embedding.hpp"
#include "oalstm/config.hpp"
#include "oalstm/embedding_trainer.hpp"
#include "oalstm/io.hpp"
#include "oalstm/metrics.hpp"
#include "oalstm/report.hpp"
#include "oalstm/synth.hpp"
#include "oalstm/tracker.hpp"

namespace oalstm {

inline constexpr const char* kOutputRootEnv = "OALSTM_OUTPUT_ROOT";

/// Explicit directory, else $OALSTM_OUTPUT_ROOT/<command>, else ./oalstm_out/<command>.
inline std::string resolve_output_dir(const std::string& explicit_dir, const std::string& command) {
    if (!explicit_dir.empty()) return explicit_dir;
    const char* root = std::getenv(kOutputRootEnv);
    return (fs::path(root && *root ? root : "oalstm_out") / command).string();
}

inline std::shared_ptr<const Embedding> load_embedding(const std::string& which, std::size_t channels,
                                                       std::uint64_t seed) {
    if (which == "builtin") {
        if (channels != 1)
            throw ConfigError("the builtin embedding is single-channel; use embedding \"random\" or a weight file for " +
                              std::to_string(channels) + "-channel input");
        return std::make_shared<const Embedding>(builtin_embedding());
    }
    if (which == "random")
        return std::make_shared<const Embedding>(Embedding::random(channels, Embedding::default_architecture(), seed));
    return std::make_shared<const Embedding>(Embedding::from_named(load_weights(which)));
}

inline void write_json_file(const fs::path& p, const nlohmann::ordered_json& j) {
    write_text_file(p, j.dump(2) + "\n");
}

/// Tracks every configured sequence (or the synthetic benchmark suite) and writes
/// <out>/<sequence>.json per sequence.
inline int cmd_track(const RunConfig& config, std::ostream& out, std::ostream& err, bool suite = false,
                     std::size_t suite_frames = 40) {
    try {
        config.validate();
        const TrackerConfig tracker = config.effective_tracker();
        const auto embedding = load_embedding(config.embedding, tracker.image_channels, config.seed);
        const std::string out_dir = resolve_output_dir(config.output_dir, "track");

        std::vector<std::string> names;
        std::vector<SynthSpec> specs;
        if (suite) {
            specs = benchmark_suite_specs(suite_frames);
            for (const auto& s : specs) names.push_back(s.name);
        } else {
            if (config.sequences.empty()) {
                err << "track: no sequences given\n";
                return 1;
            }
            for (const auto& p : config.sequences) names.push_back(fs::path(p).filename().string());
        }
        std::set<std::string> seen;
        for (const auto& n : names)
            if (!seen.insert(n).second) {
                err << "track: two sequences are named '" << n << "'; result files would collide\n";
                return 1;
            }
        fs::create_directories(out_dir);

        const auto config_json = run_config_to_json(config);
        std::mutex io_mutex;
        std::vector<std::string> errors(names.size());
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i = next++; i < names.size(); i = next++) {
                try {
                    const Sequence seq = suite ? synth_sequence(specs[i]) : load_sequence(config.sequences[i], tracker.image_channels);
                    std::function<void(std::size_t, const std::vector<Image>&)> sink;
                    const fs::path gan_dir = fs::path(out_dir) / (names[i] + "_gan");
                    if (config.dump_gan_samples) {
                        fs::create_directories(gan_dir);
                        sink = [&gan_dir](std::size_t frame, const std::vector<Image>& patches) {
                            for (std::size_t k = 0; k < patches.size(); ++k) {
                                char name[48];
                                std::snprintf(name, sizeof name, "f%04zu_s%02zu.png", frame, k);
                                write_image((gan_dir / name).string(), patches[k]);
                            }
                        };
                    }
                    RunOutput run = run_sequence(tracker, seq, embedding, sink);
                    run.sequence = names[i];
                    write_json_file(fs::path(out_dir) / (names[i] + ".json"), result_json(run, config_json));
                    std::lock_guard lock(io_mutex);
                    out << names[i] << ": " << run.summary.frames << " frames, " << run.summary.updates << " updates, "
                        << run.summary.failures << " failed frames\n";
                } catch (const std::exception& e) {
                    errors[i] = e.what();
                }
            }
        };
        const std::size_t n_workers = std::min(config.workers, names.size());
        std::vector<std::thread> pool;
        for (std::size_t w = 1; w < n_workers; ++w) pool.emplace_back(worker);
        worker();
        for (auto& t : pool) t.join();

        int status = 0;
        for (std::size_t i = 0; i < names.size(); ++i)
            if (!errors[i].empty()) {
                err << "track: " << names[i] << ": " << errors[i] << '\n';
                status = 1;
            }
        out << "results in " << out_dir << '\n';
        return status;
    } catch (const std::exception& e) {
        err << "track: " << e.what() << '\n';
        return 1;
    }
}

struct GroundTruth {
    std::vector<Box> boxes;
    std::vector<std::string> attributes;
};

/// Ground truth by sequence name: from OTB directories under `sequences_dir`, or from the
/// synthetic suite's motion scripts when `suite` is set (no rendering needed).
inline std::map<std::string, GroundTruth> suite_ground_truth(std::size_t frames) {
    std::map<std::string, GroundTruth> gt;
    for (const auto& s : benchmark_suite_specs(frames)) {
        GroundTruth g;
        for (std::size_t t = 0; t < s.frames; ++t) g.boxes.push_back(synth_box(s, t));
        g.attributes = synth_attributes(s);
        gt[s.name] = std::move(g);
    }
    return gt;
}

/// Scores every result file in `results_dir` against its ground truth; writes report.json and
/// plot-ready CSV curves (overall and per attribute) to `out_dir`.
inline int cmd_eval(const std::string& results_dir, const std::string& sequences_dir, const std::string& out_dir_in,
                    std::ostream& out, std::ostream& err, bool suite = false, std::size_t suite_frames = 40) {
    try {
        if (!fs::is_directory(results_dir)) {
            err << "eval: results directory '" << results_dir << "' does not exist\n";
            return 1;
        }
        std::vector<fs::path> files;
        for (const auto& e : fs::directory_iterator(results_dir))
            if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
        std::sort(files.begin(), files.end());
        if (files.empty()) {
            err << "eval: no result files (*.json) in '" << results_dir << "'\n";
            return 1;
        }
        const auto suite_gt = suite ? suite_ground_truth(suite_frames) : std::map<std::string, GroundTruth>{};

        std::vector<SequenceMetrics> per_sequence;
        std::vector<std::string> offenders;
        for (const auto& f : files) {
            const auto j = nlohmann::ordered_json::parse(read_text_file(f), nullptr, false);
            if (j.is_discarded()) {
                offenders.push_back(f.filename().string() + ": not valid JSON");
                continue;
            }
            ResultBoxes r;
            try {
                r = result_boxes(j, f.string());
            } catch (const FormatError& e) {
                offenders.push_back(e.what());
                continue;
            }
            GroundTruth gt;
            if (suite) {
                const auto it = suite_gt.find(r.sequence);
                if (it == suite_gt.end()) {
                    offenders.push_back(f.filename().string() + ": '" + r.sequence + "' is not a suite sequence");
                    continue;
                }
                gt = it->second;
            } else {
                const fs::path dir = fs::path(sequences_dir) / r.sequence;
                try {
                    const Sequence s = load_sequence(dir.string());
                    gt = {s.boxes, s.attributes};
                } catch (const IngestionError& e) {
                    offenders.push_back(f.filename().string() + ": " + e.what());
                    continue;
                }
            }
            if (gt.boxes.size() != r.boxes.size()) {
                offenders.push_back(f.filename().string() + ": " + std::to_string(r.boxes.size()) +
                                    " predicted boxes for " + std::to_string(gt.boxes.size()) + " ground-truth boxes");
                continue;
            }
            per_sequence.push_back(evaluate_sequence(r.sequence, gt.attributes, r.boxes, gt.boxes));
        }
        if (!offenders.empty()) {
            err << "eval: " << offenders.size() << " result file(s) do not align with their sequences:\n";
            for (const auto& o : offenders) err << "  " << o << '\n';
            return 1;
        }
        const MetricReport report = build_report(std::move(per_sequence));
        const std::string out_dir = resolve_output_dir(out_dir_in, "eval");
        fs::create_directories(out_dir);
        write_json_file(fs::path(out_dir) / "report.json", report_json(report));
        write_text_file(fs::path(out_dir) / "curves.csv", slice_csv(report.overall));
        for (const auto& [tag, slice] : report.attributes)
            write_text_file(fs::path(out_dir) / ("curves_" + tag + ".csv"), slice_csv(slice));
        out << "sequences " << report.overall.sequences << ", precision@20 " << report.overall.precision_at_20
            << ", success AUC " << report.overall.auc << "\nreport in " << out_dir << '\n';
        return 0;
    } catch (const std::exception& e) {
        err << "eval: " << e.what() << '\n';
        return 1;
    }
}

/// Renders a synthetic spec (object: one sequence into out_dir; array: one subdirectory each)
/// or, with `suite`, the benchmark suite.
inline int cmd_synth(const std::string& spec_path, const std::string& out_dir_in, std::ostream& out,
                     std::ostream& err, bool suite = false, std::size_t suite_frames = 40) {
    try {
        const std::string out_dir = resolve_output_dir(out_dir_in, "synth");
        std::vector<SynthSpec> specs;
        bool single = false;
        if (suite) {
            specs = benchmark_suite_specs(suite_frames);
        } else {
            nlohmann::json j;
            try {
                j = nlohmann::json::parse(read_text_file(spec_path));
            } catch (const nlohmann::json::parse_error& e) {
                throw SpecError("'" + spec_path + "' is not valid JSON: " + e.what());
            }
            if (j.is_array()) {
                for (const auto& e : j) specs.push_back(synth_spec_from_json(e));
            } else {
                specs.push_back(synth_spec_from_json(j));
                single = true;
            }
        }
        for (const auto& s : specs) validate_synth_spec(s);
        for (const auto& s : specs) {
            const fs::path dir = single ? fs::path(out_dir) : fs::path(out_dir) / s.name;
            save_sequence(synth_sequence(s), dir.string());
            out << s.name << ": " << s.frames << " frames -> " << dir.string() << '\n';
        }
        return 0;
    } catch (const std::exception& e) {
        err << "synth: " << e.what() << '\n';
        return 1;
    }
}

/// Multiply-accumulate counts per frame for the configured geometry.
inline nlohmann::ordered_json flop_report(const RunConfig& config) {
    const TrackerConfig t = config.effective_tracker();
    const auto e = load_embedding(config.embedding, t.image_channels, config.seed);
    const auto g = SearchGeometry::derive(*e, t.geometry);
    const auto cropped = count_embed_flops(FeatureMode::Cropped, t.n_proposals, *e, g);
    const auto per = count_embed_flops(FeatureMode::PerProposal, t.n_proposals, *e, g);
    return {{"proposals", t.n_proposals},
            {"template_extent", g.template_extent},
            {"search_extent", g.search_extent},
            {"score_extent", g.score_extent},
            {"embed_macs_cropped", cropped},
            {"embed_macs_per_proposal", per},
            {"ratio", static_cast<double>(cropped) / static_cast<double>(per)}};
}

inline int cmd_train_embedding(const EmbeddingTrainSettings& settings, const std::string& weights_path,
                               const std::string& header_path, std::ostream& out, std::ostream& err) {
    try {
        if (weights_path.empty() && header_path.empty()) {
            err << "train-embedding: give --out and/or --header\n";
            return 1;
        }
        Embedding e = Embedding::random(settings.pair.channels, Embedding::default_architecture(), settings.seed);
        double window = 0.0;
        train_embedding(e, settings, [&](std::size_t batch, double loss) {
            window += loss;
            if ((batch + 1) % 25 == 0) {
                out << "batch " << batch + 1 << "  mean loss " << window / 25.0 << '\n';
                window = 0.0;
            }
        });
        if (!weights_path.empty()) save_weights(weights_path, e.to_named());
        if (!header_path.empty()) {
            std::ofstream f(header_path);
            write_embedding_header(f, e,
                                   "Desk embedding trained on " + std::to_string(settings.pairs) +
                                       " synthetic pairs (seed " + std::to_string(settings.seed) + ").");
            if (!f) throw IngestionError("cannot write '" + header_path + "'");
        }
        return 0;
    } catch (const std::exception& e) {
        err << "train-embedding: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace oalstm
