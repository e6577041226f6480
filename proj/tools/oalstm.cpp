// oalstm: track, evaluate, synthesize, and inspect from the command line.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "oalstm/commands.hpp"

namespace {

oalstm::RunConfig load_config(const std::string& path) {
    if (path.empty()) return {};
    return oalstm::parse_run_config(oalstm::read_text_file(path));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Object-adaptive LSTM tracker with Siamese proposal selection and adversarial augmentation"};
    app.require_subcommand(1);

    // shared run options; flags override the config file
    std::string config_path, out_dir;
    std::uint64_t seed = 0;
    std::size_t workers = 0;
    std::vector<std::string> ablations;
    bool dump_gan = false, suite = false;
    std::size_t suite_frames = 40;

    auto* track = app.add_subcommand("track", "track OTB-style sequence directories");
    std::vector<std::string> sequences;
    track->add_option("sequences", sequences, "sequence directories (img/ + groundtruth_rect.txt)");
    track->add_option("--config", config_path, "run configuration JSON")->check(CLI::ExistingFile);
    track->add_option("--seed", seed, "random seed (overrides config)");
    track->add_option("--out", out_dir, "output directory for result JSON");
    track->add_option("--workers", workers, "sequences tracked in parallel")->check(CLI::PositiveNumber);
    track->add_option("--ablation", ablations, "lstm-off | gan-off | hardneg-off | per-proposal-embed (repeatable)")
        ->check(CLI::IsMember(oalstm::ablation_names()));
    track->add_flag("--dump-gan-samples", dump_gan, "write generated positives as PNG per update frame");
    track->add_flag("--suite", suite, "track the built-in synthetic benchmark suite instead of directories");
    track->add_option("--suite-frames", suite_frames, "frames per suite sequence")->check(CLI::PositiveNumber);

    auto* eval = app.add_subcommand("eval", "score result files against ground truth");
    std::string results_dir, sequences_dir;
    eval->add_option("results", results_dir, "directory of result JSON files")->required();
    eval->add_option("sequences", sequences_dir, "directory containing one OTB-style folder per sequence");
    eval->add_option("--out", out_dir, "output directory for report.json and CSV curves");
    eval->add_flag("--suite", suite, "take ground truth from the synthetic benchmark suite");
    eval->add_option("--suite-frames", suite_frames, "frames per suite sequence")->check(CLI::PositiveNumber);

    auto* synth = app.add_subcommand("synth", "render synthetic sequences in OTB layout");
    std::string spec_path;
    synth->add_option("spec", spec_path, "synthetic spec JSON (object or array of objects)")->check(CLI::ExistingFile);
    synth->add_option("--out", out_dir, "output directory");
    synth->add_flag("--suite", suite, "render the synthetic benchmark suite");
    synth->add_option("--suite-frames", suite_frames, "frames per suite sequence")->check(CLI::PositiveNumber);

    auto* defaults = app.add_subcommand("default-config", "print the full default run configuration");

    auto* flops = app.add_subcommand("flops", "print per-frame multiply-accumulate counts");
    flops->add_option("--config", config_path, "run configuration JSON")->check(CLI::ExistingFile);

    auto* train = app.add_subcommand("train-embedding", "train the Siamese embedding on synthetic pairs");
    oalstm::EmbeddingTrainSettings train_settings;
    std::string weights_out, header_out;
    train->add_option("--pairs", train_settings.pairs, "training pairs")->check(CLI::PositiveNumber);
    train->add_option("--seed", train_settings.seed, "seed for init and pair rendering");
    train->add_option("--out", weights_out, "weight file to write");
    train->add_option("--header", header_out, "C++ header to write (builtin_embedding)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*track) {
            oalstm::RunConfig cfg = load_config(config_path);
            if (!sequences.empty()) cfg.sequences = sequences;
            if (track->count("--seed")) cfg.seed = seed;
            if (!out_dir.empty()) cfg.output_dir = out_dir;
            if (workers) cfg.workers = workers;
            for (const auto& a : ablations)
                if (std::find(cfg.ablations.begin(), cfg.ablations.end(), a) == cfg.ablations.end())
                    cfg.ablations.push_back(a);
            if (dump_gan) cfg.dump_gan_samples = true;
            return oalstm::cmd_track(cfg, std::cout, std::cerr, suite, suite_frames);
        }
        if (*eval) {
            if (!suite && sequences_dir.empty()) {
                std::cerr << "eval: give a sequences directory or --suite\n";
                return 1;
            }
            return oalstm::cmd_eval(results_dir, sequences_dir, out_dir, std::cout, std::cerr, suite, suite_frames);
        }
        if (*synth) {
            if (!suite && spec_path.empty()) {
                std::cerr << "synth: give a spec file or --suite\n";
                return 1;
            }
            return oalstm::cmd_synth(spec_path, out_dir, std::cout, std::cerr, suite, suite_frames);
        }
        if (*defaults) {
            std::cout << oalstm::run_config_to_json(oalstm::RunConfig{}).dump(2) << '\n';
            return 0;
        }
        if (*flops) {
            std::cout << oalstm::flop_report(load_config(config_path)).dump(2) << '\n';
            return 0;
        }
        if (*train) return oalstm::cmd_train_embedding(train_settings, weights_out, header_out, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "oalstm: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
