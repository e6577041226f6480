#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "oalstm/commands.hpp"

using namespace oalstm;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("oalstm_test_cli_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

RunConfig light_run_config() {
    RunConfig c;
    c.tracker.gan.init_steps = 10;
    c.tracker.gan.update_steps = 2;
    c.tracker.gan.generated = 8;
    c.tracker.lstm.init_steps = 20;
    return c;
}

// A small moving-object sequence written in OTB layout.
fs::path write_sequence(const fs::path& root, const std::string& name, std::size_t frames = 4) {
    SynthSpec s;
    s.name = name;
    s.frames = frames;
    s.vx = 2.0;
    s.vy = 1.0;
    const fs::path dir = root / name;
    save_sequence(synth_sequence(s), dir.string());
    return dir;
}

nlohmann::ordered_json read_json(const fs::path& p) { return nlohmann::ordered_json::parse(read_text_file(p)); }

int run_cli(const std::string& args, std::string* output = nullptr) {
    const fs::path log = fs::temp_directory_path() / "oalstm_test_cli_output.txt";
    const std::string cmd = std::string(OALSTM_CLI_PATH) + " " + args + " > " + log.string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    if (output) *output = read_text_file(log);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(RunConfigJson, DefaultsRoundTrip) {
    const auto j = run_config_to_json(RunConfig{});
    EXPECT_EQ(run_config_to_json(run_config_from_json(j)), j);
    EXPECT_EQ(run_config_to_json(parse_run_config("{}")), j);
    EXPECT_EQ(j["tracker"]["n_proposals"], 64);
    EXPECT_EQ(j["tracker"]["update_threshold"], 0.6);
}

TEST(RunConfigJson, PartialOverridesMerge) {
    const auto c = parse_run_config(R"({"seed": 9, "tracker": {"lstm": {"units": 32}, "sampler": {"n_pos": 10}}})");
    EXPECT_EQ(c.seed, 9u);
    EXPECT_EQ(c.tracker.lstm.units, 32u);
    EXPECT_EQ(c.tracker.lstm.layers, 2u);
    EXPECT_EQ(c.tracker.sampler.n_pos, 10u);
    EXPECT_EQ(c.tracker.n_proposals, 64u);
}

TEST(RunConfigJson, UnknownKeysRejectedWithFullPath) {
    try {
        parse_run_config(R"({"tracker": {"lstm": {"unit": 32}}})");
        FAIL();
    } catch (const ConfigError& e) {
        EXPECT_NE(std::string(e.what()).find("tracker.lstm.unit"), std::string::npos) << e.what();
    }
    EXPECT_THROW(parse_run_config(R"({"sead": 1})"), ConfigError);
    EXPECT_THROW(parse_run_config(R"({"tracker": {"gan": {"generator_adam": {"lr": 1}}}})"), ConfigError);
}

TEST(RunConfigJson, BadValuesAreConfigErrors) {
    EXPECT_THROW(parse_run_config("{not json"), ConfigError);
    EXPECT_THROW(parse_run_config(R"({"seed": "one"})"), ConfigError);
    EXPECT_THROW(parse_run_config(R"({"tracker": {"update_threshold": 1.5}})"), ConfigError);
    EXPECT_THROW(parse_run_config(R"({"tracker": {"n_proposals": 0}})"), ConfigError);
    EXPECT_THROW(parse_run_config(R"({"tracker": {"feature_mode": "fast"}})"), ConfigError);
    EXPECT_THROW(parse_run_config(R"({"ablations": ["lstm-of"]})"), ConfigError);
    EXPECT_THROW(parse_run_config(R"({"workers": 0})"), ConfigError);
    EXPECT_THROW(parse_run_config(R"({"tracker": "x"})"), ConfigError);
}

TEST(RunConfigJson, AblationsMapOntoTrackerSwitches) {
    RunConfig c;
    c.ablations = {"lstm-off", "gan-off", "hardneg-off", "per-proposal-embed"};
    c.seed = 77;
    const auto t = c.effective_tracker();
    EXPECT_FALSE(t.lstm_enabled);
    EXPECT_FALSE(t.gan.enabled);
    EXPECT_FALSE(t.hard_negative_mining);
    EXPECT_EQ(t.feature_mode, FeatureMode::PerProposal);
    EXPECT_EQ(t.seed, 77u);
}

TEST(OutputRoot, ExplicitThenEnvironmentThenDefault) {
    EXPECT_EQ(resolve_output_dir("given", "track"), "given");
    ::setenv(kOutputRootEnv, "/tmp/root", 1);
    EXPECT_EQ(resolve_output_dir("", "eval"), "/tmp/root/eval");
    ::unsetenv(kOutputRootEnv);
    EXPECT_EQ(resolve_output_dir("", "synth"), "oalstm_out/synth");
}

TEST(CmdTrack, MissingGroundTruthNamesThePath) {
    const auto root = scratch("nogt");
    fs::create_directories(root / "seq" / "img");
    RunConfig c = light_run_config();
    c.sequences = {(root / "seq").string()};
    c.output_dir = (root / "out").string();
    std::ostringstream out, err;
    EXPECT_NE(cmd_track(c, out, err), 0);
    EXPECT_NE(err.str().find((root / "seq" / "groundtruth_rect.txt").string()), std::string::npos) << err.str();
}

TEST(CmdTrack, RejectsCollidingNamesAndBuiltinRgb) {
    const auto root = scratch("collide");
    const auto a = write_sequence(root / "a", "same", 2);
    const auto b = write_sequence(root / "b", "same", 2);
    RunConfig c = light_run_config();
    c.sequences = {a.string(), b.string()};
    c.output_dir = (root / "out").string();
    std::ostringstream out, err;
    EXPECT_NE(cmd_track(c, out, err), 0);
    EXPECT_NE(err.str().find("same"), std::string::npos);

    c.sequences = {a.string()};
    c.tracker.image_channels = 3;
    std::ostringstream out2, err2;
    EXPECT_NE(cmd_track(c, out2, err2), 0);
    EXPECT_NE(err2.str().find("single-channel"), std::string::npos) << err2.str();
}

TEST(CmdTrack, SameSeedGivesIdenticalJsonModuloWallClock) {
    const auto root = scratch("determinism");
    const auto seq = write_sequence(root, "walk", 5);
    RunConfig c = light_run_config();
    c.sequences = {seq.string()};
    c.dump_gan_samples = true;
    std::ostringstream out, err;
    c.output_dir = (root / "run1").string();
    ASSERT_EQ(cmd_track(c, out, err), 0) << err.str();
    c.output_dir = (root / "run2").string();
    c.workers = 3;
    ASSERT_EQ(cmd_track(c, out, err), 0) << err.str();
    auto a = read_json(root / "run1" / "walk.json"), b = read_json(root / "run2" / "walk.json");
    a["config"].erase("output_dir");
    b["config"].erase("output_dir");
    a["config"].erase("workers");
    b["config"].erase("workers");
    EXPECT_EQ(strip_wall_clock(a).dump(), strip_wall_clock(b).dump());
    EXPECT_NE(a.dump(), strip_wall_clock(a).dump());  // wall-clock fields exist and are the only ones removed
    EXPECT_EQ(a["frames"].size(), 4u);
    EXPECT_TRUE(a["frames"][0].contains("embed_macs_cropped"));
    // dumped augmenter samples: one PNG per generated patch on update frames
    std::size_t pngs = 0;
    for (const auto& e : fs::directory_iterator(root / "run1" / "walk_gan")) pngs += e.path().extension() == ".png";
    EXPECT_EQ(pngs, 8 * a["summary"]["updates"].get<std::size_t>());
}

TEST(CmdEval, EmptyResultsDirFails) {
    const auto root = scratch("empty");
    std::ostringstream out, err;
    EXPECT_NE(cmd_eval((root / "results").string(), root.string(), (root / "ev").string(), out, err), 0);
    fs::create_directories(root / "results");
    EXPECT_NE(cmd_eval((root / "results").string(), root.string(), (root / "ev").string(), out, err), 0);
    EXPECT_NE(err.str().find("no result files"), std::string::npos);
}

TEST(CmdEval, PerfectPredictionsAndCrossModuleAuc) {
    const auto root = scratch("perfect");
    const auto seq_dir = write_sequence(root / "sequences", "walk", 6);
    const Sequence seq = load_sequence(seq_dir.string());
    fs::create_directories(root / "results");
    RunOutput run;
    run.sequence = "walk";
    run.initial_box = seq.boxes[0];
    for (std::size_t t = 1; t < seq.size(); ++t) {
        TrackResult r;
        r.frame_index = t;
        r.box = seq.boxes[t];
        run.results.push_back(r);
    }
    write_json_file(root / "results" / "walk.json", result_json(run, run_config_to_json(RunConfig{})));
    std::ostringstream out, err;
    ASSERT_EQ(cmd_eval((root / "results").string(), (root / "sequences").string(), (root / "ev").string(), out, err),
              0)
        << err.str();
    const auto report = read_json(root / "ev" / "report.json");
    EXPECT_EQ(report["overall"]["precision_at_20"], 1.0);
    EXPECT_EQ(report["overall"]["auc"].get<double>(), success_auc(seq.boxes, seq.boxes));
    EXPECT_TRUE(fs::exists(root / "ev" / "curves.csv"));

    // shifted predictions: report AUC equals the metric function on the same boxes
    std::vector<Box> shifted{seq.boxes[0]};
    for (std::size_t t = 1; t < seq.size(); ++t) {
        Box b = seq.boxes[t];
        b.x += 3.0 * static_cast<double>(t);
        run.results[t - 1].box = b;
        shifted.push_back(b);
    }
    write_json_file(root / "results" / "walk.json", result_json(run, run_config_to_json(RunConfig{})));
    ASSERT_EQ(cmd_eval((root / "results").string(), (root / "sequences").string(), (root / "ev").string(), out, err),
              0);
    const auto r2 = read_json(root / "ev" / "report.json");
    EXPECT_EQ(r2["overall"]["auc"].get<double>(), success_auc(shifted, seq.boxes));
    EXPECT_EQ(r2["overall"]["precision_at_20"].get<double>(), precision_curve(shifted, seq.boxes).at20);
}

TEST(CmdEval, MisalignedResultsListOffenders) {
    const auto root = scratch("misaligned");
    write_sequence(root / "sequences", "walk", 5);
    fs::create_directories(root / "results");
    RunOutput run;
    run.sequence = "walk";
    run.initial_box = {1, 1, 4, 4};
    write_json_file(root / "results" / "walk.json", result_json(run, {}));
    run.sequence = "ghost";
    write_json_file(root / "results" / "ghost.json", result_json(run, {}));
    write_text_file(root / "results" / "broken.json", "{");
    std::ostringstream out, err;
    EXPECT_NE(cmd_eval((root / "results").string(), (root / "sequences").string(), (root / "ev").string(), out, err),
              0);
    EXPECT_NE(err.str().find("3 result file(s)"), std::string::npos) << err.str();
    EXPECT_NE(err.str().find("walk.json: 1 predicted boxes for 5"), std::string::npos) << err.str();
    EXPECT_NE(err.str().find("ghost.json"), std::string::npos);
    EXPECT_NE(err.str().find("broken.json"), std::string::npos);
}

TEST(CmdSynth, ZeroMotionRoundTripAndByteIdenticalImages) {
    const auto root = scratch("synth");
    SynthSpec s;
    s.name = "still";
    s.frames = 4;
    s.noise = 0.02;
    write_text_file(root / "spec.json", synth_spec_to_json(s).dump());
    std::ostringstream out, err;
    ASSERT_EQ(cmd_synth((root / "spec.json").string(), (root / "a").string(), out, err), 0) << err.str();
    ASSERT_EQ(cmd_synth((root / "spec.json").string(), (root / "b").string(), out, err), 0);
    const std::string gt = read_text_file(root / "a" / "groundtruth_rect.txt");
    EXPECT_EQ(gt, "109,109,40,40\n109,109,40,40\n109,109,40,40\n109,109,40,40\n");
    for (int i = 1; i <= 4; ++i) {
        const std::string name = "000" + std::to_string(i) + ".png";
        EXPECT_EQ(read_text_file(root / "a" / "img" / name), read_text_file(root / "b" / "img" / name));
    }

    // a moving, drifting spec reproduces its scripted boxes exactly
    SynthSpec m = s;
    m.name = "moving";
    m.vx = 1.3;
    m.vy = -0.7;
    m.scale_drift = 1.011;
    m.frames = 7;
    write_text_file(root / "specs.json", nlohmann::json::array({synth_spec_to_json(m)}).dump());
    ASSERT_EQ(cmd_synth((root / "specs.json").string(), (root / "c").string(), out, err), 0);
    const Sequence back = load_sequence((root / "c" / "moving").string());
    ASSERT_EQ(back.size(), 7u);
    for (std::size_t t = 0; t < 7; ++t) EXPECT_EQ(back.boxes[t], synth_box(m, t));
}

TEST(CmdSynth, SpecErrorsFail) {
    const auto root = scratch("badspec");
    std::ostringstream out, err;
    write_text_file(root / "leaves.json", R"({"frames": 40, "vx": 10})");
    EXPECT_NE(cmd_synth((root / "leaves.json").string(), (root / "o").string(), out, err), 0);
    EXPECT_NE(err.str().find("leaves the frame"), std::string::npos);
    write_text_file(root / "typo.json", R"({"frame": 4})");
    EXPECT_NE(cmd_synth((root / "typo.json").string(), (root / "o").string(), out, err), 0);
    EXPECT_NE(cmd_synth((root / "absent.json").string(), (root / "o").string(), out, err), 0);
}

TEST(FlopReport, CroppedBelowQuarterOfPerProposal) {
    const auto j = flop_report(RunConfig{});
    EXPECT_EQ(j["score_extent"], 33);
    EXPECT_LT(j["ratio"].get<double>(), 0.25);
}

TEST(Executable, FlagsOverrideConfigFile) {
    const auto root = scratch("exe");
    const auto seq = write_sequence(root, "walk", 3);
    auto cfg = run_config_to_json(light_run_config());
    cfg["seed"] = 5;
    cfg["workers"] = 2;
    write_text_file(root / "config.json", cfg.dump(2));
    std::string log;
    ASSERT_EQ(run_cli("track " + seq.string() + " --config " + (root / "config.json").string() + " --seed 7 --out " +
                          (root / "out").string() + " --ablation gan-off",
                      &log),
              0)
        << log;
    const auto j = read_json(root / "out" / "walk.json");
    EXPECT_EQ(j["config"]["seed"], 7);
    EXPECT_EQ(j["config"]["workers"], 2);
    EXPECT_EQ(j["config"]["ablations"], nlohmann::ordered_json::array({"gan-off"}));
    EXPECT_EQ(j["config"]["output_dir"], (root / "out").string());
}

TEST(Executable, ExitStatusReflectsDiagnostics) {
    const auto root = scratch("exe_status");
    std::string log;
    EXPECT_NE(run_cli("track " + (root / "missing").string() + " --out " + (root / "o").string(), &log), 0);
    EXPECT_NE(log.find("missing"), std::string::npos) << log;
    EXPECT_NE(run_cli("track --ablation lstm-of --suite", &log), 0);
    EXPECT_NE(run_cli("eval " + (root / "nothing").string() + " --suite", &log), 0);
    write_text_file(root / "bad.json", R"({"tracker": {"thetaa": 1}})");
    EXPECT_NE(run_cli("track --suite --config " + (root / "bad.json").string(), &log), 0);
    EXPECT_NE(log.find("tracker.thetaa"), std::string::npos) << log;
    EXPECT_EQ(run_cli("default-config", &log), 0);
    EXPECT_EQ(run_config_to_json(parse_run_config(log)), run_config_to_json(RunConfig{}));
}
