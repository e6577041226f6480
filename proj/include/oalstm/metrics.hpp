#pragma once

// One-pass evaluation metrics: center-error precision and IoU success curves.
// Conventions: precision counts error <= tau; success counts IoU > theta
// (strict); the first frame is scored like any other.

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "oalstm/errors.hpp"
#include "oalstm/image.hpp"

namespace oalstm {

inline constexpr std::size_t kPrecisionThresholds = 51;  // 0..50 px
inline constexpr std::size_t kSuccessThresholds = 51;    // 0, 0.02, ..., 1
inline constexpr std::size_t kPrecisionAt = 20;

inline double success_threshold(std::size_t i) { return static_cast<double>(i) / 50.0; }

struct PrecisionCurve {
    std::vector<double> values;  // values[tau] for tau = 0..50
    double at20 = 0.0;
};

struct SuccessCurve {
    std::vector<double> values;  // values[i] at theta = i / 50
    double auc = 0.0;
};

inline void require_aligned(const std::vector<Box>& pred, const std::vector<Box>& gt, const char* who) {
    if (pred.size() != gt.size())
        throw ArgumentError(std::string(who) + ": " + std::to_string(pred.size()) + " predictions for " +
                            std::to_string(gt.size()) + " ground-truth boxes");
    if (gt.empty()) throw ArgumentError(std::string(who) + ": no frames");
}

inline PrecisionCurve precision_curve(const std::vector<Box>& pred, const std::vector<Box>& gt) {
    require_aligned(pred, gt, "precision_curve");
    PrecisionCurve c;
    c.values.assign(kPrecisionThresholds, 0.0);
    std::vector<double> err(pred.size());
    for (std::size_t i = 0; i < pred.size(); ++i) err[i] = center_distance(pred[i], gt[i]);
    for (std::size_t tau = 0; tau < kPrecisionThresholds; ++tau) {
        std::size_t hits = 0;
        for (double e : err) hits += e <= static_cast<double>(tau) ? 1 : 0;
        c.values[tau] = static_cast<double>(hits) / static_cast<double>(err.size());
    }
    c.at20 = c.values[kPrecisionAt];
    return c;
}

inline SuccessCurve success_curve(const std::vector<Box>& pred, const std::vector<Box>& gt) {
    require_aligned(pred, gt, "success_auc");
    SuccessCurve c;
    c.values.assign(kSuccessThresholds, 0.0);
    std::vector<double> overlap(pred.size());
    for (std::size_t i = 0; i < pred.size(); ++i) overlap[i] = iou(pred[i], gt[i]);
    double sum = 0.0;
    for (std::size_t k = 0; k < kSuccessThresholds; ++k) {
        std::size_t hits = 0;
        for (double o : overlap) hits += o > success_threshold(k) ? 1 : 0;
        c.values[k] = static_cast<double>(hits) / static_cast<double>(overlap.size());
        sum += c.values[k];
    }
    c.auc = sum / static_cast<double>(kSuccessThresholds);
    return c;
}

inline double success_auc(const std::vector<Box>& pred, const std::vector<Box>& gt) {
    return success_curve(pred, gt).auc;
}

/// Curves and summary numbers for one slice (all sequences, or those with one attribute).
struct MetricSlice {
    std::size_t sequences = 0;
    std::size_t frames = 0;
    std::vector<double> precision;
    std::vector<double> success;
    double precision_at_20 = 0.0;
    double auc = 0.0;
};

struct SequenceMetrics {
    std::string name;
    std::vector<std::string> attributes;
    PrecisionCurve precision;
    SuccessCurve success;
    std::size_t frames = 0;
};

struct MetricReport {
    std::vector<SequenceMetrics> sequences;
    MetricSlice overall;
    std::map<std::string, MetricSlice> attributes;
};

inline SequenceMetrics evaluate_sequence(const std::string& name, const std::vector<std::string>& attributes,
                                         const std::vector<Box>& pred, const std::vector<Box>& gt) {
    return {name, attributes, precision_curve(pred, gt), success_curve(pred, gt), gt.size()};
}

/// Averages per-sequence curves (each sequence weighs the same).
inline MetricSlice average_slice(const std::vector<const SequenceMetrics*>& members) {
    MetricSlice s;
    s.precision.assign(kPrecisionThresholds, 0.0);
    s.success.assign(kSuccessThresholds, 0.0);
    if (members.empty()) return s;
    const double n = static_cast<double>(members.size());
    for (const auto* m : members) {
        s.frames += m->frames;
        for (std::size_t i = 0; i < kPrecisionThresholds; ++i) s.precision[i] += m->precision.values[i] / n;
        for (std::size_t i = 0; i < kSuccessThresholds; ++i) s.success[i] += m->success.values[i] / n;
        s.precision_at_20 += m->precision.at20 / n;
        s.auc += m->success.auc / n;
    }
    s.sequences = members.size();
    return s;
}

inline MetricReport build_report(std::vector<SequenceMetrics> sequences) {
    MetricReport r;
    r.sequences = std::move(sequences);
    std::vector<const SequenceMetrics*> all;
    std::map<std::string, std::vector<const SequenceMetrics*>> by_tag;
    for (const auto& s : r.sequences) {
        all.push_back(&s);
        for (const auto& a : s.attributes) by_tag[a].push_back(&s);
    }
    r.overall = average_slice(all);
    for (const auto& [tag, members] : by_tag) r.attributes[tag] = average_slice(members);
    return r;
}

inline nlohmann::ordered_json slice_json(const MetricSlice& s) {
    return {{"sequences", s.sequences},      {"frames", s.frames},           {"precision_at_20", s.precision_at_20},
            {"auc", s.auc},                  {"precision_curve", s.precision}, {"success_curve", s.success}};
}

inline nlohmann::ordered_json report_json(const MetricReport& r) {
    nlohmann::ordered_json j;
    j["overall"] = slice_json(r.overall);
    j["attributes"] = nlohmann::ordered_json::object();
    for (const auto& [tag, s] : r.attributes) j["attributes"][tag] = slice_json(s);
    j["sequences"] = nlohmann::ordered_json::array();
    for (const auto& s : r.sequences)
        j["sequences"].push_back({{"name", s.name},
                                  {"attributes", s.attributes},
                                  {"frames", s.frames},
                                  {"precision_at_20", s.precision.at20},
                                  {"auc", s.success.auc}});
    return j;
}

/// Plot-ready rows: curve,threshold,value.
inline std::string slice_csv(const MetricSlice& s) {
    std::ostringstream os;
    os.precision(17);
    os << "curve,threshold,value\n";
    for (std::size_t i = 0; i < s.precision.size(); ++i) os << "precision," << i << ',' << s.precision[i] << '\n';
    for (std::size_t i = 0; i < s.success.size(); ++i)
        os << "success," << success_threshold(i) << ',' << s.success[i] << '\n';
    return os.str();
}

}  // namespace oalstm
