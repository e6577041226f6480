#pragma once

// Image files and OTB-style sequence directories (img/ + groundtruth_rect.txt).
// This is the only header that needs OpenCV; link the oalstm_io target.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>

#include "oalstm/errors.hpp"
#include "oalstm/image.hpp"
#include "oalstm/sequence.hpp"

namespace oalstm {

namespace fs = std::filesystem;

/// Reads an 8-bit image as [C, H, W] in [0, 1]; channels is 1 (gray) or 3 (RGB order).
inline Image read_image(const std::string& path, std::size_t channels) {
    if (channels != 1 && channels != 3) throw ArgumentError("read_image: channels must be 1 or 3");
    const cv::Mat m = cv::imread(path, channels == 1 ? cv::IMREAD_GRAYSCALE : cv::IMREAD_COLOR);
    if (m.empty()) throw IngestionError("cannot read image '" + path + "'");
    const auto h = static_cast<std::size_t>(m.rows), w = static_cast<std::size_t>(m.cols);
    Image out({channels, h, w});
    for (std::size_t i = 0; i < h; ++i) {
        const auto* row = m.ptr<std::uint8_t>(static_cast<int>(i));
        for (std::size_t j = 0; j < w; ++j)
            for (std::size_t c = 0; c < channels; ++c) {
                // OpenCV stores BGR
                const std::size_t src = channels == 1 ? 0 : 2 - c;
                out.at(c, i, j) = static_cast<double>(row[j * channels + src]) / 255.0;
            }
    }
    return out;
}

/// Writes [C, H, W] values in [0, 1] as 8-bit (rounded, clamped). Format from the extension.
inline void write_image(const std::string& path, const Image& im) {
    if (im.rank() != 3 || (im.dim(0) != 1 && im.dim(0) != 3))
        throw DimensionError("write_image: expected [1|3, H, W], got " + shape_string(im.shape()));
    const std::size_t c = im.dim(0), h = im.dim(1), w = im.dim(2);
    cv::Mat m(static_cast<int>(h), static_cast<int>(w), c == 1 ? CV_8UC1 : CV_8UC3);
    for (std::size_t i = 0; i < h; ++i) {
        auto* row = m.ptr<std::uint8_t>(static_cast<int>(i));
        for (std::size_t j = 0; j < w; ++j)
            for (std::size_t ch = 0; ch < c; ++ch) {
                const std::size_t dst = c == 1 ? 0 : 2 - ch;
                row[j * c + dst] = static_cast<std::uint8_t>(std::lround(std::clamp(im.at(ch, i, j), 0.0, 1.0) * 255.0));
            }
    }
    if (!cv::imwrite(path, m)) throw IngestionError("cannot write image '" + path + "'");
}

/// Parses OTB ground truth: one x,y,w,h per line, separated by commas and/or whitespace,
/// 1-indexed origin. Blank lines are skipped; `source` prefixes error messages.
inline std::vector<Box> parse_groundtruth(const std::string& text, const std::string& source) {
    std::vector<Box> boxes;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::replace(line.begin(), line.end(), ',', ' ');
        std::replace(line.begin(), line.end(), '\t', ' ');
        std::istringstream fields(line);
        std::vector<std::string> tok;
        for (std::string t; fields >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        auto where = [&] { return source + ":" + std::to_string(line_no); };
        if (tok.size() != 4)
            throw IngestionError(where() + ": expected 4 fields (x,y,w,h), found " + std::to_string(tok.size()));
        double v[4];
        for (int k = 0; k < 4; ++k) {
            const char* b = tok[k].data();
            const char* e = b + tok[k].size();
            const auto [p, ec] = std::from_chars(b, e, v[k]);
            if (ec != std::errc() || p != e || !std::isfinite(v[k]))
                throw IngestionError(where() + ": field " + std::to_string(k + 1) + " '" + tok[k] + "' is not a number");
        }
        if (v[2] < 0 || v[3] < 0) throw IngestionError(where() + ": negative box size");
        boxes.push_back({v[0] - 1.0, v[1] - 1.0, v[2], v[3]});
    }
    return boxes;
}

/// Shortest text that parses back to exactly v.
inline std::string format_number(double v) {
    char buf[64];
    const auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, p);
}

inline std::string format_groundtruth(const std::vector<Box>& boxes) {
    std::string out;
    for (const auto& b : boxes)
        out += format_number(b.x + 1.0) + ',' + format_number(b.y + 1.0) + ',' + format_number(b.w) + ',' +
               format_number(b.h) + '\n';
    return out;
}

inline std::string read_text_file(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    if (!f) throw IngestionError("cannot open '" + p.string() + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

inline void write_text_file(const fs::path& p, const std::string& text) {
    std::ofstream f(p, std::ios::binary);
    if (!f) throw IngestionError("cannot write '" + p.string() + "'");
    f << text;
    if (!f) throw IngestionError("write failed for '" + p.string() + "'");
}

inline bool is_image_file(const fs::path& p) {
    std::string ext = p.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char ch) { return std::tolower(ch); });
    return ext == ".png" || ext == ".jpg" || ext == ".jpeg" || ext == ".bmp";
}

/// Loads an OTB-style directory. Frames are read lazily; attributes.txt (optional) lists tags
/// separated by commas or whitespace.
inline Sequence load_sequence(const std::string& directory, std::size_t channels = 1) {
    const fs::path dir(directory);
    if (!fs::is_directory(dir)) throw IngestionError("sequence directory '" + directory + "' does not exist");
    const fs::path gt = dir / "groundtruth_rect.txt";
    if (!fs::exists(gt)) throw IngestionError("missing ground truth '" + gt.string() + "'");
    const fs::path img = dir / "img";
    if (!fs::is_directory(img)) throw IngestionError("missing image folder '" + img.string() + "'");

    Sequence s;
    s.name = dir.filename().empty() ? dir.parent_path().filename().string() : dir.filename().string();
    s.boxes = parse_groundtruth(read_text_file(gt), gt.string());
    for (const auto& e : fs::directory_iterator(img))
        if (e.is_regular_file() && is_image_file(e.path())) s.frame_paths.push_back(e.path().string());
    std::sort(s.frame_paths.begin(), s.frame_paths.end());
    if (s.frame_paths.size() != s.boxes.size())
        throw IngestionError("sequence '" + s.name + "': " + std::to_string(s.frame_paths.size()) + " images in '" +
                             img.string() + "' but " + std::to_string(s.boxes.size()) + " boxes in '" + gt.string() +
                             "'");
    const fs::path attr = dir / "attributes.txt";
    if (fs::exists(attr)) {
        std::string text = read_text_file(attr);
        std::replace(text.begin(), text.end(), ',', ' ');
        std::istringstream in(text);
        for (std::string t; in >> t;) s.attributes.push_back(t);
    }
    s.loader = [channels](const std::string& path) { return read_image(path, channels); };
    s.validate();
    return s;
}

/// Writes img/0001.png... , groundtruth_rect.txt (1-indexed, exact round trip) and attributes.txt.
inline void save_sequence(const Sequence& s, const std::string& directory) {
    s.validate();
    const fs::path dir(directory);
    fs::create_directories(dir / "img");
    for (std::size_t i = 0; i < s.size(); ++i) {
        char name[32];
        std::snprintf(name, sizeof name, "%04zu.png", i + 1);
        write_image((dir / "img" / name).string(), s.frame(i));
    }
    write_text_file(dir / "groundtruth_rect.txt", format_groundtruth(s.boxes));
    std::string attrs;
    for (const auto& a : s.attributes) attrs += a + '\n';
    write_text_file(dir / "attributes.txt", attrs);
}

}  // namespace oalstm
