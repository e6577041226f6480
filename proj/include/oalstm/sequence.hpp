#pragma once

#include <functional>
#include <string>
#include <vector>

#include "oalstm/errors.hpp"
#include "oalstm/image.hpp"

namespace oalstm {

/// Annotated image sequence; frames are held in memory or loaded on demand from paths.
struct Sequence {
    std::string name;
    std::vector<Image> frames;
    std::vector<std::string> frame_paths;
    std::vector<Box> boxes;
    std::vector<std::string> attributes;
    std::function<Image(const std::string&)> loader;

    std::size_t size() const { return frames.empty() ? frame_paths.size() : frames.size(); }

    Image frame(std::size_t i) const {
        if (!frames.empty()) return frames.at(i);
        if (!loader) throw IngestionError("sequence '" + name + "' has no frame loader");
        return loader(frame_paths.at(i));
    }

    bool has_attribute(const std::string& tag) const {
        for (const auto& a : attributes)
            if (a == tag) return true;
        return false;
    }

    void validate() const {
        if (size() != boxes.size())
            throw IngestionError("sequence '" + name + "': " + std::to_string(size()) + " frames but " +
                                 std::to_string(boxes.size()) + " ground-truth boxes");
        if (boxes.empty()) throw IngestionError("sequence '" + name + "' is empty");
        if (boxes.front().degenerate())
            throw IngestionError("sequence '" + name + "': first ground-truth box is degenerate");
    }
};

}  // namespace oalstm
