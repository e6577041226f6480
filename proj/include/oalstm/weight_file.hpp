#pragma once

// Flat container of named tensors. Byte layout (all integers little-endian):
//
//   magic      8 bytes  "OALSTMW1"
//   count      u32      number of tensors
//   count x {  u32 name_len, name bytes (UTF-8, no terminator),
//              u32 rank, rank x u64 extents }
//   payload    for each tensor in header order: product(extents) x f64 (IEEE-754, LE), row-major
//
// See docs/weight_format.md.

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>
#include <utility>
#include <vector>

#include "oalstm/errors.hpp"
#include "oalstm/tensor.hpp"

namespace oalstm {

using NamedTensors = std::vector<std::pair<std::string, Tensor>>;

namespace detail {

inline constexpr char kWeightMagic[8] = {'O', 'A', 'L', 'S', 'T', 'M', 'W', '1'};

template <typename T>
void put_le(std::vector<std::uint8_t>& out, T value) {
    static_assert(std::is_integral_v<T>);
    for (std::size_t i = 0; i < sizeof(T); ++i) out.push_back(static_cast<std::uint8_t>((value >> (8 * i)) & 0xFF));
}

class ByteReader {
public:
    explicit ByteReader(const std::vector<std::uint8_t>& bytes) : bytes_(bytes) {}

    template <typename T>
    T get_le() {
        need(sizeof(T));
        T v = 0;
        for (std::size_t i = 0; i < sizeof(T); ++i) v |= static_cast<T>(bytes_[pos_ + i]) << (8 * i);
        pos_ += sizeof(T);
        return v;
    }

    std::string get_string(std::size_t n) {
        need(n);
        std::string s(reinterpret_cast<const char*>(bytes_.data() + pos_), n);
        pos_ += n;
        return s;
    }

    void need(std::size_t n) const {
        if (bytes_.size() - pos_ < n) throw FormatError("weight file truncated at byte " + std::to_string(pos_));
    }

    std::size_t remaining() const { return bytes_.size() - pos_; }

private:
    const std::vector<std::uint8_t>& bytes_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline std::vector<std::uint8_t> encode_weights(const NamedTensors& tensors) {
    std::vector<std::uint8_t> out(std::begin(detail::kWeightMagic), std::end(detail::kWeightMagic));
    detail::put_le<std::uint32_t>(out, static_cast<std::uint32_t>(tensors.size()));
    for (const auto& [name, t] : tensors) {
        detail::put_le<std::uint32_t>(out, static_cast<std::uint32_t>(name.size()));
        out.insert(out.end(), name.begin(), name.end());
        detail::put_le<std::uint32_t>(out, static_cast<std::uint32_t>(t.rank()));
        for (auto e : t.shape()) detail::put_le<std::uint64_t>(out, e);
    }
    for (const auto& entry : tensors)
        for (double v : entry.second.data()) detail::put_le<std::uint64_t>(out, std::bit_cast<std::uint64_t>(v));
    return out;
}

inline NamedTensors decode_weights(const std::vector<std::uint8_t>& bytes) {
    detail::ByteReader in(bytes);
    if (in.get_string(8) != std::string(detail::kWeightMagic, 8)) throw FormatError("weight file: bad magic");
    const auto count = in.get_le<std::uint32_t>();
    NamedTensors out;
    std::vector<Shape> shapes;
    for (std::uint32_t i = 0; i < count; ++i) {
        const auto len = in.get_le<std::uint32_t>();
        std::string name = in.get_string(len);
        const auto rank = in.get_le<std::uint32_t>();
        Shape shape(rank);
        for (auto& e : shape) e = static_cast<std::size_t>(in.get_le<std::uint64_t>());
        out.emplace_back(std::move(name), Tensor{});
        shapes.push_back(std::move(shape));
    }
    for (std::uint32_t i = 0; i < count; ++i) {
        std::vector<double> data(shape_product(shapes[i]));
        in.need(data.size() * 8);
        for (auto& v : data) v = std::bit_cast<double>(in.get_le<std::uint64_t>());
        out[i].second = Tensor(shapes[i], std::move(data));
    }
    if (in.remaining() != 0) throw FormatError("weight file: trailing bytes after payload");
    return out;
}

inline void save_weights(const std::string& path, const NamedTensors& tensors) {
    const auto bytes = encode_weights(tensors);
    std::ofstream f(path, std::ios::binary);
    if (!f) throw FormatError("cannot open weight file for writing: " + path);
    f.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!f) throw FormatError("failed writing weight file: " + path);
}

inline NamedTensors load_weights(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw FormatError("cannot open weight file: " + path);
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    return decode_weights(bytes);
}

inline const Tensor& find_tensor(const NamedTensors& tensors, const std::string& name) {
    for (const auto& [n, t] : tensors)
        if (n == name) return t;
    throw FormatError("weight file has no tensor named '" + name + "'");
}

}  // namespace oalstm
